#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "proxring/theorems.hpp"

namespace proxring {

namespace {

struct RawBundle {
    int n = 0;
    std::vector<int> klass;           // feature class per element
    std::vector<ElementIndex> add;    // n*n row-major
    std::vector<ElementIndex> mul;
    std::uint32_t r_mask = 0;
    std::uint32_t i_mask = 0, b_mask = 0, c_mask = 0;
    int p_index = -1;
    BundleShape shape = BundleShape::base;
};

std::vector<int> serialize_under(const RawBundle& raw, const std::vector<int>& perm) {
    const int n = raw.n;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;

    std::vector<int> out;
    out.push_back(n);

    std::vector<int> new_klass(n);
    for (int i = 0; i < n; ++i) new_klass[perm[i]] = raw.klass[i];
    std::vector<int> renumber(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (renumber[new_klass[i]] < 0) renumber[new_klass[i]] = next++;
        out.push_back(renumber[new_klass[i]]);
    }

    for (const auto* table : {&raw.add, &raw.mul})
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out.push_back(perm[(*table)[inv[a] * n + inv[b]]]);

    auto push_mask = [&](std::uint32_t mask) {
        for (int a = 0; a < n; ++a) out.push_back((mask >> inv[a]) & 1u);
    };
    push_mask(raw.r_mask);
    push_mask(raw.i_mask);
    push_mask(raw.b_mask);
    push_mask(raw.c_mask);
    out.push_back(raw.p_index < 0 ? -1 : perm[raw.p_index]);
    return out;
}

std::vector<int> canonical_key(const RawBundle& raw) {
    std::vector<int> perm(raw.n);
    for (int i = 0; i < raw.n; ++i) perm[i] = i;
    std::vector<int> best = serialize_under(raw, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto candidate = serialize_under(raw, perm);
        if (candidate < best) best = candidate;
    }
    return best;
}

FixtureDocument doc_for(const RawBundle& raw) {
    FixtureDocument doc;
    for (int i = 0; i < raw.n; ++i) {
        FixtureElement e;
        e.label = "e" + std::to_string(i);
        e.coords = {0, i};
        e.features = {{raw.klass[i]}};
        doc.elements.push_back(std::move(e));
    }
    auto table_for = [&](const std::vector<ElementIndex>& t) {
        std::vector<std::string> out;
        for (auto v : t) out.push_back("e" + std::to_string(v));
        return out;
    };
    doc.operations = {{"add", "table", table_for(raw.add)},
                      {"mul", "table", table_for(raw.mul)}};
    auto subset_for = [&](std::uint32_t mask) {
        std::vector<std::string> out;
        for (int i = 0; i < raw.n; ++i)
            if (mask & (1u << i)) out.push_back("e" + std::to_string(i));
        return out;
    };
    doc.subsets["R"] = subset_for(raw.r_mask);
    if (raw.i_mask) doc.subsets["I"] = subset_for(raw.i_mask);
    if (raw.b_mask) doc.subsets["B"] = subset_for(raw.b_mask);
    if (raw.c_mask) doc.subsets["C"] = subset_for(raw.c_mask);
    doc.contexts["R"] = {"R", "add", "mul"};
    return doc;
}

EnumeratedBundle bundle_for(const RawBundle& raw) {
    EnumeratedBundle eb;
    eb.doc = doc_for(raw);
    eb.ring = "R";
    if (raw.i_mask) eb.ideal = "I";
    if (raw.b_mask) eb.ideal2 = "B";
    if (raw.c_mask) eb.ideal3 = "C";
    if (raw.p_index >= 0) eb.element = "e" + std::to_string(raw.p_index);
    return eb;
}

/// Iterate feature partitions as restricted growth strings with at most
/// `max_classes` classes.
void for_each_partition(int n, int max_classes, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> klass(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            fn(klass);
            return;
        }
        for (int c = 0; c <= used && c < max_classes; ++c) {
            klass[i] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    rec(0, 0);
}

std::vector<ElementIndex> mod2_table(int n) {
    std::vector<ElementIndex> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = static_cast<ElementIndex>((a + b) % 2);
    return t;
}

std::vector<ElementIndex> min_table(int n) {
    std::vector<ElementIndex> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = static_cast<ElementIndex>(std::min(a, b));
    return t;
}

}  // namespace

EnumerationStats enumerate_structures(const SearchBudget& budget, BundleShape shape,
                                      const std::function<bool(const EnumeratedBundle&)>& visit) {
    if (budget.max_carrier < 1 || budget.max_feature_classes < 1)
        raise(ErrorCode::budget, "carrier and feature-class bounds must be positive");
    if (budget.max_carrier > 8)
        raise(ErrorCode::budget,
              "carriers above 8 elements are outside the canonicalization budget");

    EnumerationStats stats;
    std::set<std::vector<int>> seen;
    std::mt19937_64 rng(budget.seed);
    bool stop = false;

    auto emit = [&](RawBundle raw) {
        if (stop) return;
        raw.shape = shape;
        auto key = canonical_key(raw);
        if (!seen.insert(std::move(key)).second) return;
        if (stats.emitted >= budget.max_candidates) {
            stats.truncated = true;
            stop = true;
            return;
        }
        ++stats.emitted;
        if (!visit(bundle_for(raw))) stop = true;
    };

    auto with_designates = [&](const RawBundle& base) {
        const std::uint32_t full = (1u << base.n) - 1;
        for (std::uint32_t r = 1; r <= full && !stop; ++r) {
            RawBundle raw = base;
            raw.r_mask = r;
            switch (shape) {
                case BundleShape::base:
                case BundleShape::pair:
                    emit(raw);
                    break;
                case BundleShape::with_ideal:
                    for (std::uint32_t i = 1; i <= full && !stop; ++i) {
                        if ((i & r) != i) continue;
                        raw.i_mask = i;
                        emit(raw);
                    }
                    break;
                case BundleShape::with_two_ideals:
                    for (std::uint32_t bm = 1; bm <= full && !stop; ++bm) {
                        if ((bm & r) != bm) continue;
                        for (std::uint32_t cm = 1; cm <= full && !stop; ++cm) {
                            if ((cm & r) != cm) continue;
                            raw.b_mask = bm;
                            raw.c_mask = cm;
                            emit(raw);
                        }
                    }
                    break;
                case BundleShape::with_element:
                    for (int p = 0; p < base.n && !stop; ++p) {
                        if (!(r & (1u << p))) continue;
                        raw.p_index = p;
                        emit(raw);
                    }
                    break;
            }
        }
    };

    auto for_each_space = [&](const std::function<void(const RawBundle&)>& table_sink) {
        for (int n = 1; n <= budget.max_carrier && !stop; ++n) {
            for_each_partition(n, budget.max_feature_classes, [&](const std::vector<int>& klass) {
                if (stop) return;
                ++stats.raw_spaces;
                RawBundle base;
                base.n = n;
                base.klass = klass;

                if (budget.family_grid && n >= 2) {
                    base.add = mod2_table(n);
                    base.mul = min_table(n);
                    ++stats.raw_table_pairs;
                    table_sink(base);
                }
                if (budget.family_exhaustive && n <= 2) {
                    const std::size_t cells = static_cast<std::size_t>(n) * n;
                    std::vector<ElementIndex> add(cells, 0);
                    while (true) {
                        std::vector<ElementIndex> mul(cells, 0);
                        while (true) {
                            base.add = add;
                            base.mul = mul;
                            ++stats.raw_table_pairs;
                            table_sink(base);
                            if (stop) return;
                            std::size_t k = 0;
                            while (k < cells && mul[k] == static_cast<ElementIndex>(n - 1))
                                mul[k++] = 0;
                            if (k == cells) break;
                            ++mul[k];
                        }
                        std::size_t k = 0;
                        while (k < cells && add[k] == static_cast<ElementIndex>(n - 1))
                            add[k++] = 0;
                        if (k == cells) break;
                        ++add[k];
                    }
                }
                if (budget.family_random && n >= 3) {
                    const std::size_t cells = static_cast<std::size_t>(n) * n;
                    for (long s = 0; s < budget.max_candidates && !stop; ++s) {
                        base.add.assign(cells, 0);
                        base.mul.assign(cells, 0);
                        for (auto& v : base.add)
                            v = static_cast<ElementIndex>(rng() % static_cast<unsigned>(n));
                        for (auto& v : base.mul)
                            v = static_cast<ElementIndex>(rng() % static_cast<unsigned>(n));
                        ++stats.raw_table_pairs;
                        table_sink(base);
                    }
                }
            });
        }
    };

    if (shape != BundleShape::pair) {
        for_each_space(with_designates);
        return stats;
    }

    // Pair shapes: collect canonical one-sided bundles, then pair them in
    // max-diagonal order so small combinations come first.
    const long side_cap =
        std::max<long>(1, static_cast<long>(std::llround(std::ceil(
                              std::sqrt(static_cast<double>(budget.max_candidates))))));
    std::vector<EnumeratedBundle> sides;
    {
        std::set<std::vector<int>> side_seen;
        auto collect = [&](const RawBundle& base) {
            const std::uint32_t full = (1u << base.n) - 1;
            for (std::uint32_t r = 1; r <= full && !stop; ++r) {
                RawBundle raw = base;
                raw.r_mask = r;
                auto key = canonical_key(raw);
                if (!side_seen.insert(std::move(key)).second) continue;
                sides.push_back(bundle_for(raw));
                if (static_cast<long>(sides.size()) >= side_cap) {
                    stop = true;
                    return;
                }
            }
        };
        for_each_space(collect);
        stop = false;
    }

    for (long s = 0; s < static_cast<long>(sides.size()) && !stop; ++s) {
        auto emit_pair = [&](long i, long j) {
            if (stop) return;
            if (stats.emitted >= budget.max_candidates) {
                stats.truncated = true;
                stop = true;
                return;
            }
            ++stats.emitted;
            EnumeratedBundle eb;
            eb.doc = sides[i].doc;
            eb.doc2 = sides[j].doc;
            eb.left = "R";
            eb.right = "R";
            if (!visit(eb)) stop = true;
        };
        for (long j = 0; j <= s && !stop; ++j) emit_pair(s, j);
        for (long i = 0; i < s && !stop; ++i) emit_pair(i, s);
    }
    return stats;
}

}  // namespace proxring
