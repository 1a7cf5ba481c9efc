#include "proxring/constructions.hpp"

#include <algorithm>
#include <map>

namespace proxring {

namespace {

std::vector<AtomId> coset_atoms(const SpacePtr& space, const IndexSet& members) {
    std::vector<AtomId> atoms;
    for (auto i : members.indices())
        for (AtomId a : space->atoms_of(i)) atoms.push_back(a);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

AuditResult audit(const std::vector<std::vector<ElementIndex>>& classes,
                  const std::vector<ElementIndex>& class_of, const OpTable& op,
                  const IndexSet* scope) {
    AuditResult out;
    std::vector<std::vector<ElementIndex>> scoped(classes.size());
    for (std::size_t q = 0; q < classes.size(); ++q)
        for (auto x : classes[q])
            if (!scope || scope->test(x)) scoped[q].push_back(x);

    for (std::size_t qa = 0; qa < scoped.size(); ++qa) {
        if (scoped[qa].empty()) continue;
        for (std::size_t qb = 0; qb < scoped.size(); ++qb) {
            if (scoped[qb].empty()) continue;
            ElementIndex expected = class_of[op.apply(scoped[qa][0], scoped[qb][0])];
            for (auto x : scoped[qa])
                for (auto y : scoped[qb]) {
                    if (class_of[op.apply(x, y)] != expected) {
                        out.ok = false;
                        out.witnesses.push_back(
                            {{scoped[qa][0], scoped[qb][0], x, y},
                             "representative choice changes the result coset"});
                    }
                }
        }
    }
    return out;
}

}  // namespace

CosetSpace quotient(const RingContext& ctx, const Subset& s, CosetRho rho) {
    CheckReport ideal_report = is_approx_ideal(s, ctx);
    if (!ideal_report.verdict)
        throw CheckError(ErrorCode::precondition,
                         "quotient requires an approximately ideal", std::move(ideal_report));

    const auto& space = ctx.space;
    const std::size_t n = space->size();

    // Coset of x: { x + s : s in S }, evaluated in the ambient table.
    std::vector<IndexSet> coset_sets(n, IndexSet(n));
    for (std::size_t x = 0; x < n; ++x)
        for (auto si : s.members())
            coset_sets[x].set(ctx.add->apply(static_cast<ElementIndex>(x), si));

    CosetSpace out;
    out.base = ctx;
    out.ideal = s;
    out.rho = rho;
    out.class_of_.assign(n, 0);

    std::vector<std::vector<ElementIndex>> classes;
    if (rho == CosetRho::set_equality) {
        std::map<IndexSet, ElementIndex> seen;  // IndexSet compares lexicographically
        for (std::size_t x = 0; x < n; ++x) {
            auto [it, inserted] = seen.emplace(coset_sets[x],
                                               static_cast<ElementIndex>(classes.size()));
            if (inserted) classes.emplace_back();
            out.class_of_[x] = it->second;
            classes[it->second].push_back(static_cast<ElementIndex>(x));
        }
    } else {
        std::map<std::vector<AtomId>, ElementIndex> seen;
        for (std::size_t x = 0; x < n; ++x) {
            auto key = coset_atoms(space, coset_sets[x]);
            auto [it, inserted] =
                seen.emplace(std::move(key), static_cast<ElementIndex>(classes.size()));
            if (inserted) classes.emplace_back();
            out.class_of_[x] = it->second;
            classes[it->second].push_back(static_cast<ElementIndex>(x));
        }
    }

    // Table representatives prefer elements of R so the induced operations
    // agree with (x+S) op (y+S) evaluated from ring members.
    std::vector<ElementIndex> rep(classes.size());
    for (std::size_t q = 0; q < classes.size(); ++q) {
        rep[q] = classes[q].front();
        for (auto x : classes[q])
            if (ctx.carrier.contains(x)) {
                rep[q] = x;
                break;
            }
    }

    std::vector<Element> qelements(classes.size());
    std::vector<std::vector<FeatureVector>> qfeatures(classes.size());
    for (std::size_t q = 0; q < classes.size(); ++q) {
        qelements[q].label = "[" + space->element(rep[q]).label + "]+S";
        for (AtomId a : coset_atoms(space, coset_sets[classes[q].front()]))
            qfeatures[q].push_back(space->atom_vector(a));
    }
    out.qspace = Space::create_multi(std::move(qelements), std::move(qfeatures));

    std::vector<ElementIndex> qadd(classes.size() * classes.size());
    std::vector<ElementIndex> qmul(classes.size() * classes.size());
    for (std::size_t qa = 0; qa < classes.size(); ++qa)
        for (std::size_t qb = 0; qb < classes.size(); ++qb) {
            qadd[qa * classes.size() + qb] = out.class_of_[ctx.add->apply(rep[qa], rep[qb])];
            qmul[qa * classes.size() + qb] = out.class_of_[ctx.mul->apply(rep[qa], rep[qb])];
        }
    auto add_table = OpTable::from_rows(out.qspace, ctx.add->name(), std::move(qadd));
    auto mul_table = OpTable::from_rows(out.qspace, ctx.mul->name(), std::move(qmul));

    IndexSet carrier_bits(classes.size());
    for (auto x : ctx.carrier.members()) carrier_bits.set(out.class_of_[x]);
    out.qctx = make_ring_context(Subset(out.qspace, std::move(carrier_bits)), add_table,
                                 mul_table);

    // R/rhoS with representatives in R, in quotient element order.
    std::vector<bool> listed(classes.size(), false);
    for (std::size_t q = 0; q < classes.size(); ++q)
        for (auto x : classes[q])
            if (ctx.carrier.contains(x)) {
                out.cosets.push_back({x, Subset(space, coset_sets[x])});
                listed[q] = true;
                break;
            }
    // (Phi*R)/rhoS materialized alongside.
    for (std::size_t q = 0; q < classes.size(); ++q)
        for (auto x : classes[q])
            if (ctx.upper.contains(x)) {
                out.upper_cosets.push_back({x, Subset(space, coset_sets[x])});
                break;
            }

    out.add_audit_r = audit(classes, out.class_of_, *ctx.add, &ctx.carrier.bits());
    out.mul_audit_r = audit(classes, out.class_of_, *ctx.mul, &ctx.carrier.bits());
    out.add_audit_x = audit(classes, out.class_of_, *ctx.add, nullptr);
    out.mul_audit_x = audit(classes, out.class_of_, *ctx.mul, nullptr);
    return out;
}

ProductContext direct_product(const RingContext& left, const RingContext& right) {
    ProductContext out;
    out.left = left;
    out.right = right;
    out.left_ring = is_approx_ring(left);
    out.right_ring = is_approx_ring(right);
    if (!out.left_ring.verdict)
        throw CheckError(ErrorCode::precondition,
                         "left factor is not an approximately ring", out.left_ring);
    if (!out.right_ring.verdict)
        throw CheckError(ErrorCode::precondition,
                         "right factor is not an approximately ring", out.right_ring);

    const auto& s1 = left.space;
    const auto& s2 = right.space;
    const std::size_t n1 = s1->size(), n2 = s2->size();
    out.right_size = n2;

    std::vector<Element> elements(n1 * n2);
    std::vector<std::vector<FeatureVector>> features(n1 * n2);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b) {
            auto& e = elements[a * n2 + b];
            e.label = "(" + s1->element(a).label + "," + s2->element(b).label + ")";
            auto& feat = features[a * n2 + b];
            for (AtomId u : s1->atoms_of(static_cast<ElementIndex>(a)))
                for (AtomId v : s2->atoms_of(static_cast<ElementIndex>(b))) {
                    FeatureVector vec = s1->atom_vector(u);
                    const auto& tail = s2->atom_vector(v);
                    vec.insert(vec.end(), tail.begin(), tail.end());
                    feat.push_back(std::move(vec));
                }
        }
    out.space = Space::create_multi(std::move(elements), std::move(features));

    const std::size_t n = n1 * n2;
    std::vector<ElementIndex> addt(n * n), mult(n * n);
    for (std::size_t p = 0; p < n; ++p) {
        auto a1 = static_cast<ElementIndex>(p / n2), a2 = static_cast<ElementIndex>(p % n2);
        for (std::size_t q = 0; q < n; ++q) {
            auto b1 = static_cast<ElementIndex>(q / n2), b2 = static_cast<ElementIndex>(q % n2);
            addt[p * n + q] = static_cast<ElementIndex>(left.add->apply(a1, b1) * n2 +
                                                        right.add->apply(a2, b2));
            mult[p * n + q] = static_cast<ElementIndex>(left.mul->apply(a1, b1) * n2 +
                                                        right.mul->apply(a2, b2));
        }
    }
    auto add_table = OpTable::from_rows(out.space, "add", std::move(addt));
    auto mul_table = OpTable::from_rows(out.space, "mul", std::move(mult));

    IndexSet carrier(n);
    for (auto a : left.carrier.members())
        for (auto b : right.carrier.members()) carrier.set(a * n2 + b);
    out.ctx = make_ring_context(Subset(out.space, std::move(carrier)), add_table, mul_table);

    IndexSet expected(n);
    for (auto a : left.upper.members())
        for (auto b : right.upper.members()) expected.set(a * n2 + b);
    out.phi_product_law_ok = out.ctx.upper.bits() == expected;
    return out;
}

}  // namespace proxring
