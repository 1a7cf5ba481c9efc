#include "proxring/structures.hpp"

#include <sstream>

namespace proxring {

namespace {

std::string label(const SpacePtr& space, ElementIndex i) {
    return space->element(i).label;
}

void require_in_space(const Subset& g, const OpTable& op) {
    if (g.space() != op.space())
        raise(ErrorCode::domain_mismatch, "subset and operation live on different spaces");
}

void require_non_empty(const Subset& g, const char* what) {
    if (g.empty()) raise(ErrorCode::degenerate_input, std::string(what) + " must be non-empty");
}

void check_ag1(CheckReport& report, const Subset& g, const OpTable& op,
               const Subset& upper, const std::string& tag) {
    auto& ax = report.add_axiom(tag);
    for (auto x : g.members())
        for (auto y : g.members()) {
            auto xy = op.apply(x, y);
            if (!upper.contains(xy)) {
                ax.holds = false;
                ax.witnesses.push_back({{x, y, xy}, "product escapes the upper approximation"});
            }
        }
}

void check_ag2(CheckReport& report, const Subset& g, const OpTable& op,
               const Subset& upper, const std::string& tag) {
    auto& ax = report.add_axiom(tag);
    auto& range = report.add_axiom(tag + ".range", /*required=*/false);
    auto& phi = report.add_axiom(tag + ".phi", /*required=*/false);
    const auto& space = g.space();
    for (auto x : g.members())
        for (auto y : g.members())
            for (auto z : g.members()) {
                auto lhs = op.apply(op.apply(x, y), z);
                auto rhs = op.apply(x, op.apply(y, z));
                if (lhs != rhs) {
                    ax.holds = false;
                    ax.witnesses.push_back({{x, y, z, lhs, rhs}, "associativity fails"});
                    if (!phi_equal(space, lhs, rhs)) {
                        phi.holds = false;
                        phi.witnesses.push_back({{x, y, z, lhs, rhs}, "sides are not Phi-equal"});
                    }
                }
                if (!upper.contains(lhs) || !upper.contains(rhs)) {
                    range.holds = false;
                    range.witnesses.push_back(
                        {{x, y, z}, "associativity values leave the upper approximation"});
                }
            }
    range.note = "informational: whether both sides lie in the upper approximation";
    phi.note = "informational: element equality required; Phi-equality recorded";
}

// AG3/AG4 shared by group and ring checks. Throws on ambiguous identity.
std::optional<ElementIndex> check_ag3_ag4(CheckReport& report, const Subset& g,
                                          const OpTable& op, const Subset& upper,
                                          const std::string& prefix) {
    const auto& space = g.space();
    auto candidates = identity_candidates(g, op);
    if (candidates.size() > 1) {
        std::ostringstream os;
        os << "multiple identity candidates act on {";
        for (auto x : g.members()) os << " " << label(space, x);
        os << " }:";
        for (auto e : candidates) os << " " << label(space, e);
        raise(ErrorCode::ambiguity, os.str());
    }

    auto& ag3 = report.add_axiom(prefix + "AG3");
    auto& ag4 = report.add_axiom(prefix + "AG4");
    if (candidates.empty()) {
        ag3.holds = false;
        for (auto e : upper.members()) {
            for (auto x : g.members()) {
                if (op.apply(x, e) != x || op.apply(e, x) != x) {
                    ag3.witnesses.push_back({{e, x}, "candidate fails to act as identity"});
                    break;
                }
            }
        }
        ag4.holds = false;
        ag4.witnesses.push_back({{}, "no identity, inverses undefined"});
        ag4.note = "skipped: AG3 failed";
        return std::nullopt;
    }

    ElementIndex e = candidates.front();
    ag3.note = "identity " + label(space, e);
    for (auto x : g.members()) {
        bool found = false;
        for (auto y : g.members())
            if (op.apply(x, y) == e && op.apply(y, x) == e) {
                found = true;
                break;
            }
        if (!found) {
            ag4.holds = false;
            ag4.witnesses.push_back({{x}, "no inverse inside the subset"});
        }
    }
    return e;
}

void check_abelian(CheckReport& report, const Subset& g, const OpTable& op,
                   const std::string& tag, bool required) {
    auto& ax = report.add_axiom(tag, required);
    std::vector<WitnessTuple> witnesses;
    if (!commutative_on(g, op, &witnesses)) {
        ax.holds = false;
        ax.witnesses = std::move(witnesses);
    }
}

}  // namespace

std::vector<ElementIndex> identity_candidates(const Subset& g, const OpTable& op) {
    require_in_space(g, op);
    std::vector<ElementIndex> out;
    for (auto e : upper_approx(g).members()) {
        bool ok = true;
        for (auto x : g.members())
            if (op.apply(x, e) != x || op.apply(e, x) != x) {
                ok = false;
                break;
            }
        if (ok) out.push_back(e);
    }
    return out;
}

std::vector<ElementIndex> additive_inverses(const RingContext& ctx, ElementIndex x) {
    std::vector<ElementIndex> out;
    if (!ctx.zero) return out;
    for (auto y : ctx.carrier.members())
        if (ctx.add->apply(x, y) == *ctx.zero && ctx.add->apply(y, x) == *ctx.zero)
            out.push_back(y);
    return out;
}

RingContext make_ring_context(const Subset& carrier, OpTablePtr add, OpTablePtr mul) {
    if (carrier.space() != add->space() || carrier.space() != mul->space())
        raise(ErrorCode::domain_mismatch, "carrier and tables live on different spaces");
    require_non_empty(carrier, "ring carrier");

    RingContext ctx;
    ctx.space = carrier.space();
    ctx.carrier = carrier;
    ctx.add = std::move(add);
    ctx.mul = std::move(mul);
    ctx.upper = upper_approx(carrier);

    ctx.zero_candidates = identity_candidates(carrier, *ctx.add);
    if (ctx.zero_candidates.size() == 1) ctx.zero = ctx.zero_candidates.front();
    ctx.zero_ambiguous = ctx.zero_candidates.size() > 1;

    ctx.one_candidates = identity_candidates(carrier, *ctx.mul);
    if (ctx.one_candidates.size() == 1) ctx.one = ctx.one_candidates.front();
    ctx.one_ambiguous = ctx.one_candidates.size() > 1;
    return ctx;
}

RingContext subring_context(const RingContext& ctx, const Subset& s) {
    if (s.space() != ctx.space)
        raise(ErrorCode::domain_mismatch, "subset belongs to another space");
    if (!s.is_subset_of(ctx.carrier))
        raise(ErrorCode::containment, "subset is not contained in the ring carrier");
    return make_ring_context(s, ctx.add, ctx.mul);
}

CheckReport is_approx_groupoid(const Subset& g, const OpTable& op) {
    require_in_space(g, op);
    require_non_empty(g, "groupoid carrier");
    CheckReport report;
    check_ag1(report, g, op, upper_approx(g), "AG1");
    report.finalize();
    return report;
}

CheckReport is_approx_semigroup(const Subset& g, const OpTable& op) {
    require_in_space(g, op);
    require_non_empty(g, "semigroup carrier");
    CheckReport report;
    auto upper = upper_approx(g);
    check_ag1(report, g, op, upper, "AG1");
    check_ag2(report, g, op, upper, "AG2");
    report.finalize();
    return report;
}

CheckReport is_approx_group(const Subset& g, const OpTable& op) {
    require_in_space(g, op);
    require_non_empty(g, "group carrier");
    CheckReport report;
    auto upper = upper_approx(g);
    check_ag1(report, g, op, upper, "AG1");
    check_ag2(report, g, op, upper, "AG2");
    auto e = check_ag3_ag4(report, g, op, upper, "");
    check_abelian(report, g, op, "abelian", /*required=*/false);
    report.finalize();
    if (e) report.notes = "identity " + label(g.space(), *e);
    return report;
}

CheckReport is_approx_ring(const RingContext& ctx) {
    CheckReport report;
    const auto& r = ctx.carrier;

    // AR1: abelian approximately group under "+".
    check_ag1(report, r, *ctx.add, ctx.upper, "AR1.AG1");
    check_ag2(report, r, *ctx.add, ctx.upper, "AR1.AG2");
    check_ag3_ag4(report, r, *ctx.add, ctx.upper, "AR1.");
    check_abelian(report, r, *ctx.add, "AR1.abelian", /*required=*/true);

    // AR2: approximately semigroup under ".".
    check_ag1(report, r, *ctx.mul, ctx.upper, "AR2.AG1");
    check_ag2(report, r, *ctx.mul, ctx.upper, "AR2.AG2");

    // AR3: both distributive laws, ambient evaluation, element equality.
    auto& ar3 = report.add_axiom("AR3");
    auto& range = report.add_axiom("AR3.range", /*required=*/false);
    auto& phi = report.add_axiom("AR3.phi", /*required=*/false);
    for (auto x : r.members())
        for (auto y : r.members())
            for (auto z : r.members()) {
                auto left_lhs = ctx.mul->apply(x, ctx.add->apply(y, z));
                auto left_rhs = ctx.add->apply(ctx.mul->apply(x, y), ctx.mul->apply(x, z));
                if (left_lhs != left_rhs) {
                    ar3.holds = false;
                    ar3.witnesses.push_back(
                        {{x, y, z, left_lhs, left_rhs}, "left distributivity fails"});
                    if (!phi_equal(ctx.space, left_lhs, left_rhs)) {
                        phi.holds = false;
                        phi.witnesses.push_back({{x, y, z}, "sides are not Phi-equal"});
                    }
                }
                if (!ctx.upper.contains(left_lhs) || !ctx.upper.contains(left_rhs)) {
                    range.holds = false;
                    range.witnesses.push_back(
                        {{x, y, z}, "left distributivity values leave Phi*R"});
                }
                auto right_lhs = ctx.mul->apply(ctx.add->apply(x, y), z);
                auto right_rhs = ctx.add->apply(ctx.mul->apply(x, z), ctx.mul->apply(y, z));
                if (right_lhs != right_rhs) {
                    ar3.holds = false;
                    ar3.witnesses.push_back(
                        {{x, y, z, right_lhs, right_rhs}, "right distributivity fails"});
                    if (!phi_equal(ctx.space, right_lhs, right_rhs)) {
                        phi.holds = false;
                        phi.witnesses.push_back({{x, y, z}, "sides are not Phi-equal"});
                    }
                }
                if (!ctx.upper.contains(right_lhs) || !ctx.upper.contains(right_rhs)) {
                    range.holds = false;
                    range.witnesses.push_back(
                        {{x, y, z}, "right distributivity values leave Phi*R"});
                }
            }
    range.note = "informational";
    phi.note = "informational";

    check_abelian(report, r, *ctx.mul, "AR4", /*required=*/false);

    auto& ar5 = report.add_axiom("AR5", /*required=*/false);
    if (ctx.one) {
        ar5.note = "unity " + label(ctx.space, *ctx.one);
    } else if (ctx.one_ambiguous) {
        std::ostringstream os;
        os << "ambiguous unity candidates:";
        for (auto e : ctx.one_candidates) os << " " << label(ctx.space, e);
        ar5.holds = false;
        ar5.witnesses.push_back({ctx.one_candidates, "more than one unity candidate"});
        ar5.note = os.str();
    } else {
        ar5.holds = false;
        ar5.witnesses.push_back({{}, "no unity in Phi*R"});
    }

    report.finalize();
    std::ostringstream notes;
    if (ctx.zero) notes << "zero " << label(ctx.space, *ctx.zero);
    if (ctx.one) notes << (ctx.zero ? ", " : "") << "unity " << label(ctx.space, *ctx.one);
    report.notes = notes.str();
    return report;
}

CheckReport is_approx_subring(const Subset& s, const RingContext& ctx) {
    require_non_empty(s, "subring carrier");
    return is_approx_ring(subring_context(ctx, s));
}

InvertibilityReport invertibility(ElementIndex x, const RingContext& ctx) {
    if (!ctx.one)
        raise(ErrorCode::missing_unity,
              ctx.one_ambiguous ? "unity is ambiguous in Phi*R" : "no unity in Phi*R");
    if (!ctx.carrier.contains(x))
        raise(ErrorCode::containment,
              "element " + label(ctx.space, x) + " is not in the ring carrier");

    InvertibilityReport out;
    for (auto y : ctx.carrier.members()) {
        if (!out.left && ctx.mul->apply(y, x) == *ctx.one) {
            out.left = true;
            out.left_inverse = y;
        }
        if (!out.right && ctx.mul->apply(x, y) == *ctx.one) {
            out.right = true;
            out.right_inverse = y;
        }
    }
    return out;
}

bool is_approx_unit(ElementIndex x, const RingContext& ctx) {
    return invertibility(x, ctx).unit();
}

CheckReport is_approx_field(const RingContext& ctx) {
    if (!ctx.zero)
        raise(ErrorCode::missing_zero,
              ctx.zero_ambiguous ? "zero is ambiguous in Phi*R" : "no zero in Phi*R");
    Subset nonzero = ctx.carrier.contains(*ctx.zero) ? ctx.carrier.without(*ctx.zero)
                                                     : ctx.carrier;
    if (nonzero.empty())
        raise(ErrorCode::degenerate_input, "carrier contains only the zero element");

    CheckReport report = is_approx_group(nonzero, *ctx.mul);
    // Commutativity is required for the multiplicative group of a field.
    for (auto& ax : report.axioms)
        if (ax.tag == "abelian") ax.required = true;
    report.finalize();
    return report;
}

CheckReport is_approx_subfield(const Subset& s, const RingContext& ctx) {
    require_non_empty(s, "subfield carrier");
    return is_approx_field(subring_context(ctx, s));
}

CheckReport is_approx_irreducible(ElementIndex a, const RingContext& ctx) {
    if (!ctx.one)
        raise(ErrorCode::missing_unity,
              ctx.one_ambiguous ? "unity is ambiguous in Phi*R" : "no unity in Phi*R");
    if (!ctx.carrier.contains(a))
        raise(ErrorCode::containment,
              "element " + label(ctx.space, a) + " is not in the ring carrier");

    CheckReport report;
    auto& nonunit = report.add_axiom("non-unit");
    if (is_approx_unit(a, ctx)) {
        nonunit.holds = false;
        nonunit.witnesses.push_back({{a}, "element is an approximately unit"});
    }

    auto& factors = report.add_axiom("factorizations");
    std::size_t total = 0;
    for (auto b : ctx.carrier.members())
        for (auto c : ctx.carrier.members()) {
            if (ctx.mul->apply(b, c) != a) continue;
            ++total;
            if (!is_approx_unit(b, ctx) && !is_approx_unit(c, ctx)) {
                factors.holds = false;
                factors.witnesses.push_back({{b, c}, "factorization with no unit factor"});
            }
        }
    if (total == 0) factors.note = "no factorization inside R; vacuously irreducible";

    report.finalize();
    return report;
}

bool commutative_on(const Subset& r, const OpTable& op,
                    std::vector<WitnessTuple>* witnesses) {
    bool ok = true;
    for (auto x : r.members())
        for (auto y : r.members()) {
            if (op.apply(x, y) != op.apply(y, x)) {
                ok = false;
                if (witnesses)
                    witnesses->push_back({{x, y}, "operands do not commute"});
                else
                    return false;
            }
        }
    return ok;
}

}  // namespace proxring
