#include "proxring/ideals.hpp"

#include <sstream>

namespace proxring {

namespace {

std::string label(const SpacePtr& space, ElementIndex i) {
    return space->element(i).label;
}

void require_candidate(const IdealCandidate& ideal, const RingContext& ctx) {
    if (ideal.members.space() != ctx.space)
        raise(ErrorCode::domain_mismatch, "ideal candidate belongs to another space");
    if (ideal.members.empty())
        raise(ErrorCode::degenerate_input, "ideal candidate must be non-empty");
    if (!ideal.members.is_subset_of(ctx.carrier))
        raise(ErrorCode::containment, "ideal candidate is not contained in R");
}

void require_zero(const RingContext& ctx) {
    if (!ctx.zero)
        raise(ErrorCode::missing_zero,
              ctx.zero_ambiguous ? "zero is ambiguous in Phi*R" : "no zero in Phi*R");
}

Subset zero_singleton(const RingContext& ctx) {
    return Subset::empty(ctx.space).with(*ctx.zero);
}

}  // namespace

CheckReport is_approx_ideal(const IdealCandidate& ideal, const RingContext& ctx) {
    require_candidate(ideal, ctx);
    const auto& members = ideal.members;
    Subset upper_i = upper_approx(members);

    CheckReport report;
    auto& add_ax = report.add_axiom("I.add");
    for (auto x : members.members())
        for (auto y : members.members()) {
            auto s = ctx.add->apply(x, y);
            if (!upper_i.contains(s)) {
                add_ax.holds = false;
                add_ax.witnesses.push_back({{x, y, s}, "sum escapes Phi*I"});
            }
        }

    auto& neg_ax = report.add_axiom("I.neg");
    if (!ctx.zero) {
        neg_ax.holds = false;
        neg_ax.witnesses.push_back(
            {{}, ctx.zero_ambiguous ? "additive identity ambiguous; inverses undefined"
                                    : "no additive identity; inverses undefined"});
    } else {
        for (auto x : members.members()) {
            bool found = false;
            for (auto y : additive_inverses(ctx, x))
                if (members.contains(y)) {
                    found = true;
                    break;
                }
            if (!found) {
                neg_ax.holds = false;
                neg_ax.witnesses.push_back({{x}, "no additive inverse inside I"});
            }
        }
    }

    if (ideal.side == IdealSide::left || ideal.side == IdealSide::two_sided) {
        auto& ax = report.add_axiom("I.absorb.left");
        for (auto r : ctx.carrier.members())
            for (auto x : members.members()) {
                auto rx = ctx.mul->apply(r, x);
                if (!upper_i.contains(rx)) {
                    ax.holds = false;
                    ax.witnesses.push_back({{r, x, rx}, "r.x escapes Phi*I"});
                }
            }
    }
    if (ideal.side == IdealSide::right || ideal.side == IdealSide::two_sided) {
        auto& ax = report.add_axiom("I.absorb.right");
        for (auto r : ctx.carrier.members())
            for (auto x : members.members()) {
                auto xr = ctx.mul->apply(x, r);
                if (!upper_i.contains(xr)) {
                    ax.holds = false;
                    ax.witnesses.push_back({{x, r, xr}, "x.r escapes Phi*I"});
                }
            }
    }

    report.finalize();
    return report;
}

CheckReport is_approx_prime_ideal(const IdealCandidate& ideal, const RingContext& ctx,
                                  bool require_proper) {
    CheckReport ideal_report = is_approx_ideal(ideal, ctx);
    if (!ideal_report.verdict)
        throw CheckError(ErrorCode::precondition,
                         "prime-ideal check on a candidate that is not an approximately ideal",
                         std::move(ideal_report));

    const auto& members = ideal.members;
    Subset upper_p = upper_approx(members);

    CheckReport report;
    bool improper = members == ctx.carrier;
    if (improper) {
        if (require_proper) {
            auto& ax = report.add_axiom("proper");
            ax.holds = false;
            ax.witnesses.push_back({{}, "P equals R; excluded by strict properness"});
        } else {
            report.notes = "improper: P = R, vacuously prime";
        }
    }

    auto& prime = report.add_axiom("prime");
    for (auto a : ctx.carrier.members())
        for (auto b : ctx.carrier.members()) {
            auto ab = ctx.mul->apply(a, b);
            if (!upper_p.contains(ab)) continue;
            if (!members.contains(a) && !members.contains(b)) {
                prime.holds = false;
                prime.witnesses.push_back(
                    {{a, b, ab}, "product lands in Phi*P with neither factor in P"});
            }
        }

    report.finalize();
    return report;
}

PrincipalIdealResult principal_ideal(ElementIndex p, const RingContext& ctx) {
    std::vector<WitnessTuple> comm_witnesses;
    if (!commutative_on(ctx.carrier, *ctx.mul, &comm_witnesses)) {
        CheckReport detail;
        auto& ax = detail.add_axiom("AR4");
        ax.holds = false;
        ax.witnesses = std::move(comm_witnesses);
        detail.finalize();
        throw CheckError(ErrorCode::precondition,
                         "principal ideals require a commutative context", std::move(detail));
    }
    for (auto a : ctx.upper.members())
        for (auto b : ctx.upper.members()) {
            if (!ctx.upper.contains(ctx.add->apply(a, b)))
                raise(ErrorCode::structure, "(Phi*R, +) is not a groupoid: " +
                                                label(ctx.space, a) + " + " +
                                                label(ctx.space, b) + " escapes");
            if (!ctx.upper.contains(ctx.mul->apply(a, b)))
                raise(ErrorCode::structure, "(Phi*R, .) is not a groupoid: " +
                                                label(ctx.space, a) + " . " +
                                                label(ctx.space, b) + " escapes");
        }
    if (!ctx.carrier.contains(p))
        raise(ErrorCode::containment,
              "element " + label(ctx.space, p) + " is not in the ring carrier");
    if (ctx.one && is_approx_unit(p, ctx))
        raise(ErrorCode::precondition,
              "element " + label(ctx.space, p) + " is an approximately unit");

    Subset members = Subset::empty(ctx.space);
    for (auto k : ctx.carrier.members()) {
        auto pk = ctx.mul->apply(p, k);
        if (ctx.carrier.contains(pk)) members = members.with(pk);
    }
    return PrincipalIdealResult{members, members.empty()};
}

CheckReport is_principal_prime(ElementIndex p, const RingContext& ctx) {
    auto principal = principal_ideal(p, ctx);

    CheckReport report;
    auto& nonzero = report.add_axiom("non-zero");
    Subset zero_set =
        ctx.zero ? zero_singleton(ctx).intersect(ctx.carrier) : Subset::empty(ctx.space);
    if (principal.degenerate_empty || principal.members.is_subset_of(zero_set)) {
        nonzero.holds = false;
        nonzero.witnesses.push_back(
            {{}, principal.degenerate_empty ? "(p) is empty; degenerate"
                                            : "(p) is contained in {zero}"});
        report.finalize();
        report.notes = "(p) is not a non-zero ideal; prime check skipped";
        return report;
    }

    CheckReport ideal_report = is_approx_ideal(principal.members, ctx);
    for (auto& ax : ideal_report.axioms) {
        ax.tag = "(p)." + ax.tag;
        report.axioms.push_back(std::move(ax));
    }
    if (!ideal_report.verdict) {
        report.finalize();
        report.notes = "(p) fails the ideal axioms; prime check skipped";
        return report;
    }

    CheckReport prime_report = is_approx_prime_ideal(principal.members, ctx);
    for (auto& ax : prime_report.axioms) {
        ax.tag = "(p)." + ax.tag;
        report.axioms.push_back(std::move(ax));
    }
    report.finalize();
    std::ostringstream os;
    os << "(p) = {";
    for (const auto& l : principal.members.labels()) os << " " << l;
    os << " }";
    report.notes = os.str();
    return report;
}

IdealProductResult ideal_product(const Subset& a, const Subset& b, const RingContext& ctx) {
    for (const Subset* s : {&a, &b}) {
        CheckReport r = is_approx_ideal(*s, ctx);
        if (!r.verdict)
            throw CheckError(ErrorCode::precondition,
                             "ideal product requires approximately ideal factors",
                             std::move(r));
    }

    IdealProductResult out{Subset::empty(ctx.space), Subset::empty(ctx.space), {}, 0};
    Subset products = Subset::empty(ctx.space);
    for (auto x : a.members())
        for (auto y : b.members()) {
            auto xy = ctx.mul->apply(x, y);
            if (ctx.upper.contains(xy)) {
                products = products.with(xy);
            } else {
                out.escaped_products.push_back(xy);
            }
        }

    Subset closure = products;
    while (true) {
        ++out.iterations;
        Subset next = closure;
        for (auto s : closure.members())
            for (auto t : products.members()) next = next.with(ctx.add->apply(s, t));
        if (next == closure) break;
        closure = next;
    }

    out.closure = closure;
    out.members = closure.intersect(ctx.carrier);
    return out;
}

CheckReport is_mult_closed(const Subset& s, const RingContext& ctx) {
    if (s.space() != ctx.space)
        raise(ErrorCode::domain_mismatch, "subset belongs to another space");
    require_zero(ctx);

    CheckReport report;
    auto& nonempty = report.add_axiom("non-empty");
    if (s.empty()) {
        nonempty.holds = false;
        nonempty.witnesses.push_back({{}, "S is empty"});
        report.finalize();
        return report;
    }

    auto& zerofree = report.add_axiom("zero-free");
    if (s.contains(*ctx.zero)) {
        zerofree.holds = false;
        zerofree.witnesses.push_back({{*ctx.zero}, "S contains the zero element"});
    }

    auto& closed = report.add_axiom("products");
    Subset upper_s = upper_approx(s);
    for (auto x : s.members())
        for (auto y : s.members()) {
            auto xy = ctx.mul->apply(x, y);
            if (!upper_s.contains(xy)) {
                closed.holds = false;
                closed.witnesses.push_back({{x, y, xy}, "product escapes Phi*S"});
            }
        }

    report.finalize();
    return report;
}

CheckReport is_approx_integral_domain(const RingContext& ctx) {
    require_zero(ctx);
    std::vector<WitnessTuple> comm_witnesses;
    if (!commutative_on(ctx.carrier, *ctx.mul, &comm_witnesses)) {
        CheckReport detail;
        auto& ax = detail.add_axiom("AR4");
        ax.holds = false;
        ax.witnesses = std::move(comm_witnesses);
        detail.finalize();
        throw CheckError(ErrorCode::precondition,
                         "integral-domain check requires a commutative context",
                         std::move(detail));
    }
    Subset nonzero = ctx.carrier.contains(*ctx.zero) ? ctx.carrier.without(*ctx.zero)
                                                     : ctx.carrier;
    if (nonzero.empty())
        raise(ErrorCode::degenerate_input, "every element of R equals zero");

    CheckReport report;
    auto& ax = report.add_axiom("no-zero-divisors");
    auto& range = report.add_axiom("range", /*required=*/false);
    for (auto x : nonzero.members())
        for (auto y : nonzero.members()) {
            auto xy = ctx.mul->apply(x, y);
            if (xy == *ctx.zero) {
                ax.holds = false;
                ax.witnesses.push_back({{x, y}, "non-zero pair multiplies to zero"});
            }
            if (!ctx.upper.contains(xy)) {
                range.holds = false;
                range.witnesses.push_back({{x, y, xy}, "product outside Phi*R"});
            }
        }
    range.note = "informational: the definition's side condition a.b in Phi*R";

    report.finalize();
    return report;
}

CheckReport is_approx_prime_ring(const RingContext& ctx) {
    require_zero(ctx);

    Subset zero_only = zero_singleton(ctx);
    Subset zero_carrier = zero_only.intersect(ctx.carrier);
    Subset upper_zero = upper_approx(zero_only);
    Subset upper_zero_carrier = upper_approx(zero_carrier);  // empty when zero outside R

    CheckReport report;
    auto& prime = report.add_axiom("zero-ideal-prime");
    for (auto a : ctx.carrier.members())
        for (auto b : ctx.carrier.members()) {
            auto ab = ctx.mul->apply(a, b);
            if (!upper_zero.contains(ab)) continue;
            if (!zero_carrier.contains(a) && !zero_carrier.contains(b)) {
                prime.holds = false;
                prime.witnesses.push_back(
                    {{a, b, ab}, "product lands in Phi*{0} with neither factor zero"});
            }
        }
    prime.note = ctx.carrier.contains(*ctx.zero)
                     ? "zero ideal carrier {0}"
                     : "zero lies outside R; membership quantified via Phi*{0}";

    auto& carrier_reading = report.add_axiom("zero-ideal-prime.carrier", /*required=*/false);
    for (auto a : ctx.carrier.members())
        for (auto b : ctx.carrier.members()) {
            auto ab = ctx.mul->apply(a, b);
            if (!upper_zero_carrier.contains(ab)) continue;
            if (!zero_carrier.contains(a) && !zero_carrier.contains(b)) {
                carrier_reading.holds = false;
                carrier_reading.witnesses.push_back(
                    {{a, b, ab}, "product lands in Phi*({0} inter R) with neither factor zero"});
            }
        }
    carrier_reading.note = "informational: the reading via Phi*({0} inter R)";

    auto& elementwise = report.add_axiom("elementwise", /*required=*/false);
    try {
        CheckReport criterion = elementwise_prime_criterion(ctx);
        elementwise.holds = criterion.verdict;
        if (const auto* ax = criterion.find("elementwise"))
            elementwise.witnesses = ax->witnesses;
        elementwise.note = "informational: the elementwise criterion";
    } catch (const Error& e) {
        elementwise.note = std::string("informational: criterion not evaluable: ") + e.what();
    }

    report.finalize();
    return report;
}

CheckReport elementwise_prime_criterion(const RingContext& ctx) {
    require_zero(ctx);
    Subset nonzero = ctx.carrier.contains(*ctx.zero) ? ctx.carrier.without(*ctx.zero)
                                                     : ctx.carrier;
    if (nonzero.empty())
        raise(ErrorCode::degenerate_input, "R has no non-zero element");

    CheckReport report;
    auto& ax = report.add_axiom("elementwise");
    for (auto a : ctx.carrier.members())
        for (auto b : ctx.carrier.members()) {
            bool annihilates = true;
            for (auto r : nonzero.members()) {
                auto arb = ctx.mul->apply(ctx.mul->apply(a, r), b);
                if (arb != *ctx.zero) {
                    annihilates = false;
                    break;
                }
            }
            if (annihilates && a != *ctx.zero && b != *ctx.zero) {
                ax.holds = false;
                ax.witnesses.push_back({{a, b}, "a.r.b = 0 through every non-zero r"});
            }
        }

    report.finalize();
    return report;
}

}  // namespace proxring
