#pragma once

#include <optional>

#include "proxring/optable.hpp"
#include "proxring/report.hpp"
#include "proxring/space.hpp"

namespace proxring {

/// Ambient object of every ring-level check: a designated subset R with
/// the two total tables, the cached upper approximation, and the
/// distinguished zero/unity when the scans over Phi*R find exactly one.
struct RingContext {
    SpacePtr space;
    Subset carrier;  // R
    OpTablePtr add;
    OpTablePtr mul;
    Subset upper;  // Phi*R

    std::optional<ElementIndex> zero;  // additive identity in Phi*R
    std::optional<ElementIndex> one;   // unity in Phi*R
    bool zero_ambiguous = false;
    bool one_ambiguous = false;
    std::vector<ElementIndex> zero_candidates;
    std::vector<ElementIndex> one_candidates;
};

RingContext make_ring_context(const Subset& carrier, OpTablePtr add, OpTablePtr mul);

/// Same tables restricted to S with Phi*S recomputed.
RingContext subring_context(const RingContext& ctx, const Subset& s);

/// All e in Phi*G with x.e = e.x = x for every x in G, ascending.
std::vector<ElementIndex> identity_candidates(const Subset& g, const OpTable& op);

/// All y in R with x+y = y+x = zero, ascending. Empty when no zero is
/// distinguished.
std::vector<ElementIndex> additive_inverses(const RingContext& ctx, ElementIndex x);

/// AG1: products of G stay inside Phi*G.
CheckReport is_approx_groupoid(const Subset& g, const OpTable& op);

/// AG1 + AG2. The associativity equation is evaluated with the ambient
/// total table and requires literal element equality; whether both sides
/// land in Phi*G and whether they are Phi-equal is reported informationally.
CheckReport is_approx_semigroup(const Subset& g, const OpTable& op);

/// AG1-AG4 plus an informational abelian flag. The identity is scanned
/// over Phi*G in element order; more than one candidate raises
/// ErrorCode::ambiguity rather than picking silently.
CheckReport is_approx_group(const Subset& g, const OpTable& op);

/// AR1-AR3 verdict plus informational AR4 (commutative) and AR5 (unity).
CheckReport is_approx_ring(const RingContext& ctx);

CheckReport is_approx_subring(const Subset& s, const RingContext& ctx);

struct InvertibilityReport {
    bool left = false;
    bool right = false;
    std::optional<ElementIndex> left_inverse;
    std::optional<ElementIndex> right_inverse;
    bool unit() const { return left && right; }
};

/// Left/right inverses of x against ctx.one, witnesses included.
InvertibilityReport invertibility(ElementIndex x, const RingContext& ctx);

bool is_approx_unit(ElementIndex x, const RingContext& ctx);

/// (R minus {zero}, mul) must be a commutative approximately group.
CheckReport is_approx_field(const RingContext& ctx);

CheckReport is_approx_subfield(const Subset& s, const RingContext& ctx);

/// a is not a unit and every factorization a = b.c inside R has a unit
/// factor; witnesses are the non-unit factorizations.
CheckReport is_approx_irreducible(ElementIndex a, const RingContext& ctx);

/// x.y = y.x over all ordered pairs of R (AR4 as a standalone scan).
bool commutative_on(const Subset& r, const OpTable& op,
                    std::vector<WitnessTuple>* witnesses = nullptr);

}  // namespace proxring
