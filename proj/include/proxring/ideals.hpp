#pragma once

#include "proxring/structures.hpp"

namespace proxring {

enum class IdealSide { left, right, two_sided };

struct IdealCandidate {
    Subset members;
    IdealSide side = IdealSide::two_sided;
};

/// x+y in Phi*I, -x in I (some additive inverse of x lies in I) and
/// r.x in Phi*I / x.r in Phi*I per side.
CheckReport is_approx_ideal(const IdealCandidate& ideal, const RingContext& ctx);

inline CheckReport is_approx_ideal(const Subset& members, const RingContext& ctx) {
    return is_approx_ideal(IdealCandidate{members}, ctx);
}

/// a.b in Phi*P forces a in P or b in P, over all ordered pairs of R.
/// The candidate must pass is_approx_ideal first; otherwise a CheckError
/// carrying the ideal report is raised. P = R is vacuously prime and
/// flagged improper unless `require_proper` excludes it.
CheckReport is_approx_prime_ideal(const IdealCandidate& ideal, const RingContext& ctx,
                                  bool require_proper = false);

inline CheckReport is_approx_prime_ideal(const Subset& members, const RingContext& ctx,
                                         bool require_proper = false) {
    return is_approx_prime_ideal(IdealCandidate{members}, ctx, require_proper);
}

struct PrincipalIdealResult {
    Subset members;  // { p.k : k in R, p.k in R }
    bool degenerate_empty = false;
};

/// Requires a commutative context whose Phi*R is closed under both
/// tables, and a non-unit p in R.
PrincipalIdealResult principal_ideal(ElementIndex p, const RingContext& ctx);

/// Builds (p), then runs the ideal and prime checks; additionally
/// requires (p) not contained in {zero}.
CheckReport is_principal_prime(ElementIndex p, const RingContext& ctx);

struct IdealProductResult {
    Subset members;  // AB, the fixpoint intersected with R
    Subset closure;  // the fixpoint inside X (partial sums included)
    std::vector<ElementIndex> escaped_products;  // a.b outside Phi*R, excluded
    int iterations = 0;
};

/// AB = all elements of R expressible as a finite left-associated sum of
/// products a.b with a in A, b in B and a.b in Phi*R. Only the final sum
/// must lie in R; partial sums may escape and are recorded.
IdealProductResult ideal_product(const Subset& a, const Subset& b, const RingContext& ctx);

/// S non-empty, zero-free, pairwise products inside Phi*S.
CheckReport is_mult_closed(const Subset& s, const RingContext& ctx);

/// No pair of non-zero elements of R multiplies to zero. Requires a
/// commutative context with an identified zero and some non-zero element.
CheckReport is_approx_integral_domain(const RingContext& ctx);

/// The zero ideal is approximately prime. Membership of products is
/// quantified via Phi*{zero}; the reading via Phi*({zero} inter R) is
/// reported alongside, as is the elementwise criterion.
CheckReport is_approx_prime_ring(const RingContext& ctx);

/// For all a,b in R: (a.r.b = 0 for every non-zero r) implies a = 0 or
/// b = 0. Products associate to the left.
CheckReport elementwise_prime_criterion(const RingContext& ctx);

}  // namespace proxring
