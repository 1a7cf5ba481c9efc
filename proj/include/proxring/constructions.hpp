#pragma once

#include "proxring/ideals.hpp"
#include "proxring/structures.hpp"

namespace proxring {

/// How cosets are identified into quotient elements. Set equality is the
/// default reading of the relation rho; feature equality identifies
/// cosets whose member feature sets coincide, which is the reading under
/// which the quotient theorems reproduce the worked example.
enum class CosetRho { set_equality, feature_equality };

struct CosetEntry {
    ElementIndex representative;  // least-index representative
    Subset members;               // representative + S in the base space
};

struct AuditResult {
    bool ok = true;
    std::vector<WitnessTuple> witnesses;  // (x, y, x', y') with diverging classes
};

/// R/rhoS with the ambient quotient space over all of X, induced tables
/// via least representatives (preferring representatives inside R), and
/// representative-independence audits at both scopes.
struct CosetSpace {
    RingContext base;
    Subset ideal;  // S
    CosetRho rho = CosetRho::set_equality;

    SpacePtr qspace;
    RingContext qctx;  // carrier = { x + S : x in R }

    std::vector<CosetEntry> cosets;        // R/rhoS, representatives in R
    std::vector<CosetEntry> upper_cosets;  // (Phi*R)/rhoS

    AuditResult add_audit_r, mul_audit_r;  // representatives restricted to R
    AuditResult add_audit_x, mul_audit_x;  // representatives over all of X

    /// Quotient element owning a base element's coset.
    ElementIndex class_of(ElementIndex base_element) const {
        return class_of_[base_element];
    }
    std::vector<ElementIndex> class_of_;
};

CosetSpace quotient(const RingContext& ctx, const Subset& s,
                    CosetRho rho = CosetRho::set_equality);

/// R1 x R2 over the Cartesian product of the two carriers with
/// concatenated probes and componentwise tables. Both factors must pass
/// is_approx_ring. Zero and unity of the product come from fresh scans.
struct ProductContext {
    SpacePtr space;
    RingContext ctx;  // carrier = R1 x R2
    RingContext left, right;
    CheckReport left_ring, right_ring;
    bool phi_product_law_ok = false;  // Phi*(R1 x R2) = Phi*R1 x Phi*R2

    std::size_t right_size = 0;
    ElementIndex pair_index(ElementIndex a, ElementIndex b) const {
        return static_cast<ElementIndex>(a * right_size + b);
    }
    std::pair<ElementIndex, ElementIndex> components(ElementIndex p) const {
        return {static_cast<ElementIndex>(p / right_size),
                static_cast<ElementIndex>(p % right_size)};
    }
};

ProductContext direct_product(const RingContext& left, const RingContext& right);

}  // namespace proxring
