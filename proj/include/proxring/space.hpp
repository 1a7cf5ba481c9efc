#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxring/errors.hpp"
#include "proxring/indexset.hpp"
#include "proxring/report.hpp"

namespace proxring {

/// Exact integer feature vector (e.g. RGB channels). Nearness is exact
/// component-wise equality, never a tolerance.
using FeatureVector = std::vector<std::int64_t>;

using AtomId = std::uint32_t;

struct Element {
    ElementIndex index = 0;
    std::string label;
    std::optional<std::pair<int, int>> coords;  // (i, j) for grid carriers
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// Finite carrier with a probe map. Each element carries a non-empty set
/// of feature atoms; ordinary spaces assign exactly one atom per element,
/// coset spaces may assign several (the member-feature-set lift).
/// Immutable after construction; all queries are pure.
class Space {
public:
    /// Single-valued probe.
    static SpacePtr create(std::vector<Element> elements,
                           std::vector<FeatureVector> features);
    /// Set-valued probe (every element needs at least one vector).
    static SpacePtr create_multi(std::vector<Element> elements,
                                 std::vector<std::vector<FeatureVector>> features);

    std::size_t size() const { return elements_.size(); }
    std::size_t arity() const { return arity_; }

    const Element& element(ElementIndex i) const { return elements_[i]; }
    const std::vector<Element>& elements() const { return elements_; }

    std::optional<ElementIndex> find_label(std::string_view label) const;
    std::optional<ElementIndex> find_coords(int i, int j) const;

    std::size_t atom_count() const { return atom_vectors_.size(); }
    const FeatureVector& atom_vector(AtomId a) const { return atom_vectors_[a]; }
    /// Sorted atom ids carried by one element.
    const std::vector<AtomId>& atoms_of(ElementIndex i) const { return atoms_of_[i]; }
    /// All elements carrying a given atom (the feature class).
    const IndexSet& atom_class(AtomId a) const { return atom_classes_[a]; }

    bool multi_valued() const { return multi_valued_; }
    /// True when every element has its own single feature vector; the
    /// approximate notions then collapse to their classical counterparts.
    bool injective_probe() const { return injective_; }

    IndexSet empty_index_set() const { return IndexSet(size()); }

private:
    Space() = default;
    void build_index();

    std::vector<Element> elements_;
    std::vector<std::vector<AtomId>> atoms_of_;
    std::vector<FeatureVector> atom_vectors_;
    std::vector<IndexSet> atom_classes_;
    std::size_t arity_ = 0;
    bool multi_valued_ = false;
    bool injective_ = false;
};

/// Subset of one space's carrier.
class Subset {
public:
    Subset() = default;
    Subset(SpacePtr space, IndexSet members);
    static Subset empty(SpacePtr space);
    static Subset full(SpacePtr space);
    static Subset of(SpacePtr space, const std::vector<ElementIndex>& members);
    static Subset of_labels(SpacePtr space, const std::vector<std::string>& labels);

    const SpacePtr& space() const { return space_; }
    const IndexSet& bits() const { return bits_; }

    bool contains(ElementIndex i) const { return bits_.test(i); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.empty(); }
    std::vector<ElementIndex> members() const { return bits_.indices(); }
    std::vector<std::string> labels() const;

    Subset with(ElementIndex i) const;
    Subset without(ElementIndex i) const;
    Subset unite(const Subset& o) const;
    Subset intersect(const Subset& o) const;
    Subset minus(const Subset& o) const;

    bool is_subset_of(const Subset& o) const;
    bool operator==(const Subset& o) const;

    /// Sorted distinct atoms of all members, i.e. the feature set Phi(A).
    std::vector<AtomId> feature_atoms() const;

private:
    SpacePtr space_;
    IndexSet bits_;
};

void require_same_space(const Subset& a, const Subset& b);

/// A delta_Phi B: the feature sets of A and B intersect. False whenever
/// either subset is empty (DP.0).
bool descriptively_near(const Subset& a, const Subset& b);

/// { x in A∪B : Phi(x) in Phi(A) ∩ Phi(B) }.
Subset descriptive_intersection(const Subset& a, const Subset& b);

/// Phi*A = { x in X : {x} delta_Phi A }. Union of the feature classes of A.
Subset upper_approx(const Subset& a);

/// Do two elements carry exactly the same feature atoms?
bool phi_equal(const SpacePtr& space, ElementIndex a, ElementIndex b);

/// Self-test of DP.0-DP.3 over all pairs/triples drawn from `sample`.
/// The axioms hold by construction; any witness indicates an
/// implementation fault.
CheckReport check_dp_axioms(const SpacePtr& space, const std::vector<Subset>& sample);

}  // namespace proxring
