#include "proxring/space.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace proxring {

namespace {

std::string describe(const Space& s, ElementIndex i) {
    return s.element(i).label;
}

}  // namespace

SpacePtr Space::create(std::vector<Element> elements,
                       std::vector<FeatureVector> features) {
    std::vector<std::vector<FeatureVector>> multi;
    multi.reserve(features.size());
    for (auto& f : features) multi.push_back({std::move(f)});
    auto sp = create_multi(std::move(elements), std::move(multi));
    return sp;
}

SpacePtr Space::create_multi(std::vector<Element> elements,
                             std::vector<std::vector<FeatureVector>> features) {
    if (elements.empty()) raise(ErrorCode::schema, "space must be non-empty");
    if (features.size() != elements.size())
        raise(ErrorCode::schema, "feature list does not match element list");

    auto space = std::shared_ptr<Space>(new Space());
    space->elements_ = std::move(elements);
    for (std::size_t i = 0; i < space->elements_.size(); ++i)
        space->elements_[i].index = static_cast<ElementIndex>(i);

    std::map<FeatureVector, AtomId> interned;
    space->atoms_of_.resize(space->elements_.size());
    std::size_t arity = 0;
    bool first = true;
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (features[i].empty())
            raise(ErrorCode::schema,
                  "element '" + space->elements_[i].label + "' has no feature vector");
        for (const auto& vec : features[i]) {
            if (vec.empty()) raise(ErrorCode::schema, "feature arity must be at least 1");
            if (first) {
                arity = vec.size();
                first = false;
            } else if (vec.size() != arity) {
                raise(ErrorCode::schema,
                      "feature arity mismatch at element '" + space->elements_[i].label + "'");
            }
            auto [it, inserted] =
                interned.emplace(vec, static_cast<AtomId>(space->atom_vectors_.size()));
            if (inserted) space->atom_vectors_.push_back(vec);
            space->atoms_of_[i].push_back(it->second);
        }
        auto& atoms = space->atoms_of_[i];
        std::sort(atoms.begin(), atoms.end());
        atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
        if (features[i].size() > 1) space->multi_valued_ = true;
    }
    space->arity_ = arity;
    space->build_index();
    return space;
}

void Space::build_index() {
    atom_classes_.assign(atom_vectors_.size(), IndexSet(elements_.size()));
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (AtomId a : atoms_of_[i]) atom_classes_[a].set(i);

    injective_ = !multi_valued_;
    if (injective_)
        for (const auto& cls : atom_classes_)
            if (cls.count() != 1) {
                injective_ = false;
                break;
            }

    std::map<std::string_view, ElementIndex> labels;
    for (const auto& e : elements_) {
        if (!labels.emplace(e.label, e.index).second)
            raise(ErrorCode::schema, "duplicate element label '" + e.label + "'");
    }
    std::map<std::pair<int, int>, ElementIndex> coords;
    for (const auto& e : elements_) {
        if (e.coords && !coords.emplace(*e.coords, e.index).second)
            raise(ErrorCode::schema, "duplicate coordinates at element '" + e.label + "'");
    }
}

std::optional<ElementIndex> Space::find_label(std::string_view label) const {
    for (const auto& e : elements_)
        if (e.label == label) return e.index;
    return std::nullopt;
}

std::optional<ElementIndex> Space::find_coords(int i, int j) const {
    for (const auto& e : elements_)
        if (e.coords && e.coords->first == i && e.coords->second == j) return e.index;
    return std::nullopt;
}

Subset::Subset(SpacePtr space, IndexSet members)
    : space_(std::move(space)), bits_(std::move(members)) {
    if (bits_.universe() != space_->size())
        raise(ErrorCode::domain_mismatch, "index set universe does not match space");
}

Subset Subset::empty(SpacePtr space) {
    IndexSet bits(space->size());
    return Subset(std::move(space), std::move(bits));
}

Subset Subset::full(SpacePtr space) {
    IndexSet bits(space->size());
    for (std::size_t i = 0; i < bits.universe(); ++i) bits.set(i);
    return Subset(std::move(space), std::move(bits));
}

Subset Subset::of(SpacePtr space, const std::vector<ElementIndex>& members) {
    IndexSet bits(space->size());
    for (auto i : members) {
        if (i >= space->size())
            raise(ErrorCode::unknown_element, "element index out of range");
        bits.set(i);
    }
    return Subset(std::move(space), std::move(bits));
}

Subset Subset::of_labels(SpacePtr space, const std::vector<std::string>& labels) {
    IndexSet bits(space->size());
    for (const auto& l : labels) {
        auto idx = space->find_label(l);
        if (!idx) raise(ErrorCode::unknown_element, "unknown element label '" + l + "'");
        bits.set(*idx);
    }
    return Subset(std::move(space), std::move(bits));
}

std::vector<std::string> Subset::labels() const {
    std::vector<std::string> out;
    for (auto i : bits_.indices()) out.push_back(space_->element(i).label);
    return out;
}

Subset Subset::with(ElementIndex i) const {
    auto bits = bits_;
    bits.set(i);
    return Subset(space_, std::move(bits));
}

Subset Subset::without(ElementIndex i) const {
    auto bits = bits_;
    bits.reset(i);
    return Subset(space_, std::move(bits));
}

Subset Subset::unite(const Subset& o) const {
    require_same_space(*this, o);
    return Subset(space_, bits_ | o.bits_);
}

Subset Subset::intersect(const Subset& o) const {
    require_same_space(*this, o);
    return Subset(space_, bits_ & o.bits_);
}

Subset Subset::minus(const Subset& o) const {
    require_same_space(*this, o);
    auto bits = bits_;
    bits.subtract(o.bits_);
    return Subset(space_, std::move(bits));
}

bool Subset::is_subset_of(const Subset& o) const {
    require_same_space(*this, o);
    return bits_.is_subset_of(o.bits_);
}

bool Subset::operator==(const Subset& o) const {
    return space_ == o.space_ && bits_ == o.bits_;
}

std::vector<AtomId> Subset::feature_atoms() const {
    std::vector<AtomId> atoms;
    for (auto i : bits_.indices())
        for (AtomId a : space_->atoms_of(i)) atoms.push_back(a);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

void require_same_space(const Subset& a, const Subset& b) {
    if (!a.space() || !b.space())
        raise(ErrorCode::domain_mismatch, "subset without a space");
    if (a.space() != b.space())
        raise(ErrorCode::domain_mismatch, "subsets belong to different spaces");
}

bool descriptively_near(const Subset& a, const Subset& b) {
    require_same_space(a, b);
    if (a.empty() || b.empty()) return false;  // DP.0
    auto fa = a.feature_atoms();
    auto fb = b.feature_atoms();
    std::vector<AtomId> common;
    std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                          std::back_inserter(common));
    return !common.empty();
}

Subset descriptive_intersection(const Subset& a, const Subset& b) {
    require_same_space(a, b);
    const auto& space = a.space();
    auto fa = a.feature_atoms();
    auto fb = b.feature_atoms();
    std::vector<AtomId> common;
    std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                          std::back_inserter(common));

    IndexSet bits(space->size());
    Subset both = a.unite(b);
    for (auto x : both.members()) {
        const auto& atoms = space->atoms_of(x);
        bool hit = std::find_first_of(atoms.begin(), atoms.end(), common.begin(),
                                      common.end()) != atoms.end();
        if (hit) bits.set(x);
    }
    return Subset(space, std::move(bits));
}

Subset upper_approx(const Subset& a) {
    const auto& space = a.space();
    IndexSet bits(space->size());
    for (AtomId atom : a.feature_atoms()) bits |= space->atom_class(atom);
    return Subset(space, std::move(bits));
}

bool phi_equal(const SpacePtr& space, ElementIndex a, ElementIndex b) {
    return space->atoms_of(a) == space->atoms_of(b);
}

CheckReport check_dp_axioms(const SpacePtr& space, const std::vector<Subset>& sample) {
    for (const auto& s : sample)
        if (s.space() != space)
            raise(ErrorCode::domain_mismatch, "sample subset from another space");

    CheckReport report;
    auto& dp0 = report.add_axiom("DP.0");
    auto& dp1 = report.add_axiom("DP.1");
    auto& dp2 = report.add_axiom("DP.2");
    auto& dp3 = report.add_axiom("DP.3");

    Subset empty = Subset::empty(space);
    std::size_t vacuous = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (sample[i].empty()) ++vacuous;
        if (descriptively_near(sample[i], empty)) {
            dp0.holds = false;
            dp0.witnesses.push_back({{}, "subset #" + std::to_string(i) + " near empty set"});
        }
    }
    if (vacuous)
        dp0.note = std::to_string(vacuous) + " empty sample subset(s); DP.0 cases vacuous";

    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j) {
            bool ab = descriptively_near(sample[i], sample[j]);
            bool ba = descriptively_near(sample[j], sample[i]);
            if (ab != ba) {
                dp1.holds = false;
                dp1.witnesses.push_back(
                    {{}, "asymmetry between subsets #" + std::to_string(i) + ", #" + std::to_string(j)});
            }
            bool inter = !descriptive_intersection(sample[i], sample[j]).empty();
            if (inter != ab) {
                dp2.holds = false;
                dp2.witnesses.push_back(
                    {{}, "DP.2 mismatch between subsets #" + std::to_string(i) + ", #" + std::to_string(j)});
            }
        }

    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j)
            for (std::size_t k = 0; k < sample.size(); ++k) {
                bool lhs = descriptively_near(sample[i], sample[j].unite(sample[k]));
                bool rhs = descriptively_near(sample[i], sample[j]) ||
                           descriptively_near(sample[i], sample[k]);
                if (lhs != rhs) {
                    dp3.holds = false;
                    dp3.witnesses.push_back({{},
                                             "DP.3 mismatch on subsets #" + std::to_string(i) + ", #" +
                                                 std::to_string(j) + ", #" + std::to_string(k)});
                }
            }

    report.finalize();
    if (!report.verdict) {
        std::ostringstream os;
        os << "descriptive axioms violated on " << describe(*space, 0)
           << "... (implementation self-test failure)";
        report.notes = os.str();
    }
    return report;
}

}  // namespace proxring
