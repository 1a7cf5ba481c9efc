#pragma once

#include <string>
#include <vector>

#include "proxring/fixture.hpp"
#include "proxring/ideals.hpp"
#include "proxring/structures.hpp"

namespace proxring::test {

/// Space with labels e0..e{n-1} and the given feature class per element
/// (single integer channel).
inline SpacePtr classed_space(const std::vector<int>& klass) {
    std::vector<Element> elements(klass.size());
    std::vector<FeatureVector> features(klass.size());
    for (std::size_t i = 0; i < klass.size(); ++i) {
        elements[i].label = "e" + std::to_string(i);
        features[i] = {klass[i]};
    }
    return Space::create(std::move(elements), std::move(features));
}

/// Space with an injective probe over n elements.
inline SpacePtr injective_space(std::size_t n) {
    std::vector<int> klass(n);
    for (std::size_t i = 0; i < n; ++i) klass[i] = static_cast<int>(i);
    return classed_space(klass);
}

inline Subset subset_of(const SpacePtr& space, std::initializer_list<std::string> labels) {
    return Subset::of_labels(space, std::vector<std::string>(labels));
}

inline std::vector<std::string> sorted_labels(const Subset& s) { return s.labels(); }

/// The report invariant: the verdict is the conjunction of the required
/// axioms and every failed axiom names at least one witness.
inline bool report_well_formed(const CheckReport& report) {
    bool conj = true;
    for (const auto& ax : report.axioms) {
        if (ax.required && !ax.holds) conj = false;
        if (!ax.holds && ax.witnesses.empty()) return false;
    }
    return report.verdict == conj;
}

}  // namespace proxring::test
