#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "proxring/errors.hpp"

namespace proxring {

using ElementIndex = std::uint32_t;

/// One offending tuple of elements, e.g. a pair whose product escapes
/// the upper approximation. `elems` may be empty when the violation is
/// not tied to specific elements; `note` then carries the explanation.
struct WitnessTuple {
    std::vector<ElementIndex> elems;
    std::string note;

    bool operator==(const WitnessTuple&) const = default;
};

struct AxiomResult {
    std::string tag;  // "AG1", "AR3", "I.neg", ...
    bool holds = true;
    bool required = true;  // informational entries do not affect the verdict
    std::vector<WitnessTuple> witnesses;
    std::string note;

    bool operator==(const AxiomResult&) const = default;
};

struct CheckReport {
    bool verdict = true;  // conjunction of the required axiom results
    // deque: add_axiom hands out references that must survive later adds
    std::deque<AxiomResult> axioms;
    std::string notes;

    bool operator==(const CheckReport&) const = default;

    AxiomResult& add_axiom(std::string tag, bool required = true) {
        axioms.push_back(AxiomResult{std::move(tag), true, required, {}, ""});
        return axioms.back();
    }
    void finalize() {
        verdict = true;
        for (const auto& a : axioms)
            if (a.required && !a.holds) verdict = false;
    }
    const AxiomResult* find(const std::string& tag) const {
        for (const auto& a : axioms)
            if (a.tag == tag) return &a;
        return nullptr;
    }
};

/// Error that carries the underlying check report, e.g. a prime-ideal
/// check invoked on a candidate that fails the ideal axioms.
class CheckError : public Error {
public:
    CheckError(ErrorCode code, const std::string& message, CheckReport report)
        : Error(code, message), report_(std::move(report)) {}

    const CheckReport& report() const { return report_; }

private:
    CheckReport report_;
};

}  // namespace proxring
