#pragma once

#include <functional>
#include <map>
#include <optional>

#include "proxring/constructions.hpp"
#include "proxring/fixture.hpp"

namespace proxring {

struct TheoremInfo {
    std::string id;
    std::string statement;
    std::vector<std::string> needs;  // bundle parts: ring, ideal, ideal2, ideal3, element, left, right
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo* find_theorem(const std::string& id);
std::vector<std::string> theorem_ids();

struct TheoremBundle {
    std::optional<RingContext> ring;
    std::optional<Subset> ideal;           // I or A
    std::optional<Subset> ideal2;          // B
    std::optional<Subset> ideal3;          // C
    std::optional<ElementIndex> element;   // p
    std::optional<RingContext> left, right;
    int subset_enum_limit = 12;  // guard for the all-ideals enumerations
};

enum class Classification { confirmed, vacuous, counterexample, not_applicable };
const char* to_string(Classification c);

struct ResolvedWitness {
    std::vector<std::string> labels;
    std::string note;

    bool operator==(const ResolvedWitness&) const = default;
};

struct TheoremDetail {
    std::string name;
    CheckReport report;
    SpacePtr space;  // resolves witness indices of this report
};

struct TheoremReport {
    std::string id;
    std::string statement;
    std::optional<bool> hypothesis;
    std::optional<bool> conclusion;
    Classification classification = Classification::not_applicable;
    std::vector<ResolvedWitness> witnesses;
    std::vector<TheoremDetail> details;
    std::string notes;
};

/// Evaluates one registry entry on a bundle. Hypothesis failures
/// classify as vacuous; definition-level errors (preconditions, missing
/// zero or unity, degenerate carriers) demote the affected side to
/// false; structural errors mark the entry not applicable. Exceeding the
/// subset enumeration guard raises ErrorCode::budget.
TheoremReport verify_theorem(const std::string& id, const TheoremBundle& bundle);

// ---------------------------------------------------------------------------
// Bounded enumeration and counterexample search.

struct SearchBudget {
    int max_carrier = 3;
    int max_feature_classes = 2;
    std::uint64_t seed = 0;
    long max_candidates = 4000;
    bool family_exhaustive = true;  // all tables, carriers of size <= 2
    bool family_grid = true;        // mod-2 / min rules on 1xN grids
    bool family_random = true;      // seeded samples for carriers of size >= 3
    int subset_enum_limit = 12;
};

enum class BundleShape { base, with_ideal, with_two_ideals, with_element, pair };
BundleShape shape_for(const std::string& theorem_id);

/// Self-contained candidate: fixture document(s) plus named bundle parts.
struct EnumeratedBundle {
    FixtureDocument doc;
    std::optional<FixtureDocument> doc2;  // right factor for pair shapes
    std::string ring;                     // context name in doc
    std::string ideal, ideal2, ideal3;    // subset names when present
    std::string element;                  // element label when present
    std::string left, right;              // context names for pair shapes
};

struct EnumerationStats {
    long raw_spaces = 0;
    long raw_table_pairs = 0;
    long emitted = 0;
    bool truncated = false;
};

/// Visits canonical bundles (deduplicated up to element relabeling) in a
/// deterministic order; the visitor returns false to stop early.
EnumerationStats enumerate_structures(const SearchBudget& budget, BundleShape shape,
                                      const std::function<bool(const EnumeratedBundle&)>& visit);

struct Finding {
    TheoremReport report;
    EnumeratedBundle bundle;
};

struct SearchResult {
    std::string id;
    SearchBudget budget;
    std::vector<Finding> findings;  // classification == counterexample only
    long candidates = 0;
    bool truncated = false;
};

SearchResult search_counterexamples(const std::string& id, const SearchBudget& budget);

/// Re-runs a finding from its serialized bundle.
TheoremReport replay_finding(const std::string& id, const EnumeratedBundle& bundle);

/// Resolves bundle parts by name against loaded fixtures, filling
/// documented defaults for missing parts (first context, first proper
/// subset of the carrier, first non-unit element, first two contexts).
TheoremBundle resolve_bundle(const LoadedFixture& fx, const LoadedFixture* right_fx,
                             const TheoremInfo& info,
                             const std::map<std::string, std::string>& parts,
                             int subset_enum_limit = 12);

}  // namespace proxring
