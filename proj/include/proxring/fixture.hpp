#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "proxring/structures.hpp"

namespace proxring {

/// One element of a fixture document. `features` holds one vector for
/// ordinary probes; coset spaces may carry several.
struct FixtureElement {
    std::string label;
    std::optional<std::pair<int, int>> coords;
    std::vector<FeatureVector> features;

    bool operator==(const FixtureElement&) const = default;
};

struct FixtureOperation {
    std::string name;
    std::string rule;  // "mod2-add" | "min-mul" | "table"
    std::vector<std::string> table;  // row-major labels, rule == "table" only

    bool operator==(const FixtureOperation&) const = default;
};

struct FixtureContextRef {
    std::string subset;
    std::string add;
    std::string mul;

    bool operator==(const FixtureContextRef&) const = default;
};

struct FixtureDocument {
    std::string version = "1";
    std::string description;
    std::vector<FixtureElement> elements;
    std::vector<FixtureOperation> operations;
    std::map<std::string, std::vector<std::string>> subsets;
    std::map<std::string, FixtureContextRef> contexts;

    bool operator==(const FixtureDocument&) const = default;
};

nlohmann::json to_json(const FixtureDocument& doc);
FixtureDocument parse_fixture(const nlohmann::json& j);

struct LoadedContext {
    RingContext ctx;
    std::optional<CheckReport> precheck;  // AR1-AR3 report from load time
    std::string precheck_error;           // set when the pre-check raised
};

struct LoadedFixture {
    SpacePtr space;
    std::map<std::string, OpTablePtr> operations;
    std::map<std::string, Subset> subsets;
    std::map<std::string, LoadedContext> contexts;
    FixtureDocument document;

    const Subset& subset(const std::string& name) const;
    const LoadedContext& context(const std::string& name) const;
    const OpTablePtr& operation(const std::string& name) const;
    /// First context in document (alphabetical) order.
    const std::string& default_context() const;
};

/// Materializes immutable objects; every named context is pre-checked.
LoadedFixture load_fixture(const FixtureDocument& doc);

/// Reads a document from a path, or a builtin by "builtin:<name>".
FixtureDocument fixture_by_name(const std::string& name);
LoadedFixture load_fixture_by_name(const std::string& name);

/// The bundled 16-pixel 4x4 image with mod-2 addition and min
/// multiplication; subsets R1, R2, I_prime, I_notprime.
FixtureDocument builtin_image16();

/// The two-element field with an injective probe; everything collapses
/// to the classical case.
FixtureDocument builtin_f2();

std::vector<std::string> builtin_fixture_names();

/// Re-serializes a (possibly constructed) space with named tables,
/// subsets and contexts. Tables are written extensionally.
FixtureDocument document_from(const SpacePtr& space,
                              const std::vector<std::pair<std::string, OpTablePtr>>& ops,
                              const std::map<std::string, Subset>& subsets,
                              const std::map<std::string, FixtureContextRef>& contexts,
                              std::string description = "");

}  // namespace proxring
