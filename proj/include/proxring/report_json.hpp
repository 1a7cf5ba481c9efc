#pragma once

#include <json.hpp>

#include "proxring/theorems.hpp"

namespace proxring {

/// Witness indices resolve to labels through the space; both are kept in
/// the document so parsed reports reproduce the in-memory fields.
nlohmann::json report_to_json(const CheckReport& report, const SpacePtr& space);
CheckReport report_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const TheoremReport& report);
/// Parses the scalar fields and witnesses back; detail reports are
/// restored without their label-resolving spaces.
TheoremReport theorem_report_from_json(const nlohmann::json& j);
nlohmann::json finding_to_json(const Finding& finding);
nlohmann::json search_to_json(const SearchResult& result);

/// Rebuilds a finding's bundle from its serialized form.
EnumeratedBundle bundle_from_json(const nlohmann::json& j);

}  // namespace proxring
