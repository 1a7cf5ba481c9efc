#include "proxring/report_json.hpp"

namespace proxring {

using nlohmann::json;

namespace {

json witness_to_json(const WitnessTuple& w, const SpacePtr& space) {
    json j;
    j["indices"] = w.elems;
    json labels = json::array();
    for (auto i : w.elems) labels.push_back(space ? space->element(i).label : std::to_string(i));
    j["elements"] = std::move(labels);
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

}  // namespace

json report_to_json(const CheckReport& report, const SpacePtr& space) {
    json j;
    j["verdict"] = report.verdict;
    json axioms = json::array();
    for (const auto& ax : report.axioms) {
        json ja;
        ja["tag"] = ax.tag;
        ja["holds"] = ax.holds;
        ja["required"] = ax.required;
        if (!ax.note.empty()) ja["note"] = ax.note;
        json ws = json::array();
        for (const auto& w : ax.witnesses) ws.push_back(witness_to_json(w, space));
        ja["witnesses"] = std::move(ws);
        axioms.push_back(std::move(ja));
    }
    j["axioms"] = std::move(axioms);
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

CheckReport report_from_json(const json& j) {
    CheckReport report;
    report.verdict = j.at("verdict").get<bool>();
    report.notes = j.value("notes", "");
    for (const auto& ja : j.at("axioms")) {
        AxiomResult ax;
        ax.tag = ja.at("tag").get<std::string>();
        ax.holds = ja.at("holds").get<bool>();
        ax.required = ja.at("required").get<bool>();
        ax.note = ja.value("note", "");
        for (const auto& jw : ja.at("witnesses")) {
            WitnessTuple w;
            w.elems = jw.at("indices").get<std::vector<ElementIndex>>();
            w.note = jw.value("note", "");
            ax.witnesses.push_back(std::move(w));
        }
        report.axioms.push_back(std::move(ax));
    }
    return report;
}

json report_to_json(const TheoremReport& report) {
    json j;
    j["id"] = report.id;
    j["statement"] = report.statement;
    j["hypothesis"] = report.hypothesis ? json(*report.hypothesis) : json(nullptr);
    j["conclusion"] = report.conclusion ? json(*report.conclusion) : json(nullptr);
    j["classification"] = to_string(report.classification);
    json ws = json::array();
    for (const auto& w : report.witnesses) {
        json jw;
        jw["elements"] = w.labels;
        if (!w.note.empty()) jw["note"] = w.note;
        ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    json details = json::array();
    for (const auto& d : report.details)
        details.push_back({{"name", d.name}, {"report", report_to_json(d.report, d.space)}});
    j["details"] = std::move(details);
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

TheoremReport theorem_report_from_json(const json& j) {
    TheoremReport rep;
    rep.id = j.at("id").get<std::string>();
    rep.statement = j.at("statement").get<std::string>();
    if (!j.at("hypothesis").is_null()) rep.hypothesis = j.at("hypothesis").get<bool>();
    if (!j.at("conclusion").is_null()) rep.conclusion = j.at("conclusion").get<bool>();
    const auto cls = j.at("classification").get<std::string>();
    for (auto c : {Classification::confirmed, Classification::vacuous,
                   Classification::counterexample, Classification::not_applicable})
        if (cls == to_string(c)) rep.classification = c;
    for (const auto& jw : j.at("witnesses")) {
        ResolvedWitness w;
        w.labels = jw.at("elements").get<std::vector<std::string>>();
        w.note = jw.value("note", "");
        rep.witnesses.push_back(std::move(w));
    }
    for (const auto& jd : j.at("details"))
        rep.details.push_back(
            {jd.at("name").get<std::string>(), report_from_json(jd.at("report")), nullptr});
    rep.notes = j.value("notes", "");
    return rep;
}

json finding_to_json(const Finding& finding) {
    json j;
    j["report"] = report_to_json(finding.report);
    json bundle;
    bundle["fixture"] = to_json(finding.bundle.doc);
    if (finding.bundle.doc2) bundle["fixture2"] = to_json(*finding.bundle.doc2);
    auto put = [&](const char* key, const std::string& value) {
        if (!value.empty()) bundle[key] = value;
    };
    put("ring", finding.bundle.ring);
    put("ideal", finding.bundle.ideal);
    put("ideal2", finding.bundle.ideal2);
    put("ideal3", finding.bundle.ideal3);
    put("element", finding.bundle.element);
    put("left", finding.bundle.left);
    put("right", finding.bundle.right);
    j["bundle"] = std::move(bundle);
    return j;
}

json search_to_json(const SearchResult& result) {
    json j;
    j["theorem"] = result.id;
    j["budget"] = {{"max_carrier", result.budget.max_carrier},
                   {"max_feature_classes", result.budget.max_feature_classes},
                   {"seed", result.budget.seed},
                   {"max_candidates", result.budget.max_candidates}};
    j["candidates"] = result.candidates;
    j["truncated"] = result.truncated;
    json findings = json::array();
    for (const auto& f : result.findings) findings.push_back(finding_to_json(f));
    j["findings"] = std::move(findings);
    return j;
}

EnumeratedBundle bundle_from_json(const json& j) {
    EnumeratedBundle eb;
    eb.doc = parse_fixture(j.at("fixture"));
    if (j.contains("fixture2")) eb.doc2 = parse_fixture(j.at("fixture2"));
    eb.ring = j.value("ring", "");
    eb.ideal = j.value("ideal", "");
    eb.ideal2 = j.value("ideal2", "");
    eb.ideal3 = j.value("ideal3", "");
    eb.element = j.value("element", "");
    eb.left = j.value("left", "");
    eb.right = j.value("right", "");
    return eb;
}

}  // namespace proxring
