#include "proxring/fixture.hpp"

#include <fstream>

namespace proxring {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    raise(ErrorCode::schema, "fixture: " + where + ": " + what);
}

FeatureVector parse_vector(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) schema_error(where, "feature vector must be a non-empty array");
    FeatureVector out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) schema_error(where, "features must be exact integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

}  // namespace

json to_json(const FixtureDocument& doc) {
    json j;
    j["version"] = doc.version;
    if (!doc.description.empty()) j["description"] = doc.description;

    json elements = json::array();
    for (const auto& e : doc.elements) {
        json je;
        je["label"] = e.label;
        if (e.coords) je["coords"] = {e.coords->first, e.coords->second};
        if (e.features.size() == 1) {
            je["features"] = e.features.front();
        } else {
            json multi = json::array();
            for (const auto& f : e.features) multi.push_back(f);
            je["features"] = multi;
        }
        elements.push_back(std::move(je));
    }
    j["elements"] = std::move(elements);

    json operations = json::array();
    for (const auto& op : doc.operations) {
        json jo;
        jo["name"] = op.name;
        jo["rule"] = op.rule;
        if (op.rule == "table") jo["table"] = op.table;
        operations.push_back(std::move(jo));
    }
    j["operations"] = std::move(operations);

    j["subsets"] = json::object();
    for (const auto& [name, members] : doc.subsets) j["subsets"][name] = members;

    j["contexts"] = json::object();
    for (const auto& [name, ref] : doc.contexts)
        j["contexts"][name] = {{"subset", ref.subset}, {"add", ref.add}, {"mul", ref.mul}};
    return j;
}

FixtureDocument parse_fixture(const json& j) {
    if (!j.is_object()) schema_error("document", "expected a JSON object");
    FixtureDocument doc;
    doc.version = j.value("version", "1");
    doc.description = j.value("description", "");

    if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
        schema_error("elements", "expected a non-empty array");
    for (std::size_t i = 0; i < j["elements"].size(); ++i) {
        const auto& je = j["elements"][i];
        const std::string where = "elements[" + std::to_string(i) + "]";
        FixtureElement e;
        if (!je.contains("label") || !je["label"].is_string())
            schema_error(where, "missing label");
        e.label = je["label"].get<std::string>();
        if (je.contains("coords")) {
            const auto& c = je["coords"];
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
                !c[1].is_number_integer() || c[0].get<int>() < 0 || c[1].get<int>() < 0)
                schema_error(where, "coords must be a pair of naturals");
            e.coords = {c[0].get<int>(), c[1].get<int>()};
        }
        if (!je.contains("features")) schema_error(where, "missing features");
        const auto& jf = je["features"];
        if (!jf.is_array() || jf.empty()) schema_error(where, "features must be non-empty");
        if (jf.front().is_array()) {
            for (const auto& v : jf) e.features.push_back(parse_vector(v, where));
        } else {
            e.features.push_back(parse_vector(jf, where));
        }
        doc.elements.push_back(std::move(e));
    }

    if (j.contains("operations")) {
        if (!j["operations"].is_array()) schema_error("operations", "expected an array");
        for (std::size_t i = 0; i < j["operations"].size(); ++i) {
            const auto& jo = j["operations"][i];
            const std::string where = "operations[" + std::to_string(i) + "]";
            FixtureOperation op;
            if (!jo.contains("name") || !jo["name"].is_string())
                schema_error(where, "missing name");
            op.name = jo["name"].get<std::string>();
            op.rule = jo.value("rule", "");
            if (op.rule != "mod2-add" && op.rule != "min-mul" && op.rule != "table")
                schema_error(where, "rule must be one of mod2-add, min-mul, table");
            if (op.rule == "table") {
                if (!jo.contains("table") || !jo["table"].is_array())
                    schema_error(where, "table rule requires row-major entries");
                for (const auto& cell : jo["table"]) {
                    if (!cell.is_string()) schema_error(where, "table entries must be labels");
                    op.table.push_back(cell.get<std::string>());
                }
            }
            doc.operations.push_back(std::move(op));
        }
    }

    if (j.contains("subsets")) {
        if (!j["subsets"].is_object()) schema_error("subsets", "expected an object");
        for (const auto& [name, members] : j["subsets"].items()) {
            if (!members.is_array()) schema_error("subsets." + name, "expected an array");
            std::vector<std::string> out;
            for (const auto& m : members) {
                if (!m.is_string()) schema_error("subsets." + name, "members must be labels");
                out.push_back(m.get<std::string>());
            }
            doc.subsets[name] = std::move(out);
        }
    }

    if (j.contains("contexts")) {
        if (!j["contexts"].is_object()) schema_error("contexts", "expected an object");
        for (const auto& [name, ref] : j["contexts"].items()) {
            const std::string where = "contexts." + name;
            if (!ref.is_object() || !ref.contains("subset") || !ref.contains("add") ||
                !ref.contains("mul"))
                schema_error(where, "expected {subset, add, mul}");
            doc.contexts[name] = FixtureContextRef{ref["subset"].get<std::string>(),
                                                   ref["add"].get<std::string>(),
                                                   ref["mul"].get<std::string>()};
        }
    }
    return doc;
}

const Subset& LoadedFixture::subset(const std::string& name) const {
    auto it = subsets.find(name);
    if (it == subsets.end())
        raise(ErrorCode::unknown_element, "unknown subset '" + name + "'");
    return it->second;
}

const LoadedContext& LoadedFixture::context(const std::string& name) const {
    auto it = contexts.find(name);
    if (it == contexts.end())
        raise(ErrorCode::unknown_element, "unknown context '" + name + "'");
    return it->second;
}

const OpTablePtr& LoadedFixture::operation(const std::string& name) const {
    auto it = operations.find(name);
    if (it == operations.end())
        raise(ErrorCode::unknown_element, "unknown operation '" + name + "'");
    return it->second;
}

const std::string& LoadedFixture::default_context() const {
    if (contexts.empty()) raise(ErrorCode::unknown_element, "fixture has no contexts");
    return contexts.begin()->first;
}

LoadedFixture load_fixture(const FixtureDocument& doc) {
    LoadedFixture out;
    out.document = doc;

    std::vector<Element> elements;
    std::vector<std::vector<FeatureVector>> features;
    for (const auto& e : doc.elements) {
        Element el;
        el.label = e.label;
        el.coords = e.coords;
        elements.push_back(std::move(el));
        features.push_back(e.features);
    }
    out.space = Space::create_multi(std::move(elements), std::move(features));

    for (const auto& op : doc.operations) {
        if (out.operations.count(op.name))
            schema_error("operations", "duplicate operation name '" + op.name + "'");
        if (op.rule == "mod2-add") {
            out.operations[op.name] = OpTable::grid_add_mod2(out.space, op.name);
        } else if (op.rule == "min-mul") {
            out.operations[op.name] = OpTable::grid_mul_min(out.space, op.name);
        } else {
            std::vector<ElementIndex> rows;
            for (const auto& cell : op.table) {
                auto idx = out.space->find_label(cell);
                if (!idx)
                    schema_error("operations." + op.name,
                                 "unknown element label '" + cell + "'");
                rows.push_back(*idx);
            }
            out.operations[op.name] = OpTable::from_rows(out.space, op.name, std::move(rows));
        }
    }

    for (const auto& [name, members] : doc.subsets) {
        try {
            out.subsets.emplace(name, Subset::of_labels(out.space, members));
        } catch (const Error& e) {
            schema_error("subsets." + name, e.what());
        }
    }

    for (const auto& [name, ref] : doc.contexts) {
        auto sub = out.subsets.find(ref.subset);
        if (sub == out.subsets.end())
            schema_error("contexts." + name, "unknown subset '" + ref.subset + "'");
        auto add = out.operations.find(ref.add);
        if (add == out.operations.end())
            schema_error("contexts." + name, "unknown operation '" + ref.add + "'");
        auto mul = out.operations.find(ref.mul);
        if (mul == out.operations.end())
            schema_error("contexts." + name, "unknown operation '" + ref.mul + "'");

        LoadedContext lc{make_ring_context(sub->second, add->second, mul->second), {}, {}};
        try {
            lc.precheck = is_approx_ring(lc.ctx);
        } catch (const Error& e) {
            lc.precheck_error = e.what();
        }
        out.contexts.emplace(name, std::move(lc));
    }
    return out;
}

FixtureDocument fixture_by_name(const std::string& name) {
    if (name.rfind("builtin:", 0) == 0) {
        std::string id = name.substr(8);
        if (id == "image16") return builtin_image16();
        if (id == "f2") return builtin_f2();
        raise(ErrorCode::unknown_element, "unknown builtin fixture '" + id + "'");
    }
    std::ifstream in(name);
    if (!in) raise(ErrorCode::schema, "cannot open fixture file '" + name + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise(ErrorCode::schema, "fixture '" + name + "': " + e.what());
    }
    return parse_fixture(j);
}

LoadedFixture load_fixture_by_name(const std::string& name) {
    return load_fixture(fixture_by_name(name));
}

std::vector<std::string> builtin_fixture_names() { return {"image16", "f2"}; }

FixtureDocument builtin_image16() {
    FixtureDocument doc;
    doc.description =
        "4x4 pixel image with mod-2 addition and min multiplication. Pixels x00 and "
        "x01 share one colour, x10 and x11 share another, and the remaining twelve "
        "are pairwise distinct, so the named subsets exercise both a prime and a "
        "non-prime ideal.";

    const FeatureVector g1{230, 25, 75};
    const FeatureVector g2{60, 180, 75};
    const std::vector<FeatureVector> fresh{
        {255, 225, 25}, {0, 130, 200},  {245, 130, 48}, {145, 30, 180},
        {70, 240, 240}, {240, 50, 230}, {210, 245, 60}, {250, 190, 212},
        {0, 128, 128},  {220, 190, 255}, {170, 110, 40}, {255, 250, 200}};

    std::size_t next_fresh = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            FixtureElement e;
            e.label = "x" + std::to_string(i) + std::to_string(j);
            e.coords = {i, j};
            if ((i == 0 && j == 0) || (i == 0 && j == 1)) {
                e.features = {g1};
            } else if ((i == 1 && j == 0) || (i == 1 && j == 1)) {
                e.features = {g2};
            } else {
                e.features = {fresh[next_fresh++]};
            }
            doc.elements.push_back(std::move(e));
        }

    doc.operations = {{"add", "mod2-add", {}}, {"mul", "min-mul", {}}};
    doc.subsets = {{"R1", {"x01", "x10"}},
                   {"R2", {"x00", "x01", "x10", "x11"}},
                   {"I_prime", {"x01"}},
                   {"I_notprime", {"x01", "x10"}}};
    doc.contexts = {{"R1", {"R1", "add", "mul"}}, {"R2", {"R2", "add", "mul"}}};
    return doc;
}

FixtureDocument builtin_f2() {
    FixtureDocument doc;
    doc.description = "The two-element field with an injective probe.";
    doc.elements = {{"0", std::nullopt, {{0}}}, {"1", std::nullopt, {{1}}}};
    doc.operations = {{"add", "table", {"0", "1", "1", "0"}},
                      {"mul", "table", {"0", "0", "0", "1"}}};
    doc.subsets = {{"F2", {"0", "1"}}, {"zero", {"0"}}, {"one", {"1"}}};
    doc.contexts = {{"F2", {"F2", "add", "mul"}}};
    return doc;
}

FixtureDocument document_from(const SpacePtr& space,
                              const std::vector<std::pair<std::string, OpTablePtr>>& ops,
                              const std::map<std::string, Subset>& subsets,
                              const std::map<std::string, FixtureContextRef>& contexts,
                              std::string description) {
    FixtureDocument doc;
    doc.description = std::move(description);
    for (const auto& e : space->elements()) {
        FixtureElement fe;
        fe.label = e.label;
        fe.coords = e.coords;
        for (AtomId a : space->atoms_of(e.index))
            fe.features.push_back(space->atom_vector(a));
        doc.elements.push_back(std::move(fe));
    }
    for (const auto& [name, op] : ops) {
        FixtureOperation fo;
        fo.name = name;
        fo.rule = "table";
        for (auto idx : op->raw()) fo.table.push_back(space->element(idx).label);
        doc.operations.push_back(std::move(fo));
    }
    for (const auto& [name, sub] : subsets) doc.subsets[name] = sub.labels();
    doc.contexts = contexts;
    return doc;
}

}  // namespace proxring
