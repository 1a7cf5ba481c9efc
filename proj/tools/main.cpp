#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "proxring/report_json.hpp"
#include "proxring/theorems.hpp"

using namespace proxring;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;
constexpr std::size_t kTextWitnessCap = 10;

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) os << sep;
        os << items[i];
    }
    return os.str();
}

std::string set_text(const Subset& s) { return "{" + join(s.labels()) + "}"; }

std::string witness_text(const WitnessTuple& w, const SpacePtr& space) {
    std::vector<std::string> labels;
    for (auto i : w.elems) labels.push_back(space->element(i).label);
    std::string out = "(" + join(labels) + ")";
    if (!w.note.empty()) out += " " + w.note;
    return out;
}

void print_report_text(const CheckReport& report, const SpacePtr& space) {
    std::cout << "verdict: " << (report.verdict ? "true" : "false") << "\n";
    for (const auto& ax : report.axioms) {
        std::cout << "  [" << (ax.holds ? "x" : " ") << "] " << ax.tag;
        if (!ax.required) std::cout << " (informational)";
        if (!ax.note.empty()) std::cout << " -- " << ax.note;
        std::cout << "\n";
        std::size_t shown = 0;
        for (const auto& w : ax.witnesses) {
            if (shown == kTextWitnessCap) {
                std::cout << "      ... " << (ax.witnesses.size() - shown)
                          << " more witness(es)\n";
                break;
            }
            std::cout << "      witness: " << witness_text(w, space) << "\n";
            ++shown;
        }
    }
    if (!report.notes.empty()) std::cout << "notes: " << report.notes << "\n";
}

void print_theorem_text(const TheoremReport& rep) {
    std::cout << rep.id << ": " << to_string(rep.classification) << "\n";
    std::cout << "  statement: " << rep.statement << "\n";
    auto tri = [](const std::optional<bool>& v) {
        return !v ? "not evaluated" : (*v ? "true" : "false");
    };
    std::cout << "  hypothesis: " << tri(rep.hypothesis)
              << ", conclusion: " << tri(rep.conclusion) << "\n";
    std::size_t shown = 0;
    for (const auto& w : rep.witnesses) {
        if (shown == kTextWitnessCap) {
            std::cout << "  ... " << (rep.witnesses.size() - shown) << " more witness(es)\n";
            break;
        }
        std::cout << "  witness: (" << join(w.labels) << ")";
        if (!w.note.empty()) std::cout << " " << w.note;
        std::cout << "\n";
        ++shown;
    }
    if (!rep.notes.empty()) std::cout << "  notes: " << rep.notes << "\n";
}

struct CheckArgs {
    std::string kind, target, fixture = "builtin:image16";
    std::string context, op;
    bool proper = false;
    std::string output = "text";
};

RingContext context_for(const LoadedFixture& fx, const std::string& name) {
    if (name.empty()) return fx.context(fx.default_context()).ctx;
    return fx.context(name).ctx;
}

int run_check(const CheckArgs& args) {
    LoadedFixture fx = load_fixture_by_name(args.fixture);

    CheckReport report;
    SpacePtr space = fx.space;

    // Ring-level targets name a context directly, or a subset checked as a
    // subring of the --in context.
    auto context_or_sub = [&]() -> RingContext {
        if (fx.contexts.count(args.target) && args.context.empty())
            return fx.context(args.target).ctx;
        RingContext outer = context_for(fx, args.context);
        Subset target = fx.subset(args.target);
        if (target == outer.carrier) return outer;
        return subring_context(outer, target);
    };

    if (args.kind == "groupoid" || args.kind == "semigroup" || args.kind == "group") {
        Subset target = fx.subset(args.target);
        OpTablePtr op;
        if (!args.op.empty()) {
            op = fx.operation(args.op);
        } else if (fx.operations.count("mul")) {
            op = fx.operation("mul");
        } else if (!fx.operations.empty()) {
            op = fx.operations.begin()->second;
        } else {
            raise(ErrorCode::usage, "fixture has no operations");
        }
        if (args.kind == "groupoid") report = is_approx_groupoid(target, *op);
        if (args.kind == "semigroup") report = is_approx_semigroup(target, *op);
        if (args.kind == "group") report = is_approx_group(target, *op);
    } else if (args.kind == "ring") {
        report = is_approx_ring(context_or_sub());
    } else if (args.kind == "field") {
        report = is_approx_field(context_or_sub());
    } else if (args.kind == "integral-domain") {
        report = is_approx_integral_domain(context_or_sub());
    } else if (args.kind == "prime-ring") {
        report = is_approx_prime_ring(context_or_sub());
    } else if (args.kind == "ideal") {
        report = is_approx_ideal(fx.subset(args.target), context_for(fx, args.context));
    } else if (args.kind == "prime-ideal") {
        report = is_approx_prime_ideal(fx.subset(args.target), context_for(fx, args.context),
                                       args.proper);
    } else if (args.kind == "mult-closed") {
        report = is_mult_closed(fx.subset(args.target), context_for(fx, args.context));
    } else if (args.kind == "irreducible") {
        RingContext ctx = context_for(fx, args.context);
        auto idx = fx.space->find_label(args.target);
        if (!idx) raise(ErrorCode::unknown_element, "unknown element '" + args.target + "'");
        report = is_approx_irreducible(*idx, ctx);
    } else {
        raise(ErrorCode::usage, "unknown check kind '" + args.kind + "'");
    }

    if (args.output == "structured") {
        std::cout << report_to_json(report, space).dump(2) << "\n";
    } else {
        print_report_text(report, space);
    }
    return report.verdict ? kExitTrue : kExitFalse;
}

std::map<std::string, std::string> parse_bundle_flag(const std::string& bundle) {
    std::map<std::string, std::string> out;
    std::istringstream in(bundle);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            raise(ErrorCode::usage, "bundle parts look like key=value: '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate algebraic structures on descriptive proximity spaces"};
    app.require_subcommand(1);

    std::string output = "text";

    // approx -------------------------------------------------------------
    auto* approx = app.add_subcommand("approx", "print the upper approximation of a subset");
    std::string approx_subset, approx_fixture = "builtin:image16";
    approx->add_option("subset", approx_subset, "named subset")->required();
    approx->add_option("--fixture", approx_fixture, "fixture path or builtin:<name>");
    approx->add_option("--output", output, "text|structured");

    // check --------------------------------------------------------------
    auto* check = app.add_subcommand("check", "run one structure check");
    CheckArgs check_args;
    check
        ->add_option("kind", check_args.kind,
                     "groupoid|semigroup|group|ring|ideal|prime-ideal|field|"
                     "integral-domain|prime-ring|mult-closed|irreducible")
        ->required();
    check->add_option("target", check_args.target, "subset, context or element name")
        ->required();
    check->add_option("--in", check_args.context, "ambient ring context");
    check->add_option("--op", check_args.op, "operation name for group-family checks");
    check->add_option("--fixture", check_args.fixture, "fixture path or builtin:<name>");
    check->add_flag("--proper", check_args.proper, "require prime ideals to be proper");
    check->add_option("--output", check_args.output, "text|structured");

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check registry entries on a fixture");
    std::vector<std::string> verify_ids;
    std::string verify_fixture = "builtin:image16", verify_fixture2;
    std::string bundle_flag;
    std::map<std::string, std::string> parts;
    int subset_limit = 12;
    verify->add_option("ids", verify_ids, "entry ids (T1..T14, T10a, T10b) or 'all'")
        ->required();
    verify->add_option("--fixture", verify_fixture, "fixture path or builtin:<name>");
    verify->add_option("--fixture2", verify_fixture2, "fixture for the right factor");
    verify->add_option("--bundle", bundle_flag, "comma list of part=name overrides");
    verify->add_option("--in", parts["ring"], "ring context");
    verify->add_option("--ideal", parts["ideal"], "ideal subset");
    verify->add_option("--ideal2", parts["ideal2"], "second ideal subset");
    verify->add_option("--ideal3", parts["ideal3"], "third ideal subset");
    verify->add_option("--element", parts["element"], "designated element");
    verify->add_option("--left", parts["left"], "left factor context");
    verify->add_option("--right", parts["right"], "right factor context");
    verify->add_option("--limit", subset_limit, "subset enumeration guard");
    verify->add_option("--output", output, "text|structured");

    // search ---------------------------------------------------------------
    auto* search = app.add_subcommand("search", "bounded counterexample search");
    std::string search_id;
    SearchBudget budget;
    std::string families;
    search->add_option("id", search_id, "entry id")->required();
    search->add_option("--max-carrier", budget.max_carrier, "carrier size bound");
    search->add_option("--max-classes", budget.max_feature_classes, "feature class bound");
    search->add_option("--seed", budget.seed, "random family seed");
    search->add_option("--max-candidates", budget.max_candidates, "candidate bound");
    search->add_option("--families", families, "comma list of grid,exhaustive,random");
    search->add_option("--output", output, "text|structured");

    // report ---------------------------------------------------------------
    auto* report_cmd = app.add_subcommand("report", "fixture summary with context pre-checks");
    std::string report_fixture = "builtin:image16";
    report_cmd->add_option("--fixture", report_fixture, "fixture path or builtin:<name>");
    report_cmd->add_option("--output", output, "text|structured");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e), kExitTrue;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e), kExitTrue;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*approx) {
            LoadedFixture fx = load_fixture_by_name(approx_fixture);
            auto upper = upper_approx(fx.subset(approx_subset));
            if (output == "structured") {
                nlohmann::json j{{"subset", approx_subset}, {"upper", upper.labels()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << set_text(upper) << "\n";
            }
            return kExitTrue;
        }

        if (*check) return run_check(check_args);

        if (*verify) {
            for (const auto& [k, v] : parse_bundle_flag(bundle_flag)) parts[k] = v;
            for (auto it = parts.begin(); it != parts.end();) {
                if (it->second.empty()) it = parts.erase(it);
                else ++it;
            }
            std::vector<std::string> ids;
            for (const auto& id : verify_ids) {
                if (id == "all") {
                    auto all = theorem_ids();
                    ids.insert(ids.end(), all.begin(), all.end());
                } else if (id == "T10") {
                    ids.push_back("T10a");
                    ids.push_back("T10b");
                } else {
                    ids.push_back(id);
                }
            }

            LoadedFixture fx = load_fixture_by_name(verify_fixture);
            std::optional<LoadedFixture> fx2;
            if (!verify_fixture2.empty()) fx2 = load_fixture_by_name(verify_fixture2);

            bool any_counterexample = false;
            nlohmann::json out = nlohmann::json::array();
            for (const auto& id : ids) {
                const auto* info = find_theorem(id);
                if (!info) raise(ErrorCode::usage, "unknown theorem id '" + id + "'");
                auto bundle =
                    resolve_bundle(fx, fx2 ? &*fx2 : nullptr, *info, parts, subset_limit);
                auto rep = verify_theorem(id, bundle);
                any_counterexample |= rep.classification == Classification::counterexample;
                if (output == "structured") {
                    out.push_back(report_to_json(rep));
                } else {
                    print_theorem_text(rep);
                }
            }
            if (output == "structured") std::cout << out.dump(2) << "\n";
            return any_counterexample ? kExitFalse : kExitTrue;
        }

        if (*search) {
            if (!families.empty()) {
                budget.family_grid = families.find("grid") != std::string::npos;
                budget.family_exhaustive = families.find("exhaustive") != std::string::npos;
                budget.family_random = families.find("random") != std::string::npos;
            }
            auto result = search_counterexamples(search_id, budget);
            if (output == "structured") {
                std::cout << search_to_json(result).dump(2) << "\n";
            } else {
                std::cout << result.id << ": " << result.findings.size() << " finding(s) in "
                          << result.candidates << " candidate(s)"
                          << (result.truncated ? ", budget exhausted" : "") << "\n";
                for (const auto& f : result.findings) print_theorem_text(f.report);
            }
            return result.findings.empty() ? kExitTrue : kExitFalse;
        }

        if (*report_cmd) {
            LoadedFixture fx = load_fixture_by_name(report_fixture);
            std::vector<Subset> sample;
            for (const auto& [name, sub] : fx.subsets) sample.push_back(sub);
            auto dp = check_dp_axioms(fx.space, sample);

            if (output == "structured") {
                nlohmann::json j;
                j["fixture"] = to_json(fx.document);
                j["dp_axioms"] = report_to_json(dp, fx.space);
                j["subsets"] = nlohmann::json::object();
                for (const auto& [name, sub] : fx.subsets)
                    j["subsets"][name] = {{"members", sub.labels()},
                                          {"upper", upper_approx(sub).labels()}};
                j["contexts"] = nlohmann::json::object();
                for (const auto& [name, lc] : fx.contexts) {
                    if (lc.precheck) {
                        j["contexts"][name] = report_to_json(*lc.precheck, fx.space);
                    } else {
                        j["contexts"][name] = {{"error", lc.precheck_error}};
                    }
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "elements: " << fx.space->size()
                          << ", feature arity: " << fx.space->arity() << "\n";
                if (!fx.document.description.empty())
                    std::cout << "description: " << fx.document.description << "\n";
                std::cout << "dp axioms: " << (dp.verdict ? "pass" : "FAIL") << "\n";
                for (const auto& [name, sub] : fx.subsets)
                    std::cout << "subset " << name << " = " << set_text(sub)
                              << ", upper = " << set_text(upper_approx(sub)) << "\n";
                for (const auto& [name, lc] : fx.contexts) {
                    std::cout << "context " << name << ": ";
                    if (lc.precheck)
                        std::cout << (lc.precheck->verdict ? "approximately ring"
                                                           : "not an approximately ring")
                                  << (lc.precheck->notes.empty() ? ""
                                                                 : " (" + lc.precheck->notes + ")")
                                  << "\n";
                    else
                        std::cout << "pre-check failed: " << lc.precheck_error << "\n";
                }
            }
            return kExitTrue;
        }
    } catch (const CheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << report_to_json(e.report(), nullptr).dump(2) << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
