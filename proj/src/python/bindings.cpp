#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "proxring/report_json.hpp"
#include "proxring/theorems.hpp"

namespace py = pybind11;
using namespace proxring;

namespace {

py::object to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object report_py(const CheckReport& report, const SpacePtr& space) {
    return to_py(report_to_json(report, space));
}

struct PyFixture {
    LoadedFixture fx;

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (const auto& e : fx.space->elements()) out.push_back(e.label);
        return out;
    }
    std::vector<std::string> subset_names() const {
        std::vector<std::string> out;
        for (const auto& [name, _] : fx.subsets) out.push_back(name);
        return out;
    }
    std::vector<std::string> context_names() const {
        std::vector<std::string> out;
        for (const auto& [name, _] : fx.contexts) out.push_back(name);
        return out;
    }
    Subset subset(const std::string& name) const { return fx.subset(name); }
    Subset subset_of(const std::vector<std::string>& labels) const {
        return Subset::of_labels(fx.space, labels);
    }
    RingContext context(const std::string& name) const { return fx.context(name).ctx; }
    py::object precheck(const std::string& name) const {
        const auto& lc = fx.context(name);
        if (!lc.precheck) return py::str(lc.precheck_error);
        return report_py(*lc.precheck, fx.space);
    }
    py::object document() const { return to_py(to_json(fx.document)); }
};

std::string label_or_none(const SpacePtr& space, const std::optional<ElementIndex>& i) {
    return i ? space->element(*i).label : std::string();
}

TheoremBundle bundle_from(const PyFixture& fixture, const PyFixture* fixture2,
                          const std::string& id,
                          const std::map<std::string, std::string>& parts, int limit) {
    const auto* info = find_theorem(id);
    if (!info) raise(ErrorCode::usage, "unknown theorem id '" + id + "'");
    return resolve_bundle(fixture.fx, fixture2 ? &fixture2->fx : nullptr, *info, parts, limit);
}

}  // namespace

PYBIND11_MODULE(_proxring, m) {
    m.doc() = "approximate algebraic structures on descriptive proximity spaces";

    static py::exception<Error> exc(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    py::class_<Subset>(m, "Subset")
        .def("labels", &Subset::labels)
        .def("__len__", &Subset::size)
        .def("__eq__", [](const Subset& a, const Subset& b) { return a == b; })
        .def("__repr__", [](const Subset& s) {
            std::string out = "Subset({";
            auto labels = s.labels();
            for (std::size_t i = 0; i < labels.size(); ++i)
                out += (i ? ", " : "") + labels[i];
            return out + "})";
        });

    py::class_<RingContext>(m, "RingContext")
        .def_property_readonly("carrier", [](const RingContext& c) { return c.carrier; })
        .def_property_readonly("upper", [](const RingContext& c) { return c.upper; })
        .def_property_readonly(
            "zero", [](const RingContext& c) { return label_or_none(c.space, c.zero); })
        .def_property_readonly(
            "one", [](const RingContext& c) { return label_or_none(c.space, c.one); });

    py::class_<PyFixture>(m, "Fixture")
        .def_property_readonly("labels", &PyFixture::labels)
        .def_property_readonly("subsets", &PyFixture::subset_names)
        .def_property_readonly("contexts", &PyFixture::context_names)
        .def("subset", &PyFixture::subset)
        .def("subset_of", &PyFixture::subset_of)
        .def("context", &PyFixture::context)
        .def("precheck", &PyFixture::precheck)
        .def("document", &PyFixture::document)
        .def("__repr__", [](const PyFixture& f) {
            return "Fixture(" + std::to_string(f.fx.space->size()) + " elements)";
        });

    m.def("load_fixture", [](const std::string& name) {
        return PyFixture{load_fixture_by_name(name)};
    });
    m.def("builtin_fixtures", &builtin_fixture_names);
    m.def("theorem_ids", &theorem_ids);

    m.def("upper_approx", [](const Subset& s) { return upper_approx(s); });
    m.def("descriptively_near",
          [](const Subset& a, const Subset& b) { return descriptively_near(a, b); });
    m.def("descriptive_intersection",
          [](const Subset& a, const Subset& b) { return descriptive_intersection(a, b); });

    m.def("check_groupoid", [](const Subset& g, const RingContext& ctx, bool use_mul) {
        return report_py(is_approx_groupoid(g, use_mul ? *ctx.mul : *ctx.add), g.space());
    }, py::arg("subset"), py::arg("ctx"), py::arg("mul") = true);
    m.def("check_semigroup", [](const Subset& g, const RingContext& ctx, bool use_mul) {
        return report_py(is_approx_semigroup(g, use_mul ? *ctx.mul : *ctx.add), g.space());
    }, py::arg("subset"), py::arg("ctx"), py::arg("mul") = true);
    m.def("check_group", [](const Subset& g, const RingContext& ctx, bool use_mul) {
        return report_py(is_approx_group(g, use_mul ? *ctx.mul : *ctx.add), g.space());
    }, py::arg("subset"), py::arg("ctx"), py::arg("mul") = true);

    m.def("check_ring",
          [](const RingContext& ctx) { return report_py(is_approx_ring(ctx), ctx.space); });
    m.def("check_subring", [](const Subset& s, const RingContext& ctx) {
        return report_py(is_approx_subring(s, ctx), ctx.space);
    });
    m.def("check_field",
          [](const RingContext& ctx) { return report_py(is_approx_field(ctx), ctx.space); });
    m.def("check_ideal", [](const Subset& s, const RingContext& ctx) {
        return report_py(is_approx_ideal(s, ctx), ctx.space);
    });
    m.def("check_prime_ideal", [](const Subset& s, const RingContext& ctx, bool proper) {
        return report_py(is_approx_prime_ideal(s, ctx, proper), ctx.space);
    }, py::arg("subset"), py::arg("ctx"), py::arg("proper") = false);
    m.def("check_mult_closed", [](const Subset& s, const RingContext& ctx) {
        return report_py(is_mult_closed(s, ctx), ctx.space);
    });
    m.def("check_integral_domain", [](const RingContext& ctx) {
        return report_py(is_approx_integral_domain(ctx), ctx.space);
    });
    m.def("check_prime_ring", [](const RingContext& ctx) {
        return report_py(is_approx_prime_ring(ctx), ctx.space);
    });
    m.def("elementwise_prime_criterion", [](const RingContext& ctx) {
        return report_py(elementwise_prime_criterion(ctx), ctx.space);
    });
    m.def("check_irreducible", [](const std::string& label, const RingContext& ctx) {
        auto idx = ctx.space->find_label(label);
        if (!idx) raise(ErrorCode::unknown_element, "unknown element '" + label + "'");
        return report_py(is_approx_irreducible(*idx, ctx), ctx.space);
    });
    m.def("invertibility", [](const std::string& label, const RingContext& ctx) {
        auto idx = ctx.space->find_label(label);
        if (!idx) raise(ErrorCode::unknown_element, "unknown element '" + label + "'");
        auto inv = invertibility(*idx, ctx);
        py::dict out;
        out["left"] = inv.left;
        out["right"] = inv.right;
        out["unit"] = inv.unit();
        out["left_inverse"] = label_or_none(ctx.space, inv.left_inverse);
        out["right_inverse"] = label_or_none(ctx.space, inv.right_inverse);
        return out;
    });
    m.def("principal_ideal", [](const std::string& label, const RingContext& ctx) {
        auto idx = ctx.space->find_label(label);
        if (!idx) raise(ErrorCode::unknown_element, "unknown element '" + label + "'");
        return principal_ideal(*idx, ctx).members;
    });
    m.def("check_principal_prime", [](const std::string& label, const RingContext& ctx) {
        auto idx = ctx.space->find_label(label);
        if (!idx) raise(ErrorCode::unknown_element, "unknown element '" + label + "'");
        return report_py(is_principal_prime(*idx, ctx), ctx.space);
    });
    m.def("ideal_product", [](const Subset& a, const Subset& b, const RingContext& ctx) {
        return ideal_product(a, b, ctx).members;
    });

    py::class_<CosetSpace>(m, "Quotient")
        .def_property_readonly("ctx", [](const CosetSpace& q) { return q.qctx; })
        .def("cosets", [](const CosetSpace& q) {
            py::list out;
            for (const auto& c : q.cosets)
                out.append(py::make_tuple(q.base.space->element(c.representative).label,
                                          c.members.labels()));
            return out;
        })
        .def("upper_cosets", [](const CosetSpace& q) {
            py::list out;
            for (const auto& c : q.upper_cosets)
                out.append(py::make_tuple(q.base.space->element(c.representative).label,
                                          c.members.labels()));
            return out;
        })
        .def("audits", [](const CosetSpace& q) {
            py::dict out;
            out["add_within_R"] = q.add_audit_r.ok;
            out["mul_within_R"] = q.mul_audit_r.ok;
            out["add_over_X"] = q.add_audit_x.ok;
            out["mul_over_X"] = q.mul_audit_x.ok;
            return out;
        });

    m.def("quotient", [](const RingContext& ctx, const Subset& s, const std::string& rho) {
        CosetRho mode;
        if (rho == "set") mode = CosetRho::set_equality;
        else if (rho == "feature") mode = CosetRho::feature_equality;
        else raise(ErrorCode::usage, "rho must be 'set' or 'feature'");
        return quotient(ctx, s, mode);
    }, py::arg("ctx"), py::arg("ideal"), py::arg("rho") = "set");

    py::class_<ProductContext>(m, "Product")
        .def_property_readonly("ctx", [](const ProductContext& p) { return p.ctx; })
        .def_property_readonly("phi_product_law",
                               [](const ProductContext& p) { return p.phi_product_law_ok; });

    m.def("direct_product", [](const RingContext& l, const RingContext& r) {
        return direct_product(l, r);
    });

    m.def("verify",
          [](const std::string& id, const PyFixture& fixture,
             const std::map<std::string, std::string>& parts, const PyFixture* fixture2,
             int limit) {
              auto bundle = bundle_from(fixture, fixture2, id, parts, limit);
              return to_py(report_to_json(verify_theorem(id, bundle)));
          },
          py::arg("id"), py::arg("fixture"),
          py::arg("parts") = std::map<std::string, std::string>{},
          py::arg("fixture2") = nullptr, py::arg("limit") = 12);

    m.def("search",
          [](const std::string& id, int max_carrier, int max_classes, std::uint64_t seed,
             long max_candidates) {
              SearchBudget budget;
              budget.max_carrier = max_carrier;
              budget.max_feature_classes = max_classes;
              budget.seed = seed;
              budget.max_candidates = max_candidates;
              return to_py(search_to_json(search_counterexamples(id, budget)));
          },
          py::arg("id"), py::arg("max_carrier") = 3, py::arg("max_classes") = 2,
          py::arg("seed") = 0, py::arg("max_candidates") = 4000);

    m.attr("__version__") = "0.1.0";
}
