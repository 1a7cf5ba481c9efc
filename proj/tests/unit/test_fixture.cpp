#include <doctest.h>

#include "proxring/constructions.hpp"
#include "proxring/report_json.hpp"
#include "support/helpers.hpp"

using namespace proxring;
using namespace proxring::test;

namespace {
const std::string fixture_dir = PROXRING_FIXTURE_DIR;
}

TEST_CASE("the builtin image reproduces the four upper approximations") {
    auto fx = load_fixture(builtin_image16());
    CHECK(upper_approx(fx.subset("R1")).labels() ==
          std::vector<std::string>{"x00", "x01", "x10", "x11"});
    CHECK(upper_approx(fx.subset("I_prime")).labels() ==
          std::vector<std::string>{"x00", "x01"});
    CHECK(upper_approx(fx.subset("R2")) == fx.subset("R2"));
    CHECK(upper_approx(fx.subset("I_notprime")) == upper_approx(fx.subset("R2")));
}

TEST_CASE("loading attaches ring pre-checks to every context") {
    auto fx = load_fixture(builtin_image16());
    for (const auto& [name, lc] : fx.contexts) {
        REQUIRE(lc.precheck.has_value());
        CHECK(lc.precheck->verdict);
        CHECK(lc.precheck_error.empty());
    }
    CHECK(fx.default_context() == "R1");
}

TEST_CASE("schema violations carry field diagnostics") {
    auto doc = builtin_image16();
    doc.subsets["broken"] = {"x99"};
    try {
        load_fixture(doc);
        FAIL("expected a schema error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::schema);
        CHECK(std::string(e.what()).find("broken") != std::string::npos);
    }

    nlohmann::json bad = to_json(builtin_f2());
    bad["elements"][0].erase("features");
    CHECK_THROWS_AS(parse_fixture(bad), Error);

    nlohmann::json bad_rule = to_json(builtin_f2());
    bad_rule["operations"][0]["rule"] = "max-mul";
    CHECK_THROWS_AS(parse_fixture(bad_rule), Error);

    nlohmann::json bad_coords = to_json(builtin_image16());
    bad_coords["elements"][0]["coords"] = {-1, 0};
    CHECK_THROWS_AS(parse_fixture(bad_coords), Error);

    auto dup = builtin_f2();
    dup.elements[1].label = "0";
    CHECK_THROWS_AS(load_fixture(dup), Error);
}

TEST_CASE("fixture round trips") {
    for (const auto& doc :
         {builtin_image16(), builtin_f2(), fixture_by_name(fixture_dir + "/klein4.json"),
          fixture_by_name(fixture_dir + "/z3.json")}) {
        auto once = load_fixture(doc);
        auto reparsed = parse_fixture(to_json(once.document));
        CHECK(reparsed == doc);
        auto twice = load_fixture(reparsed);
        CHECK(twice.document == once.document);
        CHECK(to_json(reparsed) == to_json(doc));
        for (const auto& [name, sub] : once.subsets)
            CHECK(twice.subset(name).labels() == sub.labels());
    }
}

TEST_CASE("builtin names resolve") {
    CHECK(fixture_by_name("builtin:image16").elements.size() == 16);
    CHECK(fixture_by_name("builtin:f2").elements.size() == 2);
    CHECK_THROWS_AS(fixture_by_name("builtin:nope"), Error);
    CHECK_THROWS_AS(fixture_by_name(fixture_dir + "/missing.json"), Error);
}

TEST_CASE("hand-written fixtures behave as expected") {
    auto klein = load_fixture_by_name(fixture_dir + "/klein4.json");
    CHECK(upper_approx(klein.subset("I")).labels() == std::vector<std::string>{"p00", "p01"});
    CHECK(klein.context("R").precheck->verdict);
    CHECK(is_approx_prime_ideal(klein.subset("I"), klein.context("R").ctx).verdict);

    auto z3 = load_fixture_by_name(fixture_dir + "/z3.json");
    CHECK(z3.space->injective_probe());
    CHECK(is_approx_field(z3.context("Z3").ctx).verdict);
}

TEST_CASE("constructed spaces serialize through the same schema") {
    auto fx = load_fixture(builtin_image16());
    auto q = quotient(fx.context("R1").ctx, fx.subset("I_prime"));

    std::map<std::string, Subset> subsets{{"Q", q.qctx.carrier}};
    std::map<std::string, FixtureContextRef> contexts{{"Q", {"Q", "add", "mul"}}};
    auto doc = document_from(q.qspace, {{"add", q.qctx.add}, {"mul", q.qctx.mul}}, subsets,
                             contexts, "quotient of R1 by I_prime");
    auto loaded = load_fixture(doc);
    CHECK(loaded.space->size() == q.qspace->size());
    CHECK(loaded.space->multi_valued() == q.qspace->multi_valued());
    CHECK(loaded.context("Q").ctx.carrier.labels() == q.qctx.carrier.labels());
    // Same verdicts after the round trip.
    CHECK(is_approx_integral_domain(loaded.context("Q").ctx).verdict ==
          is_approx_integral_domain(q.qctx).verdict);

    auto product = direct_product(fx.context("R1").ctx, fx.context("R1").ctx);
    std::map<std::string, Subset> psubsets{{"P", product.ctx.carrier}};
    std::map<std::string, FixtureContextRef> pcontexts{{"P", {"P", "add", "mul"}}};
    auto pdoc = document_from(product.space, {{"add", product.ctx.add}, {"mul", product.ctx.mul}},
                              psubsets, pcontexts);
    auto ploaded = load_fixture(pdoc);
    CHECK(ploaded.space->size() == 256);
    CHECK(ploaded.space->find_label("(x01,x10)").has_value());
    CHECK(is_approx_ring(ploaded.context("P").ctx).verdict);
}

TEST_CASE("check reports round-trip through their JSON form") {
    auto fx = load_fixture(builtin_image16());
    auto report = is_approx_prime_ideal(fx.subset("I_notprime"), fx.context("R2").ctx);
    auto j = report_to_json(report, fx.space);
    CHECK(report_from_json(j) == report);

    auto ring_report = is_approx_ring(fx.context("R1").ctx);
    CHECK(report_from_json(report_to_json(ring_report, fx.space)) == ring_report);
}
