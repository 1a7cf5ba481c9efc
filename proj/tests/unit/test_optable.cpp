#include <doctest.h>

#include "support/helpers.hpp"

using namespace proxring;
using namespace proxring::test;

namespace {

ElementIndex idx(const SpacePtr& space, const std::string& label) {
    return *space->find_label(label);
}

SpacePtr grid(std::vector<std::pair<int, int>> coords) {
    std::vector<Element> elements(coords.size());
    std::vector<FeatureVector> features(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        elements[i].label =
            "x" + std::to_string(coords[i].first) + std::to_string(coords[i].second);
        elements[i].coords = coords[i];
        features[i] = {static_cast<std::int64_t>(i)};
    }
    return Space::create(std::move(elements), std::move(features));
}

}  // namespace

TEST_CASE("mod-2 addition follows the grid rule") {
    auto fx = load_fixture(builtin_image16());
    const auto& add = *fx.operation("add");
    auto at = [&](const std::string& a, const std::string& b) {
        return fx.space->element(add.apply(idx(fx.space, a), idx(fx.space, b))).label;
    };
    CHECK(at("x01", "x10") == "x11");
    CHECK(at("x01", "x01") == "x00");
    CHECK(at("x23", "x32") == "x11");
    for (const std::string& a : {"x00", "x01", "x10", "x11"}) {
        CHECK(at("x00", a) == a);  // zero coordinates are the additive identity
        CHECK(at(a, "x00") == a);
    }
}

TEST_CASE("min multiplication follows the grid rule") {
    auto fx = load_fixture(builtin_image16());
    const auto& mul = *fx.operation("mul");
    auto at = [&](const std::string& a, const std::string& b) {
        return fx.space->element(mul.apply(idx(fx.space, a), idx(fx.space, b))).label;
    };
    CHECK(at("x00", "x11") == "x00");
    CHECK(at("x01", "x10") == "x00");
    CHECK(at("x23", "x32") == "x22");
    for (ElementIndex a = 0; a < fx.space->size(); ++a)
        CHECK(mul.apply(a, a) == a);  // min is idempotent
}

TEST_CASE("the corner pixels form the Klein four-group under mod-2 addition") {
    auto fx = load_fixture(builtin_image16());
    const auto& add = *fx.operation("add");
    auto corners = fx.subset("R2");
    auto e = idx(fx.space, "x00");
    for (auto a : corners.members()) {
        CHECK(add.apply(a, e) == a);
        CHECK(add.apply(a, a) == e);  // every element self-inverse
        for (auto b : corners.members()) {
            CHECK(corners.contains(add.apply(a, b)));
            CHECK(add.apply(a, b) == add.apply(b, a));
            for (auto c : corners.members())
                CHECK(add.apply(add.apply(a, b), c) == add.apply(a, add.apply(b, c)));
        }
    }
}

TEST_CASE("min multiplication is commutative, associative and idempotent on grids") {
    auto fx = load_fixture(builtin_image16());
    const auto& mul = *fx.operation("mul");
    for (ElementIndex a = 0; a < fx.space->size(); ++a)
        for (ElementIndex b = 0; b < fx.space->size(); ++b) {
            CHECK(mul.apply(a, b) == mul.apply(b, a));
            for (ElementIndex c = 0; c < fx.space->size(); ++c)
                CHECK(mul.apply(mul.apply(a, b), c) == mul.apply(a, mul.apply(b, c)));
        }
}

TEST_CASE("grid rules require coordinates and closure") {
    auto no_coords = injective_space(4);
    CHECK_THROWS_AS(OpTable::grid_add_mod2(no_coords), Error);

    // (0,1) + (1,0) needs (1,1), which is missing.
    auto partial = grid({{0, 0}, {0, 1}, {1, 0}});
    try {
        OpTable::grid_add_mod2(partial);
        FAIL("expected a closure error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::closure);
        CHECK(std::string(e.what()).find("x01") != std::string::npos);
        CHECK(std::string(e.what()).find("x10") != std::string::npos);
    }

    // A 1x3 line closes under both rules.
    auto line = grid({{0, 0}, {0, 1}, {0, 2}});
    CHECK_NOTHROW(OpTable::grid_add_mod2(line));
    CHECK_NOTHROW(OpTable::grid_mul_min(line));
}

TEST_CASE("extensional tables validate their entries") {
    auto space = injective_space(2);
    CHECK_NOTHROW(OpTable::from_rows(space, "op", {0, 1, 1, 0}));

    CHECK_THROWS_AS(OpTable::from_rows(space, "op", {0, 1, 1}), Error);  // missing pair
    CHECK_THROWS_AS(OpTable::from_rows(space, "op", {0, 1, 1, 2}), Error);  // unknown element

    // Fixture-level: a table naming a label outside the carrier.
    FixtureDocument doc = builtin_f2();
    doc.operations[1].table = {"0", "0", "0", "c"};
    CHECK_THROWS_AS(load_fixture(doc), Error);

    // Fixture-level: a table missing one pair.
    FixtureDocument short_doc = builtin_f2();
    short_doc.operations[0].table = {"0", "1", "1"};
    CHECK_THROWS_AS(load_fixture(short_doc), Error);

    // Totality: every in-carrier pair resolves.
    auto fx = load_fixture(builtin_f2());
    const auto& mul = *fx.operation("mul");
    for (ElementIndex a = 0; a < 2; ++a)
        for (ElementIndex b = 0; b < 2; ++b) CHECK(mul.apply(a, b) < 2);
}
