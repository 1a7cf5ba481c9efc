#include <doctest.h>

#include <random>
#include <set>

#include "support/helpers.hpp"

using namespace proxring;
using namespace proxring::test;

namespace {

// Definition scan, independent of the precomputed feature-class index.
Subset oracle_upper(const Subset& a) {
    const auto& space = a.space();
    std::vector<FeatureVector> feats;
    for (auto i : a.members())
        for (AtomId atom : space->atoms_of(i)) feats.push_back(space->atom_vector(atom));
    Subset out = Subset::empty(space);
    for (ElementIndex x = 0; x < space->size(); ++x)
        for (AtomId atom : space->atoms_of(x))
            for (const auto& f : feats)
                if (space->atom_vector(atom) == f) out = out.with(x);
    return out;
}

bool oracle_near(const Subset& a, const Subset& b) {
    const auto& space = a.space();
    for (auto i : a.members())
        for (auto j : b.members())
            for (AtomId ai : space->atoms_of(i))
                for (AtomId bj : space->atoms_of(j))
                    if (space->atom_vector(ai) == space->atom_vector(bj)) return true;
    return false;
}

SpacePtr random_space(std::mt19937_64& rng, int max_elems, int max_classes) {
    int n = 1 + static_cast<int>(rng() % max_elems);
    int k = 1 + static_cast<int>(rng() % max_classes);
    std::vector<int> klass(n);
    for (auto& c : klass) c = static_cast<int>(rng() % k);
    return classed_space(klass);
}

Subset random_subset(std::mt19937_64& rng, const SpacePtr& space) {
    Subset out = Subset::empty(space);
    for (ElementIndex i = 0; i < space->size(); ++i)
        if (rng() % 2) out = out.with(i);
    return out;
}

}  // namespace

TEST_CASE("upper approximation on the bundled image") {
    auto fx = load_fixture(builtin_image16());
    auto i_prime = fx.subset("I_prime");
    auto r1 = fx.subset("R1");
    auto r2 = fx.subset("R2");

    CHECK(upper_approx(i_prime).labels() == std::vector<std::string>{"x00", "x01"});
    CHECK(upper_approx(r1).labels() == std::vector<std::string>{"x00", "x01", "x10", "x11"});
    CHECK(upper_approx(r2) == r2);
    CHECK(upper_approx(Subset::empty(fx.space)).empty());

    CHECK(upper_approx(i_prime) == oracle_upper(i_prime));
    CHECK(upper_approx(r1) == oracle_upper(r1));
}

TEST_CASE("descriptive nearness on the bundled image") {
    auto fx = load_fixture(builtin_image16());
    auto x01 = subset_of(fx.space, {"x01"});
    auto x00 = subset_of(fx.space, {"x00"});
    auto x10 = subset_of(fx.space, {"x10"});

    CHECK(descriptively_near(x01, x00));
    CHECK_FALSE(descriptively_near(x01, Subset::empty(fx.space)));
    CHECK_FALSE(descriptively_near(Subset::empty(fx.space), Subset::empty(fx.space)));
    CHECK_FALSE(descriptively_near(x01, x10));
    CHECK(descriptively_near(x01, x00) == oracle_near(x01, x00));
    CHECK(descriptively_near(x01, x10) == oracle_near(x01, x10));
}

TEST_CASE("descriptive intersection") {
    auto fx = load_fixture(builtin_image16());
    auto x01 = subset_of(fx.space, {"x01"});
    auto x00 = subset_of(fx.space, {"x00"});
    auto x10 = subset_of(fx.space, {"x10"});
    auto r1 = fx.subset("R1");

    CHECK(descriptive_intersection(r1, r1) == r1);
    CHECK(descriptive_intersection(x01, x00).labels() ==
          std::vector<std::string>{"x00", "x01"});
    CHECK(descriptive_intersection(x01, x10).empty());
}

TEST_CASE("mixed-space arguments are rejected") {
    auto fx = load_fixture(builtin_image16());
    auto other = injective_space(3);
    auto a = fx.subset("R1");
    auto b = Subset::full(other);
    CHECK_THROWS_WITH_AS(descriptively_near(a, b),
                         "subsets belong to different spaces", Error);
    CHECK_THROWS_AS(descriptive_intersection(a, b), Error);
}

TEST_CASE("descriptive axioms self-test on the bundled image") {
    auto fx = load_fixture(builtin_image16());
    std::vector<Subset> singletons;
    for (ElementIndex i = 0; i < fx.space->size(); ++i)
        singletons.push_back(Subset::empty(fx.space).with(i));
    CHECK(check_dp_axioms(fx.space, singletons).verdict);

    std::vector<Subset> named{fx.subset("R1"), fx.subset("I_prime"), fx.subset("R2")};
    auto report = check_dp_axioms(fx.space, named);
    CHECK(report.verdict);
    for (const auto& ax : report.axioms) CHECK(ax.witnesses.empty());

    named.push_back(Subset::empty(fx.space));
    auto with_empty = check_dp_axioms(fx.space, named);
    CHECK(with_empty.verdict);
    CHECK(with_empty.find("DP.0")->note.find("vacuous") != std::string::npos);
}

TEST_CASE("proximity laws on randomized spaces") {
    std::mt19937_64 rng(20240521);
    for (int trial = 0; trial < 300; ++trial) {
        auto space = random_space(rng, 8, 4);
        auto a = random_subset(rng, space);
        auto b = random_subset(rng, space);
        auto c = random_subset(rng, space);

        auto ua = upper_approx(a);
        CHECK(a.is_subset_of(ua));                       // extensivity
        CHECK(upper_approx(ua) == ua);                   // idempotence
        auto ab = a.unite(b);
        CHECK(ua.is_subset_of(upper_approx(ab)));        // monotonicity
        CHECK(descriptively_near(a, b) == descriptively_near(b, a));  // DP.1
        bool lhs = descriptively_near(a, b.unite(c));
        bool rhs = descriptively_near(a, b) || descriptively_near(a, c);
        CHECK(lhs == rhs);                               // DP.3
        CHECK(descriptively_near(a, b) ==
              !descriptive_intersection(a, b).empty());  // DP.2
        CHECK(upper_approx(a) == oracle_upper(a));
    }
}

TEST_CASE("injective probes collapse the upper approximation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto space = injective_space(1 + rng() % 8);
        auto a = random_subset(rng, space);
        CHECK(upper_approx(a) == a);
    }
}
