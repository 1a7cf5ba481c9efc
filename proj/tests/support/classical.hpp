#pragma once

#include <optional>
#include <vector>

// Textbook checkers over raw tables on {0..n-1}, written independently of
// the library so they can serve as an oracle for the classical collapse:
// with an injective probe every approximate notion must agree with these.
namespace proxring::test::classical {

struct Table {
    int n = 0;
    std::vector<int> t;  // row-major
    int at(int a, int b) const { return t[a * n + b]; }
};

using Members = std::vector<int>;  // ascending subset of 0..n-1

bool contains(const Members& m, int x);

bool closed(const Table& op, const Members& m);
bool associative_on(const Table& op, const Members& m);
bool commutative_on(const Table& op, const Members& m);
std::optional<int> identity_in(const Table& op, const Members& m);
bool is_group(const Table& op, const Members& m);
bool is_abelian_group(const Table& op, const Members& m);

/// Ring axioms on the full members set (not necessarily commutative or
/// unital).
bool is_ring(const Table& add, const Table& mul, const Members& m);
std::optional<int> unity_in(const Table& mul, const Members& m);

bool is_ideal(const Table& add, const Table& mul, const Members& ring, const Members& ideal);
/// Proper ideal with the prime condition over all ordered pairs.
bool is_prime_ideal(const Table& add, const Table& mul, const Members& ring,
                    const Members& ideal);
bool is_integral_domain(const Table& add, const Table& mul, const Members& ring);
bool is_field(const Table& add, const Table& mul, const Members& ring);
bool is_prime_ring(const Table& add, const Table& mul, const Members& ring);

struct RawRing {
    Table add, mul;
};

/// All commutative unital rings of order <= max_order, with duplicates up
/// to isomorphism: cyclic additive groups with scaled multiplication plus
/// all bilinear multiplications on the Klein group for order 4.
std::vector<RawRing> commutative_unital_rings_upto(int max_order);

/// All bilinear multiplication candidates on the listed additive groups
/// (associative or not) for negative ring-check cases.
std::vector<RawRing> bilinear_candidates_upto(int max_order);

}  // namespace proxring::test::classical
