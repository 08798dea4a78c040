#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracekit/error.hpp"
#include "bracekit/rational.hpp"
#include "bracekit/rational_matrix.hpp"
#include "bracekit/subspace.hpp"

#include <random>

using namespace bracekit;

namespace {

RationalMatrix mat(std::size_t r, std::size_t c, std::vector<long long> v) {
    std::vector<Rational> e(v.begin(), v.end());
    return RationalMatrix::from_rows(r, c, std::move(e));
}

std::vector<Rational> vec(std::vector<long long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

RationalSubspace axis_span(std::size_t ambient, std::vector<std::size_t> axes) {
    std::vector<std::vector<Rational>> rows;
    for (auto a : axes) {
        std::vector<Rational> row(ambient);
        row[a] = 1;
        rows.push_back(row);
    }
    return RationalSubspace::span_of(ambient, rows);
}

// Random small-rational matrix for property tests.
RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational parse and print") {
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-4/2") == rat(-2));
    CHECK(parse_rational("7") == rat(7));
    CHECK(to_string(rat(-1, 3)) == "-1/3");
    CHECK(to_string(rat(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("rref examples") {
    // rank-1 collapse
    RationalMatrix a = mat(2, 2, {2, 4, 1, 2});
    RationalMatrix r = a.rref();
    CHECK(r == mat(2, 2, {1, 2, 0, 0}));
    // identity is a fixed point
    RationalMatrix id = RationalMatrix::identity(3);
    CHECK(id.rref() == id);
    // permutation
    CHECK(mat(2, 2, {0, 1, 1, 0}).rref() == RationalMatrix::identity(2));
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        RationalMatrix m = random_matrix(rng, 3, 4);
        RationalMatrix r = m.rref();
        CHECK(r.rref() == r);
        CHECK(m.rank() == r.rank());
    }
}

TEST_CASE("kernel and determinant") {
    RationalMatrix m = mat(2, 3, {1, 0, 1, 0, 1, 1});
    RationalMatrix k = m.kernel();
    REQUIRE(k.rows() == 1);
    // kernel vector is (-1,-1,1) scaled; RREF normalizes the pivot to 1
    CHECK(k.at(0, 0) * 1 == k.at(0, 1));
    CHECK(m * k.transposed() == RationalMatrix(2, 1));

    CHECK(determinant(RationalMatrix::identity(4)) == 1);
    CHECK(determinant(mat(2, 2, {1, 2, 2, 4})) == 0);
    CHECK(determinant(mat(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5})) == 30);
}

TEST_CASE("char_poly and rational roots") {
    RationalMatrix d = mat(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, -3});
    auto p = char_poly(d);  // (x-1)(x-2)(x+3) = x^3 - 7x + 6... compute: roots 1,2,-3
    auto roots = rational_roots(p);
    CHECK(roots == std::vector<Rational>{rat(-3), rat(1), rat(2)});
    CHECK_FALSE(has_irrational_real_root(p));

    // x^2 - 2: irrational real roots
    CHECK(has_irrational_real_root({rat(-2), rat(0), rat(1)}));
    // x^2 + 1: complex roots only
    CHECK_FALSE(has_irrational_real_root({rat(1), rat(0), rat(1)}));
    // x^2 - 1/4
    auto r2 = rational_roots({rat(-1, 4), rat(0), rat(1)});
    CHECK(r2 == std::vector<Rational>{rat(-1, 2), rat(1, 2)});
}

TEST_CASE("rational_sqrt") {
    Rational root;
    CHECK(rational_sqrt(rat(9, 4), &root));
    CHECK(root == rat(3, 2));
    CHECK_FALSE(rational_sqrt(rat(2), nullptr));
    CHECK_FALSE(rational_sqrt(rat(-1), nullptr));
}

TEST_CASE("subspace sum, intersection, containment") {
    auto e1 = axis_span(3, {0});
    auto e2 = axis_span(3, {1});
    auto e12 = axis_span(3, {0, 1});
    auto e23 = axis_span(3, {1, 2});

    CHECK(sum(e1, e2) == e12);
    CHECK(intersection(e12, e23) == e2);
    CHECK(e12.contains(e1));
    CHECK(e12.contains(e12));  // reflexivity
    CHECK_FALSE(e1.contains(e12));
    CHECK(intersection(e1, e2).is_zero());
    CHECK_THROWS_AS(sum(e1, axis_span(2, {0})), Error);
}

TEST_CASE("subspace properties on random spans") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 120; ++trial) {
        auto a = RationalSubspace::span(random_matrix(rng, 2, 4));
        auto b = RationalSubspace::span(random_matrix(rng, 2, 4));
        CHECK(sum(a, b) == sum(b, a));
        CHECK(a.contains(intersection(a, b)));
        CHECK(b.contains(intersection(a, b)));
        CHECK(sum(a, b).contains(a));
        // dim formula
        CHECK(sum(a, b).dim() + intersection(a, b).dim() == a.dim() + b.dim());
        // mutual containment is bit-identical representation
        if (a.contains(b) && b.contains(a)) CHECK(a == b);
    }
}

TEST_CASE("contains_vector agrees with span membership") {
    auto s = RationalSubspace::span_of(3, {vec({1, 2, 0}), vec({0, 0, 1})});
    CHECK(s.contains_vector(vec({2, 4, 5})));
    CHECK_FALSE(s.contains_vector(vec({1, 0, 0})));
}

TEST_CASE("bilinear_closure fixed points and A1-1 circ line") {
    // A1-1 circ bracket: [e1,e2]=e2, [e1,e3]=-e3, [e2,e3]=0 (antisymmetric).
    BilinearMap bracket = BilinearMap::zero(3);
    bracket.coeff(0, 1, 1) = 1;
    bracket.coeff(1, 0, 1) = -1;
    bracket.coeff(0, 2, 2) = -1;
    bracket.coeff(2, 0, 2) = 1;

    auto zero = RationalSubspace::zero(3);
    CHECK(bilinear_closure(zero, {bracket}) == zero);
    auto full = RationalSubspace::full(3);
    CHECK(bilinear_closure(full, {bracket}) == full);

    auto e2 = axis_span(3, {1});
    CHECK(bilinear_closure(e2, {bracket}) == e2);  // span(e2) is a circ-ideal

    // monotone and idempotent
    auto e23 = axis_span(3, {1, 2});
    auto c1 = bilinear_closure(e2, {bracket});
    auto c2 = bilinear_closure(e23, {bracket});
    CHECK(c2.contains(c1));
    CHECK(bilinear_closure(c2, {bracket}) == c2);
}

TEST_CASE("stable_closure one-sided vs two-sided") {
    // map with e2 * e1 = e3 only; left-free closure of span(e1) stays put,
    // right-free closure picks up e3.
    BilinearMap m = BilinearMap::zero(3);
    m.coeff(1, 0, 2) = 1;
    auto e1 = axis_span(3, {0});
    auto left_only = stable_closure(e1, {ClosureOp{m, true, false}});
    CHECK(left_only == RationalSubspace::span_of(3, {vec({1, 0, 0}), vec({0, 0, 1})}));
    auto right_only = stable_closure(e1, {ClosureOp{m, false, true}});
    CHECK(right_only == e1);
}
