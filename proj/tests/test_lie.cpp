#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracekit/error.hpp"
#include "bracekit/lie_algebra.hpp"

#include <random>

using namespace bracekit;

namespace {

RationalSubspace axis_span(std::size_t ambient, std::vector<std::size_t> axes) {
    std::vector<std::vector<Rational>> rows;
    for (auto a : axes) {
        std::vector<Rational> row(ambient);
        row[a] = 1;
        rows.push_back(row);
    }
    return RationalSubspace::span_of(ambient, rows);
}

LieAlgebra heisenberg() {
    BilinearMap t = BilinearMap::zero(3);
    t.coeff(0, 1, 2) = 1;
    t.coeff(1, 0, 2) = -1;
    return LieAlgebra(std::move(t));
}

// [e1,e2]=e3, [e1,e3]=2 e2: ad(e1) has eigenvalues 0, +-sqrt(2)
LieAlgebra irrational_split() {
    BilinearMap t = BilinearMap::zero(3);
    t.coeff(0, 1, 2) = 1;
    t.coeff(1, 0, 2) = -1;
    t.coeff(0, 2, 1) = 2;
    t.coeff(2, 0, 1) = -2;
    return LieAlgebra(std::move(t));
}

}  // namespace

TEST_CASE("check_jacobi") {
    CHECK_NOTHROW(check_jacobi(LieAlgebra::abelian(4)));
    CHECK_NOTHROW(check_jacobi(solvable_diag3()));
    CHECK_NOTHROW(check_jacobi(sl2()));
    CHECK_NOTHROW(check_jacobi(so3()));
    CHECK_NOTHROW(check_jacobi(heisenberg()));

    // [e1,e2]=e3, [e1,e3]=e1 breaks Jacobi
    BilinearMap bad = BilinearMap::zero(3);
    bad.coeff(0, 1, 2) = 1;
    bad.coeff(1, 0, 2) = -1;
    bad.coeff(0, 2, 0) = 1;
    bad.coeff(2, 0, 0) = -1;
    CHECK_THROWS_WITH_AS(check_jacobi(LieAlgebra(bad)), doctest::Contains("JacobiViolation"), Error);

    // non-antisymmetric tensor rejected at construction
    BilinearMap asym = BilinearMap::zero(2);
    asym.coeff(0, 1, 0) = 1;
    CHECK_THROWS_WITH_AS((LieAlgebra(asym)), doctest::Contains("NotAntisymmetric"), Error);
}

TEST_CASE("derived series and solvability") {
    auto chain = derived_series(solvable_diag3());
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].is_full());
    CHECK(chain[1] == axis_span(3, {1, 2}));
    CHECK(chain[2].is_zero());
    CHECK(is_solvable(solvable_diag3()));

    CHECK(derived_series(sl2()).size() == 1);  // [L,L] = L
    CHECK_FALSE(is_solvable(sl2()));

    auto ab = derived_series(LieAlgebra::abelian(3));
    REQUIRE(ab.size() == 2);
    CHECK(ab[1].is_zero());
    CHECK(is_solvable(LieAlgebra::abelian(3)));

    CHECK(lower_central_series(heisenberg()).size() == 3);
    CHECK(derived_series(heisenberg()).size() == 3);
}

TEST_CASE("center") {
    CHECK(center(LieAlgebra::abelian(3)).is_full());
    CHECK(center(sl2()).is_zero());
    CHECK(center(heisenberg()) == axis_span(3, {2}));
}

TEST_CASE("killing form and semisimplicity") {
    RationalMatrix k = killing_form(sl2());
    CHECK(k.at(0, 0) == 8);
    CHECK(k.at(1, 2) == 4);
    CHECK(k.at(1, 1) == 0);
    CHECK(is_semisimple(sl2()));
    CHECK(is_semisimple(so3()));
    CHECK(is_semisimple(direct_sum(sl2(), so3())));

    CHECK(killing_form(LieAlgebra::abelian(3)).is_zero());
    CHECK_FALSE(is_semisimple(LieAlgebra::abelian(3)));
    CHECK_FALSE(is_semisimple(solvable_diag3()));
}

TEST_CASE("ideal_generated") {
    auto span_e = axis_span(3, {1});
    CHECK(ideal_generated(sl2(), span_e).is_full());
    CHECK(ideal_generated(solvable_diag3(), axis_span(3, {1})) == axis_span(3, {1}));
    CHECK(ideal_generated(sl2(), RationalSubspace::zero(3)).is_zero());
}

TEST_CASE("ideal_generated is monotone and idempotent") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> v1(3), v2(3);
        for (int i = 0; i < 3; ++i) {
            v1[i] = coef(rng);
            v2[i] = coef(rng);
        }
        for (const LieAlgebra& L : {sl2(), solvable_diag3(), heisenberg()}) {
            auto a = RationalSubspace::span_of(3, {v1});
            auto b = RationalSubspace::span_of(3, {v1, v2});
            auto ia = ideal_generated(L, a);
            auto ib = ideal_generated(L, b);
            CHECK(ib.contains(ia));
            CHECK(ideal_generated(L, ia) == ia);
        }
    }
}

TEST_CASE("all_ideals_lowdim") {
    // the solvable diag algebra: exactly 0, Re2, Re3, Re2+Re3, L
    auto list = all_ideals_lowdim(solvable_diag3());
    CHECK_FALSE(list.continuous_family);
    REQUIRE(list.subspaces.size() == 5);
    CHECK(list.subspaces[0].is_zero());
    CHECK(list.subspaces[1] == axis_span(3, {2}));
    CHECK(list.subspaces[2] == axis_span(3, {1}));
    CHECK(list.subspaces[3] == axis_span(3, {1, 2}));
    CHECK(list.subspaces[4].is_full());

    for (const LieAlgebra& L : {sl2(), so3()}) {
        auto simple = all_ideals_lowdim(L);
        CHECK_FALSE(simple.continuous_family);
        CHECK(simple.subspaces.size() == 2);
    }

    // abelian dim 2: 0 and L plus a continuous line family
    auto ab = all_ideals_lowdim(LieAlgebra::abelian(2));
    CHECK(ab.continuous_family);
    CHECK(ab.subspaces.size() == 2);

    // heisenberg: center line, plus a continuous family of planes through it
    auto h = all_ideals_lowdim(heisenberg());
    CHECK(h.continuous_family);
    REQUIRE(h.subspaces.size() == 3);
    CHECK(h.subspaces[1] == axis_span(3, {2}));

    CHECK_THROWS_WITH_AS(all_ideals_lowdim(LieAlgebra::abelian(4)),
                         doctest::Contains("DimTooLarge"), Error);
    CHECK_THROWS_WITH_AS(all_ideals_lowdim(irrational_split()),
                         doctest::Contains("IncompleteOverRationals"), Error);
}

TEST_CASE("ideals are fixed points of ideal_generated") {
    for (const LieAlgebra& L : {solvable_diag3(), sl2(), heisenberg()}) {
        for (const auto& ideal : all_ideals_lowdim(L).subspaces)
            CHECK(ideal_generated(L, ideal) == ideal);
        for (const auto& member : derived_series(L))
            CHECK(ideal_generated(L, member) == member);
    }
}

TEST_CASE("is_simple_algebra") {
    CHECK(is_simple_algebra(sl2()));
    CHECK(is_simple_algebra(so3()));
    CHECK_FALSE(is_simple_algebra(solvable_diag3()));
    CHECK_FALSE(is_simple_algebra(LieAlgebra::abelian(2)));
    CHECK_FALSE(is_simple_algebra(direct_sum(sl2(), sl2())));
}

TEST_CASE("simple_summand_count") {
    auto one = simple_summand_count(sl2());
    CHECK(one.count == 1);
    CHECK_FALSE(one.non_split);

    auto two = simple_summand_count(direct_sum(sl2(), sl2()));
    CHECK(two.count == 2);
    CHECK_FALSE(two.non_split);

    auto rot = simple_summand_count(so3());
    CHECK(rot.count == 1);
    CHECK_FALSE(rot.non_split);

    auto mixed = simple_summand_count(direct_sum(sl2(), so3()));
    CHECK(mixed.count == 2);

    CHECK_THROWS_WITH_AS(simple_summand_count(LieAlgebra::abelian(2)),
                         doctest::Contains("NotSemisimple"), Error);
}

TEST_CASE("simple_summand_count flags non-split centroids") {
    // sl2 over the complex numbers viewed as a 6-dimensional rational algebra:
    // basis h, e, f, ih, ie, if. The centroid is a quadratic field, so the
    // idempotent decomposition cannot split over the rationals.
    const LieAlgebra base = sl2();
    const std::size_t n = 3;
    BilinearMap t = BilinearMap::zero(6);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = base.c(i, j, k);
                if (c == 0) continue;
                t.coeff(i, j, k) = c;              // [x, y]   = [x,y]
                t.coeff(i + n, j, k + n) = c;      // [ix, y]  = i[x,y]
                t.coeff(i, j + n, k + n) = c;      // [x, iy]  = i[x,y]
                t.coeff(i + n, j + n, k) = -c;     // [ix, iy] = -[x,y]
            }
    LieAlgebra complexified(t);
    CHECK_NOTHROW(check_jacobi(complexified));
    CHECK(is_semisimple(complexified));
    auto r = simple_summand_count(complexified);
    CHECK(r.non_split);
    CHECK(r.count == 1);  // lower bound; the algebra is in fact simple over R
}

TEST_CASE("negated bracket stays a Lie algebra") {
    for (const LieAlgebra& L : {sl2(), so3(), solvable_diag3()}) {
        BilinearMap neg = BilinearMap::zero(L.dim());
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j)
                for (std::size_t k = 0; k < L.dim(); ++k) neg.coeff(i, j, k) = -L.c(i, j, k);
        CHECK_NOTHROW(check_jacobi(LieAlgebra(neg)));
    }
}
