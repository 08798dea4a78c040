#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracekit/error.hpp"
#include "bracekit/group_law.hpp"
#include "bracekit/lie_algebra.hpp"
#include "bracekit/post_lie.hpp"
#include "bracekit/presets.hpp"

#include <cmath>

using namespace bracekit;

TEST_CASE("vector addition is an exact group") {
    GroupLaw add3 = law_preset("abelian_3");
    auto rep = check_group_numeric(add3, 200, 1e-12, 42);
    CHECK(rep.pass);
    CHECK(rep.identity_residual == 0.0);
    CHECK(rep.associativity_residual == 0.0);

    auto brep = check_brace_numeric(add3, add3, 200, 1e-12, 42);
    CHECK(brep.pass);
    CHECK(brep.brace_residual < 1e-12);
}

TEST_CASE("identity violation is caught") {
    GroupLaw shifted(1, {parse_expression("a1 + b1 + 1", 1, {})});
    auto rep = check_group_numeric(shifted, 50, 1e-8, 42);
    CHECK_FALSE(rep.pass);
    CHECK(rep.identity_residual == doctest::Approx(1.0));
}

TEST_CASE("the affine and worked 3d laws verify numerically") {
    auto [dot2, circ2] = brace_law_preset("affine2d");
    auto rep2 = check_brace_numeric(dot2, circ2, 500, 1e-9, 42);
    CHECK(rep2.pass);

    auto [dot3, circ3] = brace_law_preset("a1_1_model");
    auto g = check_group_numeric(circ3, 500, 1e-9, 42);
    CHECK(g.pass);
    auto rep3 = check_brace_numeric(dot3, circ3, 500, 1e-9, 42);
    CHECK(rep3.pass);

    auto [dots, circs] = brace_law_preset("a1_1_semidirect");
    auto reps = check_brace_numeric(dots, circs, 500, 1e-9, 42);
    CHECK(reps.pass);
}

TEST_CASE("newton divergence is reported") {
    // 0.5 + y^2 = 0 has no real solution, so the inverse solve cannot converge
    GroupLaw quad(1, {parse_expression("a1 + b1*b1", 1, {})});
    CHECK_THROWS_WITH_AS(quad.inverse({0.5}), doctest::Contains("NewtonDivergence"), Error);
}

TEST_CASE("newton inverse") {
    GroupLaw circ = law_preset("a1_1_circ");
    DetRng rng(7);
    for (int t = 0; t < 20; ++t) {
        auto x = rng.point(3);
        auto y = circ.inverse(x);
        auto z = circ.apply(x, y);
        for (double v : z) CHECK(std::abs(v) < 1e-11);
    }
}

TEST_CASE("lambda_numeric at the paper's sample points") {
    auto [dot, circ] = brace_law_preset("a1_1_model");

    // a = 0: the identity matrix
    auto at0 = lambda_numeric(dot, circ, {0, 0, 0});
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(at0[k * 3 + j] == doctest::Approx(k == j ? 1.0 : 0.0).epsilon(1e-10));

    // a = (1,0,0): diag(1, e, 1/e)
    auto at100 = lambda_numeric(dot, circ, {1, 0, 0});
    const double e = std::exp(1.0);
    const double expected100[9] = {1, 0, 0, 0, e, 0, 0, 0, 1 / e};
    for (int i = 0; i < 9; ++i) CHECK(std::abs(at100[i] - expected100[i]) < 1e-9);

    // a = (0,1,1): s = -1; first row (1, Z e^s, Y e^-s) = (1, 1/e, e)
    auto at011 = lambda_numeric(dot, circ, {0, 1, 1});
    const double expected011[9] = {1, 1 / e, e, 0, 1 / e, 0, 0, 0, e};
    for (int i = 0; i < 9; ++i) CHECK(std::abs(at011[i] - expected011[i]) < 1e-9);

    // lambda is invertible at sampled points (3x3 determinant away from 0)
    DetRng rng(11);
    for (int t = 0; t < 10; ++t) {
        auto a = rng.point(3);
        auto m = lambda_numeric(dot, circ, a);
        const double det = m[0] * (m[4] * m[8] - m[5] * m[7]) -
                           m[1] * (m[3] * m[8] - m[5] * m[6]) +
                           m[2] * (m[3] * m[7] - m[4] * m[6]);
        CHECK(std::abs(det) > 1e-3);
    }
}

TEST_CASE("extract_bracket") {
    // abelian: zero tensor
    auto zero = extract_bracket(law_preset("abelian_3"));
    for (double v : zero.entries) CHECK(std::abs(v) < 1e-9);

    // worked 3d circ law: [e1,e2]=e2, [e1,e3]=-e3, [e2,e3]=0
    auto circ = extract_bracket(law_preset("a1_1_circ"));
    const LieAlgebra expected = solvable_diag3();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(std::abs(circ.at(i, j, k) -
                               static_cast<double>(expected.c(i, j, k))) < 1e-6);

    // 2d affine law: [e2,e1] = e1
    auto aff = extract_bracket(law_preset("affine2d_circ"));
    CHECK(std::abs(aff.at(1, 0, 0) - 1.0) < 1e-6);
    CHECK(std::abs(aff.at(0, 1, 0) + 1.0) < 1e-6);
    CHECK(std::abs(aff.at(0, 1, 1)) < 1e-9);
    CHECK(std::abs(aff.at(1, 0, 1)) < 1e-9);
}

TEST_CASE("extract_triangle") {
    // trivial brace: zero tensor
    auto [da, ca] = brace_law_preset("abelian_3");
    auto zero = extract_triangle(da, ca);
    for (double v : zero.entries) CHECK(std::abs(v) < 1e-9);

    // worked 3d model
    auto [dot, circ] = brace_law_preset("a1_1_model");
    auto tri = extract_triangle(dot, circ);
    const PostLieAlgebra expected = a11_post_lie();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(std::abs(tri.at(i, j, k) -
                               static_cast<double>(expected.triangle().coeff(i, j, k))) < 1e-6);

    // almost-trivial pair on the affine model: triangle = -dot bracket
    auto [adot, acirc] = brace_law_preset("affine2d_almost_trivial");
    auto atri = extract_triangle(adot, acirc);
    auto abr = extract_bracket(adot);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(std::abs(atri.entries[i] + abr.entries[i]) < 1e-6);
}

TEST_CASE("postlie axiom (i) holds numerically for validated pairs") {
    for (const char* name : {"affine2d", "a1_1_model", "a1_1_semidirect"}) {
        auto [dot, circ] = brace_law_preset(name);
        auto bdot = extract_bracket(dot);
        auto bcirc = extract_bracket(circ);
        auto tri = extract_triangle(dot, circ);
        const std::size_t n = dot.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    CHECK(std::abs(bcirc.at(i, j, k) - bdot.at(i, j, k) -
                                   (tri.at(i, j, k) - tri.at(j, i, k))) < 1e-5);
    }
}

TEST_CASE("rationalize") {
    CHECK(rationalize_value(0.9999999997, 10, 1e-6) == rat(1));
    CHECK(rationalize_value(-1.0000000002, 10, 1e-6) == rat(-1));
    CHECK(rationalize_value(0.3333333329, 10, 1e-6) == rat(1, 3));
    CHECK(rationalize_value(-0.50000000001, 64, 1e-6) == rat(-1, 2));
    CHECK_THROWS_WITH_AS(rationalize_value(0.123456789, 4, 1e-6),
                         doctest::Contains("NoRationalWithinBound"), Error);
    CHECK_THROWS_WITH_AS(rationalize_value(0.5, 64, 0.3), doctest::Contains("AmbiguousRational"),
                         Error);
}

TEST_CASE("end-to-end: extracted tensors rationalize to the exact instance") {
    for (const char* name : {"a1_1_model", "a1_1_semidirect"}) {
        auto [dot, circ] = brace_law_preset(name);
        auto circ_exact = rationalize(extract_bracket(circ), 64, 1e-6);
        CHECK(LieAlgebra(circ_exact) == solvable_diag3());

        auto dot_exact = rationalize(extract_bracket(dot), 64, 1e-6);
        CHECK(LieAlgebra(dot_exact).is_abelian());

        auto tri_exact = rationalize(extract_triangle(dot, circ), 64, 1e-6);
        PostLieAlgebra P(LieAlgebra(dot_exact), tri_exact);
        CHECK(P == a11_post_lie());
        CHECK_NOTHROW(check_postlie(P));
        CHECK(P.circ() == solvable_diag3());
    }
}

TEST_CASE("deterministic sampling") {
    DetRng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    auto r1 = check_brace_numeric(law_preset("abelian_2"), law_preset("affine2d_circ"), 100, 1e-8, 7);
    auto r2 = check_brace_numeric(law_preset("abelian_2"), law_preset("affine2d_circ"), 100, 1e-8, 7);
    CHECK(r1.brace_residual == r2.brace_residual);
}
