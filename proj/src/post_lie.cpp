#include "bracekit/post_lie.hpp"

#include "bracekit/error.hpp"

#include <algorithm>
#include <sstream>

namespace bracekit {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
    return os.str();
}

std::vector<Rational> add(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<Rational> sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

bool is_zero_vec(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace

LieAlgebra sub_adjacent(const LieAlgebra& dot, const BilinearMap& triangle) {
    if (dot.dim() != triangle.dim())
        throw Error("ShapeMismatch", "triangle tensor dim != algebra dim");
    const std::size_t n = dot.dim();
    BilinearMap circ = BilinearMap::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                circ.coeff(i, j, k) = dot.c(i, j, k) + triangle.coeff(i, j, k) - triangle.coeff(j, i, k);
    return LieAlgebra(std::move(circ));
}

PostLieAlgebra::PostLieAlgebra(LieAlgebra dot, BilinearMap triangle)
    : dot_(std::move(dot)), triangle_(std::move(triangle)), circ_(sub_adjacent(dot_, triangle_)) {}

void check_postlie(const PostLieAlgebra& P) {
    check_jacobi(P.dot());
    const std::size_t n = P.dim();
    const BilinearMap& t = P.triangle();
    // (i) circ defect equals the antisymmetrized triangle (structural for the
    // cached circ; re-verified to catch corruption)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (P.circ().c(i, j, k) - P.dot().c(i, j, k) != t.coeff(i, j, k) - t.coeff(j, i, k))
                    throw Error("AxiomViolation", "axiom (i) at " + triple(i, j, k));
    // (ii) xi |> [eta, zeta] = [xi|>eta, zeta] + [eta, xi|>zeta]
    std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = t.apply(basis[i], P.dot().bracket().apply_basis(j, k));
                auto rhs = add(P.dot().bracket_of(t.apply_basis(i, j), basis[k]),
                               P.dot().bracket_of(basis[j], t.apply_basis(i, k)));
                if (!is_zero_vec(sub(lhs, rhs)))
                    throw Error("AxiomViolation", "axiom (ii) at " + triple(i, j, k));
            }
    // (iii) [xi,eta]_circ |> zeta = xi|>(eta|>zeta) - eta|>(xi|>zeta)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = t.apply(P.circ().bracket().apply_basis(i, j), basis[k]);
                auto rhs = sub(t.apply(basis[i], t.apply_basis(j, k)),
                               t.apply(basis[j], t.apply_basis(i, k)));
                if (!is_zero_vec(sub(lhs, rhs)))
                    throw Error("AxiomViolation", "axiom (iii) at " + triple(i, j, k));
            }
}

InfinitesimalIdealReport brace_ideal_test(const PostLieAlgebra& P, const RationalSubspace& s) {
    if (s.ambient_dim() != P.dim()) throw Error("ShapeMismatch", "subspace ambient dim mismatch");
    const std::size_t n = P.dim();
    InfinitesimalIdealReport report{s, true, true, true};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> ei(n, Rational(0));
        ei[i] = 1;
        for (std::size_t r = 0; r < s.dim(); ++r) {
            const auto v = s.basis_vector(r);
            if (report.dot_ideal && !s.contains_vector(P.dot().bracket_of(ei, v)))
                report.dot_ideal = false;
            if (report.circ_ideal && !s.contains_vector(P.circ().bracket_of(ei, v)))
                report.circ_ideal = false;
            if (report.triangle_stable && !s.contains_vector(P.triangle().apply(ei, v)))
                report.triangle_stable = false;
        }
    }
    return report;
}

bool is_simple_brace_infinitesimal(const PostLieAlgebra& P) {
    const std::size_t n = P.dim();
    if (n > 3) throw Error("DimTooLarge", "simplicity decision needs dim <= 3");
    std::vector<RationalMatrix> family;
    for (std::size_t i = 0; i < n; ++i) {
        family.push_back(P.dot().ad(i));
        family.push_back(P.circ().ad(i));
        family.push_back(P.triangle_operator(i));
    }
    SubspaceList common = invariant_subspaces_lowdim(n, family);
    if (common.continuous_family) return false;
    return common.subspaces.size() == 2;
}

InfinitesimalDerivedSeries brace_derived_series_infinitesimal(const PostLieAlgebra& P) {
    const std::size_t n = P.dim();
    if (n > 3) throw Error("DimTooLarge", "derived series needs dim <= 3");
    const std::vector<ClosureOp> ops{
        ClosureOp{P.dot().bracket(), true, true},
        ClosureOp{P.circ().bracket(), true, true},
        ClosureOp{P.triangle(), true, false},  // stability asks only for x |> v
    };
    InfinitesimalDerivedSeries out;
    out.chain.push_back(RationalSubspace::full(n));
    while (true) {
        const RationalSubspace& cur = out.chain.back();
        std::vector<std::vector<Rational>> gens;
        for (std::size_t r = 0; r < cur.dim(); ++r)
            for (std::size_t s = 0; s < cur.dim(); ++s) {
                const auto x = cur.basis_vector(r), y = cur.basis_vector(s);
                gens.push_back(P.dot().bracket_of(x, y));
                gens.push_back(P.circ().bracket_of(x, y));
                gens.push_back(P.triangle().apply(x, y));
            }
        RationalSubspace next =
            gens.empty() ? RationalSubspace::zero(n)
                         : stable_closure(RationalSubspace::span_of(n, gens), ops);
        out.chain.push_back(next);
        if (next == cur || next.is_zero()) break;
    }
    out.solvable = out.chain.back().is_zero();
    return out;
}

RigidityResult rigidity_classify(const PostLieAlgebra& P) {
    if (!is_simple_algebra(P.circ()))
        throw Error("CircNotSimple", "the sub-adjacent algebra is not simple");
    const std::size_t n = P.dim();
    bool zero = true, negdot = true;
    std::size_t wi = 0, wj = 0, wk = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& tv = P.triangle().coeff(i, j, k);
                if (tv != 0) zero = false;
                if (tv != -P.dot().c(i, j, k)) {
                    if (negdot) {
                        wi = i;
                        wj = j;
                        wk = k;
                    }
                    negdot = false;
                }
            }
    if (zero) return {RigidityCase::case_i, "triangle = 0, circ = dot"};
    if (negdot) return {RigidityCase::case_ii, "triangle = -dot bracket, circ = -dot"};
    return {RigidityCase::violation,
            "triangle is neither 0 nor -dot bracket, first witness at " + triple(wi, wj, wk)};
}

PostLieAlgebra a11_post_lie() {
    BilinearMap t = BilinearMap::zero(3);
    t.coeff(0, 1, 1) = 1;   // e1 |> e2 = e2
    t.coeff(0, 2, 2) = -1;  // e1 |> e3 = -e3
    t.coeff(1, 2, 0) = 1;   // e2 |> e3 = e1
    t.coeff(2, 1, 0) = 1;   // e3 |> e2 = e1
    return PostLieAlgebra(LieAlgebra::abelian(3), std::move(t));
}

}  // namespace bracekit
