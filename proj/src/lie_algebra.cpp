#include "bracekit/lie_algebra.hpp"

#include "bracekit/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace bracekit {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")";  // 1-based, as in the file format
    return os.str();
}

std::vector<Rational> add(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

bool is_zero_vec(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace

LieAlgebra::LieAlgebra(BilinearMap bracket) : bracket_(std::move(bracket)) {
    const std::size_t n = bracket_.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (bracket_.coeff(i, j, k) != -bracket_.coeff(j, i, k))
                    throw Error("NotAntisymmetric", "c" + triple(i, j, k));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(BilinearMap::zero(dim)); }

bool LieAlgebra::is_abelian() const {
    return std::all_of(bracket_.tensor().begin(), bracket_.tensor().end(),
                       [](const Rational& q) { return q == 0; });
}

void check_jacobi(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<Rational> ei(n), ej(n), ek(n);
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                auto term1 = L.bracket_of(L.bracket().apply_basis(i, j), ek);
                auto term2 = L.bracket_of(L.bracket().apply_basis(j, k), ei);
                auto term3 = L.bracket_of(L.bracket().apply_basis(k, i), ej);
                if (!is_zero_vec(add(add(term1, term2), term3)))
                    throw Error("JacobiViolation", triple(i, j, k));
            }
}

std::vector<RationalSubspace> derived_series(const LieAlgebra& L) {
    std::vector<RationalSubspace> chain{RationalSubspace::full(L.dim())};
    while (true) {
        const RationalSubspace& cur = chain.back();
        std::vector<std::vector<Rational>> brackets;
        for (std::size_t r = 0; r < cur.dim(); ++r)
            for (std::size_t s = r + 1; s < cur.dim(); ++s)
                brackets.push_back(L.bracket_of(cur.basis_vector(r), cur.basis_vector(s)));
        RationalSubspace next = brackets.empty() ? RationalSubspace::zero(L.dim())
                                                 : RationalSubspace::span_of(L.dim(), brackets);
        if (next == cur) break;
        chain.push_back(next);
        if (next.is_zero()) break;
    }
    return chain;
}

std::vector<RationalSubspace> lower_central_series(const LieAlgebra& L) {
    std::vector<RationalSubspace> chain{RationalSubspace::full(L.dim())};
    while (true) {
        const RationalSubspace& cur = chain.back();
        std::vector<std::vector<Rational>> brackets;
        for (std::size_t i = 0; i < L.dim(); ++i) {
            std::vector<Rational> ei(L.dim());
            ei[i] = 1;
            for (std::size_t s = 0; s < cur.dim(); ++s)
                brackets.push_back(L.bracket_of(ei, cur.basis_vector(s)));
        }
        RationalSubspace next = brackets.empty() ? RationalSubspace::zero(L.dim())
                                                 : RationalSubspace::span_of(L.dim(), brackets);
        if (next == cur) break;
        chain.push_back(next);
        if (next.is_zero()) break;
    }
    return chain;
}

RationalSubspace center(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    if (n == 0) return RationalSubspace::zero(0);
    // x central  <=>  sum_j x_j c[j][i][k] = 0 for all i,k
    RationalMatrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) m.at(i * n + k, j) = L.c(j, i, k);
    return RationalSubspace::span(m.kernel());
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().is_zero(); }

RationalMatrix killing_form(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<RationalMatrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(i));
    RationalMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational tr = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) tr += ads[i].at(a, b) * ads[j].at(b, a);
            k.at(i, j) = tr;
            k.at(j, i) = tr;
        }
    return k;
}

bool is_semisimple(const LieAlgebra& L) {
    if (L.dim() == 0) return true;
    return killing_form(L).rank() == L.dim();
}

RationalSubspace ideal_generated(const LieAlgebra& L, const RationalSubspace& seed) {
    return bilinear_closure(seed, {L.bracket()});
}

namespace {

bool is_scalar_matrix(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                if (m.at(i, j) != m.at(0, 0)) return false;
            } else if (m.at(i, j) != 0) {
                return false;
            }
        }
    return true;
}

bool line_invariant(const std::vector<Rational>& v, const std::vector<RationalMatrix>& family,
                    std::size_t dim) {
    RationalSubspace line = RationalSubspace::span_of(dim, {v});
    for (const auto& m : family) {
        std::vector<Rational> image(dim, Rational(0));
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) image[r] += m.at(r, c) * v[c];
        if (!line.contains_vector(image)) return false;
    }
    return true;
}

struct Quadratic {
    Rational aa, ab, bb;  // q(alpha, beta) = aa a^2 + ab ab + bb b^2
    bool is_zero() const { return aa == 0 && ab == 0 && bb == 0; }
};

bool proportional(const Quadratic& p, const Quadratic& q) {
    return p.aa * q.ab == p.ab * q.aa && p.aa * q.bb == p.bb * q.aa && p.ab * q.bb == p.bb * q.ab;
}

// Lines invariant under every family member inside a 2-dimensional eigenspace
// (rows of `basis`). Appends found direction vectors; may flag a continuous
// family or throw IncompleteOverRationals.
void lines_in_plane(const RationalMatrix& basis, const std::vector<RationalMatrix>& family,
                    std::vector<std::vector<Rational>>& found, bool& continuous) {
    const std::size_t n = basis.cols();
    const std::vector<Rational> b1 = basis.row(0), b2 = basis.row(1);
    std::vector<Quadratic> quads;
    for (const auto& m : family) {
        std::vector<Rational> u(n, Rational(0)), w(n, Rational(0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                u[r] += m.at(r, c) * b1[c];
                w[r] += m.at(r, c) * b2[c];
            }
        // v = a b1 + b b2 invariant under m  <=>  all 2x2 minors of [v, Mv] vanish
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Quadratic q;
                q.aa = b1[i] * u[j] - b1[j] * u[i];
                q.ab = b1[i] * w[j] + b2[i] * u[j] - b1[j] * w[i] - b2[j] * u[i];
                q.bb = b2[i] * w[j] - b2[j] * w[i];
                if (!q.is_zero()) quads.push_back(q);
            }
    }
    if (quads.empty()) {
        continuous = true;  // every line of the plane is invariant
        return;
    }
    const Quadratic& q = quads.front();
    std::vector<std::pair<Rational, Rational>> roots;  // (alpha, beta)
    if (q.aa == 0) {
        roots.emplace_back(1, 0);
        if (q.ab != 0) roots.emplace_back(-q.bb, q.ab);
    } else {
        const Rational disc = q.ab * q.ab - 4 * q.aa * q.bb;
        Rational root;
        if (disc < 0) return;  // no real direction satisfies the first constraint
        if (rational_sqrt(disc, &root)) {
            roots.emplace_back((-q.ab + root) / 2, q.aa);
            if (root != 0) roots.emplace_back((-q.ab - root) / 2, q.aa);
        } else {
            // irrational candidate directions; they survive the remaining
            // constraints only when every constraint is proportional to q
            for (const auto& other : quads)
                if (!proportional(q, other)) return;
            throw Error("IncompleteOverRationals",
                        "invariant line with irrational direction in a 2-dimensional eigenspace");
        }
    }
    for (const auto& [alpha, beta] : roots) {
        std::vector<Rational> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = alpha * b1[c] + beta * b2[c];
        if (!is_zero_vec(v) && line_invariant(v, family, n)) found.push_back(v);
    }
}

// All lines invariant under every member of the family (ambient dim <= 3).
void invariant_lines(std::size_t dim, const std::vector<RationalMatrix>& family,
                     std::vector<std::vector<Rational>>& found, bool& continuous) {
    if (dim == 0) return;
    std::vector<RationalMatrix> essential;
    for (const auto& m : family)
        if (!is_scalar_matrix(m)) essential.push_back(m);
    if (essential.empty()) {
        if (dim >= 2) continuous = true;
        return;
    }
    // anchor: a non-scalar member with no irrational real eigenvalue
    const RationalMatrix* anchor = nullptr;
    for (const auto& m : essential)
        if (!has_irrational_real_root(char_poly(m))) {
            anchor = &m;
            break;
        }
    if (!anchor)
        throw Error("IncompleteOverRationals",
                    "every non-scalar operator has irrational real eigenvalues");
    for (const Rational& lam : rational_roots(char_poly(*anchor))) {
        RationalMatrix shifted = *anchor;
        for (std::size_t i = 0; i < dim; ++i) shifted.at(i, i) -= lam;
        RationalMatrix eig = shifted.kernel();
        if (eig.rows() == 1) {
            std::vector<Rational> v = eig.row(0);
            if (line_invariant(v, family, dim)) found.push_back(v);
        } else if (eig.rows() == 2) {
            lines_in_plane(eig, essential, found, continuous);
        }
        // a full eigenspace would make the anchor scalar, which is excluded
    }
}

}  // namespace

SubspaceList invariant_subspaces_lowdim(std::size_t dim,
                                        const std::vector<RationalMatrix>& family) {
    if (dim > 3) throw Error("DimTooLarge", "complete invariant-subspace search needs dim <= 3");
    for (const auto& m : family)
        if (m.rows() != dim || m.cols() != dim)
            throw Error("ShapeMismatch", "family matrix has wrong shape");

    SubspaceList out;
    std::set<RationalSubspace> collected;
    collected.insert(RationalSubspace::zero(dim));
    collected.insert(RationalSubspace::full(dim));

    std::vector<std::vector<Rational>> lines;
    invariant_lines(dim, family, lines, out.continuous_family);
    for (const auto& v : lines) collected.insert(RationalSubspace::span_of(dim, {v}));

    if (dim == 3) {
        // invariant planes are kernels of invariant lines of the transposed family
        std::vector<RationalMatrix> transposed;
        transposed.reserve(family.size());
        for (const auto& m : family) transposed.push_back(m.transposed());
        std::vector<std::vector<Rational>> duals;
        invariant_lines(dim, transposed, duals, out.continuous_family);
        for (const auto& f : duals) {
            RationalMatrix functional = RationalMatrix::from_rows(1, dim, f);
            collected.insert(RationalSubspace::span(functional.kernel()));
        }
    }

    out.subspaces.assign(collected.begin(), collected.end());
    std::sort(out.subspaces.begin(), out.subspaces.end());
    return out;
}

SubspaceList all_ideals_lowdim(const LieAlgebra& L) {
    std::vector<RationalMatrix> family;
    family.reserve(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) family.push_back(L.ad(i));
    return invariant_subspaces_lowdim(L.dim(), family);
}

bool is_simple_algebra(const LieAlgebra& L) {
    if (L.is_abelian()) return false;
    if (L.dim() <= 3) {
        SubspaceList ideals = all_ideals_lowdim(L);
        return !ideals.continuous_family && ideals.subspaces.size() == 2;
    }
    return is_semisimple(L) && simple_summand_count(L).count == 1;
}

namespace {

// Basis of the centroid {T : T[x,y] = [Tx,y] for all x,y}, flattened row-major.
RationalMatrix centroid_basis(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    // unknowns T[l][m]; equations sum_k c[i][j][k] T[l][k] = sum_m T[m][i] c[m][j][l]
    RationalMatrix sys(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t row = (i * n + j) * n + l;
                for (std::size_t k = 0; k < n; ++k) sys.at(row, l * n + k) += L.c(i, j, k);
                for (std::size_t m = 0; m < n; ++m) sys.at(row, m * n + i) -= L.c(m, j, l);
            }
    return sys.kernel();
}

// Monic minimal polynomial (lowest degree first) via the first linear
// dependence among powers.
std::vector<Rational> minimal_polynomial(const RationalMatrix& gamma) {
    const std::size_t n = gamma.rows();
    std::vector<RationalMatrix> powers{RationalMatrix::identity(n)};
    while (true) {
        const RationalMatrix next = powers.back() * gamma;
        const std::size_t d = powers.size();
        RationalMatrix sys(n * n, d + 1);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t p = 0; p < d; ++p) sys.at(r * n + c, p) = powers[p].at(r, c);
                sys.at(r * n + c, d) = next.at(r, c);
            }
        RationalMatrix ker = sys.kernel();
        for (std::size_t r = 0; r < ker.rows(); ++r) {
            if (ker.at(r, d) != 0) {
                std::vector<Rational> poly(d + 1);
                const Rational lead = ker.at(r, d);
                for (std::size_t p = 0; p < d; ++p) poly[p] = ker.at(r, p) / lead;
                poly[d] = 1;
                return poly;
            }
        }
        powers.push_back(next);
    }
}

}  // namespace

SummandCount simple_summand_count(const LieAlgebra& L) {
    if (!is_semisimple(L)) throw Error("NotSemisimple", "Killing form is degenerate");
    const std::size_t n = L.dim();
    RationalMatrix basis = centroid_basis(L);
    const std::size_t r = basis.rows();
    if (r <= 1) return {1, false};

    // generic element: weights (1, t, t^2, ...); separable once the minimal
    // polynomial reaches the centroid dimension
    std::vector<Rational> best_poly;
    for (long t = 1; t <= 8; ++t) {
        RationalMatrix gamma(n, n);
        Rational w = 1;
        for (std::size_t b = 0; b < r; ++b) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) gamma.at(i, j) += w * basis.at(b, i * n + j);
            w *= t;
        }
        std::vector<Rational> poly = minimal_polynomial(gamma);
        if (poly.size() > best_poly.size()) best_poly = poly;
        if (best_poly.size() == r + 1) break;
    }

    std::vector<Rational> roots = rational_roots(best_poly);
    std::vector<Rational> residual = best_poly;
    for (const Rational& root : roots) {
        std::vector<Rational> out(residual.size() - 1);
        Rational carry = 0;
        for (std::size_t i = residual.size(); i-- > 1;) {
            carry = residual[i] + carry * root;
            out[i - 1] = carry;
        }
        residual = std::move(out);
    }
    SummandCount out;
    out.non_split = residual.size() > 1 || best_poly.size() != r + 1;
    out.count = roots.size() + (residual.size() > 1 ? 1 : 0);
    return out;
}

// Named constructions ----------------------------------------------------------

namespace {

BilinearMap antisymmetric_tensor(std::size_t dim,
                                 const std::vector<std::tuple<int, int, int, long>>& entries) {
    BilinearMap t = BilinearMap::zero(dim);
    for (const auto& [i, j, k, v] : entries) {
        t.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                static_cast<std::size_t>(k)) = v;
        t.coeff(static_cast<std::size_t>(j), static_cast<std::size_t>(i),
                static_cast<std::size_t>(k)) = -v;
    }
    return t;
}

}  // namespace

LieAlgebra sl2() {
    return LieAlgebra(antisymmetric_tensor(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}));
}

LieAlgebra so3() {
    return LieAlgebra(antisymmetric_tensor(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}));
}

LieAlgebra solvable_diag3() {
    return LieAlgebra(antisymmetric_tensor(3, {{0, 1, 1, 1}, {0, 2, 2, -1}}));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t na = a.dim(), n = na + b.dim();
    BilinearMap t = BilinearMap::zero(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) t.coeff(i, j, k) = a.c(i, j, k);
    for (std::size_t i = na; i < n; ++i)
        for (std::size_t j = na; j < n; ++j)
            for (std::size_t k = na; k < n; ++k) t.coeff(i, j, k) = b.c(i - na, j - na, k - na);
    return LieAlgebra(std::move(t));
}

}  // namespace bracekit
