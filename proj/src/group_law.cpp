#include "bracekit/group_law.hpp"

#include "bracekit/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace bracekit {

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs(const std::vector<double>& a) {
    double m = 0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

// dense LU solve with partial pivoting (tiny n)
std::vector<double> solve_linear(std::vector<std::vector<double>> m, std::vector<double> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) throw Error("NewtonDivergence", "singular Jacobian");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double acc = rhs[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= m[r][c] * x[c];
        x[r] = acc / m[r][r];
    }
    return x;
}

// First derivative of f at 0 by central differences over steps
// {h, h/2, h/4} with two-level Richardson extrapolation; the residual
// |R2 - R1(h/2)| is accumulated into *err.
std::vector<double> richardson_derivative(const std::function<std::vector<double>(double)>& f,
                                          std::size_t n, double h, double* err) {
    auto central = [&](double step) {
        std::vector<double> plus = f(step), minus = f(-step), d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = (plus[i] - minus[i]) / (2 * step);
        return d;
    };
    const std::vector<double> d1 = central(h), d2 = central(h / 2), d3 = central(h / 4);
    std::vector<double> r1(n), r2(n), out(n);
    for (std::size_t i = 0; i < n; ++i) {
        r1[i] = (4 * d2[i] - d1[i]) / 3;
        r2[i] = (4 * d3[i] - d2[i]) / 3;
        out[i] = (16 * r2[i] - r1[i]) / 15;
        if (err) *err = std::max(*err, std::abs(out[i] - r2[i]));
    }
    return out;
}

// Mixed second partial d^2/ds dt g(s,t) at 0, same Richardson schedule.
double richardson_mixed(const std::function<double(double, double)>& g, double h, double* err) {
    auto stencil = [&](double step) {
        return (g(step, step) - g(step, -step) - g(-step, step) + g(-step, -step)) /
               (4 * step * step);
    };
    const double d1 = stencil(h), d2 = stencil(h / 2), d3 = stencil(h / 4);
    const double r1 = (4 * d2 - d1) / 3;
    const double r2 = (4 * d3 - d2) / 3;
    const double out = (16 * r2 - r1) / 15;
    if (err) *err = std::max(*err, std::abs(out - r2));
    return out;
}

constexpr double kStep = 1e-2;  // top of the {1e-2, 5e-3, 2.5e-3} schedule

}  // namespace

GroupLaw::GroupLaw(std::size_t dim, std::vector<ExprPtr> components)
    : dim_(dim), components_(std::move(components)) {
    if (components_.size() != dim_)
        throw Error("DimensionMismatch", "law needs one expression per coordinate");
}

std::vector<double> GroupLaw::apply(const std::vector<double>& a,
                                    const std::vector<double>& b) const {
    if (a.size() != dim_ || b.size() != dim_)
        throw Error("DimensionMismatch", "point dimension mismatch");
    std::vector<double> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = components_[i]->eval(a, b);
    return out;
}

std::vector<double> GroupLaw::inverse(const std::vector<double>& x) const {
    std::vector<double> y(dim_, 0.0);
    const double jac_step = 1e-6;
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<double> r = apply(x, y);
        if (max_abs(r) < 1e-12) return y;
        std::vector<std::vector<double>> jac(dim_, std::vector<double>(dim_));
        for (std::size_t j = 0; j < dim_; ++j) {
            std::vector<double> yp = y, ym = y;
            yp[j] += jac_step;
            ym[j] -= jac_step;
            const std::vector<double> fp = apply(x, yp), fm = apply(x, ym);
            for (std::size_t i = 0; i < dim_; ++i) jac[i][j] = (fp[i] - fm[i]) / (2 * jac_step);
        }
        const std::vector<double> dy = solve_linear(std::move(jac), r);
        for (std::size_t i = 0; i < dim_; ++i) y[i] -= dy[i];
    }
    std::ostringstream os;
    os << "no convergence at point (";
    for (std::size_t i = 0; i < dim_; ++i) os << (i ? "," : "") << x[i];
    os << ")";
    throw Error("NewtonDivergence", os.str());
}

GroupCheckReport check_group_numeric(const GroupLaw& law, std::size_t samples, double tol,
                                     std::uint64_t seed) {
    if (tol <= 0) throw Error("Usage", "tolerance must be positive");
    GroupCheckReport rep;
    rep.samples = samples;
    rep.tol = tol;
    rep.seed = seed;
    DetRng rng(seed);
    const std::vector<double> origin(law.dim(), 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto x = rng.point(law.dim());
        const auto y = rng.point(law.dim());
        const auto z = rng.point(law.dim());
        rep.identity_residual = std::max(rep.identity_residual,
                                         std::max(max_abs_diff(law.apply(origin, x), x),
                                                  max_abs_diff(law.apply(x, origin), x)));
        rep.associativity_residual =
            std::max(rep.associativity_residual,
                     max_abs_diff(law.apply(law.apply(x, y), z), law.apply(x, law.apply(y, z))));
        rep.inverse_residual = std::max(rep.inverse_residual, max_abs(law.apply(x, law.inverse(x))));
    }
    rep.pass = rep.identity_residual < tol && rep.associativity_residual < tol &&
               rep.inverse_residual < tol;
    return rep;
}

BraceCheckReport check_brace_numeric(const GroupLaw& dot, const GroupLaw& circ,
                                     std::size_t samples, double tol, std::uint64_t seed) {
    if (dot.dim() != circ.dim()) throw Error("DimensionMismatch", "laws have different dimensions");
    BraceCheckReport rep;
    rep.dot_report = check_group_numeric(dot, samples, tol, seed);
    rep.circ_report = check_group_numeric(circ, samples, tol, seed);
    DetRng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto a = rng.point(dot.dim());
        const auto b = rng.point(dot.dim());
        const auto c = rng.point(dot.dim());
        const auto lhs = circ.apply(a, dot.apply(b, c));
        const auto rhs = dot.apply(dot.apply(circ.apply(a, b), dot.inverse(a)), circ.apply(a, c));
        rep.brace_residual = std::max(rep.brace_residual, max_abs_diff(lhs, rhs));
    }
    rep.pass = rep.dot_report.pass && rep.circ_report.pass && rep.brace_residual < tol;
    return rep;
}

std::vector<double> lambda_numeric(const GroupLaw& dot, const GroupLaw& circ,
                                   const std::vector<double>& a) {
    const std::size_t n = dot.dim();
    const std::vector<double> ainv = dot.inverse(a);
    std::vector<double> jac(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        auto column = richardson_derivative(
            [&](double s) {
                std::vector<double> b(n, 0.0);
                b[j] = s;
                return dot.apply(ainv, circ.apply(a, b));
            },
            n, kStep, nullptr);
        for (std::size_t k = 0; k < n; ++k) jac[k * n + j] = column[k];
    }
    return jac;
}

NumericTensor extract_bracket(const GroupLaw& law) {
    const std::size_t n = law.dim();
    NumericTensor t;
    t.dim = n;
    t.entries.assign(n * n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const double v = richardson_mixed(
                    [&](double s, double u) {
                        std::vector<double> xi(n, 0.0), eta(n, 0.0);
                        xi[i] = s;
                        eta[j] = u;
                        return law.apply(xi, eta)[k] - law.apply(eta, xi)[k];
                    },
                    kStep, &t.error_bound);
                t.at(i, j, k) = v;
                t.at(j, i, k) = -v;
            }
    return t;
}

NumericTensor extract_triangle(const GroupLaw& dot, const GroupLaw& circ) {
    const std::size_t n = dot.dim();
    NumericTensor t;
    t.dim = n;
    t.entries.assign(n * n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto slope = richardson_derivative(
            [&](double s) {
                std::vector<double> a(n, 0.0);
                a[i] = s;
                return lambda_numeric(dot, circ, a);
            },
            n * n, kStep, &t.error_bound);
        // lambda matrices are row-major: entry (k, j) is the k-th coordinate
        // of lambda(e_j)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = slope[k * n + j];
    }
    return t;
}

Rational rationalize_value(double x, std::size_t max_den, double tol) {
    Rational best;
    double best_err = -1;
    std::vector<Rational> within;
    for (std::size_t q = 1; q <= max_den; ++q) {
        const double scaled = x * static_cast<double>(q);
        if (std::abs(scaled) > 1e15) throw Error("NoRationalWithinBound", "entry out of range");
        const long long p = std::llround(scaled);
        Rational cand(p, static_cast<long long>(q));
        const double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
        if (best_err < 0 || err < best_err) {
            best = cand;
            best_err = err;
        }
        if (err <= tol &&
            std::find(within.begin(), within.end(), cand) == within.end())
            within.push_back(cand);
    }
    if (within.empty()) {
        std::ostringstream os;
        os << "no rational with denominator <= " << max_den << " within " << tol << " of " << x;
        throw Error("NoRationalWithinBound", os.str());
    }
    if (within.size() > 1) {
        std::ostringstream os;
        os << "several rationals within " << tol << " of " << x;
        throw Error("AmbiguousRational", os.str());
    }
    return within.front();
}

BilinearMap rationalize(const NumericTensor& t, std::size_t max_den, double tol) {
    if (max_den == 0) throw Error("Usage", "max_den must be positive");
    const double effective_tol = tol < 0 ? std::max(t.error_bound, 1e-6) : tol;
    BilinearMap out = BilinearMap::zero(t.dim);
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
            for (std::size_t k = 0; k < t.dim; ++k) {
                try {
                    out.coeff(i, j, k) = rationalize_value(t.at(i, j, k), max_den, effective_tol);
                } catch (const Error& e) {
                    std::ostringstream os;
                    os << "entry (" << i + 1 << "," << j + 1 << "," << k + 1 << "): " << e.what();
                    throw Error(e.kind(), os.str());
                }
            }
    return out;
}

}  // namespace bracekit
