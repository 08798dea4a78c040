#pragma once

#include "bracekit/expression.hpp"
#include "bracekit/subspace.hpp"

#include <cstdint>
#include <vector>

namespace bracekit {

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform for a given seed.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [-1, 1)
    double uniform_pm1() { return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0; }

    std::vector<double> point(std::size_t dim) {
        std::vector<double> p(dim);
        for (auto& v : p) v = uniform_pm1();
        return p;
    }

private:
    std::uint64_t state_;
};

/// Closed-form multiplication on R^n; the identity is the origin by
/// convention (checked numerically by check_group_numeric).
class GroupLaw {
public:
    GroupLaw(std::size_t dim, std::vector<ExprPtr> components);

    std::size_t dim() const { return dim_; }

    std::vector<double> apply(const std::vector<double>& a, const std::vector<double>& b) const;

    /// Solves law(x, y) = 0 by Newton iteration from the origin; max 50
    /// steps, convergence threshold 1e-12. Throws Error("NewtonDivergence").
    std::vector<double> inverse(const std::vector<double>& x) const;

private:
    std::size_t dim_;
    std::vector<ExprPtr> components_;
};

struct GroupCheckReport {
    std::size_t samples = 0;
    double tol = 0;
    std::uint64_t seed = 0;
    double identity_residual = 0;
    double associativity_residual = 0;
    double inverse_residual = 0;
    bool pass = false;
};

/// Max residuals of the identity laws, associativity and Newton-solved
/// inverses over seeded uniform samples in [-1,1]^n.
GroupCheckReport check_group_numeric(const GroupLaw& law, std::size_t samples, double tol,
                                     std::uint64_t seed);

struct BraceCheckReport {
    GroupCheckReport dot_report;
    GroupCheckReport circ_report;
    double brace_residual = 0;  // max over a o (b . c) vs (a o b) . a^-1 . (a o c)
    bool pass = false;
};

BraceCheckReport check_brace_numeric(const GroupLaw& dot, const GroupLaw& circ,
                                     std::size_t samples, double tol, std::uint64_t seed);

/// Jacobian at the identity of b -> a^-1 . (a o b), row-major n x n.
std::vector<double> lambda_numeric(const GroupLaw& dot, const GroupLaw& circ,
                                   const std::vector<double>& a);

/// Floating image of a structure-constant tensor, with the Richardson
/// residual recorded as an error bound.
struct NumericTensor {
    std::size_t dim = 0;
    std::vector<double> entries;  // (i*dim + j)*dim + k
    double error_bound = 0;

    double& at(std::size_t i, std::size_t j, std::size_t k) {
        return entries[(i * dim + j) * dim + k];
    }
    double at(std::size_t i, std::size_t j, std::size_t k) const {
        return entries[(i * dim + j) * dim + k];
    }
};

/// Structure constants of the law at the identity:
/// [xi,eta] = d^2/ds dt (m(s xi, t eta) - m(t eta, s xi)) at 0.
/// Antisymmetry holds by construction.
NumericTensor extract_bracket(const GroupLaw& law);

/// xi |> eta as the s-derivative at 0 of lambda_numeric(s xi) applied to eta.
NumericTensor extract_triangle(const GroupLaw& dot, const GroupLaw& circ);

/// Nearest rational with denominator <= max_den per entry, required to sit
/// within tol (defaults to max(error_bound, 1e-6) when tol < 0). Throws
/// Error("NoRationalWithinBound") and Error("AmbiguousRational").
BilinearMap rationalize(const NumericTensor& t, std::size_t max_den, double tol = -1.0);

/// Single scalar variant used by rationalize.
Rational rationalize_value(double x, std::size_t max_den, double tol);

}  // namespace bracekit
