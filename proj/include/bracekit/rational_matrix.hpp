#pragma once

#include "bracekit/rational.hpp"

#include <cstddef>
#include <vector>

namespace bracekit {

/// Dense matrix over Rational. Ambient dimensions in this project are tiny
/// (<= ~10), so density costs nothing and exactness removes all tolerance
/// questions.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    /// Row-major construction from a flat list (size must be rows*cols).
    static RationalMatrix from_rows(std::size_t rows, std::size_t cols,
                                    std::vector<Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const = default;

    /// Unique reduced row-echelon form; row space preserved, shape preserved
    /// (zero rows sink to the bottom).
    RationalMatrix rref() const;

    std::size_t rank() const;

    /// Basis of the right null space {x : M x = 0}, one vector per row,
    /// in reduced row-echelon form. Zero kernel gives a 0 x cols matrix.
    RationalMatrix kernel() const;

    /// Stacks rhs below this matrix (column counts must match).
    RationalMatrix stacked(const RationalMatrix& below) const;

    bool is_zero() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Determinant by fraction-free-ish Gaussian elimination (exact).
Rational determinant(const RationalMatrix& m);

/// Characteristic polynomial coefficients of a square matrix of size <= 3,
/// monic, lowest degree first: p(x) = c[0] + c[1] x + ... + x^n.
std::vector<Rational> char_poly(const RationalMatrix& m);

/// All rational roots of a polynomial with rational coefficients (lowest
/// degree first), each listed once.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

/// True iff the polynomial has a real irrational root. Exact for degree <= 3
/// after rational roots have been divided out.
bool has_irrational_real_root(const std::vector<Rational>& poly);

/// True iff q is the square of a rational; if so *root is set (root >= 0).
bool rational_sqrt(const Rational& q, Rational* root);

}  // namespace bracekit
