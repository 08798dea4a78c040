#include "bracekit/rational_matrix.hpp"

#include "bracekit/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace bracekit {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(std::size_t rows, std::size_t cols,
                                         std::vector<Rational> entries) {
    if (entries.size() != rows * cols)
        throw Error("ShapeMismatch", "entry count does not match rows*cols");
    RationalMatrix m(rows, cols);
    m.data_ = std::move(entries);
    return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    return std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("ShapeMismatch", "matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::rref() const {
    RationalMatrix m = *this;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols_ && pivot_row < m.rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows_ && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows_) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < m.cols_; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
        const Rational inv = Rational(1) / m.at(pivot_row, col);
        for (std::size_t c = col; c < m.cols_; ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows_; ++r) {
            if (r == pivot_row || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols_; ++c) m.at(r, c) -= f * m.at(pivot_row, c);
        }
        ++pivot_row;
    }
    return m;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix r = rref();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < r.rows_; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.cols_; ++j)
            if (r.at(i, j) != 0) { zero = false; break; }
        if (!zero) ++rank;
    }
    return rank;
}

RationalMatrix RationalMatrix::kernel() const {
    RationalMatrix r = rref();
    std::vector<std::ptrdiff_t> pivot_of_col(cols_, -1);
    std::size_t nrank = 0;
    for (std::size_t i = 0; i < r.rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (r.at(i, j) != 0) {
                pivot_of_col[j] = static_cast<std::ptrdiff_t>(i);
                ++nrank;
                break;
            }
        }
    }
    RationalMatrix basis(cols_ - nrank, cols_);
    std::size_t row_idx = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        basis.at(row_idx, f) = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (pivot_of_col[j] >= 0)
                basis.at(row_idx, j) = -r.at(static_cast<std::size_t>(pivot_of_col[j]), f);
        }
        ++row_idx;
    }
    return basis.rref();
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows() == 0) return *this;
    if (cols_ != below.cols()) throw Error("ShapeMismatch", "stack column mismatch");
    RationalMatrix out(rows_ + below.rows(), cols_);
    out.data_ = data_;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << bracekit::to_string(at(r, c));
        }
        os << ']';
        if (r + 1 < rows_) os << ' ';
    }
    return os.str();
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error("ShapeMismatch", "determinant of non-square matrix");
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a.at(sel, col) == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(sel, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        const Rational inv = Rational(1) / a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            const Rational f = a.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

std::vector<Rational> char_poly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error("ShapeMismatch", "char_poly of non-square matrix");
    const std::size_t n = m.rows();
    if (n > 3) throw Error("DimTooLarge", "char_poly implemented for n <= 3");
    if (n == 0) return {Rational(1)};
    if (n == 1) return {-m.at(0, 0), Rational(1)};
    if (n == 2) {
        Rational tr = m.at(0, 0) + m.at(1, 1);
        Rational det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        return {det, -tr, Rational(1)};
    }
    Rational tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
    Rational m2 = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            m2 += m.at(i, i) * m.at(j, j) - m.at(i, j) * m.at(j, i);
    return {-determinant(m), m2, -tr, Rational(1)};
}

namespace {

std::vector<Integer> divisors(Integer v) {
    if (v < 0) v = -v;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            out.push_back(v / d);
        }
    }
    return out;
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// poly / (x - root), assuming exact divisibility.
std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& root) {
    std::vector<Rational> out(poly.size() - 1);
    Rational carry = 0;
    for (std::size_t i = poly.size(); i-- > 1;) {
        carry = poly[i] + carry * root;
        out[i - 1] = carry;
    }
    return out;
}

std::vector<Rational> trimmed(std::vector<Rational> poly) {
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    return poly;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& poly_in) {
    std::vector<Rational> poly = trimmed(poly_in);
    std::vector<Rational> roots;
    if (poly.size() <= 1) return roots;

    std::size_t low = 0;
    while (low < poly.size() && poly[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        poly.erase(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(low));
        if (poly.size() <= 1) return roots;
    }

    Integer common_den = 1;
    for (const auto& c : poly) common_den = lcm(common_den, denominator(c));
    std::vector<Integer> ip;
    ip.reserve(poly.size());
    for (const auto& c : poly) ip.push_back(numerator(Rational(c * common_den)));

    for (const Integer& p : divisors(ip.front())) {
        for (const Integer& q : divisors(ip.back())) {
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                if (eval_poly(poly, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool rational_sqrt(const Rational& q, Rational* root) {
    if (q < 0) return false;
    Integer n = numerator(q), d = denominator(q);
    Integer sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    if (root) *root = Rational(sn, sd);
    return true;
}

bool has_irrational_real_root(const std::vector<Rational>& poly_in) {
    std::vector<Rational> poly = trimmed(poly_in);
    // Divide out every rational root (with multiplicity).
    for (const Rational& r : rational_roots(poly)) {
        while (poly.size() > 1 && eval_poly(poly, r) == 0) poly = deflate(poly, r);
    }
    const std::size_t deg = poly.size() - 1;
    if (deg <= 1) return false;
    if (deg == 2) {
        Rational disc = poly[1] * poly[1] - 4 * poly[2] * poly[0];
        if (disc <= 0) return false;  // complex or double rational root
        return !rational_sqrt(disc, nullptr);
    }
    // Odd degree always has a real root; even degree >= 4 is treated
    // conservatively (never reached for the <= 3x3 matrices handled here).
    return true;
}

}  // namespace bracekit
