#include "bracekit/subspace.hpp"

#include "bracekit/error.hpp"

#include <algorithm>
#include <sstream>

namespace bracekit {

namespace {

RationalMatrix drop_zero_rows(const RationalMatrix& m) {
    std::vector<Rational> kept;
    std::size_t nrows = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) { zero = false; break; }
        if (zero) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) kept.push_back(m.at(r, c));
        ++nrows;
    }
    return RationalMatrix::from_rows(nrows, m.cols(), std::move(kept));
}

}  // namespace

RationalSubspace::RationalSubspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {}

RationalSubspace RationalSubspace::zero(std::size_t ambient_dim) {
    return RationalSubspace(ambient_dim);
}

RationalSubspace RationalSubspace::full(std::size_t ambient_dim) {
    RationalSubspace s(ambient_dim);
    s.basis_ = RationalMatrix::identity(ambient_dim);
    return s;
}

RationalSubspace RationalSubspace::span(const RationalMatrix& vectors) {
    RationalSubspace s(vectors.cols());
    s.basis_ = drop_zero_rows(vectors.rref());
    return s;
}

RationalSubspace RationalSubspace::span_of(std::size_t ambient_dim,
                                           const std::vector<std::vector<Rational>>& vectors) {
    std::vector<Rational> flat;
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw Error("ShapeMismatch", "vector length != ambient dim");
        flat.insert(flat.end(), v.begin(), v.end());
    }
    return span(RationalMatrix::from_rows(vectors.size(), ambient_dim, std::move(flat)));
}

bool RationalSubspace::contains_vector(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw Error("ShapeMismatch", "vector length != ambient dim");
    // Reduce v against the RREF basis.
    std::vector<Rational> w = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < ambient_ && basis_.at(r, lead) == 0) ++lead;
        if (lead == ambient_) continue;
        if (w[lead] != 0) {
            const Rational f = w[lead];  // pivot entries are 1
            for (std::size_t c = lead; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& q) { return q == 0; });
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
    if (ambient_ != other.ambient_) throw Error("ShapeMismatch", "ambient dim mismatch");
    return sum(*this, other) == *this;
}

bool RationalSubspace::operator<(const RationalSubspace& rhs) const {
    if (dim() != rhs.dim()) return dim() < rhs.dim();
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (basis_.at(r, c) != rhs.basis_.at(r, c)) return basis_.at(r, c) < rhs.basis_.at(r, c);
        }
    return false;
}

std::string RationalSubspace::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "span{" << basis_.to_string() << "}";
    return os.str();
}

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error("ShapeMismatch", "ambient dim mismatch");
    return RationalSubspace::span(a.basis().stacked(b.basis()));
}

RationalSubspace intersection(const RationalSubspace& a, const RationalSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error("ShapeMismatch", "ambient dim mismatch");
    // v in A∩B  <=>  v = A^T x = B^T y; read solutions off the kernel of
    // [A^T | -B^T].
    const std::size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
    if (ka == 0 || kb == 0) return RationalSubspace::zero(n);
    RationalMatrix m(n, ka + kb);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < ka; ++r) m.at(i, r) = a.basis().at(r, i);
        for (std::size_t r = 0; r < kb; ++r) m.at(i, ka + r) = -b.basis().at(r, i);
    }
    RationalMatrix ker = m.kernel();
    RationalMatrix vectors(ker.rows(), n);
    for (std::size_t r = 0; r < ker.rows(); ++r)
        for (std::size_t i = 0; i < n; ++i) {
            Rational v = 0;
            for (std::size_t s = 0; s < ka; ++s) v += ker.at(r, s) * a.basis().at(s, i);
            vectors.at(r, i) = v;
        }
    return RationalSubspace::span(vectors);
}

BilinearMap::BilinearMap(std::size_t dim, std::vector<Rational> tensor)
    : dim_(dim), tensor_(std::move(tensor)) {
    if (tensor_.size() != dim * dim * dim)
        throw Error("ShapeMismatch", "bilinear map tensor must have dim^3 entries");
}

BilinearMap BilinearMap::zero(std::size_t dim) {
    return BilinearMap(dim, std::vector<Rational>(dim * dim * dim));
}

std::vector<Rational> BilinearMap::apply(const std::vector<Rational>& x,
                                         const std::vector<Rational>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw Error("ShapeMismatch", "bilinear map argument length mismatch");
    std::vector<Rational> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) out[k] += f * coeff(i, j, k);
        }
    }
    return out;
}

std::vector<Rational> BilinearMap::apply_basis(std::size_t i, std::size_t j) const {
    std::vector<Rational> out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = coeff(i, j, k);
    return out;
}

RationalMatrix BilinearMap::left_operator(std::size_t i) const {
    RationalMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = coeff(i, j, k);
    return m;
}

RationalMatrix BilinearMap::right_operator(std::size_t j) const {
    RationalMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, i) = coeff(i, j, k);
    return m;
}

RationalSubspace stable_closure(const RationalSubspace& seed, const std::vector<ClosureOp>& ops) {
    const std::size_t n = seed.ambient_dim();
    for (const auto& op : ops)
        if (op.map.dim() != n) throw Error("ShapeMismatch", "closure map dim != ambient dim");
    RationalSubspace current = seed;
    while (true) {
        RationalMatrix generated = current.basis();
        for (const auto& op : ops) {
            for (std::size_t r = 0; r < current.dim(); ++r) {
                const std::vector<Rational> s = current.basis_vector(r);
                for (std::size_t x = 0; x < n; ++x) {
                    std::vector<Rational> image;
                    if (op.free_left) {
                        image.assign(n, Rational(0));
                        for (std::size_t j = 0; j < n; ++j) {
                            if (s[j] == 0) continue;
                            for (std::size_t k = 0; k < n; ++k)
                                image[k] += s[j] * op.map.coeff(x, j, k);
                        }
                        generated = generated.stacked(
                            RationalMatrix::from_rows(1, n, std::move(image)));
                    }
                    if (op.free_right) {
                        image.assign(n, Rational(0));
                        for (std::size_t i = 0; i < n; ++i) {
                            if (s[i] == 0) continue;
                            for (std::size_t k = 0; k < n; ++k)
                                image[k] += s[i] * op.map.coeff(i, x, k);
                        }
                        generated = generated.stacked(
                            RationalMatrix::from_rows(1, n, std::move(image)));
                    }
                }
            }
        }
        RationalSubspace next = RationalSubspace::span(generated);
        if (next.dim() == current.dim()) return next;
        current = next;
    }
}

RationalSubspace bilinear_closure(const RationalSubspace& seed,
                                  const std::vector<BilinearMap>& maps) {
    std::vector<ClosureOp> ops;
    ops.reserve(maps.size());
    for (const auto& m : maps) ops.push_back(ClosureOp{m, true, true});
    return stable_closure(seed, ops);
}

}  // namespace bracekit
