#pragma once

#include "bracekit/rational_matrix.hpp"

#include <cstddef>
#include <vector>

namespace bracekit {

/// Subspace of Q^n in canonical form: the basis matrix is in reduced
/// row-echelon form with no zero rows, so equal subspaces have bit-identical
/// representations and operator== is subspace equality.
class RationalSubspace {
public:
    explicit RationalSubspace(std::size_t ambient_dim);  // zero subspace

    static RationalSubspace zero(std::size_t ambient_dim);
    static RationalSubspace full(std::size_t ambient_dim);
    /// Span of the rows of `vectors` (ambient dim = vectors.cols()).
    static RationalSubspace span(const RationalMatrix& vectors);
    static RationalSubspace span_of(std::size_t ambient_dim,
                                    const std::vector<std::vector<Rational>>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }
    std::vector<Rational> basis_vector(std::size_t i) const { return basis_.row(i); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains_vector(const std::vector<Rational>& v) const;
    /// this >= other as sets.
    bool contains(const RationalSubspace& other) const;
    bool operator==(const RationalSubspace& rhs) const = default;
    /// Lexicographic order on (dim, basis entries); used for canonical sorting.
    bool operator<(const RationalSubspace& rhs) const;

    std::string to_string() const;

private:
    std::size_t ambient_ = 0;
    RationalMatrix basis_;  // RREF, no zero rows
};

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b);
RationalSubspace intersection(const RationalSubspace& a, const RationalSubspace& b);

/// Bilinear map Q^n x Q^n -> Q^n given by a tensor: map(e_i, e_j) = sum_k
/// t[i][j][k] e_k.
class BilinearMap {
public:
    BilinearMap(std::size_t dim, std::vector<Rational> tensor);

    static BilinearMap zero(std::size_t dim);

    std::size_t dim() const { return dim_; }

    const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }
    Rational& coeff(std::size_t i, std::size_t j, std::size_t k) {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }

    std::vector<Rational> apply(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
    std::vector<Rational> apply_basis(std::size_t i, std::size_t j) const;

    /// Matrix of y -> map(e_i, y).
    RationalMatrix left_operator(std::size_t i) const;
    /// Matrix of x -> map(x, e_j).
    RationalMatrix right_operator(std::size_t j) const;

    const std::vector<Rational>& tensor() const { return tensor_; }
    bool operator==(const BilinearMap& rhs) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> tensor_;
};

/// Smallest subspace S >= seed with map(x, s) in S and map(s, x) in S for all
/// s in S and all ambient x, for every map. Fixpoint iteration; terminates in
/// <= ambient_dim steps of strict dimension growth.
RationalSubspace bilinear_closure(const RationalSubspace& seed,
                                  const std::vector<BilinearMap>& maps);

/// One-sided variant: per map, which argument slots get saturated with
/// ambient basis vectors while the other slot runs over S.
struct ClosureOp {
    BilinearMap map;
    bool free_left = true;   // close with map(x, s), x ambient
    bool free_right = true;  // close with map(s, x), x ambient
};

RationalSubspace stable_closure(const RationalSubspace& seed,
                                const std::vector<ClosureOp>& ops);

}  // namespace bracekit
