#pragma once

#include "bracekit/subspace.hpp"

#include <vector>

namespace bracekit {

/// Lie algebra by rational structure constants: [e_i, e_j] = sum_k c[i][j][k] e_k.
/// The constructor enforces antisymmetry; run check_jacobi for the rest.
class LieAlgebra {
public:
    explicit LieAlgebra(BilinearMap bracket);

    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return bracket_.dim(); }
    const BilinearMap& bracket() const { return bracket_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return bracket_.coeff(i, j, k);
    }

    std::vector<Rational> bracket_of(const std::vector<Rational>& x,
                                     const std::vector<Rational>& y) const {
        return bracket_.apply(x, y);
    }

    /// Matrix of ad(e_i): column j holds [e_i, e_j].
    RationalMatrix ad(std::size_t i) const { return bracket_.left_operator(i); }

    bool is_abelian() const;
    bool operator==(const LieAlgebra& rhs) const = default;

private:
    BilinearMap bracket_;
};

/// Throws Error("JacobiViolation", "(i,j,k)") at the first violating basis
/// triple (1-based indices in the message).
void check_jacobi(const LieAlgebra& L);

std::vector<RationalSubspace> derived_series(const LieAlgebra& L);
std::vector<RationalSubspace> lower_central_series(const LieAlgebra& L);
RationalSubspace center(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);

/// K(i,j) = trace(ad e_i o ad e_j).
RationalMatrix killing_form(const LieAlgebra& L);

/// Cartan criterion: nondegenerate Killing form (characteristic 0).
bool is_semisimple(const LieAlgebra& L);

/// Smallest ideal containing the seed (bilinear closure under the bracket).
RationalSubspace ideal_generated(const LieAlgebra& L, const RationalSubspace& seed);

struct SubspaceList {
    std::vector<RationalSubspace> subspaces;  // sorted; always holds 0 and the full space
    bool continuous_family = false;           // an infinite family exists beyond the list
};

/// All subspaces invariant under every matrix of the family, complete for
/// ambient dim <= 3: lines are common eigenvectors (rational eigenvalue
/// search on characteristic polynomials), planes in dim 3 come from the
/// transposed family (invariant hyperplanes). Throws Error("DimTooLarge") and
/// Error("IncompleteOverRationals") when a relevant irrational eigenvalue
/// blocks completeness.
SubspaceList invariant_subspaces_lowdim(std::size_t dim,
                                        const std::vector<RationalMatrix>& family);

/// Complete ideal list for dim <= 3 (invariant subspaces of the ad family).
SubspaceList all_ideals_lowdim(const LieAlgebra& L);

/// dim <= 3: complete-list route; otherwise semisimple with one summand.
bool is_simple_algebra(const LieAlgebra& L);

struct SummandCount {
    std::size_t count = 0;   // exact when !non_split, otherwise a lower bound
    bool non_split = false;  // centroid has irreducible factors of degree > 1
};

/// Number of simple summands of a semisimple algebra via the idempotent
/// decomposition of the centroid over the rationals. Throws
/// Error("NotSemisimple") when the Killing form is degenerate.
SummandCount simple_summand_count(const LieAlgebra& L);

// Named constructions -------------------------------------------------------

/// Basis {h, e, f}: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// Cyclic constants [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LieAlgebra so3();
/// [e1,e2] = e2, [e1,e3] = -e3, [e2,e3] = 0.
LieAlgebra solvable_diag3();
/// Block direct sum.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace bracekit
