#pragma once

#include "bracekit/lie_algebra.hpp"

#include <string>
#include <vector>

namespace bracekit {

/// [xi,eta]_circ := [xi,eta]_dot + xi |> eta - eta |> xi.
LieAlgebra sub_adjacent(const LieAlgebra& dot, const BilinearMap& triangle);

/// Base bracket plus the |> tensor; the sub-adjacent circ bracket is derived
/// and cached at construction.
class PostLieAlgebra {
public:
    PostLieAlgebra(LieAlgebra dot, BilinearMap triangle);

    std::size_t dim() const { return dot_.dim(); }
    const LieAlgebra& dot() const { return dot_; }
    const BilinearMap& triangle() const { return triangle_; }
    const LieAlgebra& circ() const { return circ_; }

    /// Matrix of eta -> e_i |> eta.
    RationalMatrix triangle_operator(std::size_t i) const {
        return triangle_.left_operator(i);
    }

    bool operator==(const PostLieAlgebra& rhs) const = default;

private:
    LieAlgebra dot_;
    BilinearMap triangle_;
    LieAlgebra circ_;
};

/// Verifies the axioms on all basis triples (multilinearity makes this
/// sufficient): (i) the circ/dot defect is the antisymmetrized triangle,
/// (ii) each xi |> . is a derivation of the dot bracket, (iii) the
/// composition law [xi,eta]_circ |> zeta = xi|>(eta|>zeta) - eta|>(xi|>zeta).
/// Requires dot to pass check_jacobi first; throws
/// Error("AxiomViolation", "axiom (ii) at (i,j,k)") on the first failure.
void check_postlie(const PostLieAlgebra& P);

struct InfinitesimalIdealReport {
    RationalSubspace subspace;
    bool dot_ideal = false;
    bool circ_ideal = false;
    bool triangle_stable = false;  // x |> v stays in the subspace for all ambient x

    bool all() const { return dot_ideal && circ_ideal && triangle_stable; }
};

InfinitesimalIdealReport brace_ideal_test(const PostLieAlgebra& P, const RationalSubspace& s);

/// True iff no proper nonzero subspace is an ideal for both brackets and
/// triangle-stable. Complete for dim <= 3 (invariant-subspace search over the
/// combined operator family).
bool is_simple_brace_infinitesimal(const PostLieAlgebra& P);

struct InfinitesimalDerivedSeries {
    std::vector<RationalSubspace> chain;
    bool solvable = false;
};

/// partial^0 = g; next = smallest dot-ideal, circ-ideal, triangle-stable
/// subspace containing [I,I]_dot, [I,I]_circ and I |> I.
InfinitesimalDerivedSeries brace_derived_series_infinitesimal(const PostLieAlgebra& P);

enum class RigidityCase { case_i, case_ii, violation };

struct RigidityResult {
    RigidityCase result;
    std::string detail;
};

/// For a post-Lie structure whose circ algebra is simple: case (i) triangle
/// identically zero (circ = dot), case (ii) triangle = -dot bracket
/// (circ = -dot). Anything else is reported as a violation, never silently
/// accepted. Throws Error("CircNotSimple") when the precondition fails.
RigidityResult rigidity_classify(const PostLieAlgebra& P);

/// The worked 3-dimensional example: abelian dot with
/// e1|>e2 = e2, e1|>e3 = -e3, e2|>e3 = e1, e3|>e2 = e1.
PostLieAlgebra a11_post_lie();

}  // namespace bracekit
