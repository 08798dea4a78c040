#pragma once

#include "bracekit/finite_group.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bracekit {

/// Two compatible group laws on one element set, sharing identity 0 and
/// satisfying a o (b . c) = (a o b) . a^{-1} . (a o c) with inverses taken in
/// the dot group.
class FiniteSkewBrace {
public:
    /// Validates the compatibility identity over all triples. Throws
    /// Error("IdentityMismatch") on order mismatch and
    /// Error("BraceIdentityViolation") naming the first violating triple.
    static FiniteSkewBrace verify_brace(FiniteGroup dot, FiniteGroup circ);

    std::size_t order() const { return dot_.order(); }
    const FiniteGroup& dot() const { return dot_; }
    const FiniteGroup& circ() const { return circ_; }

    /// lambda_a(x) = a^{-1} . (a o x); an automorphism of dot for every a.
    Elem lambda(Elem a, Elem x) const {
        return dot_.mul(dot_.inv(a), circ_.mul(a, x));
    }
    std::vector<Elem> lambda_map(Elem a) const;

    /// x * y = lambda_x(y) . y^{-1}.
    Elem star(Elem x, Elem y) const {
        return dot_.mul(lambda(x, y), dot_.inv(y));
    }

    bool operator==(const FiniteSkewBrace& rhs) const = default;

private:
    FiniteSkewBrace(FiniteGroup dot, FiniteGroup circ)
        : dot_(std::move(dot)), circ_(std::move(circ)) {}
    FiniteGroup dot_;
    FiniteGroup circ_;
};

enum class TrivialityClass { trivial, almost_trivial, neither };

std::string to_string(TrivialityClass c);

/// trivial iff circ = dot; almost_trivial iff circ is the opposite of dot and
/// they differ.
TrivialityClass classify_triviality(const FiniteSkewBrace& b);

struct IdealCheck {
    bool ok = false;
    /// empty when ok; otherwise one of "not_subgroup", "not_normal_dot",
    /// "not_normal_circ", "not_lambda_stable" plus a witness.
    std::string failure;
};

IdealCheck is_ideal(const FiniteSkewBrace& b, const ElemSet& s);

/// All ideals, sorted by (size, elements). Throws
/// Error("OrderBoundExceeded") above the bound.
std::vector<ElemSet> all_ideals(const FiniteSkewBrace& b, std::size_t order_bound = 60);

/// Brace structure on cosets; the projection is a morphism for both laws.
/// Throws Error("NotAnIdeal") when the set fails is_ideal.
FiniteSkewBrace quotient(const FiniteSkewBrace& b, const ElemSet& ideal);

/// Smallest ideal containing the given elements: fixpoint of subgroup closure,
/// dot-normal closure, circ-normal closure and lambda-orbit closure.
ElemSet smallest_ideal_containing(const FiniteSkewBrace& b, ElemSet generators);

struct BraceDerivedSeries {
    std::vector<ElemSet> chain;  // descending, last entry stable or {0}
    bool solvable = false;
};

/// partial^0 = G, partial^{n+1} = smallest ideal containing dot-commutators,
/// circ-commutators and star values of pairs from partial^n.
BraceDerivedSeries brace_derived_series(const FiniteSkewBrace& b);

struct CriterionChecks {
    bool char_star = false;       // h * G contained in h
    bool fund_lemma_lhs = false;  // h acts trivially on dot/h via lambda
    bool fund_lemma_rhs = false;  // h is an ideal
};

/// h must be a characteristic subgroup of dot (throws
/// Error("NotCharacteristic") otherwise). The two fund_lemma flags are
/// computed along independent routes and must always agree.
CriterionChecks criterion_checks(const FiniteSkewBrace& b, const ElemSet& h);

/// The set {(a, lambda_a)} inside Hol(dot); automorphism indices refer to
/// automorphisms(dot) in canonical order.
std::vector<HolomorphElement> regular_embedding(const FiniteSkewBrace& b);

/// Rebuilds the brace from an embedding: a o b := a . phi_a(b).
FiniteSkewBrace brace_from_embedding(const FiniteGroup& dot,
                                     const std::vector<HolomorphElement>& embedding,
                                     const std::vector<GroupHom>& auts);

/// One bijection that is an isomorphism for both tables simultaneously;
/// generator-image backtracking on dot with circ-compatibility pruning.
bool braces_isomorphic(const FiniteSkewBrace& a, const FiniteSkewBrace& b);

}  // namespace bracekit
