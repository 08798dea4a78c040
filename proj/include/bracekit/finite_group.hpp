#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bracekit {

using Elem = std::uint16_t;
using ElemSet = std::vector<Elem>;  // sorted, duplicate-free

/// Finite group as a Cayley table. Element 0 is always the identity; rows and
/// columns are permutations and associativity holds (enforced by check_group).
class FiniteGroup {
public:
    /// Validates: square, identity at 0, Latin, associative. Throws
    /// Error("NoIdentity"/"NotLatin"/"NotAssociative") naming the first
    /// violating cell or triple.
    static FiniteGroup check_group(const std::vector<std::vector<Elem>>& table);

    std::size_t order() const { return n_; }
    Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem conj(Elem g, Elem a) const { return mul(mul(g, a), inv(g)); }

    /// Smallest k >= 1 with a^k = 0.
    std::size_t element_order(Elem a) const;

    bool is_abelian() const;
    const std::vector<Elem>& flat_table() const { return table_; }
    std::vector<std::vector<Elem>> table_rows() const;

    /// Opposite group: a *op b = b * a.
    FiniteGroup opposite() const;

    bool operator==(const FiniteGroup& rhs) const = default;

private:
    FiniteGroup() = default;
    std::size_t n_ = 0;
    std::vector<Elem> table_;    // n*n, row-major
    std::vector<Elem> inverse_;  // n
};

/// Group homomorphism given by its value table.
struct GroupHom {
    std::vector<Elem> map;

    Elem operator()(Elem x) const { return map[x]; }
    bool operator==(const GroupHom& rhs) const = default;
    bool operator<(const GroupHom& rhs) const { return map < rhs.map; }
};

/// Element of Hol(G) = G x Aut(G) with (x,f)(y,g) = (x*f(y), f o g).
struct HolomorphElement {
    Elem translation;
    std::uint32_t automorphism;  // index into the automorphism list

    bool operator==(const HolomorphElement& rhs) const = default;
    bool operator<(const HolomorphElement& rhs) const {
        if (translation != rhs.translation) return translation < rhs.translation;
        return automorphism < rhs.automorphism;
    }
};

/// Complete, duplicate-free list of automorphisms, sorted lexicographically by
/// map array. Search runs over images of a greedy minimal generating set with
/// homomorphism pruning.
std::vector<GroupHom> automorphisms(const FiniteGroup& g);

/// Hol(G) materialized as a Cayley table of order n * |Aut(G)|. Element 0 is
/// (0, id). Index layout: translation * |Aut| + automorphism, relabeled so the
/// identity lands at 0.
FiniteGroup holomorph(const FiniteGroup& g);

ElemSet generated_subgroup(const FiniteGroup& g, const ElemSet& gens);
bool is_subgroup(const FiniteGroup& g, const ElemSet& s);
bool is_normal(const FiniteGroup& g, const ElemSet& s);
ElemSet normal_closure(const FiniteGroup& g, const ElemSet& gens);
ElemSet commutator_subgroup(const FiniteGroup& g, const ElemSet& a, const ElemSet& b);
std::vector<ElemSet> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_abstractly_simple(const FiniteGroup& g);
ElemSet center(const FiniteGroup& g);

/// All subgroups, found by closing subgroup-extensions one element at a time;
/// sorted by (size, elements).
std::vector<ElemSet> all_subgroups(const FiniteGroup& g);

/// Stable under every automorphism.
bool is_characteristic(const FiniteGroup& g, const ElemSet& s,
                       const std::vector<GroupHom>& auts);

/// Generator-image backtracking with invariant screening.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Greedy minimal generating set: scan elements in index order, keep those
/// that enlarge the generated subgroup.
ElemSet greedy_generators(const FiniteGroup& g);

// Constructions ------------------------------------------------------------

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(std::size_t n);   // n <= 5
FiniteGroup alternating_group(std::size_t n);  // n <= 5
FiniteGroup dihedral_group(std::size_t n);     // order 2n, n >= 1
FiniteGroup quaternion_group();                // Q8

/// Small-catalog name for reporting: abelian groups get their invariant-factor
/// name ("C6", "C2xC4"); nonabelian ones are probed against S3..S5, A4, A5,
/// dihedral and Q8 (and direct products with small cyclics are not attempted).
/// Falls back to "unrecognized_order_N".
std::string identify_group(const FiniteGroup& g);

}  // namespace bracekit
