#pragma once

#include "bracekit/skew_brace.hpp"

#include <functional>

namespace bracekit {

/// Enumerates skew braces with the given additive group: one per regular
/// subgroup of Hol(additive). A regular subgroup holds exactly one element
/// (a, phi_a) per translation a, and the recovered law is a o b = a . phi_a(b).
/// The search is depth-first over holomorph elements ordered by translation:
/// extend the partial subgroup by one element at the first uncovered
/// translation, close under products, prune on translation clashes and on
/// Lagrange (closure size must divide the order).
///
/// Braces are visited in canonical DFS order; every one passes verify_brace.
/// Throws Error("OrderBoundExceeded") above the bound.
void enumerate_braces_visit(const FiniteGroup& additive,
                            const std::function<void(const FiniteSkewBrace&)>& visit,
                            std::size_t order_bound = 60);

/// Materialized variant, sorted by circ table (duplicate-free by construction).
std::vector<FiniteSkewBrace> enumerate_braces(const FiniteGroup& additive,
                                              std::size_t order_bound = 60);

/// Number of braces without materializing them.
std::size_t count_braces(const FiniteGroup& additive, std::size_t order_bound = 60);

}  // namespace bracekit
