#pragma once

#include "bracekit/finite_group.hpp"
#include "bracekit/group_law.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bracekit {

/// Named finite groups: c1..c12, c2xc2, c2xc4, c2xc2xc2, c3xc3, c3xc2cubed,
/// s3, s4, a4, a5, d4, d5, d6, q8. Throws Error("UnknownPreset").
FiniteGroup group_preset(const std::string& name);
std::vector<std::string> group_preset_names();

/// Named group laws on R^n: abelian_1..abelian_4, affine2d_circ,
/// a1_1_circ (the (X,Y,Z) chart), a1_1_circ_semidirect (the (x,y,z) chart),
/// a1_1_dot_semidirect (addition pushed through the chart change).
GroupLaw law_preset(const std::string& name);
std::vector<std::string> law_preset_names();

/// Named brace-law pairs (dot, circ): a1_1_model, a1_1_semidirect, affine2d,
/// affine2d_almost_trivial (the opposite pair), abelian_2, abelian_3.
std::pair<GroupLaw, GroupLaw> brace_law_preset(const std::string& name);
std::vector<std::string> brace_law_preset_names();

}  // namespace bracekit
