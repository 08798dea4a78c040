#pragma once

#include "bracekit/finite_group.hpp"
#include "bracekit/group_law.hpp"
#include "bracekit/lie_algebra.hpp"
#include "bracekit/post_lie.hpp"
#include "bracekit/skew_brace.hpp"

#include <string>
#include <utility>

namespace bracekit::io {

/// Whole-file read; throws Error("Io").
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// First significant word of the text: "group", "brace", "liealg", "postlie",
/// "grouplaw" or "bracelaw".
std::string detect_kind(const std::string& text);

// '#' starts a comment anywhere; blank lines are skipped. Basis indices in
// liealg/postlie files are 1-based.

FiniteGroup read_group(const std::string& text);
FiniteSkewBrace read_brace(const std::string& text);
LieAlgebra read_liealg(const std::string& text);
PostLieAlgebra read_postlie(const std::string& text);
GroupLaw read_grouplaw(const std::string& text);
std::pair<GroupLaw, GroupLaw> read_bracelaw(const std::string& text);

std::string write_group(const FiniteGroup& g);
std::string write_brace(const FiniteSkewBrace& b);
std::string write_liealg(const LieAlgebra& L);
std::string write_postlie(const LieAlgebra& dot, const BilinearMap& triangle);

}  // namespace bracekit::io
