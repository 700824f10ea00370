#pragma once

#include <iosfwd>
#include <string>

#include "uncross/affine.hpp"
#include "uncross/poset.hpp"
#include "uncross/report.hpp"

namespace uncross {

// { "n", "includesBottom", "elements": [{"id","partner","rank"}], "covers" }
// with ids in canonical enumeration order; partner is null for the bottom.
std::string poset_to_json(const GradedPoset& P);

// Rank-aligned Hasse diagram, one node per element labeled by its partner
// sequence, one edge per cover, deterministic order.
std::string poset_to_dot(const GradedPoset& P);

std::string matching_to_json(const Matching& m);
Matching matching_from_json(const std::string& text);

std::string window_to_json(const AffinePermutation& g);
AffinePermutation window_from_json(const std::string& text);

}  // namespace uncross
