#pragma once

#include <string>
#include <string_view>

#include "monomod/frame.hpp"

namespace monomod {

// Line format, '#' starts a comment:
//   worlds a b
//   rel a : a b        a ≺ {a,b}, upward closed
//   val p : a          p true exactly at a
// Neighborhood form replaces rel lines with
//   delta a b : a      δ({a,b}) = {a}; unlisted sets map to ∅
MNModel parseModel(std::string_view text);
MNFrame parseFrame(std::string_view text);  // val lines are ignored
NeighborhoodModel parseNeighborhoodModel(std::string_view text);

// True when the text contains delta lines.
bool isNeighborhoodText(std::string_view text);

std::string writeFrame(const MNFrame& fr);
std::string writeModel(const MNModel& m);
std::string writeNeighborhoodModel(const NeighborhoodModel& m);

std::string readFile(const std::string& path);  // throws InputError

}  // namespace monomod
