#pragma once

#include <map>
#include <optional>
#include <string>

#include "ultra/metric_space.hpp"

namespace ultra {

// Backtracking search for an isometric embedding of x into y over
// distance-compatible assignments. Returns the embedding found first in
// lexicographic candidate order, or nullopt after exhausting the search
// space (a certificate that no embedding exists). Guarded at |y| <= 60.
std::optional<std::map<std::string, std::string>> oracle_embed_search(
    const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace ultra
