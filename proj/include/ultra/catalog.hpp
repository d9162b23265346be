#pragma once

#include <string>
#include <vector>

#include "ultra/lego.hpp"
#include "ultra/metric_space.hpp"

namespace ultra {

/**
 * One representative per isometry class of D-ultrametric spaces with at most
 * m points. Classes correspond exactly to dendrogram shapes with strictly
 * decreasing scales from D, so enumeration and dedup run over canonically
 * sorted scale-labeled trees. Entry point ids are "q0", "q1", ...
 */
struct UltraCatalog {
    long long m = 1;
    DSet D;
    std::vector<FiniteMetricSpace> spaces;
    std::vector<std::string> encodings;  // canonical tree encodings, aligned
};

// Canonical encoding of a dendrogram: leaves "*", internal nodes
// "(<scale>|<children sorted>)". Two ultrametric spaces are isometric iff
// their canonical encodings agree.
std::string canonical_encoding(const LegoTree& tree);

// Guarded by C(m-1+d, d) <= 10^4 (the matching FU size).
UltraCatalog enumerate_ultrametrics(long long m, const DSet& D);

}  // namespace ultra
