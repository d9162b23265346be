#pragma once

#include <map>
#include <string>
#include <vector>

#include "ultra/coarse_union.hpp"
#include "ultra/fu.hpp"
#include "ultra/metric_space.hpp"
#include "ultra/resolution.hpp"

namespace ultra {

// Enumeration of the finite sets of non-negative integers containing 0 (and
// at least one positive value): positive g belongs to the n-th set iff bit
// g-1 of n is set. Mutually inverse with index_dset.
DSet dset_index(long long n);
long long index_dset(const DSet& d);

// Cantor-diagonal enumeration of pairs (m, n), m, n >= 1, for block i >= 1.
std::pair<long long, long long> pu_block_pair(long long i);

struct PUBlock {
    long long index = 0;  // 1-based position in the enumeration
    long long m = 1;      // point budget of the FU block
    long long n = 1;      // D-set index
    DSet D;
    Rat diam;    // 0 when m == 1, max(D) otherwise
    Rat radius;  // r_i = i + sum of diameters up to i
};

PUBlock pu_block_info(long long i);  // cheap, no materialization

/**
 * Finite prefix of the proper universal space PU: blocks FU(m, D_n) in
 * enumeration order placed at radii r_i = i + sum of the first i diameters,
 * assembled over the max ultrametric on the radii. Block points are renamed
 * "<i>/<fu id>".
 */
struct PUPrefix {
    long long block_count = 0;
    std::vector<PUBlock> blocks;
    std::vector<FUSpace> block_spaces;
    Resolution resolution;   // total over the radius base
    CoarseUnion union_view;  // the same total viewed as a coarse union
};

// Guarded by a total materialized size of 10^4 points.
PUPrefix build_PU_prefix(long long block_count);

struct PUEmbedding {
    std::vector<PUBlock> chosen;  // strictly increasing block indices, one per part
    std::map<std::string, std::pair<long long, std::string>> point_map;
    DistortionTable distortion;
};

// Places each part of a union (finite integral ultrametric parts) into an
// FU block whose budget and value set fit, with strictly increasing block
// indices; parts embed exactly via embed_into_FU.
PUEmbedding embed_into_PU(const CoarseUnion& u);

// Finite truncation of the non-proper counterexample family: for each
// n <= levels one part with `points_per_part` points pairwise at distance
// n+1, attached by coarse_union.
CoarseUnion counterexample_family(long long levels, long long points_per_part);

}  // namespace ultra
