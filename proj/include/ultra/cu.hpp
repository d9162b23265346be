#pragma once

#include <map>
#include <string>
#include <vector>

#include "ultra/chain_metric.hpp"
#include "ultra/metric_space.hpp"

namespace ultra {

/**
 * Address of a point of the countable universal D-ultrametric space CU(D):
 * one non-negative coordinate per positive scale, most significant scale
 * first. Two distinct addresses are at the largest scale where their
 * coordinates differ.
 */
struct CUAddress {
    DSet D;
    std::vector<long long> coords;  // length = number of positive scales

    bool operator==(const CUAddress& other) const {
        return D == other.D && coords == other.coords;
    }
};

Rat cu_distance(const CUAddress& a, const CUAddress& b);

/**
 * Point of the countable universal integral ultrametric space CU: a level i
 * plus an address in CU({0..i}). Cross-level distance is max(levels).
 */
struct CUPoint {
    long long level = 0;
    CUAddress address;  // over {0,...,level}
};

Rat cu_global_distance(const CUPoint& p, const CUPoint& q);

// Exact isometric embedding of a D-ultrametric space into CU(D): recursive
// refinement by the classes at each scale, coordinates assigned in order of
// least class member. Verified pairwise before returning.
std::map<std::string, CUAddress> embed_into_CU_D(const FiniteMetricSpace& x,
                                                 const DSet& D);

struct CUEmbedding {
    DiscretizeResult discretization;
    std::map<std::string, CUPoint> net_map;   // net id -> CU point (exact isometry)
    std::map<std::string, CUPoint> full_map;  // every point via its nearest net point
    Rat max_net_gap;                          // max distance to the nearest net point
};

// Coarse embedding pipeline into CU: discretize, resolve radially around the
// least net point, embed each radial fiber into its level. The restriction
// to the net is an exact isometry for the chain metric; other points ride
// through their nearest net point with the reported additive gap.
CUEmbedding embed_into_CU(const FiniteMetricSpace& m);

}  // namespace ultra
