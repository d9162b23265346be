#pragma once

#include <map>
#include <string>
#include <vector>

#include "ultra/metric_space.hpp"

namespace ultra {

struct ChainMetricResult {
    FiniteMetricSpace space;  // on the domain points, integer distances
    bool injective;           // whether the defining map was injective
};

// Induced integral ultrametric of a map f : X -> Y: for x != y the distance
// is the least integer r >= 1 such that f(x) and f(y) are joined in Y by a
// chain with all steps strictly below r. Distinct points with f(x) = f(y)
// get distance 1; with require_injective set such maps are rejected.
//
// Computed through a minimum spanning tree of Y: the minimax path value
// between two points equals the largest edge on their tree path, and the
// chain distance is the least integer exceeding it.
ChainMetricResult chain_ultrametric(const std::vector<std::string>& domain,
                                    const std::map<std::string, std::string>& f,
                                    const FiniteMetricSpace& target,
                                    bool require_injective = false);

// Identity map convenience.
ChainMetricResult chain_ultrametric_identity(const FiniteMetricSpace& m);

// All-pairs minimax path values (max edge minimized over paths), by merging
// components in Kruskal order.
std::vector<std::vector<Rat>> minimax_path_values(const FiniteMetricSpace& m);

// Maximal subset with pairwise distances > r, greedy over ids in
// lexicographic order.
std::vector<std::string> separated_net(const FiniteMetricSpace& m, const Rat& r = Rat(1));

struct DiscretizeResult {
    std::vector<std::string> net;                   // ids, in greedy (lexicographic) order
    FiniteMetricSpace ultrametric;                  // integral chain metric on the net
    std::map<std::string, std::string> nearest_net; // every point -> nearest net point
};

// Replaces a metric space by a 1-separated net carrying the integral chain
// ultrametric, with chains running through the full space.
DiscretizeResult discretize(const FiniteMetricSpace& m);

}  // namespace ultra
