#pragma once

#include <string>
#include <vector>

#include "ultra/metric_space.hpp"

namespace ultra {

/**
 * Dendrogram of an ultrametric space: internal nodes carry the scale at
 * which their children separate (a scaled full simplex on the child
 * blocks), leaves carry point ids. Scales strictly decrease from the root,
 * and d(x,y) equals the scale of the lowest common ancestor.
 */
struct LegoNode {
    Rat scale;                      // meaningful on internal nodes
    std::string leaf;               // meaningful on leaves
    std::vector<LegoNode> children; // empty iff leaf

    bool is_leaf() const { return children.empty(); }
};

struct LegoTree {
    LegoNode root;

    std::size_t leaf_count() const;
};

// Recursively splits an ultrametric space at its top scale until singletons.
LegoTree lego_decompose(const FiniteMetricSpace& m);

// Rebuilds the metric from the tree: d(x,y) = scale of the lowest common
// ancestor. Point order is the tree's leaf order.
FiniteMetricSpace lego_metric(const LegoTree& tree);

// Checks the strictly-decreasing-scale and arity invariants.
bool lego_well_formed(const LegoTree& tree);

std::string to_newick(const LegoTree& tree);
std::string to_dot(const LegoTree& tree);

}  // namespace ultra
