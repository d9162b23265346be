#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "ultra/metric_space.hpp"

namespace ultra {

struct UnionFind {
    std::vector<std::size_t> parent;
    std::vector<std::size_t> rank;

    explicit UnionFind(std::size_t n) : parent(n), rank(n, 0) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
        return true;
    }
};

// r-components: x ~ y when joined by a chain with all steps of distance
// strictly below r. Requires r > 0.
ScalePartition r_components(const FiniteMetricSpace& m, const Rat& r);

// Blocks of point ids grouped by a union-find over edges satisfying a
// threshold; blocks ordered by least member id, members sorted by id.
std::vector<std::vector<std::string>> threshold_blocks(const FiniteMetricSpace& m,
                                                       const Rat& threshold,
                                                       bool strict);

}  // namespace ultra
