#include "ultra/components.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ultra {

std::vector<std::vector<std::string>> threshold_blocks(const FiniteMetricSpace& m,
                                                       const Rat& threshold,
                                                       bool strict) {
    const std::size_t n = m.size();

    // exact integer comparison d ? threshold as d*L*den ? num*L
    constexpr long long kMaxPart = 1LL << 30;
    bool fast = m.has_scaled() && rat_num(threshold) <= kMaxPart &&
                rat_num(threshold) >= -kMaxPart && rat_den(threshold) <= kMaxPart;
    long long num = 0, den = 1;
    if (fast) {
        num = static_cast<long long>(rat_num(threshold));
        den = static_cast<long long>(rat_den(threshold));
    }

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool join;
            if (fast) {
                long long lhs = m.scaled_dist(i, j) * den;
                long long rhs = num * m.scale_factor();
                join = strict ? lhs < rhs : lhs <= rhs;
            } else {
                const Rat& d = m.dist(i, j);
                join = strict ? d < threshold : d <= threshold;
            }
            if (join) uf.unite(i, j);
        }
    }
    std::map<std::size_t, std::vector<std::string>> by_root;
    for (std::size_t i = 0; i < n; ++i) {
        by_root[uf.find(i)].push_back(m.point(i));
    }
    std::vector<std::vector<std::string>> blocks;
    for (auto& [root, ids] : by_root) {
        std::sort(ids.begin(), ids.end());
        blocks.push_back(std::move(ids));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

ScalePartition r_components(const FiniteMetricSpace& m, const Rat& r) {
    if (r <= 0) throw std::invalid_argument("r_components: scale must be positive");
    return {r, threshold_blocks(m, r, /*strict=*/true)};
}

}  // namespace ultra
