#include "ultra/embed_search.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ultra {

std::optional<std::map<std::string, std::string>> oracle_embed_search(
    const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    if (y.size() > 60) {
        throw std::invalid_argument("oracle_embed_search: target exceeds the size guard");
    }
    if (x.size() > y.size()) return std::nullopt;

    std::vector<std::string> xs = x.points();
    std::sort(xs.begin(), xs.end());
    std::vector<std::string> ys = y.points();
    std::sort(ys.begin(), ys.end());

    std::vector<std::size_t> xi, yi;
    for (const auto& id : xs) xi.push_back(x.index_of(id));
    for (const auto& id : ys) yi.push_back(y.index_of(id));

    std::vector<std::size_t> assignment(xs.size());
    std::vector<bool> used(ys.size(), false);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == xs.size()) return true;
        for (std::size_t c = 0; c < ys.size(); ++c) {
            if (used[c]) continue;
            bool compatible = true;
            for (std::size_t p = 0; p < depth; ++p) {
                if (x.dist(xi[depth], xi[p]) != y.dist(yi[c], yi[assignment[p]])) {
                    compatible = false;
                    break;
                }
            }
            if (!compatible) continue;
            assignment[depth] = c;
            used[c] = true;
            if (extend(depth + 1)) return true;
            used[c] = false;
        }
        return false;
    };

    if (!extend(0)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < xs.size(); ++i) out[xs[i]] = ys[assignment[i]];
    return out;
}

}  // namespace ultra
