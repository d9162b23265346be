#include "generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace testsupport {

using ultra::FiniteMetricSpace;
using ultra::Rat;

namespace {

// split ids into k non-empty chunks after a shuffle
std::vector<std::vector<std::string>> random_partition(Rng& rng,
                                                       std::vector<std::string> ids,
                                                       std::size_t k) {
    for (std::size_t i = ids.size(); i > 1; --i) {
        std::swap(ids[i - 1], ids[rng.below(i)]);
    }
    std::set<std::size_t> cuts;
    while (cuts.size() < k - 1) {
        cuts.insert(1 + rng.below(ids.size() - 1));
    }
    std::vector<std::vector<std::string>> parts;
    std::size_t start = 0;
    for (std::size_t cut : cuts) {
        parts.emplace_back(ids.begin() + start, ids.begin() + cut);
        start = cut;
    }
    parts.emplace_back(ids.begin() + start, ids.end());
    return parts;
}

}  // namespace

FiniteMetricSpace random_ultrametric(Rng& rng, std::size_t n_points,
                                     const std::vector<Rat>& scale_pool) {
    if (n_points == 0) throw std::invalid_argument("need at least one point");
    if (n_points > 1 && scale_pool.empty()) {
        throw std::invalid_argument("need scales for more than one point");
    }
    std::vector<Rat> pool = scale_pool;  // ascending
    std::sort(pool.begin(), pool.end());

    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n_points; ++i) ids.push_back("g" + std::to_string(i));

    const std::size_t n = n_points;
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[ids[i]] = i;

    std::function<void(std::vector<std::string>, std::size_t)> build =
        [&](std::vector<std::string> members, std::size_t scale_count) {
            if (members.size() == 1) return;
            std::size_t si = rng.below(scale_count);  // scales below index si for children
            Rat scale = pool[si];
            std::size_t max_parts = std::min<std::size_t>(members.size(), 4);
            std::size_t k = si == 0 ? members.size() : 2 + rng.below(max_parts - 1);
            if (k > members.size()) k = members.size();
            auto parts = random_partition(rng, members, k);
            if (si == 0) {
                // no smaller scale available: every child must be a singleton
                parts.clear();
                for (const auto& id : members) parts.push_back({id});
            }
            for (std::size_t a = 0; a < parts.size(); ++a) {
                for (std::size_t b = a + 1; b < parts.size(); ++b) {
                    for (const auto& x : parts[a]) {
                        for (const auto& y : parts[b]) {
                            d[index[x]][index[y]] = scale;
                            d[index[y]][index[x]] = scale;
                        }
                    }
                }
            }
            for (auto& part : parts) build(std::move(part), si);
        };
    build(ids, pool.size());
    return FiniteMetricSpace(std::move(ids), std::move(d));
}

FiniteMetricSpace random_integral_ultrametric(Rng& rng, std::size_t n_points,
                                              long long max_value) {
    std::vector<Rat> pool;
    for (long long v = 1; v <= max_value; ++v) pool.emplace_back(v);
    return random_ultrametric(rng, n_points, pool);
}

FiniteMetricSpace random_rational_ultrametric(Rng& rng, std::size_t n_points) {
    std::set<Rat> pool;
    while (pool.size() < 6) {
        long long p = 1 + static_cast<long long>(rng.below(24));
        long long q = 1 + static_cast<long long>(rng.below(4));
        pool.insert(Rat(p, q));
    }
    return random_ultrametric(rng, n_points, {pool.begin(), pool.end()});
}

FiniteMetricSpace random_metric(Rng& rng, std::size_t n_points, long long max_numerator) {
    const std::size_t n = n_points;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("m" + std::to_string(i));

    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            long long p = 1 + static_cast<long long>(rng.below(max_numerator));
            long long q = 1 + static_cast<long long>(rng.below(3));
            d[i][j] = Rat(p, q);
            d[j][i] = d[i][j];
        }
    }
    // exact min-plus closure restores the triangle inequality
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || i == k || j == k) continue;
                Rat via = d[i][k] + d[k][j];
                if (via < d[i][j]) {
                    d[i][j] = via;
                    d[j][i] = via;
                }
            }
        }
    }
    return FiniteMetricSpace(std::move(ids), std::move(d));
}

}  // namespace testsupport
