#include "oracles.hpp"

#include <queue>
#include <stdexcept>

#include "ultra/rational.hpp"

namespace testsupport {

using ultra::FiniteMetricSpace;
using ultra::Rat;

namespace {

// component labels of the graph with edges d < r
std::vector<std::size_t> bfs_components(const FiniteMetricSpace& y, const Rat& r) {
    const std::size_t n = y.size();
    std::vector<std::size_t> label(n, n);
    std::size_t next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] != n) continue;
        std::queue<std::size_t> q;
        q.push(s);
        label[s] = next;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t w = 0; w < n; ++w) {
                if (label[w] == n && y.dist(v, w) < r) {
                    label[w] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace

FiniteMetricSpace chain_oracle(const std::vector<std::string>& domain,
                               const std::map<std::string, std::string>& f,
                               const FiniteMetricSpace& target) {
    const std::size_t n = domain.size();
    std::vector<std::size_t> image;
    for (const auto& x : domain) image.push_back(target.index_of(f.at(x)));

    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    std::size_t unresolved = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) ++unresolved;
    }

    long long r_max = static_cast<long long>(ultra::rat_floor(target.diameter())) + 2;
    for (long long r = 1; r <= r_max && unresolved > 0; ++r) {
        auto label = bfs_components(target, Rat(r));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (d[i][j] != 0) continue;
                if (label[image[i]] == label[image[j]]) {
                    d[i][j] = Rat(r);
                    d[j][i] = Rat(r);
                    --unresolved;
                }
            }
        }
    }
    if (unresolved > 0) {
        throw std::logic_error("chain_oracle: some pairs never connected");
    }
    // identical points stay at 0; distinct points with equal images got r = 1
    for (std::size_t i = 0; i < n; ++i) d[i][i] = Rat(0);
    return FiniteMetricSpace(domain, std::move(d));
}

FiniteMetricSpace chain_oracle_identity(const FiniteMetricSpace& m) {
    std::map<std::string, std::string> id;
    for (const auto& p : m.points()) id[p] = p;
    return chain_oracle(m.points(), id, m);
}

}  // namespace testsupport
