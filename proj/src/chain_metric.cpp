#include "ultra/chain_metric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ultra/components.hpp"

namespace ultra {

std::vector<std::vector<Rat>> minimax_path_values(const FiniteMetricSpace& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> mm(n, std::vector<Rat>(n, Rat(0)));

    struct Edge {
        std::size_t i, j;
    };
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        if (m.dist(a.i, a.j) != m.dist(b.i, b.j)) return m.dist(a.i, a.j) < m.dist(b.i, b.j);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    UnionFind uf(n);
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i] = {i};

    for (const Edge& e : edges) {
        std::size_t ra = uf.find(e.i);
        std::size_t rb = uf.find(e.j);
        if (ra == rb) continue;
        const Rat& w = m.dist(e.i, e.j);
        for (std::size_t a : members[ra]) {
            for (std::size_t b : members[rb]) {
                mm[a][b] = w;
                mm[b][a] = w;
            }
        }
        uf.unite(ra, rb);
        std::size_t root = uf.find(ra);
        std::size_t other = root == ra ? rb : ra;
        members[root].insert(members[root].end(), members[other].begin(),
                             members[other].end());
        members[other].clear();
    }
    return mm;
}

ChainMetricResult chain_ultrametric(const std::vector<std::string>& domain,
                                    const std::map<std::string, std::string>& f,
                                    const FiniteMetricSpace& target,
                                    bool require_injective) {
    std::vector<std::size_t> image_index;
    image_index.reserve(domain.size());
    std::set<std::size_t> seen;
    bool injective = true;
    for (const auto& x : domain) {
        auto it = f.find(x);
        if (it == f.end()) {
            throw std::invalid_argument("chain_ultrametric: no image for '" + x + "'");
        }
        std::size_t idx = target.index_of(it->second);
        if (!seen.insert(idx).second) injective = false;
        image_index.push_back(idx);
    }
    if (require_injective && !injective) {
        throw std::invalid_argument(
            "chain_ultrametric: map is not injective but a strict metric was requested");
    }

    auto mm = minimax_path_values(target);
    const std::size_t n = domain.size();
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat v = least_integer_exceeding(mm[image_index[i]][image_index[j]]);
            d[i][j] = v;
            d[j][i] = v;
        }
    }
    return {FiniteMetricSpace(domain, std::move(d)), injective};
}

ChainMetricResult chain_ultrametric_identity(const FiniteMetricSpace& m) {
    std::map<std::string, std::string> id;
    for (const auto& p : m.points()) id[p] = p;
    return chain_ultrametric(m.points(), id, m);
}

std::vector<std::string> separated_net(const FiniteMetricSpace& m, const Rat& r) {
    std::vector<std::string> ids = m.points();
    std::sort(ids.begin(), ids.end());
    std::vector<std::string> net;
    for (const auto& id : ids) {
        bool far = true;
        for (const auto& kept : net) {
            if (m.dist(id, kept) <= r) {
                far = false;
                break;
            }
        }
        if (far) net.push_back(id);
    }
    return net;
}

DiscretizeResult discretize(const FiniteMetricSpace& m) {
    DiscretizeResult out;
    out.net = separated_net(m, Rat(1));

    std::map<std::string, std::string> inclusion;
    for (const auto& id : out.net) inclusion[id] = id;
    out.ultrametric = chain_ultrametric(out.net, inclusion, m).space;

    // net is in lexicographic order, so ties resolve to the least id
    for (const auto& p : m.points()) {
        std::string best;
        for (const auto& nid : out.net) {
            if (best.empty() || m.dist(p, nid) < m.dist(p, best)) best = nid;
        }
        out.nearest_net[p] = best;
    }
    return out;
}

}  // namespace ultra
