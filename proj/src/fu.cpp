#include "ultra/fu.hpp"

#include <algorithm>
#include <stdexcept>

#include "ultra/validate.hpp"

namespace ultra {

namespace {

// paths over {0,1}; the id is "x" + path
struct PathSpace {
    std::vector<std::string> paths;
    std::vector<std::vector<Rat>> dist;
};

PathSpace single_path_point() { return {{""}, {{Rat(0)}}}; }

// joins first and second with cross distance k, prefixing paths 0/1
PathSpace join_at(const PathSpace& first, const PathSpace& second, const Rat& k) {
    PathSpace out;
    for (const auto& p : first.paths) out.paths.push_back("0" + p);
    for (const auto& p : second.paths) out.paths.push_back("1" + p);
    std::size_t n = out.paths.size();
    std::size_t nf = first.paths.size();
    out.dist.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat v;
            if (i < nf && j < nf) {
                v = first.dist[i][j];
            } else if (i >= nf && j >= nf) {
                v = second.dist[i - nf][j - nf];
            } else {
                v = k;
            }
            out.dist[i][j] = v;
            out.dist[j][i] = v;
        }
    }
    return out;
}

PathSpace build_paths(long long m, const DSet& D, bool literal) {
    if (m < 1) throw std::invalid_argument("build_FU: m must be at least 1");
    if (m == 1 || D.size() == 1) return single_path_point();
    long long k = D.max();
    PathSpace first = build_paths(literal ? m - 1 : m, D.without_max(), literal);
    PathSpace second = build_paths(m - 1, D, literal);
    return join_at(first, second, Rat(k));
}

FUSpace finish(long long m, const DSet& D, PathSpace ps) {
    FUSpace out;
    out.m = m;
    out.D = D;
    std::vector<std::string> ids;
    for (const auto& p : ps.paths) {
        ids.push_back("x" + p);
        out.labels["x" + p] = p;
    }
    out.space = FiniteMetricSpace(std::move(ids), std::move(ps.dist));
    return out;
}

}  // namespace

FUSpace build_FU(long long m, const DSet& D) {
    return finish(m, D, build_paths(m, D, /*literal=*/false));
}

FUSpace build_FU_literal(long long m, const DSet& D) {
    return finish(m, D, build_paths(m, D, /*literal=*/true));
}

long long fu_expected_size(long long m, const DSet& D) {
    long long d = static_cast<long long>(D.size()) - 1;
    // C(m-1+d, d)
    long long n = m - 1 + d;
    long long result = 1;
    for (long long i = 1; i <= d; ++i) {
        result = result * (n - d + i) / i;
    }
    return result;
}

Resolution top_split_two(const FiniteMetricSpace& m, const Rat& k) {
    if (m.size() < 2 || m.diameter() != k || k <= 0) {
        throw std::invalid_argument("top_split_two: diameter must equal max(D) > 0");
    }
    std::vector<std::string> ids = m.points();
    std::sort(ids.begin(), ids.end());

    std::string a, b;
    for (std::size_t i = 0; i < ids.size() && a.empty(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (m.dist(ids[i], ids[j]) == k) {
                a = ids[i];
                b = ids[j];
                break;
            }
        }
    }

    Resolution out;
    std::string k_id = rat_to_string(k);
    out.base = FiniteMetricSpace({"0", k_id}, {{Rat(0), k}, {k, Rat(0)}});
    out.total = m;
    for (const auto& id : m.points()) {
        out.projection[id] = m.dist(id, a) < k ? "0" : k_id;
    }
    return out;
}

namespace {

// path of the least point of FU(m, D) under the corrected recursion
std::string least_path(long long m, const DSet& D) {
    if (m == 1 || D.size() == 1) return "";
    return "0" + least_path(m, D.without_max());
}

// Recursive embedding; assumes x is ultrametric with value set inside D and
// |x| <= m. Produces recursion paths.
std::map<std::string, std::string> embed_paths(const FiniteMetricSpace& x, long long m,
                                               const DSet& D) {
    std::map<std::string, std::string> out;
    if (x.size() == 1) {
        out[x.point(0)] = least_path(m, D);
        return out;
    }
    if (static_cast<long long>(x.size()) > m) {
        throw std::invalid_argument("embed_into_FU: too many points for the budget");
    }
    Rat k(D.max());
    if (x.diameter() < k) {
        // no pair realizes the top scale; the whole space lives in the first part
        auto sub = embed_paths(x, m, D.without_max());
        for (auto& [id, path] : sub) out[id] = "0" + path;
        return out;
    }

    Resolution split = top_split_two(x, k);
    auto fibers = split.fibers();
    const auto& near = fibers.at("0");
    const auto& far = fibers.at(rat_to_string(k));

    auto e0 = embed_paths(x.restrict_to(near), m, D.without_max());
    auto e1 = embed_paths(x.restrict_to(far), m - 1, D);
    for (auto& [id, path] : e0) out[id] = "0" + path;
    for (auto& [id, path] : e1) out[id] = "1" + path;
    return out;
}

}  // namespace

std::map<std::string, std::string> embed_into_FU(const FiniteMetricSpace& x,
                                                 long long m, const DSet& D) {
    if (static_cast<long long>(x.size()) > m) {
        throw std::invalid_argument("embed_into_FU: space has more than m points");
    }
    auto vs = value_set(x);
    if (!vs.ok()) {
        throw std::invalid_argument("embed_into_FU: distances are not integral");
    }
    for (long long v : vs.dset->values()) {
        if (!D.contains(v)) {
            throw std::invalid_argument("embed_into_FU: value " + std::to_string(v) +
                                        " outside D");
        }
    }
    if (!validate_ultrametric(x).empty()) {
        throw std::invalid_argument("embed_into_FU: space is not ultrametric");
    }

    auto paths = embed_paths(x, m, D);
    FUSpace target = build_FU(m, D);

    std::map<std::string, std::string> out;
    for (const auto& [id, path] : paths) out[id] = "x" + path;

    // self-check: the embedding must preserve every distance exactly
    for (const auto& [ida, fa] : out) {
        for (const auto& [idb, fb] : out) {
            if (ida < idb && x.dist(ida, idb) != target.space.dist(fa, fb)) {
                throw std::logic_error("embed_into_FU: verification failed on '" + ida +
                                       "','" + idb + "'");
            }
        }
    }
    return out;
}

}  // namespace ultra
