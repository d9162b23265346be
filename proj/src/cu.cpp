#include "ultra/cu.hpp"

#include <algorithm>
#include <stdexcept>

#include "ultra/resolution.hpp"
#include "ultra/validate.hpp"

namespace ultra {

Rat cu_distance(const CUAddress& a, const CUAddress& b) {
    if (!(a.D == b.D)) {
        throw std::invalid_argument("cu_distance: addresses over different D sets");
    }
    if (a.coords.size() != b.coords.size()) {
        throw std::invalid_argument("cu_distance: malformed address length");
    }
    auto scales = a.D.positives();  // ascending
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] != b.coords[i]) {
            // index 0 holds the largest scale
            return Rat(scales[scales.size() - 1 - i]);
        }
    }
    return Rat(0);
}

Rat cu_global_distance(const CUPoint& p, const CUPoint& q) {
    if (p.level != q.level) return Rat(std::max(p.level, q.level));
    return cu_distance(p.address, q.address);
}

namespace {

// refine classes scale by scale, assigning one coordinate per level
void assign_coords(const FiniteMetricSpace& x, const std::vector<std::string>& members,
                   const std::vector<long long>& scales_desc, std::size_t level,
                   std::map<std::string, std::vector<long long>>& coords) {
    if (level == scales_desc.size()) return;
    Rat threshold(scales_desc[level]);

    // classes of d < threshold inside this member set, ordered by least member
    std::vector<std::vector<std::string>> classes;
    std::vector<std::string> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& id : sorted) {
        bool placed = false;
        for (auto& cls : classes) {
            if (x.dist(id, cls.front()) < threshold) {
                cls.push_back(id);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({id});
    }

    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (const auto& id : classes[c]) {
            coords[id].push_back(static_cast<long long>(c));
        }
        assign_coords(x, classes[c], scales_desc, level + 1, coords);
    }
}

}  // namespace

std::map<std::string, CUAddress> embed_into_CU_D(const FiniteMetricSpace& x,
                                                 const DSet& D) {
    auto vs = value_set(x);
    if (!vs.ok()) {
        throw std::invalid_argument("embed_into_CU_D: distances are not integral");
    }
    for (long long v : vs.dset->values()) {
        if (!D.contains(v)) {
            throw std::invalid_argument("embed_into_CU_D: value " + std::to_string(v) +
                                        " outside D");
        }
    }

    std::vector<long long> scales_desc = D.positives();
    std::reverse(scales_desc.begin(), scales_desc.end());

    std::map<std::string, std::vector<long long>> coords;
    for (const auto& id : x.points()) coords[id];
    assign_coords(x, x.points(), scales_desc, 0, coords);

    std::map<std::string, CUAddress> out;
    for (const auto& [id, c] : coords) out[id] = CUAddress{D, c};

    // An isometric image inside CU(D) is necessarily ultrametric, so this
    // check also rejects non-ultrametric inputs.
    for (const auto& [ida, aa] : out) {
        for (const auto& [idb, ab] : out) {
            if (ida < idb && x.dist(ida, idb) != cu_distance(aa, ab)) {
                throw std::invalid_argument(
                    "embed_into_CU_D: verification failed on '" + ida + "','" + idb +
                    "' (input not D-ultrametric?)");
            }
        }
    }
    return out;
}

CUEmbedding embed_into_CU(const FiniteMetricSpace& m) {
    CUEmbedding out;
    out.discretization = discretize(m);
    const FiniteMetricSpace& net = out.discretization.ultrametric;

    // least net point is the greedy seed
    const std::string& origin = out.discretization.net.front();
    Resolution radial = radial_resolution_unchecked(net, origin);
    auto fibers = radial.fibers();

    for (const auto& [base_id, members] : fibers) {
        Rat radius = parse_rational(base_id);
        long long level = static_cast<long long>(rat_num(radius));
        FiniteMetricSpace fiber = net.restrict_to(members);
        auto addresses = embed_into_CU_D(fiber, DSet::range(level));
        for (const auto& [id, addr] : addresses) {
            out.net_map[id] = CUPoint{level, addr};
        }
    }

    // the net map must reproduce the chain metric exactly
    for (const auto& a : out.discretization.net) {
        for (const auto& b : out.discretization.net) {
            if (a < b &&
                cu_global_distance(out.net_map.at(a), out.net_map.at(b)) != net.dist(a, b)) {
                throw std::logic_error("embed_into_CU: net verification failed on '" + a +
                                       "','" + b + "'");
            }
        }
    }

    out.max_net_gap = Rat(0);
    for (const auto& p : m.points()) {
        const std::string& near = out.discretization.nearest_net.at(p);
        out.full_map[p] = out.net_map.at(near);
        out.max_net_gap = std::max(out.max_net_gap, m.dist(p, near));
    }
    return out;
}

}  // namespace ultra
