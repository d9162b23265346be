#include "ultra/coarse_union.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ultra/resolution.hpp"
#include "ultra/splice.hpp"

namespace ultra {

FiniteMetricSpace CoarseUnion::part_space(std::size_t index) const {
    return total.restrict_to(parts.at(index).ids);
}

std::optional<std::size_t> CoarseUnion::part_of(const std::string& total_id) const {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (std::find(parts[k].ids.begin(), parts[k].ids.end(), total_id) !=
            parts[k].ids.end()) {
            return k;
        }
    }
    return std::nullopt;
}

CoarseUnion coarse_union(const std::vector<FiniteMetricSpace>& parts,
                         const std::vector<std::string>& basepoints) {
    if (parts.empty()) throw std::invalid_argument("coarse_union: no parts");
    if (!basepoints.empty() && basepoints.size() != parts.size()) {
        throw std::invalid_argument("coarse_union: basepoint count mismatch");
    }
    for (const auto& p : parts) {
        if (p.size() == 0) throw std::invalid_argument("coarse_union: empty part");
    }

    // stride keeps integer inputs integral and makes witness balls canonical
    Rat stride(1);
    for (const auto& p : parts) stride = std::max(stride, Rat(1) + p.diameter());

    const std::size_t n = parts.size();
    std::vector<std::string> base_ids;
    std::vector<std::vector<Rat>> bd(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        base_ids.push_back(std::to_string(i + 1));
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat v = stride * Rat(static_cast<long long>(j + 1));
            bd[i][j] = v;
            bd[j][i] = v;
        }
    }

    SpliceSpec spec;
    spec.base = FiniteMetricSpace(base_ids, std::move(bd));
    std::vector<UnionPart> union_parts(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::string prefix = std::to_string(k + 1) + "/";
        std::vector<std::string> ids;
        for (const auto& p : parts[k].points()) ids.push_back(prefix + p);
        std::vector<std::vector<Rat>> d(ids.size(), std::vector<Rat>(ids.size(), Rat(0)));
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = 0; b < ids.size(); ++b) d[a][b] = parts[k].dist(a, b);
        }
        spec.fibers.emplace(base_ids[k], FiniteMetricSpace(ids, std::move(d)));

        std::string bp;
        if (basepoints.empty()) {
            bp = prefix + *std::min_element(parts[k].points().begin(),
                                            parts[k].points().end());
        } else {
            if (!parts[k].has_point(basepoints[k])) {
                throw std::invalid_argument("coarse_union: basepoint '" + basepoints[k] +
                                            "' not in part " + std::to_string(k + 1));
            }
            bp = prefix + basepoints[k];
        }
        spec.section[base_ids[k]] = bp;
        union_parts[k] = {ids, bp, stride * Rat(static_cast<long long>(k + 1))};
    }

    CoarseUnion out;
    out.total = splice_metric(spec);
    out.parts = std::move(union_parts);
    return out;
}

BoundedWitness verify_union_at_scale(const CoarseUnion& u, const Rat& M) {
    BoundedWitness w;
    w.scale = M;
    w.bounded_sets.resize(u.parts.size());
    for (std::size_t k = 0; k < u.parts.size(); ++k) {
        const UnionPart& part = u.parts[k];
        if (part.base_value > M) continue;  // empty bounded set
        for (const auto& id : part.ids) {
            if (u.total.dist(id, part.basepoint) <= M) {
                w.bounded_sets[k].push_back(id);
            }
        }
    }

    for (std::size_t s = 0; s < u.parts.size(); ++s) {
        std::vector<std::string> rest_s;
        for (const auto& id : u.parts[s].ids) {
            if (std::find(w.bounded_sets[s].begin(), w.bounded_sets[s].end(), id) ==
                w.bounded_sets[s].end()) {
                rest_s.push_back(id);
            }
        }
        for (std::size_t t = s + 1; t < u.parts.size(); ++t) {
            for (const auto& x : rest_s) {
                for (const auto& y : u.parts[t].ids) {
                    if (std::find(w.bounded_sets[t].begin(), w.bounded_sets[t].end(), y) !=
                        w.bounded_sets[t].end()) {
                        continue;
                    }
                    if (u.total.dist(x, y) <= M) {
                        w.violations.push_back(
                            {"union-scale", {x, y},
                             "d = " + rat_to_string(u.total.dist(x, y)) +
                                 " <= " + rat_to_string(M)});
                    }
                }
            }
        }
    }
    return w;
}

CoarseUnion radial_block_decomposition(const FiniteMetricSpace& m, const std::string& x0) {
    auto vs = value_set(m);
    if (!vs.ok()) {
        throw std::invalid_argument("radial_block_decomposition: space is not integral");
    }
    Resolution rr = radial_resolution(m, x0);

    CoarseUnion out;
    out.total = m;
    auto fibers = rr.fibers();

    // base points of the radial resolution are the radii as strings; order by value
    std::vector<std::pair<Rat, std::string>> radii;
    for (const auto& b : rr.base.points()) radii.emplace_back(parse_rational(b), b);
    std::sort(radii.begin(), radii.end());

    for (const auto& [value, base_id] : radii) {
        UnionPart part;
        part.ids = fibers.at(base_id);
        std::sort(part.ids.begin(), part.ids.end());
        part.basepoint = part.ids.front();
        part.base_value = value;
        out.parts.push_back(std::move(part));
    }
    return out;
}

DistortionTable distortion_table(const FiniteMetricSpace& from,
                                 const FiniteMetricSpace& to,
                                 const std::map<std::string, std::string>& map) {
    DistortionTable table;
    std::vector<std::pair<Rat, Rat>> pairs;  // (input distance, output distance)
    const auto& pts = from.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            pairs.emplace_back(from.dist(i, j), to.dist(map.at(pts[i]), map.at(pts[j])));
        }
    }
    std::set<Rat> in_values, out_values;
    for (const auto& [din, dout] : pairs) {
        in_values.insert(din);
        out_values.insert(dout);
    }
    for (const Rat& r : in_values) {
        Rat worst(0);
        for (const auto& [din, dout] : pairs) {
            if (din <= r && dout > worst) worst = dout;
        }
        table.forward.emplace_back(r, worst);
    }
    for (const Rat& r : out_values) {
        Rat worst(0);
        for (const auto& [din, dout] : pairs) {
            if (dout <= r && din > worst) worst = din;
        }
        table.backward.emplace_back(r, worst);
    }
    return table;
}

MapUnionResult map_union(const CoarseUnion& u, const CoarseUnion& v,
                         const std::vector<std::map<std::string, std::string>>& part_maps) {
    if (u.parts.size() != v.parts.size() || part_maps.size() != u.parts.size()) {
        throw std::invalid_argument("map_union: part count mismatch");
    }
    MapUnionResult out;
    for (std::size_t k = 0; k < u.parts.size(); ++k) {
        const auto& ids = u.parts[k].ids;
        const auto& pm = part_maps[k];
        std::set<std::string> images;
        for (const auto& x : ids) {
            auto it = pm.find(x);
            if (it == pm.end()) {
                throw std::invalid_argument("map_union: part map " + std::to_string(k) +
                                            " undefined on '" + x + "'");
            }
            if (std::find(v.parts[k].ids.begin(), v.parts[k].ids.end(), it->second) ==
                v.parts[k].ids.end()) {
                throw std::invalid_argument("map_union: image '" + it->second +
                                            "' is outside part " + std::to_string(k));
            }
            if (!images.insert(it->second).second) {
                throw std::invalid_argument("map_union: part map " + std::to_string(k) +
                                            " is not injective");
            }
        }
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                if (u.total.dist(ids[a], ids[b]) !=
                    v.total.dist(pm.at(ids[a]), pm.at(ids[b]))) {
                    throw std::invalid_argument("map_union: part map " + std::to_string(k) +
                                                " is not isometric on '" + ids[a] +
                                                "','" + ids[b] + "'");
                }
            }
        }
        for (const auto& [x, y] : pm) out.total_map[x] = y;
    }
    out.distortion = distortion_table(u.total, v.total, out.total_map);
    return out;
}

std::vector<BoundedPiece> union_boundedness_check(const CoarseUnion& u,
                                                  const std::vector<std::string>& subset) {
    std::vector<BoundedPiece> pieces;
    for (std::size_t k = 0; k < u.parts.size(); ++k) {
        std::vector<std::string> inside;
        for (const auto& id : subset) {
            if (std::find(u.parts[k].ids.begin(), u.parts[k].ids.end(), id) !=
                u.parts[k].ids.end()) {
                inside.push_back(id);
            }
        }
        if (inside.empty()) continue;
        std::sort(inside.begin(), inside.end());
        Rat diam(0);
        for (std::size_t a = 0; a < inside.size(); ++a) {
            for (std::size_t b = a + 1; b < inside.size(); ++b) {
                diam = std::max(diam, u.total.dist(inside[a], inside[b]));
            }
        }
        pieces.push_back({k, std::move(inside), diam});
    }
    // every id must belong to some part
    std::size_t covered = 0;
    for (const auto& piece : pieces) covered += piece.ids.size();
    std::set<std::string> unique(subset.begin(), subset.end());
    if (covered != unique.size()) {
        throw std::invalid_argument("union_boundedness_check: id outside every part");
    }
    return pieces;
}

}  // namespace ultra
