#include "ultra/resolution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ultra/components.hpp"

namespace ultra {

std::map<std::string, std::vector<std::string>> Resolution::fibers() const {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& id : base.points()) out[id];
    for (const auto& id : total.points()) {
        out[projection.at(id)].push_back(id);
    }
    return out;
}

FiniteMetricSpace Resolution::fiber_space(const std::string& base_id) const {
    auto f = fibers();
    auto it = f.find(base_id);
    if (it == f.end()) {
        throw std::invalid_argument("unknown base point '" + base_id + "'");
    }
    return total.restrict_to(it->second);
}

ValidationReport verify_resolution(const Resolution& r) {
    std::set<std::string> hit;
    for (const auto& id : r.total.points()) {
        auto it = r.projection.find(id);
        if (it == r.projection.end()) {
            throw std::invalid_argument("projection undefined on '" + id + "'");
        }
        if (!r.base.has_point(it->second)) {
            throw std::invalid_argument("projection image '" + it->second +
                                        "' is not a base point");
        }
        hit.insert(it->second);
    }
    if (hit.size() != r.base.size()) {
        throw std::invalid_argument("projection is not surjective");
    }

    ValidationReport report;
    const std::size_t n = r.total.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& bi = r.projection.at(r.total.point(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::string& bj = r.projection.at(r.total.point(j));
            if (bi == bj) continue;
            const Rat& dt = r.total.dist(i, j);
            const Rat& db = r.base.dist(bi, bj);
            if (dt != db) {
                report.push_back({"cross-fiber-mismatch",
                                  {r.total.point(i), r.total.point(j)},
                                  "total " + rat_to_string(dt) + " vs base " +
                                      rat_to_string(db)});
            }
        }
    }
    return report;
}

Resolution assemble_total(const FiniteMetricSpace& base,
                          const std::map<std::string, FiniteMetricSpace>& fibers,
                          AssembleMode mode) {
    for (const auto& b : base.points()) {
        auto it = fibers.find(b);
        if (it == fibers.end() || it->second.size() == 0) {
            throw std::invalid_argument("missing or empty fiber over '" + b + "'");
        }
    }
    if (fibers.size() != base.size()) {
        throw std::invalid_argument("fiber map names points outside the base");
    }
    if (mode == AssembleMode::ultrametric) {
        if (!is_ultrametric(base)) {
            throw std::invalid_argument("ultrametric mode: base is not ultrametric");
        }
        for (const auto& [b, f] : fibers) {
            if (!is_ultrametric(f)) {
                throw std::invalid_argument("ultrametric mode: fiber over '" + b +
                                            "' is not ultrametric");
            }
        }
    }

    // diameter preconditions
    for (const auto& b : base.points()) {
        if (base.size() == 1) break;
        Rat sep;
        bool first = true;
        for (const auto& u : base.points()) {
            if (u == b) continue;
            const Rat& d = base.dist(b, u);
            if (first || d < sep) {
                sep = d;
                first = false;
            }
        }
        Rat diam = fibers.at(b).diameter();
        Rat bound = mode == AssembleMode::general ? sep / 2 : sep;
        if (diam > bound) {
            throw std::invalid_argument(
                "fiber over '" + b + "' has diameter " + rat_to_string(diam) +
                " exceeding the bound " + rat_to_string(bound));
        }
    }

    Resolution out;
    out.base = base;
    std::vector<std::string> points;
    std::set<std::string> unique;
    for (const auto& b : base.points()) {
        for (const auto& p : fibers.at(b).points()) {
            if (!unique.insert(p).second) {
                throw std::invalid_argument("point id '" + p +
                                            "' appears in more than one fiber");
            }
            points.push_back(p);
            out.projection[p] = b;
        }
    }
    const std::size_t n = points.size();
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& bi = out.projection.at(points[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::string& bj = out.projection.at(points[j]);
            Rat v = bi == bj ? fibers.at(bi).dist(points[i], points[j])
                             : base.dist(bi, bj);
            d[i][j] = v;
            d[j][i] = v;
        }
    }
    out.total = FiniteMetricSpace(std::move(points), std::move(d));
    return out;
}

Resolution radial_resolution_unchecked(const FiniteMetricSpace& m, const std::string& x0) {
    std::size_t origin = m.index_of(x0);

    std::set<Rat> radii;
    for (std::size_t i = 0; i < m.size(); ++i) radii.insert(m.dist(origin, i));

    std::vector<std::string> base_points;
    std::vector<Rat> values(radii.begin(), radii.end());
    for (const Rat& v : values) base_points.push_back(rat_to_string(v));

    const std::size_t k = values.size();
    std::vector<std::vector<Rat>> bd(k, std::vector<Rat>(k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            Rat v = std::max(values[i], values[j]);
            bd[i][j] = v;
            bd[j][i] = v;
        }
    }

    Resolution out;
    out.base = FiniteMetricSpace(std::move(base_points), std::move(bd));
    out.total = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
        out.projection[m.point(i)] = rat_to_string(m.dist(origin, i));
    }
    return out;
}

Resolution radial_resolution(const FiniteMetricSpace& m, const std::string& x0) {
    if (!is_ultrametric(m)) {
        throw std::invalid_argument("radial_resolution: space is not ultrametric");
    }
    return radial_resolution_unchecked(m, x0);
}

Resolution top_split_unchecked(const FiniteMetricSpace& m) {
    if (m.size() < 2) {
        throw std::invalid_argument("top_split: need at least 2 points");
    }
    Rat diam = m.diameter();
    if (diam == 0) {
        throw std::invalid_argument("top_split: diameter 0 with several points");
    }

    auto blocks = threshold_blocks(m, diam, /*strict=*/true);

    std::vector<std::string> base_points;
    for (const auto& block : blocks) base_points.push_back(block.front());

    const std::size_t k = blocks.size();
    std::vector<std::vector<Rat>> bd(k, std::vector<Rat>(k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bd[i][j] = diam;
            bd[j][i] = diam;
        }
    }

    Resolution out;
    out.base = FiniteMetricSpace(std::move(base_points), std::move(bd));
    out.total = m;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& id : blocks[b]) out.projection[id] = blocks[b].front();
    }
    return out;
}

Resolution top_split(const FiniteMetricSpace& m) {
    if (!is_ultrametric(m)) {
        throw std::invalid_argument("top_split: space is not ultrametric");
    }
    return top_split_unchecked(m);
}

FiniteMetricSpace subset_sup_metric(const FiniteMetricSpace& m,
                                    const std::vector<std::vector<std::string>>& subsets) {
    if (!is_ultrametric(m)) {
        throw std::invalid_argument("subset_sup_metric: space is not ultrametric");
    }
    std::set<std::vector<std::string>> seen;
    std::vector<std::vector<std::string>> normalized;
    for (const auto& s : subsets) {
        if (s.empty()) throw std::invalid_argument("subset_sup_metric: empty subset");
        std::vector<std::string> sorted = s;
        for (const auto& id : sorted) (void)m.index_of(id);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (!seen.insert(sorted).second) {
            throw std::invalid_argument("subset_sup_metric: duplicate subset");
        }
        normalized.push_back(std::move(sorted));
    }

    const std::size_t n = normalized.size();
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("s" + std::to_string(i));
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat sup(0);
            for (const auto& x : normalized[i]) {
                for (const auto& y : normalized[j]) {
                    const Rat& v = m.dist(x, y);
                    if (v > sup) sup = v;
                }
            }
            d[i][j] = sup;
            d[j][i] = sup;
        }
    }
    return FiniteMetricSpace(std::move(ids), std::move(d));
}

}  // namespace ultra
