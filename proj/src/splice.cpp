#include "ultra/splice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ultra {

namespace {

void check_spec(const SpliceSpec& spec) {
    if (spec.fibers.size() != spec.base.size()) {
        throw std::invalid_argument("splice: fibers do not match base points");
    }
    std::set<std::string> unique;
    for (const auto& b : spec.base.points()) {
        auto it = spec.fibers.find(b);
        if (it == spec.fibers.end() || it->second.size() == 0) {
            throw std::invalid_argument("splice: missing or empty fiber over '" + b + "'");
        }
        auto sec = spec.section.find(b);
        if (sec == spec.section.end()) {
            throw std::invalid_argument("splice: no section point over '" + b + "'");
        }
        if (!it->second.has_point(sec->second)) {
            throw std::invalid_argument("splice: section point '" + sec->second +
                                        "' lies outside the fiber over '" + b + "'");
        }
        for (const auto& p : it->second.points()) {
            if (!unique.insert(p).second) {
                throw std::invalid_argument("splice: point id '" + p +
                                            "' appears in more than one fiber");
            }
        }
    }
}

FiniteMetricSpace build_total(const SpliceSpec& spec, bool spliced) {
    check_spec(spec);

    std::vector<std::string> points;
    std::map<std::string, std::string> owner;  // point -> base id
    for (const auto& b : spec.base.points()) {
        for (const auto& p : spec.fibers.at(b).points()) {
            points.push_back(p);
            owner[p] = b;
        }
    }

    const std::size_t n = points.size();
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& u = owner.at(points[i]);
        const FiniteMetricSpace& fu = spec.fibers.at(u);
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::string& t = owner.at(points[j]);
            Rat v;
            if (u == t) {
                v = fu.dist(points[i], points[j]);
            } else if (spliced) {
                const FiniteMetricSpace& ft = spec.fibers.at(t);
                v = std::max({spec.base.dist(u, t),
                              fu.dist(points[i], spec.section.at(u)),
                              ft.dist(points[j], spec.section.at(t))});
            } else {
                v = spec.base.dist(u, t);
            }
            d[i][j] = v;
            d[j][i] = v;
        }
    }
    return FiniteMetricSpace(std::move(points), std::move(d));
}

}  // namespace

std::map<std::string, std::string> SpliceSpec::default_section(
    const FiniteMetricSpace& base,
    const std::map<std::string, FiniteMetricSpace>& fibers) {
    std::map<std::string, std::string> section;
    for (const auto& b : base.points()) {
        const auto& pts = fibers.at(b).points();
        section[b] = *std::min_element(pts.begin(), pts.end());
    }
    return section;
}

FiniteMetricSpace splice_metric(const SpliceSpec& spec) {
    return build_total(spec, /*spliced=*/true);
}

FiniteMetricSpace resolution_total_metric(const SpliceSpec& spec) {
    return build_total(spec, /*spliced=*/false);
}

namespace {

// all sections as maps, in lexicographic order of fiber point choices
std::vector<std::map<std::string, std::string>> all_sections(const SpliceSpec& spec,
                                                             std::size_t guard) {
    std::vector<std::map<std::string, std::string>> out;
    std::size_t count = 1;
    for (const auto& b : spec.base.points()) {
        count *= spec.fibers.at(b).size();
        if (count > guard) {
            throw std::invalid_argument("splice_section_invariance: section space too large");
        }
    }
    std::map<std::string, std::string> current;
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == spec.base.size()) {
            out.push_back(current);
            return;
        }
        const std::string& b = spec.base.point(bi);
        std::vector<std::string> pts = spec.fibers.at(b).points();
        std::sort(pts.begin(), pts.end());
        for (const auto& p : pts) {
            current[b] = p;
            rec(bi + 1);
        }
        current.erase(b);
    };
    rec(0);
    return out;
}

}  // namespace

SectionInvarianceReport splice_section_invariance(
    const SpliceSpec& spec,
    const std::vector<std::map<std::string, std::string>>& alternative_sections) {
    check_spec(spec);
    SectionInvarianceReport report;

    report.diameter_condition = true;
    for (const auto& u : spec.base.points()) {
        if (spec.base.size() == 1) break;
        Rat sep;
        bool first = true;
        for (const auto& t : spec.base.points()) {
            if (t == u) continue;
            const Rat& dx = spec.base.dist(u, t);
            if (first || dx < sep) {
                sep = dx;
                first = false;
            }
        }
        if (spec.fibers.at(u).diameter() > sep) {
            report.diameter_condition = false;
            break;
        }
    }

    FiniteMetricSpace reference = splice_metric(spec);

    if (report.diameter_condition) {
        report.sections_agree = true;
        for (const auto& section : alternative_sections) {
            SpliceSpec alt = spec;
            alt.section = section;
            if (!splice_metric(alt).same_metric(reference)) {
                report.sections_agree = false;
                report.distinguishing_sections = {spec.section, section};
                break;
            }
        }
        report.equals_resolution_total =
            report.sections_agree && resolution_total_metric(spec).same_metric(reference);
        return report;
    }

    // condition fails: look for two sections that produce different metrics
    auto sections = all_sections(spec, 100000);
    SpliceSpec first_spec = spec;
    first_spec.section = sections.front();
    FiniteMetricSpace first_metric = splice_metric(first_spec);
    report.sections_agree = true;
    for (std::size_t s = 1; s < sections.size(); ++s) {
        SpliceSpec other = spec;
        other.section = sections[s];
        FiniteMetricSpace m = splice_metric(other);
        if (!m.same_metric(first_metric)) {
            report.sections_agree = false;
            report.distinguishing_sections = {sections.front(), sections[s]};
            for (const auto& x : m.points()) {
                for (const auto& y : m.points()) {
                    if (x < y && m.dist(x, y) != first_metric.dist(x, y)) {
                        report.differing_pair = {x, y};
                        break;
                    }
                }
                if (report.differing_pair) break;
            }
            break;
        }
    }
    return report;
}

}  // namespace ultra
