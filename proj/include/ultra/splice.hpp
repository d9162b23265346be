#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultra/metric_space.hpp"

namespace ultra {

/**
 * Splicing data: a base space, one fiber per base point, and a section
 * picking a designated point inside each fiber. The spliced metric keeps
 * fiber metrics inside fibers; across fibers it is
 *   max(base distance, d(x, section of x's fiber), d(y, section of y's fiber)).
 */
struct SpliceSpec {
    FiniteMetricSpace base;
    std::map<std::string, FiniteMetricSpace> fibers;   // base id -> fiber
    std::map<std::string, std::string> section;        // base id -> fiber point

    // least fiber point per base point
    static std::map<std::string, std::string> default_section(
        const FiniteMetricSpace& base,
        const std::map<std::string, FiniteMetricSpace>& fibers);
};

// The spliced metric. Always a metric; ultrametric whenever the base and
// all fibers are. Fiber point ids must be globally unique.
FiniteMetricSpace splice_metric(const SpliceSpec& spec);

// Total metric with cross-fiber distance equal to the base distance (the
// resolution total). No diameter precondition; it equals the splice exactly
// when every fiber's diameter is at most its base separation.
FiniteMetricSpace resolution_total_metric(const SpliceSpec& spec);

struct SectionInvarianceReport {
    bool diameter_condition = false;   // diam(fiber(u)) <= dist(u, rest of base) for all u
    bool sections_agree = false;       // spliced metrics equal across checked sections
    bool equals_resolution_total = false;
    // populated when a pair of sections yields different metrics
    std::optional<std::pair<std::map<std::string, std::string>,
                            std::map<std::string, std::string>>> distinguishing_sections;
    std::optional<std::pair<std::string, std::string>> differing_pair;
};

// Checks the section-independence condition. When it holds, asserts that all
// supplied sections together with the one already in the data yield the same
// metric, equal to the resolution total. When it fails, searches the full
// section space for a distinguishing pair.
SectionInvarianceReport splice_section_invariance(
    const SpliceSpec& spec,
    const std::vector<std::map<std::string, std::string>>& alternative_sections);

}  // namespace ultra
