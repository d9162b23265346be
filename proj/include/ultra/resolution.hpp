#pragma once

#include <map>
#include <string>
#include <vector>

#include "ultra/metric_space.hpp"
#include "ultra/validate.hpp"

namespace ultra {

/**
 * Metric resolution: a surjection from a total space onto a base space such
 * that the distance between points in different fibers equals the base
 * distance of their images.
 */
struct Resolution {
    FiniteMetricSpace total;
    FiniteMetricSpace base;
    std::map<std::string, std::string> projection;  // total id -> base id

    // base id -> total ids, in total point order
    std::map<std::string, std::vector<std::string>> fibers() const;
    FiniteMetricSpace fiber_space(const std::string& base_id) const;
};

// Empty report iff every cross-fiber pair realizes the base distance.
// Throws if the projection is not total or not surjective.
ValidationReport verify_resolution(const Resolution& r);

enum class AssembleMode { general, ultrametric };

// Builds the unique total metric over a base and per-base-point fibers:
// fiber metric inside fibers, base distance across. Enforces the sufficient
// diameter bounds as hard preconditions: in general mode each fiber diameter
// is at most half the distance from its base point to the rest of the base;
// in ultrametric mode (base and fibers ultrametric) the full distance.
Resolution assemble_total(const FiniteMetricSpace& base,
                          const std::map<std::string, FiniteMetricSpace>& fibers,
                          AssembleMode mode);

// Resolution of an ultrametric space over its set of distances from x0,
// with base metric d(u,t) = max(u,t) and projection x -> d(x0,x).
Resolution radial_resolution(const FiniteMetricSpace& m, const std::string& x0);

// Internal variant that skips the ultrametric re-validation (for pipelines
// whose input is ultrametric by construction).
Resolution radial_resolution_unchecked(const FiniteMetricSpace& m, const std::string& x0);

// Splits an ultrametric space of diameter s > 0 at its top scale: base has
// one point per (d < s)-class with all base distances s, fibers are the
// classes (each of diameter < s). Base points named by least class member.
Resolution top_split(const FiniteMetricSpace& m);
Resolution top_split_unchecked(const FiniteMetricSpace& m);

// Ultrametric on a family of distinct non-empty subsets via
// rho(A,B) = max { d(x,y) : x in A, y in B }. Output ids are "s0", "s1", ...
// in input order.
FiniteMetricSpace subset_sup_metric(const FiniteMetricSpace& m,
                                    const std::vector<std::vector<std::string>>& subsets);

}  // namespace ultra
