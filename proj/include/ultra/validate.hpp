#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultra/metric_space.hpp"

namespace ultra {

struct MetricViolation {
    std::string kind;              // "diagonal", "asymmetry", "zero-offdiagonal",
                                   // "triangle", "ultrametric", "isosceles", ...
    std::vector<std::string> ids;  // offending pair or triple
    std::string detail;
};

using ValidationReport = std::vector<MetricViolation>;

std::string report_to_text(const ValidationReport& report);

// Checks all metric axioms: zero diagonal, symmetry, positivity off the
// diagonal and the triangle inequality over all triples. Empty report means
// the matrix is a metric.
ValidationReport validate_metric(const FiniteMetricSpace& m);

// Assumes m passes validate_metric; checks d(x,z) <= max(d(x,y), d(y,z))
// over all triples.
ValidationReport validate_ultrametric(const FiniteMetricSpace& m);

// Assumes m passes validate_metric; checks that every triple has at least
// two equal side lengths.
ValidationReport validate_isosceles(const FiniteMetricSpace& m);

bool is_ultrametric(const FiniteMetricSpace& m);

struct ValueSetResult {
    std::optional<DSet> dset;  // set on success
    std::optional<std::pair<std::string, std::string>> non_integral_pair;
    bool ok() const { return dset.has_value(); }
};

// {0} together with all distance values, if they are all integers; otherwise
// names a pair with a non-integral distance.
ValueSetResult value_set(const FiniteMetricSpace& m);

bool is_integral(const FiniteMetricSpace& m);

}  // namespace ultra
