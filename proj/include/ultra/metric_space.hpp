#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ultra/rational.hpp"

namespace ultra {

/**
 * Finite metric space candidate: an ordered list of point ids plus a square
 * matrix of exact non-negative distances. Construction checks shape only;
 * whether the matrix actually satisfies the metric (or ultrametric) axioms
 * is the job of the validators.
 */
class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;
    FiniteMetricSpace(std::vector<std::string> points,
                      std::vector<std::vector<Rat>> matrix);

    static FiniteMetricSpace single(const std::string& id);

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point(std::size_t i) const { return points_[i]; }

    bool has_point(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;

    const Rat& dist(std::size_t i, std::size_t j) const {
        return dist_[i * points_.size() + j];
    }
    const Rat& dist(const std::string& a, const std::string& b) const {
        return dist(index_of(a), index_of(b));
    }

    Rat diameter() const;
    Rat min_positive_distance() const;  // 0 on a 1-point space

    // Subspace on the given ids, in the given order.
    FiniteMetricSpace restrict_to(std::span<const std::string> ids) const;

    // Same id set and same distance on every id pair (point order ignored).
    bool same_metric(const FiniteMetricSpace& other) const;

    // Exact integer fast path: when every entry is a rational with a small
    // common denominator L, scaled_dist holds dist * L in 64-bit integers.
    // Comparisons of scaled values are exact rational comparisons.
    bool has_scaled() const { return scale_ != 0; }
    long long scale_factor() const { return scale_; }
    long long scaled_dist(std::size_t i, std::size_t j) const {
        return scaled_[i * points_.size() + j];
    }

private:
    void build_scaled();

    std::vector<std::string> points_;
    std::map<std::string, std::size_t> index_;
    std::vector<Rat> dist_;
    long long scale_ = 0;  // 0 when the fast path is unavailable
    std::vector<long long> scaled_;
};

// Finite strictly increasing set of non-negative integers starting at 0;
// the allowed distance values of a D-ultrametric space.
class DSet {
public:
    DSet() : values_{0} {}
    explicit DSet(std::vector<long long> values);

    static DSet from_values(std::vector<long long> values);  // sorts, dedups, inserts 0
    static DSet parse(const std::string& comma_separated);   // "1,2,3"; 0 implied
    static DSet range(long long max_value);                  // {0,1,...,max_value}

    const std::vector<long long>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool contains(long long v) const;
    long long max() const { return values_.back(); }
    DSet without_max() const;

    // positive values ascending
    std::vector<long long> positives() const;

    std::string to_string() const;
    bool operator==(const DSet& other) const { return values_ == other.values_; }
    bool operator<(const DSet& other) const { return values_ < other.values_; }

private:
    std::vector<long long> values_;
};

// Partition of the point set into r-components (maximal subsets chained by
// steps of distance < r).
struct ScalePartition {
    Rat scale;
    std::vector<std::vector<std::string>> blocks;  // ordered by least member id
};

}  // namespace ultra
