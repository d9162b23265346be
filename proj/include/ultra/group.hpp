#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultra/coarse_union.hpp"
#include "ultra/metric_space.hpp"
#include "ultra/validate.hpp"

namespace ultra {

/**
 * Element of the countable Z/2 vector space: a finite set of positive
 * coordinate indices. The group operation is symmetric difference, the
 * identity is the empty support, and every element is its own inverse.
 */
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::vector<long long> support);

    static BitVector identity() { return BitVector(); }

    const std::vector<long long>& support() const { return support_; }
    bool empty() const { return support_.empty(); }
    long long max_coordinate() const;  // 0 for the identity
    bool contains(long long coordinate) const;

    BitVector xor_with(const BitVector& other) const;

    bool operator==(const BitVector& other) const { return support_ == other.support_; }
    bool operator<(const BitVector& other) const { return support_ < other.support_; }

    std::string to_string() const;  // "{}" or "{1,3}"

private:
    std::vector<long long> support_;  // sorted, unique, positive
};

/**
 * Subgroup filtration of the Z/2 vector space truncated at finite depth:
 * strictly increasing integer scales starting at 0 paired with non-decreasing
 * dimensions starting at 0. G at scale a_n is the span of coordinates
 * 1..dim_n, and the induced left-invariant ultrametric of g, h is the least
 * scale whose subgroup contains their difference.
 */
class Filtration {
public:
    Filtration() : scales_{0}, dims_{0} {}
    Filtration(std::vector<long long> scales, std::vector<long long> dims);

    static Filtration unit_scales(std::vector<long long> dims);  // scales 0,1,2,...

    const std::vector<long long>& scales() const { return scales_; }
    const std::vector<long long>& dims() const { return dims_; }
    std::size_t depth() const { return scales_.size(); }
    long long max_dim() const { return dims_.back(); }

    std::string to_string() const;  // "(0,0) (1,2) ..."

private:
    std::vector<long long> scales_;
    std::vector<long long> dims_;
};

// d(g,h) = least scale a_n with support(g xor h) inside coordinates
// 1..dim_n; 0 iff g = h. Throws when the support exceeds the truncation.
Rat filtration_metric(const Filtration& f, const BitVector& g, const BitVector& h);

struct FiltrationEquivalence {
    bool equivalent = false;
    // least index on the other side whose subgroup contains this scale's
    std::vector<std::size_t> forward;   // for F1 scales
    std::vector<std::size_t> backward;  // for F2 scales
    std::optional<long long> failing_scale;
    int failing_side = 0;  // 1 or 2 when a scale has no match
};

// Mutual cofinality of the dimension sequences up to the given depth.
FiltrationEquivalence filtrations_equivalent(const Filtration& f1, const Filtration& f2,
                                             std::size_t depth);

struct CapacityProfile {
    // c[n] = max cardinality of a ball of radius n+2, for n = 0..diam
    std::vector<long long> c;
};

CapacityProfile capacity_profile(const FiniteMetricSpace& m);

struct GroupEmbedding {
    Filtration filtration;
    std::map<std::string, BitVector> images;
    std::vector<long long> subclass_counts;  // max subclass count per threshold >= 1
};

// Exact isometric embedding of an integral ultrametric space into the Z/2
// vector space with the induced filtration metric (unit scales). Per
// threshold n, the (d <= n-1)-subclasses of each (d <= n)-class receive
// distinct coset tags on the coordinates new at scale n; the image of a
// point is the XOR of its tags. A supplied filtration must have unit scales
// covering the diameter and enough new coordinates per scale.
GroupEmbedding embed_into_group(const FiniteMetricSpace& m,
                                const std::optional<Filtration>& filtration = std::nullopt);

struct BlockTranslateResult {
    Filtration filtration;
    std::vector<Rat> norms;             // s_n, strictly increasing
    std::vector<BitVector> translators; // one fresh coordinate per block
    std::map<std::string, BitVector> images;
    ValidationReport report;            // empty iff all checks pass

    bool ok() const { return report.empty(); }
};

// Embeds a radial block decomposition into the group: each block embeds via
// embed_into_group against a shared low filtration, then is translated by a
// fresh coordinate whose norm s_n exceeds the previous radius plus the block
// diameter. Within-block distances stay exact; block n lands in the annulus
// (s_{n-1}, s_n] and cross-block distances equal max of the norms.
BlockTranslateResult block_translate_embed(
    const CoarseUnion& u, const std::optional<Filtration>& filtration = std::nullopt);

}  // namespace ultra
