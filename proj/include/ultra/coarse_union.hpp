#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultra/metric_space.hpp"
#include "ultra/validate.hpp"

namespace ultra {

/**
 * Constructive coarse disjoint union: an ordered family of parts inside one
 * total space. Each part carries a base value; cross-part distances follow
 * the splice formula over the max-ultrametric on base values, so that at
 * every scale M all but bounded portions of the parts are more than M apart.
 */
struct UnionPart {
    std::vector<std::string> ids;  // total ids belonging to this part
    std::string basepoint;         // total id, the section point
    Rat base_value;                // strictly increasing across parts
};

struct CoarseUnion {
    FiniteMetricSpace total;
    std::vector<UnionPart> parts;

    FiniteMetricSpace part_space(std::size_t index) const;
    std::optional<std::size_t> part_of(const std::string& total_id) const;
    Rat max_base_value() const { return parts.back().base_value; }
};

// Splices the given parts over base values stride, 2*stride, ... where
// stride = 1 + max part diameter. Part points are renamed "<k>/<id>" with k
// the 1-based part index. Basepoints default to the least id per part.
CoarseUnion coarse_union(const std::vector<FiniteMetricSpace>& parts,
                         const std::vector<std::string>& basepoints = {});

struct BoundedWitness {
    Rat scale;
    std::vector<std::vector<std::string>> bounded_sets;  // per part, total ids
    ValidationReport violations;                         // empty iff witness valid

    bool valid() const { return violations.empty(); }
};

// Canonical witness for the defining condition at scale M: inside each part
// whose base value is at most M, take the ball of radius M around the
// basepoint; then exhaustively check that remaining cross-part pairs are
// more than M apart.
BoundedWitness verify_union_at_scale(const CoarseUnion& u, const Rat& M);

// Views an integral ultrametric space as the coarse disjoint union of its
// radial fibers around x0 (parts ordered by radius, base value = radius).
// The total keeps the original metric, which already satisfies the
// cross-fiber max rule.
CoarseUnion radial_block_decomposition(const FiniteMetricSpace& m, const std::string& x0);

struct DistortionTable {
    // (R, max output distance over pairs with input distance <= R)
    std::vector<std::pair<Rat, Rat>> forward;
    // (R, max input distance over pairs with output distance <= R)
    std::vector<std::pair<Rat, Rat>> backward;
};

DistortionTable distortion_table(const FiniteMetricSpace& from,
                                 const FiniteMetricSpace& to,
                                 const std::map<std::string, std::string>& map);

struct MapUnionResult {
    std::map<std::string, std::string> total_map;
    DistortionTable distortion;
};

// Induced map of unions from per-part isometric embeddings (verified; throws
// if any part map fails isometry or indices mismatch).
MapUnionResult map_union(const CoarseUnion& u, const CoarseUnion& v,
                         const std::vector<std::map<std::string, std::string>>& part_maps);

struct BoundedPiece {
    std::size_t part_index;
    std::vector<std::string> ids;
    Rat diameter;
};

// Decomposes a point set into its per-part pieces with diameters; at finite
// truncation the count of touched parts is finite by construction.
std::vector<BoundedPiece> union_boundedness_check(const CoarseUnion& u,
                                                  const std::vector<std::string>& subset);

}  // namespace ultra
