#pragma once

#include <map>
#include <string>

#include "ultra/metric_space.hpp"
#include "ultra/resolution.hpp"

namespace ultra {

/**
 * Finite universal space for D-ultrametric spaces with at most m points.
 * Point ids are "x" followed by the recursion path: '0' enters the first
 * part (scale set shrinks), '1' the second (point budget shrinks).
 */
struct FUSpace {
    long long m = 1;
    DSet D;
    FiniteMetricSpace space;
    std::map<std::string, std::string> labels;  // id -> recursion path
};

// Corrected recursion: FU(m,D) = FU(m, D\{k}) joined at distance k = max(D)
// with FU(m-1, D); FU(1,D) and FU(m,{0}) are single points. Universal for
// D-ultrametric spaces with at most m points; |FU(m,D)| = C(m-1+d, d) with
// d = |D|-1.
FUSpace build_FU(long long m, const DSet& D);

// The recursion with first part FU(m-1, D\{k}). Not universal (the 2-point
// space at distance 1 does not fit in the (2,{0,1,2}) instance); kept for
// reference and regression.
FUSpace build_FU_literal(long long m, const DSet& D);

long long fu_expected_size(long long m, const DSet& D);  // C(m-1+d, d)

// Splits a D-ultrametric space of diameter k = max(D) over the base {0, k}:
// picks the lexicographically first pair (a,b) at distance k; fiber 0 holds
// the points with d(x,a) < k (diameter < k), fiber k the rest.
Resolution top_split_two(const FiniteMetricSpace& m, const Rat& k);

// Isometric embedding of a D-ultrametric space with at most m points into
// build_FU(m, D). The result is verified pairwise before returning.
std::map<std::string, std::string> embed_into_FU(const FiniteMetricSpace& x,
                                                 long long m, const DSet& D);

}  // namespace ultra
