#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ultra/metric_space.hpp"

namespace ultra {

struct SpaceParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * On-disk space document: the space itself plus optional sections used by
 * resolutions (projection), coarse unions (parts, basepoints) and universal
 * spaces (labels). Two formats are accepted: a JSON document with fields
 * `points` and `dist` (entries "p/q" or integers; decimal notation is
 * rejected), and a CSV matrix with a header row of ids.
 */
struct SpaceDocument {
    FiniteMetricSpace space;
    std::map<std::string, std::string> projection;
    std::vector<std::vector<std::string>> parts;
    std::vector<std::string> basepoints;
    std::map<std::string, std::string> labels;
};

SpaceDocument parse_space_text(const std::string& text);
SpaceDocument parse_space_file(const std::string& path);

// Canonical JSON rendering; byte-stable for identical documents.
std::string serialize_space(const SpaceDocument& doc);

}  // namespace ultra
