#include "ultra/space_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ultra {

namespace {

using ordered_json = nlohmann::ordered_json;

Rat entry_to_rational(const ordered_json& cell) {
    try {
        if (cell.is_string()) return parse_rational(cell.get<std::string>());
        if (cell.is_number_integer()) return Rat(cell.get<long long>());
    } catch (const std::invalid_argument& e) {
        throw SpaceParseError(e.what());
    }
    throw SpaceParseError("distance entries must be integers or \"p/q\" strings");
}

SpaceDocument parse_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SpaceParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("points") || !j.contains("dist")) {
        throw SpaceParseError("space document needs 'points' and 'dist'");
    }

    std::vector<std::string> points;
    for (const auto& p : j.at("points")) {
        if (!p.is_string()) throw SpaceParseError("point ids must be strings");
        points.push_back(p.get<std::string>());
    }

    const auto& rows = j.at("dist");
    if (!rows.is_array() || rows.size() != points.size()) {
        throw SpaceParseError("dist must be a square matrix over the points");
    }
    std::vector<std::vector<Rat>> matrix;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != points.size()) {
            throw SpaceParseError("dist must be a square matrix over the points");
        }
        std::vector<Rat> r;
        for (const auto& cell : row) r.push_back(entry_to_rational(cell));
        matrix.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t k = i + 1; k < points.size(); ++k) {
            if (matrix[i][k] != matrix[k][i]) {
                throw SpaceParseError("asymmetric matrix at '" + points[i] + "','" +
                                      points[k] + "'");
            }
        }
    }

    SpaceDocument doc;
    try {
        doc.space = FiniteMetricSpace(points, std::move(matrix));
    } catch (const std::invalid_argument& e) {
        throw SpaceParseError(e.what());
    }

    auto require_id = [&](const std::string& id) {
        if (!doc.space.has_point(id)) {
            throw SpaceParseError("section references unknown id '" + id + "'");
        }
    };
    if (j.contains("projection")) {
        for (const auto& [key, value] : j.at("projection").items()) {
            require_id(key);
            doc.projection[key] = value.get<std::string>();
        }
    }
    if (j.contains("parts")) {
        for (const auto& part : j.at("parts")) {
            std::vector<std::string> ids;
            for (const auto& id : part) {
                require_id(id.get<std::string>());
                ids.push_back(id.get<std::string>());
            }
            doc.parts.push_back(std::move(ids));
        }
    }
    if (j.contains("basepoints")) {
        for (const auto& id : j.at("basepoints")) {
            require_id(id.get<std::string>());
            doc.basepoints.push_back(id.get<std::string>());
        }
    }
    if (j.contains("labels")) {
        for (const auto& [key, value] : j.at("labels").items()) {
            require_id(key);
            doc.labels[key] = value.get<std::string>();
        }
    }
    return doc;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        std::size_t a = cell.find_first_not_of(" \t\r");
        std::size_t b = cell.find_last_not_of(" \t\r");
        cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

SpaceDocument parse_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw SpaceParseError("empty CSV document");

    auto header = split_csv_line(lines.front());
    if (header.size() < 2 || !header.front().empty()) {
        throw SpaceParseError("CSV header must be ',id1,id2,...'");
    }
    std::vector<std::string> points(header.begin() + 1, header.end());
    if (lines.size() != points.size() + 1) {
        throw SpaceParseError("CSV row count does not match the header");
    }

    std::vector<std::vector<Rat>> matrix;
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto cells = split_csv_line(lines[i + 1]);
        if (cells.size() != points.size() + 1 || cells.front() != points[i]) {
            throw SpaceParseError("CSV row " + std::to_string(i + 1) +
                                  " does not match the header order");
        }
        std::vector<Rat> row;
        for (std::size_t k = 1; k < cells.size(); ++k) {
            try {
                row.push_back(parse_rational(cells[k]));
            } catch (const std::invalid_argument& e) {
                throw SpaceParseError(e.what());
            }
        }
        matrix.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t k = i + 1; k < points.size(); ++k) {
            if (matrix[i][k] != matrix[k][i]) {
                throw SpaceParseError("asymmetric matrix at '" + points[i] + "','" +
                                      points[k] + "'");
            }
        }
    }

    SpaceDocument doc;
    try {
        doc.space = FiniteMetricSpace(std::move(points), std::move(matrix));
    } catch (const std::invalid_argument& e) {
        throw SpaceParseError(e.what());
    }
    return doc;
}

}  // namespace

SpaceDocument parse_space_text(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_json(text);
        return parse_csv(text);
    }
    throw SpaceParseError("empty document");
}

SpaceDocument parse_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpaceParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_space_text(buffer.str());
}

std::string serialize_space(const SpaceDocument& doc) {
    ordered_json j;
    j["points"] = doc.space.points();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < doc.space.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < doc.space.size(); ++k) {
            row.push_back(rat_to_string(doc.space.dist(i, k)));
        }
        rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    if (!doc.projection.empty()) {
        ordered_json proj;
        for (const auto& [key, value] : doc.projection) proj[key] = value;
        j["projection"] = std::move(proj);
    }
    if (!doc.parts.empty()) j["parts"] = doc.parts;
    if (!doc.basepoints.empty()) j["basepoints"] = doc.basepoints;
    if (!doc.labels.empty()) {
        ordered_json labels;
        for (const auto& [key, value] : doc.labels) labels[key] = value;
        j["labels"] = std::move(labels);
    }
    return j.dump(2) + "\n";
}

}  // namespace ultra
