#include "ultra/lego.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ultra/components.hpp"
#include "ultra/validate.hpp"

namespace ultra {

namespace {

LegoNode decompose_ids(const FiniteMetricSpace& m, std::vector<std::string> ids) {
    if (ids.size() == 1) {
        LegoNode leaf;
        leaf.scale = Rat(0);
        leaf.leaf = ids.front();
        return leaf;
    }
    FiniteMetricSpace sub = m.restrict_to(ids);
    Rat diam = sub.diameter();
    auto blocks = threshold_blocks(sub, diam, /*strict=*/true);

    LegoNode node;
    node.scale = diam;
    for (auto& block : blocks) {
        node.children.push_back(decompose_ids(m, std::move(block)));
    }
    return node;
}

void collect_leaves(const LegoNode& node, std::vector<std::string>& out) {
    if (node.is_leaf()) {
        out.push_back(node.leaf);
        return;
    }
    for (const auto& c : node.children) collect_leaves(c, out);
}

}  // namespace

std::size_t LegoTree::leaf_count() const {
    std::vector<std::string> leaves;
    collect_leaves(root, leaves);
    return leaves.size();
}

LegoTree lego_decompose(const FiniteMetricSpace& m) {
    if (m.size() == 0) {
        throw std::invalid_argument("lego_decompose: empty space");
    }
    if (!is_ultrametric(m)) {
        throw std::invalid_argument("lego_decompose: space is not ultrametric");
    }
    std::vector<std::string> ids = m.points();
    std::sort(ids.begin(), ids.end());
    return {decompose_ids(m, std::move(ids))};
}

FiniteMetricSpace lego_metric(const LegoTree& tree) {
    std::vector<std::string> points;
    collect_leaves(tree.root, points);

    const std::size_t n = points.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[points[i]] = i;
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));

    // cross-child pairs at each internal node separate at that node's scale
    std::function<std::vector<std::string>(const LegoNode&)> walk =
        [&](const LegoNode& node) -> std::vector<std::string> {
        if (node.is_leaf()) return {node.leaf};
        std::vector<std::vector<std::string>> groups;
        for (const auto& c : node.children) groups.push_back(walk(c));
        for (std::size_t a = 0; a < groups.size(); ++a) {
            for (std::size_t b = a + 1; b < groups.size(); ++b) {
                for (const auto& x : groups[a]) {
                    for (const auto& y : groups[b]) {
                        d[index[x]][index[y]] = node.scale;
                        d[index[y]][index[x]] = node.scale;
                    }
                }
            }
        }
        std::vector<std::string> all;
        for (auto& g : groups) all.insert(all.end(), g.begin(), g.end());
        return all;
    };
    walk(tree.root);
    return FiniteMetricSpace(std::move(points), std::move(d));
}

bool lego_well_formed(const LegoTree& tree) {
    std::function<bool(const LegoNode&, const Rat*, bool)> walk =
        [&](const LegoNode& node, const Rat* parent_scale, bool is_root) -> bool {
        if (node.is_leaf()) return !node.leaf.empty();
        if (node.children.size() < 2) return false;
        if (node.scale <= 0) return false;
        if (!is_root && parent_scale && node.scale >= *parent_scale) return false;
        for (const auto& c : node.children) {
            if (!walk(c, &node.scale, false)) return false;
        }
        return true;
    };
    return walk(tree.root, nullptr, true);
}

namespace {

// Newick labels: quote when the id uses structural characters.
std::string newick_label(const std::string& id) {
    bool needs_quote = false;
    for (char c : id) {
        if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '\'' ||
            c == ' ' || c == '\t') {
            needs_quote = true;
            break;
        }
    }
    if (!needs_quote) return id;
    std::string out = "'";
    for (char c : id) {
        out += c;
        if (c == '\'') out += '\'';
    }
    return out + "'";
}

void newick_walk(const LegoNode& node, std::ostringstream& out) {
    if (node.is_leaf()) {
        out << newick_label(node.leaf);
        return;
    }
    out << "(";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out << ",";
        newick_walk(node.children[i], out);
    }
    out << ")" << rat_to_string(node.scale);
}

}  // namespace

std::string to_newick(const LegoTree& tree) {
    std::ostringstream out;
    newick_walk(tree.root, out);
    out << ";";
    return out.str();
}

std::string to_dot(const LegoTree& tree) {
    std::ostringstream out;
    out << "graph dendrogram {\n";
    std::size_t counter = 0;
    std::function<std::size_t(const LegoNode&)> walk =
        [&](const LegoNode& node) -> std::size_t {
        std::size_t id = counter++;
        if (node.is_leaf()) {
            out << "  n" << id << " [label=\"" << node.leaf << "\" shape=box];\n";
        } else {
            out << "  n" << id << " [label=\"" << rat_to_string(node.scale) << "\"];\n";
            for (const auto& c : node.children) {
                std::size_t cid = walk(c);
                out << "  n" << id << " -- n" << cid << ";\n";
            }
        }
        return id;
    };
    walk(tree.root);
    out << "}\n";
    return out.str();
}

}  // namespace ultra
