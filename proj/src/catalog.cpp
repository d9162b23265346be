#include "ultra/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "ultra/fu.hpp"

namespace ultra {

namespace {

std::string encode_node(const LegoNode& node) {
    if (node.is_leaf()) return "*";
    std::vector<std::string> enc;
    for (const auto& c : node.children) enc.push_back(encode_node(c));
    std::sort(enc.begin(), enc.end());
    std::string out = "(" + rat_to_string(node.scale) + "|";
    for (std::size_t i = 0; i < enc.size(); ++i) {
        if (i) out += ",";
        out += enc[i];
    }
    return out + ")";
}

struct ClassTree {
    std::string encoding;
    LegoNode node;
    std::size_t leaves;
};

// All class trees with exactly `p` leaves and scales drawn from the first
// `scale_count` positive values of D, memoized. Children are chosen as
// non-decreasing sequences of previously enumerated classes, which yields
// each multiset exactly once.
class Enumerator {
public:
    explicit Enumerator(std::vector<long long> positive_scales)
        : scales_(std::move(positive_scales)) {}

    const std::vector<ClassTree>& classes(std::size_t p, std::size_t scale_count) {
        auto key = std::make_pair(p, scale_count);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::vector<ClassTree> out;
        if (p == 1) {
            LegoNode leaf;
            leaf.scale = Rat(0);
            leaf.leaf = "?";
            out.push_back({"*", leaf, 1});
        } else {
            for (std::size_t si = 0; si < scale_count; ++si) {
                // si-th scale at the root; children use scales below it
                std::vector<ClassTree> pool;
                for (std::size_t q = 1; q < p; ++q) {
                    const auto& sub = classes(q, si);
                    pool.insert(pool.end(), sub.begin(), sub.end());
                }
                std::sort(pool.begin(), pool.end(),
                          [](const ClassTree& a, const ClassTree& b) {
                              return a.encoding < b.encoding;
                          });
                std::vector<const ClassTree*> chosen;
                std::function<void(std::size_t, std::size_t)> pick =
                    [&](std::size_t start, std::size_t remaining) {
                        if (remaining == 0) {
                            if (chosen.size() < 2) return;
                            LegoNode node;
                            node.scale = Rat(scales_[si]);
                            for (const auto* c : chosen) node.children.push_back(c->node);
                            out.push_back({encode_node(node), std::move(node), p});
                            return;
                        }
                        for (std::size_t i = start; i < pool.size(); ++i) {
                            if (pool[i].leaves > remaining) continue;
                            chosen.push_back(&pool[i]);
                            pick(i, remaining - pool[i].leaves);
                            chosen.pop_back();
                        }
                    };
                pick(0, p);
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::vector<long long> scales_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ClassTree>> memo_;
};

void label_leaves(LegoNode& node, std::size_t& counter) {
    if (node.is_leaf()) {
        node.leaf = "q" + std::to_string(counter++);
        return;
    }
    for (auto& c : node.children) label_leaves(c, counter);
}

}  // namespace

std::string canonical_encoding(const LegoTree& tree) { return encode_node(tree.root); }

UltraCatalog enumerate_ultrametrics(long long m, const DSet& D) {
    if (m < 1) throw std::invalid_argument("enumerate_ultrametrics: m must be >= 1");
    if (fu_expected_size(m, D) > 10000) {
        throw std::invalid_argument("enumerate_ultrametrics: (m, D) exceeds the guard");
    }

    UltraCatalog cat;
    cat.m = m;
    cat.D = D;
    Enumerator en(D.positives());
    std::size_t scale_count = D.positives().size();
    for (long long p = 1; p <= m; ++p) {
        std::vector<ClassTree> trees =
            en.classes(static_cast<std::size_t>(p), scale_count);
        std::sort(trees.begin(), trees.end(), [](const ClassTree& a, const ClassTree& b) {
            return a.encoding < b.encoding;
        });
        for (auto& t : trees) {
            std::size_t counter = 0;
            label_leaves(t.node, counter);
            cat.spaces.push_back(lego_metric(LegoTree{t.node}));
            cat.encodings.push_back(t.encoding);
        }
    }
    return cat;
}

}  // namespace ultra
