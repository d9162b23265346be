#include "ultra/metric_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ultra {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points,
                                     std::vector<std::vector<Rat>> matrix)
    : points_(std::move(points)) {
    const std::size_t n = points_.size();
    if (matrix.size() != n) {
        throw std::invalid_argument("distance matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (points_[i].empty()) {
            throw std::invalid_argument("empty point id");
        }
        if (!index_.emplace(points_[i], i).second) {
            throw std::invalid_argument("duplicate point id '" + points_[i] + "'");
        }
    }
    dist_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            throw std::invalid_argument("distance matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (matrix[i][j] < 0) {
                throw std::invalid_argument("negative distance between '" + points_[i] +
                                            "' and '" + points_[j] + "'");
            }
            dist_.push_back(std::move(matrix[i][j]));
        }
    }
    build_scaled();
}

void FiniteMetricSpace::build_scaled() {
    constexpr long long kMaxLcm = 1LL << 20;
    constexpr long long kMaxScaled = 1LL << 30;

    long long lcm = 1;
    for (const Rat& d : dist_) {
        Int den = rat_den(d);
        if (den > kMaxLcm) return;
        long long den_ll = static_cast<long long>(den);
        lcm = lcm / std::gcd(lcm, den_ll) * den_ll;
        if (lcm > kMaxLcm) return;
    }
    std::vector<long long> scaled;
    scaled.reserve(dist_.size());
    for (const Rat& d : dist_) {
        Int value = rat_num(d) * (lcm / static_cast<long long>(rat_den(d)));
        if (value > kMaxScaled) return;
        scaled.push_back(static_cast<long long>(value));
    }
    scale_ = lcm;
    scaled_ = std::move(scaled);
}

FiniteMetricSpace FiniteMetricSpace::single(const std::string& id) {
    return FiniteMetricSpace({id}, {{Rat(0)}});
}

bool FiniteMetricSpace::has_point(const std::string& id) const {
    return index_.count(id) > 0;
}

std::size_t FiniteMetricSpace::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw std::invalid_argument("unknown point id '" + id + "'");
    }
    return it->second;
}

Rat FiniteMetricSpace::diameter() const {
    if (size() < 2) return Rat(0);
    if (has_scaled()) {
        std::size_t bi = 0, bj = 0;
        long long best = -1;
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t j = i + 1; j < size(); ++j) {
                if (scaled_dist(i, j) > best) {
                    best = scaled_dist(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        return dist(bi, bj);
    }
    Rat d(0);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (dist(i, j) > d) d = dist(i, j);
        }
    }
    return d;
}

Rat FiniteMetricSpace::min_positive_distance() const {
    if (has_scaled()) {
        long long best = -1;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t j = i + 1; j < size(); ++j) {
                long long v = scaled_dist(i, j);
                if (v > 0 && (best < 0 || v < best)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        return best < 0 ? Rat(0) : dist(bi, bj);
    }
    Rat best(0);
    bool found = false;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            const Rat& d = dist(i, j);
            if (d > 0 && (!found || d < best)) {
                best = d;
                found = true;
            }
        }
    }
    return best;
}

FiniteMetricSpace FiniteMetricSpace::restrict_to(std::span<const std::string> ids) const {
    std::vector<std::string> pts(ids.begin(), ids.end());
    std::vector<std::size_t> at;
    at.reserve(pts.size());
    for (const auto& id : pts) at.push_back(index_of(id));
    std::vector<std::vector<Rat>> m(pts.size(), std::vector<Rat>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            m[i][j] = dist(at[i], at[j]);
        }
    }
    return FiniteMetricSpace(std::move(pts), std::move(m));
}

bool FiniteMetricSpace::same_metric(const FiniteMetricSpace& other) const {
    if (size() != other.size()) return false;
    std::vector<std::size_t> at(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto it = other.index_.find(points_[i]);
        if (it == other.index_.end()) return false;
        at[i] = it->second;
    }
    // equal metrics share the same denominator lcm, so equal scales line up
    bool fast = has_scaled() && other.has_scaled() && scale_ == other.scale_;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (fast) {
                if (scaled_dist(i, j) != other.scaled_dist(at[i], at[j])) return false;
            } else if (dist(i, j) != other.dist(at[i], at[j])) {
                return false;
            }
        }
    }
    return true;
}

DSet::DSet(std::vector<long long> values) : values_(std::move(values)) {
    if (values_.empty() || values_.front() != 0) {
        throw std::invalid_argument("DSet must start at 0");
    }
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (values_[i] <= values_[i - 1]) {
            throw std::invalid_argument("DSet values must be strictly increasing");
        }
    }
}

DSet DSet::from_values(std::vector<long long> values) {
    std::set<long long> s(values.begin(), values.end());
    s.insert(0);
    for (long long v : s) {
        if (v < 0) throw std::invalid_argument("DSet values must be non-negative");
    }
    return DSet(std::vector<long long>(s.begin(), s.end()));
}

DSet DSet::parse(const std::string& comma_separated) {
    std::vector<long long> vals;
    std::stringstream ss(comma_separated);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("bad DSet token '" + token + "'");
        }
        vals.push_back(v);
    }
    return from_values(std::move(vals));
}

DSet DSet::range(long long max_value) {
    std::vector<long long> vals;
    for (long long v = 0; v <= max_value; ++v) vals.push_back(v);
    return DSet(std::move(vals));
}

bool DSet::contains(long long v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

DSet DSet::without_max() const {
    if (values_.size() == 1) {
        throw std::invalid_argument("cannot drop 0 from a DSet");
    }
    return DSet(std::vector<long long>(values_.begin(), values_.end() - 1));
}

std::vector<long long> DSet::positives() const {
    return std::vector<long long>(values_.begin() + 1, values_.end());
}

std::string DSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
    }
    return out + "}";
}

}  // namespace ultra
