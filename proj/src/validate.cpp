#include "ultra/validate.hpp"

#include <sstream>

namespace ultra {

std::string report_to_text(const ValidationReport& report) {
    if (report.empty()) return "ok\n";
    std::ostringstream out;
    for (const auto& v : report) {
        out << v.kind << ":";
        for (const auto& id : v.ids) out << " " << id;
        if (!v.detail.empty()) out << " (" << v.detail << ")";
        out << "\n";
    }
    return out.str();
}

namespace {

// d(far_a, far_b) > d(far_a, mid) + d(mid, far_b)
void add_triangle_violation(ValidationReport& report, const FiniteMetricSpace& m,
                            std::size_t mid, std::size_t far_a, std::size_t far_b) {
    report.push_back({"triangle", {m.point(far_a), m.point(mid), m.point(far_b)},
                      rat_to_string(m.dist(far_a, far_b)) + " > " +
                          rat_to_string(m.dist(far_a, mid)) + " + " +
                          rat_to_string(m.dist(mid, far_b))});
}

}  // namespace

ValidationReport validate_metric(const FiniteMetricSpace& m) {
    ValidationReport report;
    const std::size_t n = m.size();
    const bool fast = m.has_scaled();

    for (std::size_t i = 0; i < n; ++i) {
        bool zero = fast ? m.scaled_dist(i, i) == 0 : m.dist(i, i) == 0;
        if (!zero) {
            report.push_back({"diagonal", {m.point(i)},
                              "d = " + rat_to_string(m.dist(i, i))});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool symmetric = fast ? m.scaled_dist(i, j) == m.scaled_dist(j, i)
                                  : m.dist(i, j) == m.dist(j, i);
            if (!symmetric) {
                report.push_back({"asymmetry", {m.point(i), m.point(j)},
                                  rat_to_string(m.dist(i, j)) + " vs " +
                                      rat_to_string(m.dist(j, i))});
            }
            bool zero = fast ? m.scaled_dist(i, j) == 0 : m.dist(i, j) == 0;
            if (zero) {
                report.push_back({"zero-offdiagonal", {m.point(i), m.point(j)}, ""});
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                // sides: a = d(j,k), b = d(i,k), c = d(i,j)
                bool bad_a, bad_b, bad_c;
                if (fast) {
                    long long a = m.scaled_dist(j, k);
                    long long b = m.scaled_dist(i, k);
                    long long c = m.scaled_dist(i, j);
                    bad_a = a > b + c;
                    bad_b = !bad_a && b > a + c;
                    bad_c = !bad_a && !bad_b && c > a + b;
                } else {
                    const Rat& a = m.dist(j, k);
                    const Rat& b = m.dist(i, k);
                    const Rat& c = m.dist(i, j);
                    bad_a = a > b + c;
                    bad_b = !bad_a && b > a + c;
                    bad_c = !bad_a && !bad_b && c > a + b;
                }
                if (bad_a) add_triangle_violation(report, m, i, j, k);
                if (bad_b) add_triangle_violation(report, m, j, i, k);
                if (bad_c) add_triangle_violation(report, m, k, i, j);
            }
        }
    }
    return report;
}

ValidationReport validate_ultrametric(const FiniteMetricSpace& m) {
    ValidationReport report;
    const std::size_t n = m.size();
    const bool fast = m.has_scaled();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                // a side violates when it strictly exceeds both others
                int over = -1;  // 0: d(j,k), 1: d(i,k), 2: d(i,j)
                if (fast) {
                    long long a = m.scaled_dist(j, k);
                    long long b = m.scaled_dist(i, k);
                    long long c = m.scaled_dist(i, j);
                    if (a > b && a > c) over = 0;
                    else if (b > a && b > c) over = 1;
                    else if (c > a && c > b) over = 2;
                } else {
                    const Rat& a = m.dist(j, k);
                    const Rat& b = m.dist(i, k);
                    const Rat& c = m.dist(i, j);
                    if (a > b && a > c) over = 0;
                    else if (b > a && b > c) over = 1;
                    else if (c > a && c > b) over = 2;
                }
                if (over < 0) continue;
                std::size_t pa = over == 0 ? j : i;
                std::size_t pb = over == 0 ? k : (over == 1 ? k : j);
                std::size_t mid = over == 0 ? i : (over == 1 ? j : k);
                report.push_back(
                    {"ultrametric", {m.point(pa), m.point(mid), m.point(pb)},
                     rat_to_string(m.dist(pa, pb)) + " > max(" +
                         rat_to_string(m.dist(pa, mid)) + ", " +
                         rat_to_string(m.dist(mid, pb)) + ")"});
            }
        }
    }
    return report;
}

ValidationReport validate_isosceles(const FiniteMetricSpace& m) {
    ValidationReport report;
    const std::size_t n = m.size();
    const bool fast = m.has_scaled();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                bool scalene;
                if (fast) {
                    long long a = m.scaled_dist(j, k);
                    long long b = m.scaled_dist(i, k);
                    long long c = m.scaled_dist(i, j);
                    scalene = a != b && b != c && a != c;
                } else {
                    const Rat& a = m.dist(j, k);
                    const Rat& b = m.dist(i, k);
                    const Rat& c = m.dist(i, j);
                    scalene = a != b && b != c && a != c;
                }
                if (scalene) {
                    report.push_back(
                        {"isosceles", {m.point(i), m.point(j), m.point(k)},
                         "sides " + rat_to_string(m.dist(i, j)) + ", " +
                             rat_to_string(m.dist(i, k)) + ", " +
                             rat_to_string(m.dist(j, k)) + " all distinct"});
                }
            }
        }
    }
    return report;
}

bool is_ultrametric(const FiniteMetricSpace& m) {
    return validate_metric(m).empty() && validate_ultrametric(m).empty();
}

ValueSetResult value_set(const FiniteMetricSpace& m) {
    std::vector<long long> values;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const Rat& d = m.dist(i, j);
            if (!rat_is_integer(d)) {
                return {std::nullopt, std::make_pair(m.point(i), m.point(j))};
            }
            values.push_back(static_cast<long long>(rat_num(d)));
        }
    }
    return {DSet::from_values(std::move(values)), std::nullopt};
}

bool is_integral(const FiniteMetricSpace& m) { return value_set(m).ok(); }

}  // namespace ultra
