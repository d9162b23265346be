#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "ultra/coarse_union.hpp"
#include "ultra/splice.hpp"
#include "ultra/validate.hpp"

using namespace ultra;
using testsupport::Rng;

namespace {

FiniteMetricSpace two_points(const std::string& a, const std::string& b, const Rat& d) {
    return FiniteMetricSpace({a, b}, {{Rat(0), d}, {d, Rat(0)}});
}

// base {u, t} at the given distance, fiber over u = {x1, x2}, fiber over t = {y1}
SpliceSpec example_spec(const Rat& base_dist, const Rat& fiber_diam) {
    SpliceSpec spec;
    spec.base = two_points("u", "t", base_dist);
    spec.fibers.emplace("u", two_points("x1", "x2", fiber_diam));
    spec.fibers.emplace("t", FiniteMetricSpace::single("y1"));
    spec.section = {{"u", "x1"}, {"t", "y1"}};
    return spec;
}

SpliceSpec random_spec(Rng& rng, bool all_ultrametric) {
    SpliceSpec spec;
    std::size_t base_size = 2 + rng.below(4);  // 2..5
    spec.base = all_ultrametric
                    ? testsupport::random_integral_ultrametric(rng, base_size, 9)
                    : testsupport::random_metric(rng, base_size, 9);
    std::size_t counter = 0;
    for (const auto& b : spec.base.points()) {
        std::size_t fiber_size = 1 + rng.below(6);  // 1..6
        auto f = all_ultrametric
                     ? testsupport::random_integral_ultrametric(rng, fiber_size, 7)
                     : (rng.below(2) == 0
                            ? testsupport::random_metric(rng, fiber_size, 7)
                            : testsupport::random_rational_ultrametric(rng, fiber_size));
        std::vector<std::string> ids;
        std::vector<std::vector<Rat>> d(f.size(), std::vector<Rat>(f.size()));
        for (std::size_t a = 0; a < f.size(); ++a) {
            ids.push_back("f" + std::to_string(counter) + "_" + std::to_string(a));
            for (std::size_t c = 0; c < f.size(); ++c) d[a][c] = f.dist(a, c);
        }
        spec.fibers.emplace(b, FiniteMetricSpace(ids, std::move(d)));
        spec.section[b] = ids[rng.below(ids.size())];
        ++counter;
    }
    return spec;
}

}  // namespace

TEST_SUITE_BEGIN("splice-union");

TEST_CASE("splice_metric worked example") {
    auto spec = example_spec(Rat(7), Rat(3));
    auto total = splice_metric(spec);
    CHECK(total.dist("x1", "x2") == Rat(3));
    CHECK(total.dist("x2", "y1") == Rat(7));  // max(7, 3, 0)
    CHECK(total.dist("x1", "y1") == Rat(7));  // max(7, 0, 0)
}

TEST_CASE("splice with singleton fibers reproduces the base") {
    Rng rng(5);
    SpliceSpec spec;
    spec.base = testsupport::random_metric(rng, 4, 9);
    for (const auto& b : spec.base.points()) {
        spec.fibers.emplace(b, FiniteMetricSpace::single("p_" + b));
        spec.section[b] = "p_" + b;
    }
    auto total = splice_metric(spec);
    for (const auto& u : spec.base.points()) {
        for (const auto& t : spec.base.points()) {
            if (u < t) CHECK(total.dist("p_" + u, "p_" + t) == spec.base.dist(u, t));
        }
    }
}

TEST_CASE("splice is always a metric, ultrametric for ultrametric inputs") {
    Rng rng(17);
    for (int i = 0; i < 40; ++i) {
        bool ultra_inputs = i % 2 == 0;
        auto spec = random_spec(rng, ultra_inputs);
        auto total = splice_metric(spec);
        CHECK(validate_metric(total).empty());
        if (ultra_inputs) {
            CHECK(validate_ultrametric(total).empty());
            CHECK(is_integral(total));
        }
    }
}

TEST_CASE("section outside its fiber is rejected") {
    auto spec = example_spec(Rat(7), Rat(3));
    spec.section["u"] = "y1";
    CHECK_THROWS_AS(splice_metric(spec), std::invalid_argument);
}

TEST_CASE("section invariance") {
    SUBCASE("zero-diameter fibers") {
        SpliceSpec spec;
        spec.base = two_points("u", "t", Rat(7));
        spec.fibers.emplace("u", FiniteMetricSpace::single("x1"));
        spec.fibers.emplace("t", FiniteMetricSpace::single("y1"));
        spec.section = {{"u", "x1"}, {"t", "y1"}};
        auto report = splice_section_invariance(spec, {});
        CHECK(report.diameter_condition);
        CHECK(report.sections_agree);
        CHECK(report.equals_resolution_total);
    }

    SUBCASE("fibers within the base separation agree across all sections") {
        auto spec = example_spec(Rat(7), Rat(7));
        std::vector<std::map<std::string, std::string>> alternatives{
            {{"u", "x2"}, {"t", "y1"}}};
        auto report = splice_section_invariance(spec, alternatives);
        CHECK(report.diameter_condition);
        CHECK(report.sections_agree);
        CHECK(report.equals_resolution_total);
    }

    SUBCASE("oversized fiber exhibits a distinguishing pair of sections") {
        auto spec = example_spec(Rat(7), Rat(9));
        auto report = splice_section_invariance(spec, {});
        CHECK(!report.diameter_condition);
        CHECK(!report.sections_agree);
        REQUIRE(report.distinguishing_sections.has_value());
        REQUIRE(report.differing_pair.has_value());

        // replay the two sections and confirm they differ on the named pair
        SpliceSpec s1 = spec, s2 = spec;
        s1.section = report.distinguishing_sections->first;
        s2.section = report.distinguishing_sections->second;
        const auto& [p, q] = *report.differing_pair;
        CHECK(splice_metric(s1).dist(p, q) != splice_metric(s2).dist(p, q));
    }
}

TEST_CASE("coarse_union") {
    SUBCASE("worked example with stride 3") {
        std::vector<FiniteMetricSpace> parts{two_points("p", "q", Rat(2)),
                                             FiniteMetricSpace::single("r")};
        auto u = coarse_union(parts);
        REQUIRE(u.parts.size() == 2);
        CHECK(u.parts[0].base_value == Rat(3));  // stride 1 + diam 2
        CHECK(u.parts[1].base_value == Rat(6));
        CHECK(u.total.dist("1/p", "1/q") == Rat(2));
        CHECK(u.total.dist("1/p", "2/r") == Rat(6));  // max(6, 0, 0)
        CHECK(u.total.dist("1/q", "2/r") == Rat(6));  // max(6, 2, 0)
        CHECK(u.parts[0].basepoint == "1/p");
    }

    SUBCASE("single part is reproduced verbatim") {
        Rng rng(23);
        auto part = testsupport::random_integral_ultrametric(rng, 5, 6);
        auto u = coarse_union({part});
        CHECK(u.total.size() == part.size());
        for (const auto& x : part.points()) {
            for (const auto& y : part.points()) {
                if (x < y) CHECK(u.total.dist("1/" + x, "1/" + y) == part.dist(x, y));
            }
        }
        CHECK(u.part_of("1/g0") == std::size_t{0});
        CHECK(!u.part_of("elsewhere").has_value());
    }

    SUBCASE("explicit basepoints are honored and validated") {
        std::vector<FiniteMetricSpace> parts{two_points("p", "q", Rat(2)),
                                             FiniteMetricSpace::single("r")};
        auto u = coarse_union(parts, {"q", "r"});
        CHECK(u.parts[0].basepoint == "1/q");
        CHECK(u.total.dist("1/p", "2/r") == Rat(6));  // max(6, d(p,q)=2, 0)
        CHECK_THROWS_AS(coarse_union(parts, {"zz", "r"}), std::invalid_argument);
        CHECK_THROWS_AS(coarse_union(parts, {"q"}), std::invalid_argument);
    }

    SUBCASE("integral ultrametric parts give an integral ultrametric total") {
        Rng rng(29);
        for (int i = 0; i < 10; ++i) {
            std::vector<FiniteMetricSpace> parts;
            std::size_t count = 2 + rng.below(4);
            for (std::size_t k = 0; k < count; ++k) {
                parts.push_back(
                    testsupport::random_integral_ultrametric(rng, 1 + rng.below(6), 7));
            }
            auto u = coarse_union(parts);
            CHECK(validate_ultrametric(u.total).empty());
            CHECK(is_integral(u.total));

            // restriction to each part is the identity isometry
            for (std::size_t k = 0; k < parts.size(); ++k) {
                auto restricted = u.part_space(k);
                for (const auto& x : parts[k].points()) {
                    for (const auto& y : parts[k].points()) {
                        const std::string px = std::to_string(k + 1) + "/" + x;
                        const std::string py = std::to_string(k + 1) + "/" + y;
                        CHECK(restricted.dist(px, py) == parts[k].dist(x, y));
                    }
                }
            }
        }
    }
}

TEST_CASE("verify_union_at_scale") {
    Rng rng(37);
    std::vector<FiniteMetricSpace> parts;
    for (int k = 0; k < 5; ++k) {
        parts.push_back(testsupport::random_integral_ultrametric(rng, 1 + rng.below(6), 7));
    }
    auto u = coarse_union(parts);

    SUBCASE("scale zero needs no bounded sets") {
        auto w = verify_union_at_scale(u, Rat(0));
        CHECK(w.valid());
        for (const auto& b : w.bounded_sets) CHECK(b.empty());
    }

    SUBCASE("below the smallest cross-part distance") {
        Rat smallest = u.parts[0].base_value;  // cross distances are at least this
        auto w = verify_union_at_scale(u, smallest - 1);
        CHECK(w.valid());
        for (const auto& b : w.bounded_sets) CHECK(b.empty());
    }

    SUBCASE("witness at scale 10 and at every scale up to the top base value") {
        auto w10 = verify_union_at_scale(u, Rat(10));
        CHECK(w10.valid());

        long long top = static_cast<long long>(rat_floor(u.max_base_value()));
        for (long long M = 0; M <= top; ++M) {
            CHECK(verify_union_at_scale(u, Rat(M)).valid());
        }
    }
}

TEST_CASE("radial_block_decomposition") {
    SUBCASE("worked example") {
        FiniteMetricSpace m({"a", "b", "c"}, {{Rat(0), Rat(2), Rat(5)},
                                              {Rat(2), Rat(0), Rat(5)},
                                              {Rat(5), Rat(5), Rat(0)}});
        auto u = radial_block_decomposition(m, "a");
        REQUIRE(u.parts.size() == 3);
        CHECK(u.parts[0].ids == std::vector<std::string>{"a"});
        CHECK(u.parts[0].base_value == Rat(0));
        CHECK(u.parts[1].ids == std::vector<std::string>{"b"});
        CHECK(u.parts[1].base_value == Rat(2));
        CHECK(u.parts[2].ids == std::vector<std::string>{"c"});
        CHECK(u.parts[2].base_value == Rat(5));
    }

    SUBCASE("equidistant points give two blocks") {
        FiniteMetricSpace m({"o", "p", "q"}, {{Rat(0), Rat(3), Rat(3)},
                                              {Rat(3), Rat(0), Rat(3)},
                                              {Rat(3), Rat(3), Rat(0)}});
        auto u = radial_block_decomposition(m, "o");
        REQUIRE(u.parts.size() == 2);
        CHECK(u.parts[0].ids == std::vector<std::string>{"o"});
        CHECK(u.parts[1].ids == std::vector<std::string>{"p", "q"});
    }

    SUBCASE("generated spaces verify at every integer scale up to the diameter") {
        Rng rng(41);
        for (int i = 0; i < 8; ++i) {
            auto m = testsupport::random_integral_ultrametric(rng, 2 + rng.below(30), 8);
            auto u = radial_block_decomposition(m, m.point(rng.below(m.size())));
            long long top = static_cast<long long>(rat_floor(m.diameter()));
            for (long long M = 0; M <= top; ++M) {
                CHECK(verify_union_at_scale(u, Rat(M)).valid());
            }
        }
    }
}

TEST_CASE("map_union") {
    std::vector<FiniteMetricSpace> small{two_points("p", "q", Rat(2)),
                                         FiniteMetricSpace::single("r")};
    auto u = coarse_union(small);

    SUBCASE("identity maps have an identity distortion table") {
        std::vector<std::map<std::string, std::string>> maps(2);
        for (std::size_t k = 0; k < u.parts.size(); ++k) {
            for (const auto& id : u.parts[k].ids) maps[k][id] = id;
        }
        auto result = map_union(u, u, maps);
        for (const auto& [r, worst] : result.distortion.forward) CHECK(worst == r);
        for (const auto& [r, worst] : result.distortion.backward) CHECK(worst == r);
    }

    SUBCASE("parts embedded into larger parts keep within-part distances") {
        std::vector<FiniteMetricSpace> big{
            FiniteMetricSpace({"p", "q", "s"}, {{Rat(0), Rat(2), Rat(2)},
                                                {Rat(2), Rat(0), Rat(2)},
                                                {Rat(2), Rat(2), Rat(0)}}),
            two_points("r", "t", Rat(2))};
        auto v = coarse_union(big);
        std::vector<std::map<std::string, std::string>> maps{
            {{"1/p", "1/p"}, {"1/q", "1/q"}}, {{"2/r", "2/r"}}};
        auto result = map_union(u, v, maps);
        CHECK(result.total_map.size() == 3);

        // distortion tables are monotone
        for (std::size_t i = 1; i < result.distortion.forward.size(); ++i) {
            CHECK(result.distortion.forward[i - 1].second <=
                  result.distortion.forward[i].second);
        }
        for (std::size_t i = 1; i < result.distortion.backward.size(); ++i) {
            CHECK(result.distortion.backward[i - 1].second <=
                  result.distortion.backward[i].second);
        }
    }

    SUBCASE("non-isometric part maps are rejected") {
        std::vector<FiniteMetricSpace> other{two_points("p", "q", Rat(3)),
                                             FiniteMetricSpace::single("r")};
        auto v = coarse_union(other);
        std::vector<std::map<std::string, std::string>> maps{
            {{"1/p", "1/p"}, {"1/q", "1/q"}}, {{"2/r", "2/r"}}};
        CHECK_THROWS_AS(map_union(u, v, maps), std::invalid_argument);
    }

    SUBCASE("three generated parts produce a monotone distortion table") {
        Rng rng(47);
        std::vector<FiniteMetricSpace> parts;
        for (int k = 0; k < 3; ++k) {
            parts.push_back(
                testsupport::random_integral_ultrametric(rng, 2 + rng.below(4), 5));
        }
        auto w = coarse_union(parts);
        std::vector<std::map<std::string, std::string>> maps(3);
        for (std::size_t k = 0; k < w.parts.size(); ++k) {
            for (const auto& id : w.parts[k].ids) maps[k][id] = id;
        }
        auto result = map_union(w, w, maps);
        CHECK(!result.distortion.forward.empty());
        for (std::size_t i = 1; i < result.distortion.forward.size(); ++i) {
            CHECK(result.distortion.forward[i - 1].second <=
                  result.distortion.forward[i].second);
        }
        for (std::size_t i = 1; i < result.distortion.backward.size(); ++i) {
            CHECK(result.distortion.backward[i - 1].second <=
                  result.distortion.backward[i].second);
        }
    }
}

TEST_CASE("union_boundedness_check") {
    Rng rng(43);
    std::vector<FiniteMetricSpace> parts;
    for (int k = 0; k < 4; ++k) {
        parts.push_back(testsupport::random_integral_ultrametric(rng, 2 + rng.below(4), 5));
    }
    auto u = coarse_union(parts);

    SUBCASE("one whole part") {
        auto pieces = union_boundedness_check(u, u.parts[1].ids);
        REQUIRE(pieces.size() == 1);
        CHECK(pieces[0].part_index == 1);
        CHECK(pieces[0].ids.size() == u.parts[1].ids.size());
    }

    SUBCASE("empty set") {
        CHECK(union_boundedness_check(u, {}).empty());
    }

    SUBCASE("a ball around a basepoint only touches parts with small base values") {
        Rat M = u.parts[1].base_value;  // radius
        std::vector<std::string> ball;
        const std::string& center = u.parts[0].basepoint;
        for (const auto& id : u.total.points()) {
            if (u.total.dist(center, id) <= M) ball.push_back(id);
        }
        auto pieces = union_boundedness_check(u, ball);
        for (const auto& piece : pieces) {
            CHECK(u.parts[piece.part_index].base_value <= M);
        }
    }

    SUBCASE("ids outside every part are rejected") {
        CHECK_THROWS_AS(union_boundedness_check(u, {"nope"}), std::invalid_argument);
    }
}

TEST_SUITE_END();
