#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"
#include "ultra/chain_metric.hpp"
#include "ultra/components.hpp"
#include "ultra/validate.hpp"

using namespace ultra;
using testsupport::Rng;

namespace {

FiniteMetricSpace triangle(const Rat& ab, const Rat& ac, const Rat& bc) {
    return FiniteMetricSpace({"a", "b", "c"}, {{Rat(0), ab, ac},
                                               {ab, Rat(0), bc},
                                               {ac, bc, Rat(0)}});
}

FiniteMetricSpace line(const std::vector<Rat>& coords) {
    std::vector<std::string> ids;
    for (const Rat& c : coords) ids.push_back(rat_to_string(c));
    std::vector<std::vector<Rat>> d(coords.size(), std::vector<Rat>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (std::size_t j = 0; j < coords.size(); ++j) {
            d[i][j] = coords[i] > coords[j] ? coords[i] - coords[j] : coords[j] - coords[i];
        }
    }
    return FiniteMetricSpace(std::move(ids), std::move(d));
}

}  // namespace

TEST_SUITE_BEGIN("metric-core");

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("3/2") == Rat(3, 2));
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("-4/6") == Rat(-2, 3));
    CHECK(rat_to_string(Rat(10, 4)) == "5/2");
    CHECK(rat_to_string(Rat(8, 4)) == "2");
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("least integer exceeding") {
    CHECK(least_integer_exceeding(Rat(0)) == Rat(1));
    CHECK(least_integer_exceeding(Rat(1, 2)) == Rat(1));
    CHECK(least_integer_exceeding(Rat(1)) == Rat(2));
    CHECK(least_integer_exceeding(Rat(19, 2)) == Rat(10));
    CHECK(least_integer_exceeding(Rat(10)) == Rat(11));
}

TEST_CASE("space construction rejects malformed matrices") {
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{Rat(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "a"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{Rat(0), Rat(-1)}, {Rat(-1), Rat(0)}}),
                    std::invalid_argument);
}

TEST_CASE("validate_metric") {
    CHECK(validate_metric(FiniteMetricSpace::single("p")).empty());

    auto bad = validate_metric(triangle(Rat(1), Rat(1), Rat(3)));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == "triangle");

    Rng rng(42);
    auto space = testsupport::random_integral_ultrametric(rng, 20, 6);
    CHECK(validate_metric(space).empty());
}

TEST_CASE("validate_ultrametric") {
    FiniteMetricSpace two({"a", "b"}, {{Rat(0), Rat(7, 3)}, {Rat(7, 3), Rat(0)}});
    CHECK(validate_ultrametric(two).empty());

    CHECK(validate_ultrametric(triangle(Rat(1), Rat(2), Rat(2))).empty());

    auto bad = validate_ultrametric(triangle(Rat(1), Rat(1), Rat(2)));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == "ultrametric");
}

TEST_CASE("validate_isosceles") {
    CHECK(validate_isosceles(triangle(Rat(1), Rat(2), Rat(2))).empty());
    CHECK(!validate_isosceles(triangle(Rat(1), Rat(2), Rat(3))).empty());

    // every ultrametric space is isosceles
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        auto space = testsupport::random_rational_ultrametric(rng, 3 + rng.below(10));
        CHECK(validate_ultrametric(space).empty());
        CHECK(validate_isosceles(space).empty());
    }
}

TEST_CASE("value_set") {
    auto vs = value_set(triangle(Rat(2), Rat(5), Rat(5)));
    REQUIRE(vs.ok());
    CHECK(vs.dset->values() == std::vector<long long>{0, 2, 5});

    auto single = value_set(FiniteMetricSpace::single("p"));
    REQUIRE(single.ok());
    CHECK(single.dset->values() == std::vector<long long>{0});

    auto bad = value_set(triangle(Rat(3, 2), Rat(2), Rat(2)));
    CHECK(!bad.ok());
    CHECK(bad.non_integral_pair.value() == std::pair<std::string, std::string>{"a", "b"});
}

TEST_CASE("r_components thresholds") {
    auto l = line({Rat(0), Rat(1), Rat(2)});

    auto p1 = r_components(l, Rat(1));
    CHECK(p1.blocks.size() == 3);

    auto p2 = r_components(l, Rat(3, 2));
    REQUIRE(p2.blocks.size() == 1);
    CHECK(p2.blocks[0].size() == 3);

    auto p3 = r_components(l, l.diameter() + 1);
    CHECK(p3.blocks.size() == 1);

    CHECK_THROWS_AS(r_components(l, Rat(0)), std::invalid_argument);
}

TEST_CASE("r_components coarsen monotonically") {
    Rng rng(11);
    auto space = testsupport::random_rational_ultrametric(rng, 12);

    // at or below the minimum positive distance every block is a singleton
    auto fine = r_components(space, space.min_positive_distance());
    CHECK(fine.blocks.size() == space.size());

    std::vector<Rat> scales{Rat(1, 2), Rat(1), Rat(2), Rat(4), Rat(8), Rat(16)};
    std::size_t previous = space.size() + 1;
    for (const Rat& r : scales) {
        auto part = r_components(space, r);
        CHECK(part.blocks.size() <= previous);
        previous = part.blocks.size();
    }
}

TEST_CASE("chain metric frozen examples") {
    // identity on the integer line {0,1,2}: every pair needs r = 2
    auto l = line({Rat(0), Rat(1), Rat(2)});
    auto chain = chain_ultrametric_identity(l);
    CHECK(chain.injective);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            CHECK(chain.space.dist(i, j) == Rat(2));
        }
    }

    // {0, 1/2, 10, 21/2}: the half-steps connect at r = 1, the gap forces 10
    auto gaps = line({Rat(0), Rat(1, 2), Rat(10), Rat(21, 2)});
    auto c2 = chain_ultrametric_identity(gaps).space;
    CHECK(c2.dist("0", "1/2") == Rat(1));
    CHECK(c2.dist("10", "21/2") == Rat(1));
    CHECK(c2.dist("0", "10") == Rat(10));
    CHECK(c2.dist("0", "21/2") == Rat(10));
    CHECK(c2.dist("1/2", "10") == Rat(10));
    CHECK(c2.dist("1/2", "21/2") == Rat(10));

    auto single = chain_ultrametric_identity(FiniteMetricSpace::single("p"));
    CHECK(single.space.size() == 1);
}

TEST_CASE("chain metric with non-injective map") {
    auto target = line({Rat(0), Rat(5)});
    std::map<std::string, std::string> f{{"x", "0"}, {"y", "0"}, {"z", "5"}};
    std::vector<std::string> domain{"x", "y", "z"};

    auto result = chain_ultrametric(domain, f, target);
    CHECK(!result.injective);
    CHECK(result.space.dist("x", "y") == Rat(1));  // distinct points, equal images
    CHECK(result.space.dist("x", "z") == Rat(6));

    CHECK_THROWS_AS(chain_ultrametric(domain, f, target, /*require_injective=*/true),
                    std::invalid_argument);
}

TEST_CASE("chain metric agrees with the brute-force sweep") {
    Rng rng(101);
    for (int i = 0; i < 30; ++i) {
        auto space = i % 2 == 0
                         ? testsupport::random_rational_ultrametric(rng, 2 + rng.below(11))
                         : testsupport::random_metric(rng, 2 + rng.below(11), 12);
        auto fast = chain_ultrametric_identity(space).space;
        auto slow = testsupport::chain_oracle_identity(space);
        CHECK(fast.same_metric(slow));

        // integral ultrametric output
        CHECK(is_integral(fast));
        CHECK(validate_ultrametric(fast).empty());

        // d^ul <= d + 1 for the identity map
        for (std::size_t a = 0; a < space.size(); ++a) {
            for (std::size_t b = a + 1; b < space.size(); ++b) {
                CHECK(fast.dist(a, b) <= space.dist(a, b) + 1);
            }
        }
    }
}

TEST_CASE("isosceles spaces satisfy the 2-Lipschitz bound") {
    Rng rng(202);
    for (int i = 0; i < 20; ++i) {
        auto space = testsupport::random_rational_ultrametric(rng, 2 + rng.below(10));
        auto chain = chain_ultrametric_identity(space).space;
        for (std::size_t a = 0; a < space.size(); ++a) {
            for (std::size_t b = 0; b < space.size(); ++b) {
                if (a == b) continue;
                CHECK(space.dist(a, b) < 2 * chain.dist(a, b));
            }
        }
    }
}

TEST_CASE("separated_net") {
    auto l = line({Rat(0), Rat(1, 2), Rat(1), Rat(3)});
    CHECK(separated_net(l, Rat(1)) == std::vector<std::string>{"0", "3"});

    auto sparse = line({Rat(0), Rat(10), Rat(20)});
    CHECK(separated_net(sparse, Rat(1)).size() == 3);

    CHECK(separated_net(FiniteMetricSpace::single("p"), Rat(1)) ==
          std::vector<std::string>{"p"});

    // maximality: every excluded point is within r of a kept one
    Rng rng(303);
    for (int i = 0; i < 10; ++i) {
        auto space = testsupport::random_metric(rng, 2 + rng.below(12), 8);
        auto net = separated_net(space, Rat(1));
        for (const auto& p : space.points()) {
            bool kept = std::find(net.begin(), net.end(), p) != net.end();
            if (kept) continue;
            bool covered = false;
            for (const auto& q : net) {
                if (space.dist(p, q) <= 1) covered = true;
            }
            CHECK(covered);
        }
    }
}

TEST_CASE("discretize") {
    SUBCASE("integral ultrametric with all distances above 1") {
        Rng rng(404);
        std::vector<Rat> pool{Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
        for (int i = 0; i < 10; ++i) {
            auto base = testsupport::random_ultrametric(rng, 2 + rng.below(10), pool);
            auto disc = discretize(base);
            CHECK(disc.net.size() == base.size());
            for (std::size_t a = 0; a < base.size(); ++a) {
                for (std::size_t b = a + 1; b < base.size(); ++b) {
                    const Rat& original = base.dist(a, b);
                    const Rat& coarse =
                        disc.ultrametric.dist(base.point(a), base.point(b));
                    CHECK(original <= coarse);
                    CHECK(coarse <= original + 1);
                }
            }
        }
    }

    SUBCASE("single point") {
        auto disc = discretize(FiniteMetricSpace::single("p"));
        CHECK(disc.net == std::vector<std::string>{"p"});
        CHECK(disc.ultrametric.size() == 1);
    }

    SUBCASE("two tight clusters straddling a gap") {
        FiniteMetricSpace m({"a1", "a2", "b1", "b2"},
                            {{Rat(0), Rat(1, 2), Rat(100), Rat(100)},
                             {Rat(1, 2), Rat(0), Rat(100), Rat(100)},
                             {Rat(100), Rat(100), Rat(0), Rat(1, 2)},
                             {Rat(100), Rat(100), Rat(1, 2), Rat(0)}});
        auto disc = discretize(m);
        CHECK(disc.net == std::vector<std::string>{"a1", "b1"});
        CHECK(disc.ultrametric.dist("a1", "b1") == Rat(101));
        CHECK(disc.nearest_net.at("a2") == "a1");
        CHECK(disc.nearest_net.at("b2") == "b1");

        // brute-force confirmation on the same instance
        auto oracle = testsupport::chain_oracle(
            disc.net, {{"a1", "a1"}, {"b1", "b1"}}, m);
        CHECK(oracle.same_metric(disc.ultrametric));
    }
}

TEST_SUITE_END();
