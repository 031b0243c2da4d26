#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ssc/newton.hpp"

using namespace ssc;

namespace {
LPolynomial lp(std::uint32_t p, unsigned g, std::vector<std::int64_t> a) {
    return LPolynomial{p, g, std::vector<BigInt>(a.begin(), a.end())};
}
}  // namespace

TEST_CASE("supersingular elliptic polygon") {
    NewtonPolygon np = newton_polygon(lp(3, 1, {1, 0, 3}));
    CHECK(np.vertices ==
          std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {2, 1}});
    REQUIRE(np.slopes.size() == 1);
    CHECK(np.slopes[0] == SlopeSegment{Rational(1, 2), 2});
    CHECK(is_supersingular(lp(3, 1, {1, 0, 3})));
    CHECK(p_rank(lp(3, 1, {1, 0, 3})) == 0);
}

TEST_CASE("ordinary elliptic polygon") {
    LPolynomial L = lp(3, 1, {1, -1, 3});
    NewtonPolygon np = newton_polygon(L);
    CHECK(np.vertices ==
          std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}, {2, 1}});
    REQUIRE(np.slopes.size() == 2);
    CHECK(np.slopes[0] == SlopeSegment{Rational(0), 1});
    CHECK(np.slopes[1] == SlopeSegment{Rational(1), 1});
    CHECK_FALSE(is_supersingular(L));
    CHECK(p_rank(L) == 1);
}

TEST_CASE("two-point hull for 1 + p^g T^2g") {
    LPolynomial L = lp(5, 6, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 15625});
    NewtonPolygon np = newton_polygon(L);
    CHECK(np.vertices ==
          std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {12, 6}});
    REQUIRE(np.slopes.size() == 1);
    CHECK(np.slopes[0] == SlopeSegment{Rational(1, 2), 12});
    CHECK(is_supersingular(L));
}

TEST_CASE("mixed slopes and p-rank") {
    // a = (1, 0, 2, 0, 6, 0, 27) over p = 3, g = 3: valuation points
    // (0,0), (2,0), (4,1), (6,3) give slopes {0 x2, 1/2 x2, 1 x2}.
    LPolynomial L = lp(3, 3, {1, 0, 2, 0, 6, 0, 27});
    REQUIRE(validate_weil(L).all_pass());
    NewtonPolygon np = newton_polygon(L);
    CHECK(np.slopes == std::vector<SlopeSegment>{{Rational(0), 2},
                                                 {Rational(1, 2), 2},
                                                 {Rational(1), 2}});
    CHECK(p_rank(L) == 2);
    CHECK_FALSE(is_supersingular(L));
}

TEST_CASE("synthesized polynomials: symmetry, endpoints, test equivalence") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> pick_p(0, 4);
    std::uniform_int_distribution<unsigned> pick_g(1, 6);
    const std::uint32_t ps[] = {2, 3, 5, 7, 13};
    for (int trial = 0; trial < 2000; ++trial) {
        std::uint32_t p = ps[pick_p(rng)];
        unsigned g = pick_g(rng);
        LPolynomial L = testing::synthesize_l_polynomial(rng, p, g);
        NewtonPolygon np = newton_polygon(L);

        REQUIRE(!np.vertices.empty());
        CHECK(np.vertices.front() == std::pair<unsigned, unsigned>{0, 0});
        CHECK(np.vertices.back() == std::pair<unsigned, unsigned>{2 * g, g});

        unsigned total = 0;
        for (const auto& s : np.slopes) total += s.multiplicity;
        CHECK(total == 2 * g);

        // Slope multiset symmetric under s -> 1 - s.
        auto mirrored = np.slopes;
        std::reverse(mirrored.begin(), mirrored.end());
        for (auto& s : mirrored) s.slope = Rational(1) - s.slope;
        CHECK(mirrored == np.slopes);

        // Nondecreasing slopes.
        for (std::size_t i = 1; i < np.slopes.size(); ++i)
            CHECK(np.slopes[i - 1].slope < np.slopes[i].slope);

        // Valuation test against the slope test; is_supersingular also
        // cross-checks internally and throws on disagreement.
        bool by_valuation = true;
        for (unsigned i = 1; i < 2 * g; ++i)
            if (L.a[i] != 0) {
                BigInt v = 0, t = L.a[i] < 0 ? -L.a[i] : L.a[i];
                while (t % p == 0) {
                    t /= p;
                    ++v;
                }
                if (2 * v < i) by_valuation = false;
            }
        CHECK(is_supersingular(L) == by_valuation);
    }
}

TEST_CASE("invalid polynomials are rejected by the polygon") {
    CHECK_THROWS_AS(newton_polygon(lp(3, 1, {1, 0, 5})), std::invalid_argument);
}
