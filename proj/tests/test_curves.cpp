#include <doctest.h>

#include <random>

#include "ssc/count.hpp"
#include "ssc/curves.hpp"

using namespace ssc;

namespace {
FpPoly ipoly(std::uint32_t p, std::vector<std::int64_t> c) {
    return FpPoly::from_integers(PrimeModulus(p), c);
}
}  // namespace

TEST_CASE("curve construction and genus") {
    SuperellipticCurve m6 = make_curve(PrimeModulus(2), 3, ipoly(2, {0, -1, 0, 0, 1}));
    CHECK(m6.rhs_degree() == 4);
    CHECK(m6.delta() == 1);
    CHECK(m6.genus() == 3);

    SuperellipticCurve m8 =
        make_curve(PrimeModulus(7), 2, ipoly(7, {0, 1, 0, 9, 0, 6, 0, 1}));
    CHECK(m8.genus() == 3);

    SuperellipticCurve m16 = make_curve(PrimeModulus(2), 5, ipoly(2, {0, 1, 3, -24, 1}));
    CHECK(m16.rhs() == ipoly(2, {0, 1, 1, 0, 1}));  // x^4 + x^2 + x
    CHECK(m16.genus() == 6);

    SuperellipticCurve elliptic = make_curve(PrimeModulus(5), 2, ipoly(5, {0, 1, 0, 1}));
    CHECK(elliptic.genus() == 1);
}

TEST_CASE("curve construction rejections") {
    // f' = 4x^3 - 1 = x^3 - 1 mod 3 shares the root x = 1 with x^4 - x.
    CHECK_THROWS_AS(make_curve(PrimeModulus(3), 3, ipoly(3, {0, -1, 0, 0, 1})),
                    InseparableModel);
    CHECK_THROWS_AS(make_curve(PrimeModulus(3), 2, ipoly(3, {1, 0, 0, 1})),
                    InseparableModel);  // (x+1)^3
    CHECK_THROWS_AS(make_curve(PrimeModulus(2), 2, ipoly(2, {1, 1, 0, 1})), WildCover);
    CHECK_THROWS_AS(make_curve(PrimeModulus(5), 2, ipoly(5, {2})),
                    std::invalid_argument);  // constant right-hand side
    CHECK_THROWS_AS(make_curve(PrimeModulus(5), 2, FpPoly(PrimeModulus(5))),
                    std::invalid_argument);
    // gcd(m, d) = 2 with m = 4: neither 1 nor m.
    CHECK_THROWS_AS(make_curve(PrimeModulus(5), 4, ipoly(5, {1, 1, 0, 0, 0, 0, 1})),
                    UnsupportedInfinity);
}

TEST_CASE("m8 transformation") {
    SuperellipticCurve c = m8_to_hyperelliptic(ipoly(7, {1, 9, 6, 1}));
    CHECK(c.rhs() == ipoly(7, {0, 1, 0, 9, 0, 6, 0, 1}));
    CHECK(c.cover_degree() == 2);
    CHECK(family_of(c) == FamilyLabel::M8);

    // u^3 + 7u^2 + 14u + 7 reduces mod 3 to u^3 + u^2 + 2u + 1.
    SuperellipticCurve c3 = m8_to_hyperelliptic(ipoly(3, {7, 14, 7, 1}));
    CHECK(c3.rhs() == ipoly(3, {0, 1, 0, 2, 0, 1, 0, 1}));  // x^7 + x^5 + 2x^3 + x

    CHECK_THROWS_AS(m8_to_hyperelliptic(ipoly(3, {1, 0, 0, 1})), InseparableModel);
    CHECK_THROWS_AS(m8_to_hyperelliptic(ipoly(7, {0, 9, 6, 1})), ZeroConstantTerm);
    CHECK_THROWS_AS(m8_to_hyperelliptic(ipoly(7, {1, 6, 1})), std::invalid_argument);
    CHECK_THROWS_AS(m8_to_hyperelliptic(ipoly(2, {1, 1, 1, 1})), WildCover);
}

TEST_CASE("family classification") {
    CHECK(family_of(make_curve(PrimeModulus(2), 3, ipoly(2, {0, -1, 0, 0, 1}))) ==
          FamilyLabel::M6);
    CHECK(family_of(make_curve(PrimeModulus(7), 2, ipoly(7, {0, 1, 0, 9, 0, 6, 0, 1}))) ==
          FamilyLabel::M8);
    CHECK(family_of(make_curve(PrimeModulus(2), 5, ipoly(2, {0, 1, 1, 0, 1}))) ==
          FamilyLabel::M16);
    // Even-degree term x^2 disqualifies the hyperelliptic shape.
    CHECK(family_of(make_curve(PrimeModulus(5), 2, ipoly(5, {1, 0, 1, 0, 0, 0, 0, 1}))) ==
          FamilyLabel::Other);
    CHECK(family_of(make_curve(PrimeModulus(5), 2, ipoly(5, {0, 1, 0, 1}))) ==
          FamilyLabel::Other);
}

TEST_CASE("paper catalog shape") {
    const auto& cat = paper_catalog();
    REQUIRE(cat.size() == 3);

    CHECK(cat[0].label == FamilyLabel::M6);
    CHECK(cat[0].f_integer == std::vector<std::int64_t>{0, -1, 0, 0, 1});
    CHECK(cat[0].prime_condition.modulus == 3);
    CHECK(cat[0].prime_condition.residues == std::vector<std::uint32_t>{2});
    CHECK(cat[0].exceptional_primes.empty());

    CHECK(cat[1].label == FamilyLabel::M8);
    CHECK(cat[1].prime_condition.modulus == 4);
    CHECK(cat[1].prime_condition.residues == std::vector<std::uint32_t>{3});
    REQUIRE(cat[1].exceptional_primes.size() == 1);
    CHECK(cat[1].exceptional_primes[0].first == 3);

    CHECK(cat[2].label == FamilyLabel::M16);
    CHECK(cat[2].f_integer == std::vector<std::int64_t>{0, 1, 3, -24, 1});
    REQUIRE(cat[2].exceptional_primes.size() == 1);
    CHECK(cat[2].exceptional_primes[0] ==
          std::pair<std::uint32_t, std::vector<std::int64_t>>(
              3, std::vector<std::int64_t>{0, 7, -7, 0, 1}));  // x^4 - 7x^2 + 7x

    // The two printed forms of the p = 3 hyperelliptic input agree mod 3.
    CHECK(ipoly(3, {7, 14, 7, 1}) == ipoly(3, {1, -1, 1, 1}));
}

TEST_CASE("catalog reductions are separable for all matching p below 10^4") {
    for (const auto& entry : paper_catalog()) {
        for (std::uint32_t p : primes_up_to(10000)) {
            if (!entry.prime_condition.matches(p)) continue;
            bool exceptional = false;
            for (const auto& [pe, poly] : entry.exceptional_primes) exceptional |= pe == p;
            PrimeModulus pm(p);
            if (exceptional) {
                // The main model must degenerate at exactly the listed primes
                // and the replacement must pick up the slack.
                CHECK_THROWS_AS(make_curve(pm, entry.m,
                                           FpPoly::from_integers(pm, entry.f_integer)),
                                InseparableModel);
                CHECK_NOTHROW(entry.reduce(pm));
            } else {
                CHECK_NOTHROW(entry.reduce(pm));
            }
        }
    }
}

TEST_CASE("genus and counts are invariant under x -> x + c") {
    struct Case {
        std::uint32_t p;
        unsigned m;
        std::vector<std::int64_t> f;
    };
    for (const Case& cs : {Case{13, 3, {0, -1, 0, 0, 1}},
                           Case{7, 2, {0, 1, 0, 9, 0, 6, 0, 1}},
                           Case{5, 2, {0, 1, 0, 1}}}) {
        PrimeModulus p(cs.p);
        SuperellipticCurve base = make_curve(p, cs.m, FpPoly::from_integers(p, cs.f));
        std::uint64_t n1 = count_points(base, 1);
        for (std::uint32_t c = 0; c < cs.p; ++c) {
            SuperellipticCurve moved = make_curve(p, cs.m, base.rhs().translate(c));
            CHECK(moved.genus() == base.genus());
            CHECK(count_points(moved, 1) == n1);
        }
    }
}

TEST_CASE("m8 transformation always lands in M8") {
    std::mt19937_64 rng(7);
    for (std::uint32_t pv : {3u, 5u, 7u, 11u}) {
        PrimeModulus p(pv);
        std::uniform_int_distribution<std::uint32_t> dist(0, pv - 1);
        int built = 0;
        while (built < 10) {
            std::vector<std::uint32_t> c{dist(rng), dist(rng), dist(rng), 1};
            if (c[0] == 0) continue;
            FpPoly f3(p, std::move(c));
            if (!is_separable(f3)) continue;
            CHECK(family_of(m8_to_hyperelliptic(f3)) == FamilyLabel::M8);
            ++built;
        }
    }
}

TEST_CASE("quartic discriminant is 3^10") {
    BigInt d = integer_poly_discriminant({0, 1, 3, -24, 1});
    CHECK(d == 59049);
    CHECK(factored_string(d) == "3^10");
    CHECK(factored_string(BigInt(-12)) == "-2^2 * 3");
    CHECK(factored_string(BigInt(1)) == "1");
}
