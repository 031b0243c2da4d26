#include <doctest.h>

#include "oracles.hpp"
#include "ssc/zeta.hpp"

using namespace ssc;

namespace {
FpPoly ipoly(std::uint32_t p, std::vector<std::int64_t> c) {
    return FpPoly::from_integers(PrimeModulus(p), c);
}

std::vector<BigInt> big(std::vector<std::int64_t> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("supersingular elliptic curve over F_3") {
    SuperellipticCurve e = make_curve(PrimeModulus(3), 2, ipoly(3, {0, 1, 0, 1}));
    LPolynomial L = l_polynomial(count_sequence(e, 1));
    CHECK(L.a == big({1, 0, 3}));
    CHECK(predicted_count(L, 1) == 4);
    CHECK(predicted_count(L, 2) == 16);
    // Independent check of the k = 2 prediction.
    FqContext f9 = make_extension(PrimeModulus(3), 2);
    CHECK(testing::brute_affine_count(2, e.rhs(), f9) + 1 == 16);
    CHECK(validate_weil(L).all_pass());
}

TEST_CASE("M6 curve at p = 2: all middle coefficients vanish") {
    SuperellipticCurve m6 = make_curve(PrimeModulus(2), 3, ipoly(2, {0, -1, 0, 0, 1}));
    LPolynomial L = l_polynomial(count_sequence(m6, 3));
    CHECK(L.a == big({1, 0, 0, 0, 0, 0, 8}));  // from N = (3, 5, 9)
    // Predictions beyond the inputs, each confirmed by a fresh count.
    for (unsigned k = 4; k <= 6; ++k)
        CHECK(predicted_count(L, k) == count_points(m6, k));
    CHECK(predicted_count(L, 4) == 17);
    CHECK(predicted_count(L, 5) == 33);
    CHECK(predicted_count(L, 6) == 113);
}

TEST_CASE("round trip through an extension count for every catalog family") {
    struct Case {
        std::size_t entry;
        std::uint32_t p;
    };
    const auto& cat = paper_catalog();
    for (Case cs : {Case{0, 5}, Case{1, 3}, Case{1, 7}, Case{2, 2}, Case{2, 3}}) {
        SuperellipticCurve curve = cat[cs.entry].reduce(PrimeModulus(cs.p));
        LPolynomial L = l_polynomial(count_sequence(curve, curve.genus()));
        unsigned k = curve.genus() + 1;
        CHECK(predicted_count(L, k) == count_points(curve, k));
    }
}

TEST_CASE("Newton recurrence divisibility failure is reported") {
    // Fabricated counts on a genuine genus-2 curve; N = (2, 3) passes the
    // Weil bound but s_2 + a_1 s_1 = 3 is not divisible by 2.
    SuperellipticCurve c = make_curve(PrimeModulus(3), 2, ipoly(3, {0, 1, 0, 0, 0, 1}));
    REQUIRE(c.genus() == 2);
    CHECK_THROWS_AS(l_polynomial(PointCounts{c, {2, 3}}), NonIntegralCoefficient);
    CHECK_THROWS_AS(l_polynomial(PointCounts{c, {2}}), std::invalid_argument);
}

TEST_CASE("Weil violations are reported") {
    SuperellipticCurve e = make_curve(PrimeModulus(3), 2, ipoly(3, {0, 1, 0, 1}));
    // a_1 = -8 breaks |a_1| <= 2 sqrt(3).
    CHECK_THROWS_AS(l_polynomial(PointCounts{e, {12}}), WeilViolation);
}

TEST_CASE("validate_weil check by check") {
    LPolynomial good{3, 1, big({1, 0, 3})};
    CHECK(validate_weil(good).all_pass());

    LPolynomial bad_fe{3, 1, big({1, 0, 5})};
    CHECK_FALSE(validate_weil(bad_fe).functional_equation);

    LPolynomial bad_bound{3, 1, big({1, 100, 3})};
    CHECK(validate_weil(bad_bound).functional_equation);
    CHECK_FALSE(validate_weil(bad_bound).coefficient_bounds);

    // Functional equation and bounds hold but L(1) = -2.
    LPolynomial bad_l1{2, 2, big({1, -5, 8, -10, 4})};
    WeilReport rep = validate_weil(bad_l1);
    CHECK(rep.a0_is_one);
    CHECK(rep.functional_equation);
    CHECK(rep.coefficient_bounds);
    CHECK_FALSE(rep.l1_positive);
    CHECK_FALSE(rep.all_pass());

    LPolynomial bad_a0{3, 1, big({2, 0, 3})};
    CHECK_FALSE(validate_weil(bad_a0).a0_is_one);
}

TEST_CASE("characteristic polynomial of Frobenius is the reversed L") {
    // L = 1 + 3T^2 corresponds to pi^2 + 3 = 0, |pi| = sqrt(3).
    LPolynomial L{3, 1, big({1, 0, 3})};
    CHECK(frobenius_charpoly(L) == big({3, 0, 1}));
    BigInt s1 = ipow(3, 1) + 1 - predicted_count(L, 1);
    CHECK(s1 == 0);  // trace of pi matches -a_1
}
