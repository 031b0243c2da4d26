#pragma once

#include <string>
#include <vector>

#include "ssc/count.hpp"
#include "ssc/integers.hpp"

namespace ssc {

/// L(T) = prod (1 - alpha_i T), the degree-2g numerator of the zeta
/// function, with exact integer coefficients stored low degree first.
/// The characteristic polynomial of Frobenius is T^{2g} L(1/T); see
/// frobenius_charpoly.
struct LPolynomial {
    std::uint32_t p = 0;
    unsigned genus = 0;
    std::vector<BigInt> a;  // size 2g + 1, a[0] = 1

    BigInt at_one() const;
};

struct WeilReport {
    bool a0_is_one = false;
    bool functional_equation = false;
    bool coefficient_bounds = false;
    bool l1_positive = false;

    bool all_pass() const {
        return a0_is_one && functional_equation && coefficient_bounds && l1_positive;
    }
    std::string describe() const;
};

/// Reconstruct L from N_1..N_g via the Newton recurrence on
/// s_k = p^k + 1 - N_k, then a_{2g-i} = p^{g-i} a_i. Throws
/// NonIntegralCoefficient when the recurrence division is inexact and
/// WeilViolation when the result fails its invariants.
LPolynomial l_polynomial(const PointCounts& counts);

/// p^k + 1 - s_k with s_k recovered from the coefficients by running the
/// same recurrence forward. Valid for 1 <= k <= 2g.
BigInt predicted_count(const LPolynomial& L, unsigned k);

WeilReport validate_weil(const LPolynomial& L);

// Coefficients of T^{2g} L(1/T), i.e. the characteristic polynomial of the
// Frobenius endomorphism, low degree first.
std::vector<BigInt> frobenius_charpoly(const LPolynomial& L);

}  // namespace ssc
