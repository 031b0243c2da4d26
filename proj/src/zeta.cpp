#include "ssc/zeta.hpp"

#include <sstream>

namespace ssc {

BigInt LPolynomial::at_one() const {
    BigInt s = 0;
    for (const BigInt& c : a) s += c;
    return s;
}

std::string WeilReport::describe() const {
    std::ostringstream os;
    os << "a0=" << (a0_is_one ? "ok" : "FAIL") << " functional_equation="
       << (functional_equation ? "ok" : "FAIL") << " coefficient_bounds="
       << (coefficient_bounds ? "ok" : "FAIL") << " L(1)>0="
       << (l1_positive ? "ok" : "FAIL");
    return os.str();
}

namespace {

// Power sums s_1..s_r of the reciprocal roots from the coefficients:
// s_k = -(k a_k + sum_{i=1}^{k-1} a_i s_{k-i}), with a_i = 0 past degree.
std::vector<BigInt> power_sums(const std::vector<BigInt>& a, unsigned r) {
    std::vector<BigInt> s(r + 1, 0);
    for (unsigned k = 1; k <= r; ++k) {
        BigInt t = (k < a.size()) ? BigInt(k) * a[k] : BigInt(0);
        for (unsigned i = 1; i < k; ++i)
            if (i < a.size()) t += a[i] * s[k - i];
        s[k] = -t;
    }
    return s;
}

}  // namespace

LPolynomial l_polynomial(const PointCounts& counts) {
    const unsigned g = counts.curve.genus();
    if (counts.counts.size() != g)
        throw std::invalid_argument("need exactly g = " + std::to_string(g) +
                                    " point counts");
    const std::uint32_t p = counts.curve.prime().value();

    std::vector<BigInt> s(g + 1, 0);
    for (unsigned k = 1; k <= g; ++k) s[k] = ipow(p, k) + 1 - counts.counts[k - 1];

    // Newton recurrence: s_k + a_1 s_{k-1} + ... + a_{k-1} s_1 + k a_k = 0.
    std::vector<BigInt> a(2 * g + 1, 0);
    a[0] = 1;
    for (unsigned k = 1; k <= g; ++k) {
        BigInt t = s[k];
        for (unsigned i = 1; i < k; ++i) t += a[i] * s[k - i];
        if (t % k != 0)
            throw NonIntegralCoefficient("Newton recurrence does not divide at k = " +
                                         std::to_string(k));
        a[k] = -t / k;
    }
    for (unsigned i = 0; i < g; ++i) a[2 * g - i] = ipow(p, g - i) * a[i];

    LPolynomial L{p, g, std::move(a)};
    WeilReport rep = validate_weil(L);
    if (!rep.all_pass()) throw WeilViolation("L-polynomial invalid: " + rep.describe());
    return L;
}

BigInt predicted_count(const LPolynomial& L, unsigned k) {
    if (k < 1 || k > 2 * L.genus) throw std::invalid_argument("k must be in [1, 2g]");
    std::vector<BigInt> s = power_sums(L.a, k);
    return ipow(L.p, k) + 1 - s[k];
}

WeilReport validate_weil(const LPolynomial& L) {
    WeilReport rep;
    const unsigned g = L.genus;
    if (L.a.size() != 2 * g + 1) return rep;
    rep.a0_is_one = L.a[0] == 1;

    rep.functional_equation = true;
    for (unsigned i = 0; i <= g; ++i)
        if (L.a[2 * g - i] != ipow(L.p, g - i) * L.a[i]) rep.functional_equation = false;

    // |a_i| <= C(2g, i) p^{i/2}, squared to stay in integers.
    rep.coefficient_bounds = true;
    for (unsigned i = 0; i <= 2 * g; ++i) {
        BigInt bound = binomial(2 * g, i);
        if (L.a[i] * L.a[i] > bound * bound * ipow(L.p, i)) rep.coefficient_bounds = false;
    }

    rep.l1_positive = L.at_one() > 0;
    return rep;
}

std::vector<BigInt> frobenius_charpoly(const LPolynomial& L) {
    return std::vector<BigInt>(L.a.rbegin(), L.a.rend());
}

}  // namespace ssc
