#include "ssc/curves.hpp"

#include <numeric>
#include <sstream>

namespace ssc {

const char* family_name(FamilyLabel label) {
    switch (label) {
        case FamilyLabel::M6: return "M6";
        case FamilyLabel::M8: return "M8";
        case FamilyLabel::M16: return "M16";
        default: return "Other";
    }
}

SuperellipticCurve make_curve(PrimeModulus p, unsigned m, FpPoly f) {
    if (m < 2) throw std::invalid_argument("cover degree m must be >= 2");
    if (f.is_zero()) throw std::invalid_argument("right-hand side is zero");
    if (f.degree() < 1) throw std::invalid_argument("right-hand side is constant");
    if (!is_separable(f))
        throw InseparableModel("gcd(f, f') != 1 for f = " + f.to_string() + " over F_" +
                               std::to_string(p.value()));
    if (m % p.value() == 0)
        throw WildCover("p = " + std::to_string(p.value()) + " divides m = " +
                        std::to_string(m));
    const unsigned d = static_cast<unsigned>(f.degree());
    const unsigned delta = std::gcd(m, d);
    if (delta != 1 && delta != m)
        throw UnsupportedInfinity("gcd(m, deg f) = " + std::to_string(delta) +
                                  " is neither 1 nor m");
    const unsigned num = (d - 1) * (m - 1) + 1 - delta;
    if (num % 2 != 0) throw std::logic_error("genus formula is not integral");
    return SuperellipticCurve(p, m, std::move(f), d, delta, num / 2);
}

std::string SuperellipticCurve::to_string() const {
    std::ostringstream os;
    os << "y^" << m_ << " = " << f_.to_string() << " over F_" << p_.value();
    return os.str();
}

SuperellipticCurve m8_to_hyperelliptic(const FpPoly& f3) {
    PrimeModulus p = f3.prime();
    if (p.value() == 2) throw WildCover("hyperelliptic model needs odd p");
    if (f3.degree() != 3) throw std::invalid_argument("f3 must have degree exactly 3");
    if (f3.coeff(0) == 0) throw ZeroConstantTerm("f3(0) = 0");
    if (!is_separable(f3))
        throw InseparableModel("f3 = " + f3.to_string() + " is not separable over F_" +
                               std::to_string(p.value()));
    return make_curve(p, 2, f3.substitute_x_power(2).times_x());
}

FamilyLabel family_of(const SuperellipticCurve& c) {
    const unsigned m = c.cover_degree(), d = c.rhs_degree();
    if (m == 3 && d == 4) return FamilyLabel::M6;
    if (m == 5 && (d == 4 || d == 5)) return FamilyLabel::M16;
    if (m == 2 && d == 7) {
        // f = x * h(x^2) for a cubic h with h(0) != 0: only odd-degree terms,
        // and the coefficient of x nonzero.
        const FpPoly& f = c.rhs();
        bool odd_only = true;
        for (int i = 0; i <= f.degree(); i += 2) odd_only = odd_only && f.coeff(i) == 0;
        if (odd_only && f.coeff(1) != 0) return FamilyLabel::M8;
    }
    return FamilyLabel::Other;
}

bool PrimeCondition::matches(std::uint32_t p) const {
    std::uint32_t r = p % modulus;
    for (std::uint32_t allowed : residues)
        if (r == allowed) return true;
    return false;
}

std::string PrimeCondition::to_string() const {
    std::ostringstream os;
    os << "p = ";
    for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? ", " : "") << residues[i];
    os << " (mod " << modulus << ")";
    return os.str();
}

const std::vector<std::int64_t>& CatalogEntry::polynomial_for(std::uint32_t p) const {
    for (const auto& [pe, poly] : exceptional_primes)
        if (pe == p) return poly;
    return f_integer;
}

SuperellipticCurve CatalogEntry::reduce(PrimeModulus p) const {
    return make_curve(p, m, FpPoly::from_integers(p, polynomial_for(p.value())));
}

const std::vector<CatalogEntry>& paper_catalog() {
    static const std::vector<CatalogEntry> catalog = {
        {FamilyLabel::M6,
         "m6-picard",
         3,
         {0, -1, 0, 0, 1},  // x^4 - x
         {3, {2}},
         {}},
        {FamilyLabel::M8,
         "m8-hyperelliptic",
         2,
         {0, 1, 0, 9, 0, 6, 0, 1},  // x^7 + 6x^5 + 9x^3 + x = x*h(x^2), h = x^3+6x^2+9x+1
         {4, {3}},
         {{3, {0, 7, 0, 14, 0, 7, 0, 1}}}},  // from h = x^3+7x^2+14x+7
        {FamilyLabel::M16,
         "m16-quintic",
         5,
         {0, 1, 3, -24, 1},  // x^4 - 24x^3 + 3x^2 + x
         {5, {2, 3, 4}},
         {{3, {0, 7, -7, 0, 1}}}},  // x^4 - 7x^2 + 7x
    };
    return catalog;
}

namespace {

// Determinant by Bareiss fraction-free elimination; exact over the integers.
BigInt determinant(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    const std::size_t size = m + n;
    std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) syl[n + r][r + i] = g[n - i];
    return determinant(std::move(syl));
}

}  // namespace

BigInt integer_poly_discriminant(const std::vector<std::int64_t>& f_in) {
    std::vector<BigInt> f(f_in.begin(), f_in.end());
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    if (f.size() < 3) throw std::invalid_argument("discriminant needs degree >= 2");
    const std::size_t d = f.size() - 1;
    std::vector<BigInt> fp(d);
    for (std::size_t i = 1; i <= d; ++i) fp[i - 1] = f[i] * static_cast<long>(i);
    while (fp.size() > 1 && fp.back() == 0) fp.pop_back();
    BigInt res = resultant(f, fp);
    BigInt disc = res / f.back();
    if ((d * (d - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

std::string factored_string(BigInt n) {
    if (n == 0) return "0";
    std::ostringstream os;
    if (n < 0) {
        os << "-";
        n = -n;
    }
    if (n == 1) {
        os << "1";
        return os.str();
    }
    bool first = true;
    for (BigInt d = 2; d * d <= n && d <= 1000000; ++d) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        os << (first ? "" : " * ") << d;
        if (e > 1) os << "^" << e;
        first = false;
    }
    if (n > 1) os << (first ? "" : " * ") << n;
    return os.str();
}

}  // namespace ssc
