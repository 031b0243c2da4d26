#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ssc/ff.hpp"

namespace ssc {

enum class FamilyLabel { M6, M8, M16, Other };

const char* family_name(FamilyLabel label);

/// A smooth superelliptic model y^m = f(x) over F_p with tame cover degree
/// (p does not divide m), separable f, and gcd(m, deg f) in {1, m}. The two
/// admitted infinity structures: gcd = 1 gives one totally ramified rational
/// point at infinity; gcd = m splits infinity into the fiber v^m = lc(f).
class SuperellipticCurve {
  public:
    PrimeModulus prime() const { return p_; }
    unsigned cover_degree() const { return m_; }
    const FpPoly& rhs() const { return f_; }
    unsigned rhs_degree() const { return d_; }
    unsigned delta() const { return delta_; }
    unsigned genus() const { return g_; }

    std::string to_string() const;

  private:
    friend SuperellipticCurve make_curve(PrimeModulus p, unsigned m, FpPoly f);
    SuperellipticCurve(PrimeModulus p, unsigned m, FpPoly f, unsigned d, unsigned delta,
                       unsigned g)
        : p_(p), m_(m), f_(std::move(f)), d_(d), delta_(delta), g_(g) {}

    PrimeModulus p_;
    unsigned m_;
    FpPoly f_;
    unsigned d_;
    unsigned delta_;
    unsigned g_;
};

SuperellipticCurve make_curve(PrimeModulus p, unsigned m, FpPoly f);

inline unsigned genus(const SuperellipticCurve& c) {
    return c.genus();
}

// y^2 = x * f3(x^2) from a separable cubic f3 with f3(0) != 0, over odd p.
SuperellipticCurve m8_to_hyperelliptic(const FpPoly& f3);

FamilyLabel family_of(const SuperellipticCurve& c);

struct PrimeCondition {
    std::uint32_t modulus;
    std::vector<std::uint32_t> residues;

    bool matches(std::uint32_t p) const;
    std::string to_string() const;
};

/// A curve family entry: an integer-coefficient right-hand side, the prime
/// congruence it is asserted for, and per-prime replacement polynomials for
/// the finitely many primes where the main model degenerates.
struct CatalogEntry {
    FamilyLabel label;
    std::string name;
    unsigned m;
    std::vector<std::int64_t> f_integer;  // low degree first, signed
    PrimeCondition prime_condition;
    std::vector<std::pair<std::uint32_t, std::vector<std::int64_t>>> exceptional_primes;

    const std::vector<std::int64_t>& polynomial_for(std::uint32_t p) const;
    SuperellipticCurve reduce(PrimeModulus p) const;
};

const std::vector<CatalogEntry>& paper_catalog();

// Discriminant of an integer polynomial, exact (resultant of f and f').
BigInt integer_poly_discriminant(const std::vector<std::int64_t>& f);

// "3^10"-style factorization by trial division; a trailing composite
// cofactor beyond the trial bound is printed verbatim.
std::string factored_string(BigInt n);

}  // namespace ssc
