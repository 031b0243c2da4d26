#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssc/errors.hpp"
#include "ssc/integers.hpp"

namespace ssc {

// p < 2^20 keeps every product of residues inside 64 bits with room for
// schoolbook accumulation across kMaxExtDegree terms.
inline constexpr std::uint32_t kPrimeLimit = 1u << 20;
inline constexpr unsigned kMaxExtDegree = 12;

/// A prime modulus with residue arithmetic. Primality is checked on
/// construction by trial division.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::uint32_t p);

    std::uint32_t value() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // a != 0

    // Canonical representative in [0, p) of a signed integer.
    std::uint32_t reduce_signed(std::int64_t v) const;

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

  private:
    std::uint32_t p_;
};

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Dense univariate polynomial over F_p. Coefficients are stored low degree
/// first and trimmed; the zero polynomial has an empty vector and degree -1.
class FpPoly {
  public:
    explicit FpPoly(PrimeModulus p) : p_(p) {}
    FpPoly(PrimeModulus p, std::vector<std::uint32_t> coeffs);

    static FpPoly from_integers(PrimeModulus p, std::span<const std::int64_t> coeffs);

    PrimeModulus prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    std::uint32_t eval(std::uint32_t x) const;
    FpPoly derivative() const;
    FpPoly monic() const;
    FpPoly times_x() const;                       // x * f
    FpPoly substitute_x_power(unsigned t) const;  // f(x^t)
    FpPoly translate(std::uint32_t c) const;      // f(x + c)

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly&, const FpPoly&);

    // Quotient and remainder; the divisor need not be monic.
    static std::pair<FpPoly, FpPoly> divrem(const FpPoly& num, const FpPoly& den);

    std::string to_string() const;

  private:
    void trim();

    PrimeModulus p_;
    std::vector<std::uint32_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);  // monic gcd
bool is_separable(const FpPoly& f);

class FqElement;

/// F_{p^k} presented as F_p[x] modulo the lexicographically least monic
/// irreducible polynomial of degree k (coefficient tuples compared low
/// degree first), so every context is reproducible bit for bit.
///
/// Contexts are immutable after construction and freely shared across
/// threads. Elements carry a pointer to the context that created them, so a
/// context must outlive its elements; contexts are deliberately not movable.
class FqContext {
  public:
    FqContext(PrimeModulus p, unsigned k);
    FqContext(const FqContext&) = delete;
    FqContext& operator=(const FqContext&) = delete;

    PrimeModulus prime() const { return p_; }
    unsigned ext_degree() const { return k_; }
    const FpPoly& modulus() const { return modulus_; }
    const BigInt& order() const { return q_; }
    bool order_fits_u64() const { return q_fits_; }
    std::uint64_t order_u64() const;

    FqElement zero() const;
    FqElement one() const;
    // The canonical embedding F_p -> F_{p^k} (constant polynomials).
    FqElement from_prime_field(std::uint32_t c) const;
    FqElement make(std::vector<std::uint32_t> coeffs) const;

    // Elements indexed 0..q-1 in lexicographic coefficient order:
    // index = sum c_i * p^(k-1-i), so coefficient 0 is most significant.
    FqElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const FqElement& a) const;

    // Fixed-width span primitives for hot loops; every array has length k.
    // mul and pow outputs must not alias their inputs.
    void add(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
    void sub(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
    void mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
    void pow_u64(const std::uint32_t* a, std::uint64_t e, std::uint32_t* out) const;
    void set_zero(std::uint32_t* a) const;
    void set_one(std::uint32_t* a) const;
    void assign(const std::uint32_t* a, std::uint32_t* out) const;
    bool is_zero(const std::uint32_t* a) const;
    bool is_one(const std::uint32_t* a) const;
    std::uint64_t encode(const std::uint32_t* a) const;

  private:
    PrimeModulus p_;
    unsigned k_;
    FpPoly modulus_;
    std::vector<std::uint32_t> mod_c_;  // modulus coefficients, length k+1, monic
    BigInt q_;
    bool q_fits_ = false;
    std::uint64_t q_u64_ = 0;
};

FqContext make_extension(PrimeModulus p, unsigned k);

/// An element of one FqContext; comparable and combinable only with elements
/// of the same context instance.
class FqElement {
  public:
    FqElement() = default;

    const FqContext& context() const { return *ctx_; }
    std::span<const std::uint32_t> coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator*(const FqElement& o) const;
    FqElement operator/(const FqElement& o) const;  // o != 0
    FqElement operator-() const;
    friend bool operator==(const FqElement& a, const FqElement& b);

    FqElement inverse() const;

    std::string to_string() const;

  private:
    friend class FqContext;
    FqElement(const FqContext* ctx, std::vector<std::uint32_t> c)
        : ctx_(ctx), c_(std::move(c)) {}

    const FqContext* ctx_ = nullptr;
    std::vector<std::uint32_t> c_;
};

// a^e with the convention 0^0 = 1.
FqElement pow(const FqElement& a, std::uint64_t e);
FqElement pow(const FqElement& a, const BigInt& e);

// #{y in F_q : y^m = c}. Returns 1 for c = 0; otherwise m' = gcd(m, q-1)
// when c is an m'-th power and 0 when it is not. Rejects p | m.
unsigned mth_root_count(const FqElement& c, unsigned m);

// Smallest generator of F_q^* in the element ordering, its order verified
// against every prime factor of q - 1. Requires q to fit in 64 bits.
FqElement find_generator(const FqContext& ctx);

}  // namespace ssc
