#include "ssc/ff.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ssc {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ipow(std::uint64_t base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= kPrimeLimit)
        throw std::invalid_argument("prime modulus out of supported range [2, 2^20): " +
                                    std::to_string(p));
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a % p_;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, newt = 1, r = p_, newr = a % p_;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeModulus::reduce_signed(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(PrimeModulus p, std::vector<std::uint32_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (c >= p_.value()) c %= p_.value();
    trim();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::from_integers(PrimeModulus p, std::span<const std::int64_t> coeffs) {
    std::vector<std::uint32_t> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = p.reduce_signed(coeffs[i]);
    return FpPoly(p, std::move(c));
}

std::uint32_t FpPoly::eval(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = p_.add(p_.mul(acc, x), c_[i]);
    return acc;
}

FpPoly FpPoly::derivative() const {
    std::vector<std::uint32_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(p_.mul(c_[i], static_cast<std::uint32_t>(i % p_.value())));
    return FpPoly(p_, std::move(d));
}

FpPoly FpPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    std::uint32_t s = p_.inv(leading());
    std::vector<std::uint32_t> c(c_);
    for (auto& x : c) x = p_.mul(x, s);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::times_x() const {
    if (is_zero()) return *this;
    std::vector<std::uint32_t> c(c_.size() + 1, 0);
    std::copy(c_.begin(), c_.end(), c.begin() + 1);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::substitute_x_power(unsigned t) const {
    if (t == 0) return FpPoly(p_, {eval(1)});
    if (is_zero()) return *this;
    std::vector<std::uint32_t> c((c_.size() - 1) * t + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * t] = c_[i];
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::translate(std::uint32_t c) const {
    // Horner in F_p[x]: result = (...((a_d)(x+c) + a_{d-1})(x+c) + ...).
    FpPoly res(p_);
    FpPoly shift(p_, {c % p_.value(), 1});
    for (std::size_t i = c_.size(); i-- > 0;) {
        res = res * shift;
        res = res + FpPoly(p_, {c_[i]});
    }
    return res;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.p_.add(a.coeff(i), b.coeff(i));
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.p_.sub(a.coeff(i), b.coeff(i));
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    const std::uint64_t p = a.p_.value();
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            acc[i + j] += std::uint64_t(a.c_[i]) * b.c_[j] % p;
        }
    }
    std::vector<std::uint32_t> c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint32_t>(acc[i] % p);
    return FpPoly(a.p_, std::move(c));
}

bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& num, const FpPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    PrimeModulus p = num.p_;
    std::vector<std::uint32_t> r(num.c_);
    int dr = num.degree(), dd = den.degree();
    if (dr < dd) return {FpPoly(p), num};
    std::vector<std::uint32_t> q(dr - dd + 1, 0);
    std::uint32_t lead_inv = p.inv(den.leading());
    for (int i = dr; i >= dd; --i) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        std::uint32_t s = p.mul(c, lead_inv);
        q[i - dd] = s;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] = p.sub(r[i - dd + j], p.mul(s, den.c_[j]));
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i >= 1) {
            if (c_[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = FpPoly::divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_separable(const FpPoly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

// ---------------------------------------------------------------------------
// FqContext

namespace {

// f(x)^p mod g via square-and-multiply on the 20-bit exponent p.
FpPoly pow_mod(const FpPoly& f, std::uint64_t e, const FpPoly& g) {
    FpPoly base = FpPoly::divrem(f, g).second;
    FpPoly acc(f.prime(), {1});
    while (e) {
        if (e & 1) acc = FpPoly::divrem(acc * base, g).second;
        base = FpPoly::divrem(base * base, g).second;
        e >>= 1;
    }
    return acc;
}

// x^(p^j) mod g, computed as j successive p-th powers so the exponent never
// needs more than machine width.
FpPoly frobenius_power_of_x(PrimeModulus p, unsigned j, const FpPoly& g) {
    FpPoly t(p, {0, 1});
    t = FpPoly::divrem(t, g).second;
    for (unsigned i = 0; i < j; ++i) t = pow_mod(t, p.value(), g);
    return t;
}

std::vector<std::uint32_t> prime_factors_u32(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(const FpPoly& g) {
    PrimeModulus p = g.prime();
    unsigned k = static_cast<unsigned>(g.degree());
    FpPoly x(p, {0, 1});
    FpPoly xr = FpPoly::divrem(x, g).second;
    if (frobenius_power_of_x(p, k, g) != xr) return false;
    for (std::uint32_t ell : prime_factors_u32(k)) {
        FpPoly t = frobenius_power_of_x(p, k / ell, g) - xr;
        if (gcd(t, g).degree() != 0) return false;
    }
    return true;
}

// Lexicographically least monic irreducible of degree k; coefficient tuples
// (c_0, ..., c_{k-1}) are compared left to right, so c_0 is the most
// significant digit of the search index.
FpPoly least_irreducible(PrimeModulus p, unsigned k) {
    const std::uint64_t pp = p.value();
    if (k == 1) return FpPoly(p, {0, 1});  // x itself is lex-least
    // c_0 = 0 means divisible by x, so the whole p^{k-1} block below each
    // constant term is skipped wholesale rather than candidate by candidate.
    const BigInt tail_count = ipow(pp, k - 1);
    for (std::uint32_t c0 = 1; c0 < pp; ++c0) {
        for (BigInt tail = 0; tail < tail_count; ++tail) {
            std::vector<std::uint32_t> c(k + 1, 0);
            c[k] = 1;
            c[0] = c0;
            BigInt t = tail;
            for (unsigned i = k; i-- > 1;) {
                c[i] = static_cast<std::uint32_t>(t % pp);
                t /= pp;
            }
            std::uint64_t at_one = 0;
            for (std::uint32_t ci : c) at_one += ci;
            if (at_one % pp == 0) continue;  // root at 1
            FpPoly g(p, std::move(c));
            if (is_irreducible(g)) return g;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FpPoly checked_modulus(PrimeModulus p, unsigned k) {
    if (k < 1 || k > kMaxExtDegree)
        throw std::invalid_argument("extension degree out of range [1, 12]: " +
                                    std::to_string(k));
    return least_irreducible(p, k);
}

}  // namespace

FqContext::FqContext(PrimeModulus p, unsigned k)
    : p_(p), k_(k), modulus_(checked_modulus(p, k)) {
    mod_c_ = modulus_.coeffs();
    q_ = ipow(p.value(), k);
    if (q_ < (BigInt(1) << 63)) {
        q_fits_ = true;
        q_u64_ = static_cast<std::uint64_t>(q_);
    }
}

FqContext make_extension(PrimeModulus p, unsigned k) {
    return FqContext(p, k);
}

std::uint64_t FqContext::order_u64() const {
    if (!q_fits_) throw std::domain_error("field order exceeds 64 bits");
    return q_u64_;
}

FqElement FqContext::zero() const {
    return FqElement(this, std::vector<std::uint32_t>(k_, 0));
}

FqElement FqContext::one() const {
    std::vector<std::uint32_t> c(k_, 0);
    c[0] = 1 % p_.value();
    return FqElement(this, std::move(c));
}

FqElement FqContext::from_prime_field(std::uint32_t c) const {
    std::vector<std::uint32_t> v(k_, 0);
    v[0] = c % p_.value();
    return FqElement(this, std::move(v));
}

FqElement FqContext::make(std::vector<std::uint32_t> coeffs) const {
    if (coeffs.size() != k_) throw std::invalid_argument("coefficient vector length != k");
    for (auto& c : coeffs) c %= p_.value();
    return FqElement(this, std::move(coeffs));
}

FqElement FqContext::element_at(std::uint64_t index) const {
    std::vector<std::uint32_t> c(k_, 0);
    for (unsigned i = k_; i-- > 0;) {  // c_0 most significant
        c[i] = static_cast<std::uint32_t>(index % p_.value());
        index /= p_.value();
    }
    return FqElement(this, std::move(c));
}

std::uint64_t FqContext::index_of(const FqElement& a) const {
    return encode(a.coeffs().data());
}

std::uint64_t FqContext::encode(const std::uint32_t* a) const {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < k_; ++i) idx = idx * p_.value() + a[i];
    return idx;
}

void FqContext::add(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
    for (unsigned i = 0; i < k_; ++i) out[i] = p_.add(a[i], b[i]);
}

void FqContext::sub(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
    for (unsigned i = 0; i < k_; ++i) out[i] = p_.sub(a[i], b[i]);
}

void FqContext::mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
    const std::uint64_t p = p_.value();
    std::uint64_t acc[2 * kMaxExtDegree - 1] = {0};
    for (unsigned i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        const std::uint64_t ai = a[i];
        for (unsigned j = 0; j < k_; ++j) acc[i + j] += ai * b[j] % p;
    }
    // Reduce modulo the monic modulus, top down.
    for (unsigned i = 2 * k_ - 2; i + 1 > k_; --i) {
        std::uint64_t c = acc[i] % p;
        if (c) {
            const std::uint64_t negc = p - c;
            for (unsigned j = 0; j < k_; ++j) acc[i - k_ + j] += negc * mod_c_[j] % p;
        }
    }
    for (unsigned i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
}

void FqContext::pow_u64(const std::uint32_t* a, std::uint64_t e, std::uint32_t* out) const {
    std::uint32_t base[kMaxExtDegree], tmp[kMaxExtDegree];
    assign(a, base);
    set_one(out);
    while (e) {
        if (e & 1) {
            mul(out, base, tmp);
            assign(tmp, out);
        }
        e >>= 1;
        if (e) {
            mul(base, base, tmp);
            assign(tmp, base);
        }
    }
}

void FqContext::set_zero(std::uint32_t* a) const {
    for (unsigned i = 0; i < k_; ++i) a[i] = 0;
}

void FqContext::set_one(std::uint32_t* a) const {
    set_zero(a);
    a[0] = 1 % p_.value();
}

void FqContext::assign(const std::uint32_t* a, std::uint32_t* out) const {
    for (unsigned i = 0; i < k_; ++i) out[i] = a[i];
}

bool FqContext::is_zero(const std::uint32_t* a) const {
    for (unsigned i = 0; i < k_; ++i)
        if (a[i]) return false;
    return true;
}

bool FqContext::is_one(const std::uint32_t* a) const {
    if (a[0] != 1 % p_.value()) return false;
    for (unsigned i = 1; i < k_; ++i)
        if (a[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// FqElement

namespace {
const FqContext& same_context(const FqElement& a, const FqElement& b) {
    if (&a.context() != &b.context())
        throw std::invalid_argument("elements from different field contexts");
    return a.context();
}
}  // namespace

bool FqElement::is_zero() const {
    return ctx_->is_zero(c_.data());
}

bool FqElement::is_one() const {
    return ctx_->is_one(c_.data());
}

FqElement FqElement::operator+(const FqElement& o) const {
    const FqContext& ctx = same_context(*this, o);
    std::vector<std::uint32_t> r(c_.size());
    ctx.add(c_.data(), o.c_.data(), r.data());
    return FqElement(&ctx, std::move(r));
}

FqElement FqElement::operator-(const FqElement& o) const {
    const FqContext& ctx = same_context(*this, o);
    std::vector<std::uint32_t> r(c_.size());
    ctx.sub(c_.data(), o.c_.data(), r.data());
    return FqElement(&ctx, std::move(r));
}

FqElement FqElement::operator*(const FqElement& o) const {
    const FqContext& ctx = same_context(*this, o);
    std::vector<std::uint32_t> r(c_.size());
    ctx.mul(c_.data(), o.c_.data(), r.data());
    return FqElement(&ctx, std::move(r));
}

FqElement FqElement::operator/(const FqElement& o) const {
    return *this * o.inverse();
}

FqElement FqElement::operator-() const {
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->prime().neg(c_[i]);
    return FqElement(ctx_, std::move(r));
}

bool operator==(const FqElement& a, const FqElement& b) {
    same_context(a, b);
    return a.c_ == b.c_;
}

FqElement FqElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Extended Euclid in F_p[x] against the context modulus.
    PrimeModulus p = ctx_->prime();
    FpPoly r0 = ctx_->modulus();
    FpPoly r1(p, std::vector<std::uint32_t>(c_));
    FpPoly t0(p), t1(p, {1});
    while (!r1.is_zero()) {
        auto [q, r] = FpPoly::divrem(r0, r1);
        FpPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd; scale t0 by its inverse.
    std::uint32_t s = p.inv(r0.coeff(0));
    std::vector<std::uint32_t> out(ctx_->ext_degree(), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.mul(t0.coeff(i), s);
    return FqElement(ctx_, std::move(out));
}

std::string FqElement::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ")";
    return os.str();
}

FqElement pow(const FqElement& a, std::uint64_t e) {
    const FqContext& ctx = a.context();
    std::vector<std::uint32_t> out(ctx.ext_degree());
    ctx.pow_u64(a.coeffs().data(), e, out.data());
    return ctx.make(std::move(out));
}

FqElement pow(const FqElement& a, const BigInt& e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    const FqContext& ctx = a.context();
    FqElement acc = ctx.one();
    FqElement base = a;
    BigInt t = e;
    while (t > 0) {
        if (boost::multiprecision::bit_test(t, 0)) acc = acc * base;
        t >>= 1;
        if (t > 0) base = base * base;
    }
    return acc;
}

unsigned mth_root_count(const FqElement& c, unsigned m) {
    const FqContext& ctx = c.context();
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (m % ctx.prime().value() == 0)
        throw WildCover("m divisible by the field characteristic");
    if (c.is_zero()) return 1;
    BigInt qm1 = ctx.order() - 1;
    BigInt mp = boost::multiprecision::gcd(BigInt(m), qm1);
    unsigned m_prime = static_cast<unsigned>(mp);
    if (m_prime == 1) return 1;
    BigInt e = qm1 / m_prime;
    return pow(c, e).is_one() ? m_prime : 0;
}

FqElement find_generator(const FqContext& ctx) {
    const std::uint64_t q = ctx.order_u64();
    const std::uint64_t n = q - 1;
    // Trial-division factorization of q - 1.
    std::vector<std::uint64_t> factors;
    std::uint64_t t = n;
    for (std::uint64_t d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            factors.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) factors.push_back(t);
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        FqElement g = ctx.element_at(idx);
        bool ok = true;
        for (std::uint64_t ell : factors)
            if (pow(g, n / ell).is_one()) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no generator found");  // unreachable for a field
}

}  // namespace ssc
