#include "ssc/count.hpp"

#include <numeric>
#include <sstream>
#include <thread>

namespace ssc {

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Digits of the enumeration index in lexicographic order: digit 0 is the
// most significant, so incrementing the last digit walks the order.
struct Odometer {
    const std::uint32_t p;
    const unsigned k;
    std::uint32_t digits[kMaxExtDegree];

    Odometer(const FqContext& ctx, std::uint64_t start)
        : p(ctx.prime().value()), k(ctx.ext_degree()) {
        for (unsigned i = k; i-- > 0;) {
            digits[i] = static_cast<std::uint32_t>(start % p);
            start /= p;
        }
    }

    void advance() {
        for (unsigned i = k; i-- > 0;) {
            if (++digits[i] < p) return;
            digits[i] = 0;
        }
    }
};

// Per-x fiber classification shared by both strategies.
class FiberCounter {
  public:
    FiberCounter(const FpPoly& rhs, const FqContext& ctx, ResidueStrategy strategy,
                 unsigned m_prime)
        : ctx_(ctx), rhs_(rhs.coeffs()), m_prime_(m_prime) {
        const std::uint64_t q = ctx.order_u64();
        exponent_ = (q - 1) / m_prime_;
        bool want_table = strategy == ResidueStrategy::Table ||
                          (strategy == ResidueStrategy::Auto && q > (1u << 13));
        if (want_table && q <= (1u << 24)) build_table();
    }

    bool uses_table() const { return !table_.empty(); }

    // Fiber size of y^m = rhs(x) at the point with the given digits.
    std::uint64_t fiber(const std::uint32_t* x) const {
        std::uint32_t v[kMaxExtDegree], t[kMaxExtDegree];
        horner(x, v, t);
        if (ctx_.is_zero(v)) return 1;
        if (!table_.empty()) return table_[ctx_.encode(v)] ? m_prime_ : 0;
        ctx_.pow_u64(v, exponent_, t);
        return ctx_.is_one(t) ? m_prime_ : 0;
    }

  private:
    void horner(const std::uint32_t* x, std::uint32_t* v, std::uint32_t* t) const {
        ctx_.set_zero(v);
        for (std::size_t i = rhs_.size(); i-- > 0;) {
            ctx_.mul(v, x, t);
            ctx_.assign(t, v);
            v[0] = ctx_.prime().add(v[0], rhs_[i]);
        }
    }

    // Mark the m'-th powers by walking generator powers; g^i is an m'-th
    // power exactly when m' | i.
    void build_table() {
        const std::uint64_t q = ctx_.order_u64();
        table_.assign(q, 0);
        FqElement g = find_generator(ctx_);
        FqElement e = ctx_.one();
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            if (i % m_prime_ == 0) table_[ctx_.index_of(e)] = 1;
            e = e * g;
        }
    }

    const FqContext& ctx_;
    const std::vector<std::uint32_t>& rhs_;
    unsigned m_prime_;
    std::uint64_t exponent_ = 0;
    std::vector<std::uint8_t> table_;
};

std::uint64_t enumerate_chunks(const FqContext& ctx, unsigned threads,
                               const FiberCounter& counter, const FpPoly* guard) {
    const std::uint64_t q = ctx.order_u64();
    const unsigned t = std::min<std::uint64_t>(resolve_threads(threads), q);

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
        Odometer x(ctx, lo);
        std::uint64_t sum = 0;
        std::uint32_t gv[kMaxExtDegree], gt[kMaxExtDegree];
        for (std::uint64_t i = lo; i < hi; ++i, x.advance()) {
            if (guard) {
                ctx.set_zero(gv);
                for (std::size_t j = guard->coeffs().size(); j-- > 0;) {
                    ctx.mul(gv, x.digits, gt);
                    ctx.assign(gt, gv);
                    gv[0] = ctx.prime().add(gv[0], guard->coeffs()[j]);
                }
                if (ctx.is_zero(gv)) continue;
            }
            sum += counter.fiber(x.digits);
        }
        return sum;
    };

    if (t <= 1) return run_range(0, q);

    std::vector<std::uint64_t> partial(t, 0);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned i = 0; i < t; ++i) {
        const std::uint64_t lo = q / t * i + std::min<std::uint64_t>(i, q % t);
        const std::uint64_t hi = q / t * (i + 1) + std::min<std::uint64_t>(i + 1, q % t);
        pool.emplace_back([&, i, lo, hi] { partial[i] = run_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

unsigned tame_m_prime(unsigned m, const FqContext& ctx) {
    if (m < 2) throw std::invalid_argument("cover degree m must be >= 2");
    if (m % ctx.prime().value() == 0)
        throw WildCover("p divides the cover degree m = " + std::to_string(m));
    BigInt mp = boost::multiprecision::gcd(BigInt(m), ctx.order() - 1);
    return static_cast<unsigned>(mp);
}

void check_budget(const FqContext& ctx, std::uint64_t budget) {
    if (!ctx.order_fits_u64() || ctx.order() > budget) {
        std::ostringstream os;
        os << "enumeration of q = " << ctx.order() << " exceeds budget " << budget;
        throw BudgetExceeded(os.str());
    }
}

}  // namespace

std::uint64_t count_affine(unsigned m, const FpPoly& rhs, const FqContext& ctx,
                           const CountOptions& opts) {
    const unsigned m_prime = tame_m_prime(m, ctx);
    // y -> y^m is a bijection: exactly one point per x, including rhs(x) = 0.
    if (m_prime == 1) return ctx.order_u64();
    check_budget(ctx, opts.budget);
    FiberCounter counter(rhs, ctx, opts.strategy, m_prime);
    return enumerate_chunks(ctx, opts.threads, counter, nullptr);
}

std::uint64_t count_affine_excluding(unsigned m, const FpPoly& rhs, const FpPoly& guard,
                                     const FqContext& ctx, const CountOptions& opts) {
    const unsigned m_prime = tame_m_prime(m, ctx);
    check_budget(ctx, opts.budget);
    FiberCounter counter(rhs, ctx, opts.strategy, m_prime);
    return enumerate_chunks(ctx, opts.threads, counter, &guard);
}

std::uint64_t count_points(const SuperellipticCurve& curve, unsigned k,
                           const CountOptions& opts) {
    FqContext ctx(curve.prime(), k);
    std::uint64_t affine = count_affine(curve.cover_degree(), curve.rhs(), ctx, opts);
    std::uint64_t infinity;
    if (curve.delta() == 1) {
        infinity = 1;
    } else {
        infinity = mth_root_count(ctx.from_prime_field(curve.rhs().leading()),
                                  curve.cover_degree());
    }
    return affine + infinity;
}

PointCounts count_sequence(const SuperellipticCurve& curve, unsigned r,
                           const CountOptions& opts) {
    if (r < 1 || r > 2 * curve.genus())
        throw std::invalid_argument("r must be in [1, 2g]");
    const std::uint32_t p = curve.prime().value();
    std::vector<std::uint64_t> counts;
    counts.reserve(r);
    for (unsigned k = 1; k <= r; ++k) {
        BigInt q = ipow(p, k);
        if (q > opts.budget) {
            std::ostringstream os;
            os << "q = " << q << " = " << p << "^" << k << " exceeds budget " << opts.budget;
            throw BudgetExceeded(os.str());
        }
        std::uint64_t nk = count_points(curve, k, opts);
        // Coarse cap, then the Weil bound (N_k - p^k - 1)^2 <= 4 g^2 p^k.
        BigInt cap = BigInt(curve.cover_degree() + 1) * q + curve.cover_degree();
        if (nk > cap) throw std::logic_error("count exceeds coarse cap");
        BigInt diff = BigInt(nk) - q - 1;
        if (diff * diff > BigInt(4) * curve.genus() * curve.genus() * q)
            throw WeilViolation("N_" + std::to_string(k) + " violates the Weil bound");
        counts.push_back(nk);
    }
    return PointCounts{curve, std::move(counts)};
}

}  // namespace ssc
