#pragma once

#include <cstdint>
#include <vector>

#include "ssc/curves.hpp"
#include "ssc/ff.hpp"

namespace ssc {

enum class ResidueStrategy {
    Auto,      // table when it pays off, power test otherwise
    PowerTest, // classify each value by one exponentiation
    Table,     // precomputed m'-th power classes over the whole field
};

struct CountOptions {
    std::uint64_t budget = 100'000'000;  // max field elements enumerated per task
    unsigned threads = 1;                // 0 = hardware concurrency
    ResidueStrategy strategy = ResidueStrategy::Auto;
};

/// #{(x, y) in F_q^2 : y^m = rhs(x)}. rhs need not be separable. When
/// gcd(m, q-1) = 1 the y-power map is a bijection and the count is exactly q
/// with no enumeration; otherwise the field is enumerated in lexicographic
/// element order, chunked across threads.
std::uint64_t count_affine(unsigned m, const FpPoly& rhs, const FqContext& ctx,
                           const CountOptions& opts = {});

// Same, restricted to x with guard(x) != 0. Always enumerates.
std::uint64_t count_affine_excluding(unsigned m, const FpPoly& rhs, const FpPoly& guard,
                                     const FqContext& ctx, const CountOptions& opts = {});

/// N_k = #C(F_{p^k}) for the smooth model: affine points plus the infinity
/// contribution (one point when delta = 1, the fiber v^m = lc(f) when
/// delta = m).
std::uint64_t count_points(const SuperellipticCurve& curve, unsigned k,
                           const CountOptions& opts = {});

struct PointCounts {
    SuperellipticCurve curve;
    std::vector<std::uint64_t> counts;  // N_1 .. N_r
};

/// (N_1, ..., N_r), each checked against the Weil bound
/// |N_k - (p^k + 1)| <= 2g p^{k/2} and the coarse cap (m+1) p^k + m.
PointCounts count_sequence(const SuperellipticCurve& curve, unsigned r,
                           const CountOptions& opts = {});

}  // namespace ssc
