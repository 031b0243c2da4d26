#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace ssc {

// Exact integers for everything zeta-related. Coefficient magnitudes reach
// C(12,6) * p^6 with p up to 2^20, which clears 64 and 128 bits, so size
// reasoning is simply not done anywhere.
using BigInt = boost::multiprecision::cpp_int;

// Exact rationals for Newton slopes (numerators/denominators never exceed 2g).
using Rational = boost::rational<std::int64_t>;

BigInt binomial(unsigned n, unsigned k);

BigInt ipow(std::uint64_t base, unsigned exp);

}  // namespace ssc
