#pragma once

#include <utility>
#include <vector>

#include "ssc/zeta.hpp"

namespace ssc {

struct SlopeSegment {
    Rational slope;
    unsigned multiplicity;  // horizontal length of the segment

    friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/// p-adic Newton polygon of an L-polynomial: the lower convex hull of
/// (i, v_p(a_i)) over the nonzero coefficients. Zero coefficients have
/// valuation +infinity and contribute no hull point. Everything is exact;
/// slopes are rationals in lowest terms.
struct NewtonPolygon {
    std::uint32_t p = 0;
    unsigned genus = 0;
    std::vector<std::pair<unsigned, unsigned>> points;    // (i, v_p(a_i)), a_i != 0
    std::vector<std::pair<unsigned, unsigned>> vertices;  // hull, (0,0) .. (2g,g)
    std::vector<SlopeSegment> slopes;                     // nondecreasing
};

NewtonPolygon newton_polygon(const LPolynomial& L);

/// True when every slope equals 1/2; cross-checked internally against the
/// valuation test 2 v_p(a_i) >= i for 0 < i < 2g.
bool is_supersingular(const LPolynomial& L);

// Multiplicity of slope 0.
unsigned p_rank(const LPolynomial& L);

}  // namespace ssc
