#include "ssc/newton.hpp"

namespace ssc {

namespace {

unsigned p_adic_valuation(BigInt n, std::uint32_t p) {
    unsigned v = 0;
    if (n < 0) n = -n;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// cross(a, b, c) > 0 means a->b->c turns left; the lower hull keeps only
// left turns, so collinear middle points are dropped.
std::int64_t cross(std::pair<unsigned, unsigned> a, std::pair<unsigned, unsigned> b,
                   std::pair<unsigned, unsigned> c) {
    std::int64_t abx = std::int64_t(b.first) - a.first;
    std::int64_t aby = std::int64_t(b.second) - a.second;
    std::int64_t acx = std::int64_t(c.first) - a.first;
    std::int64_t acy = std::int64_t(c.second) - a.second;
    return abx * acy - aby * acx;
}

}  // namespace

NewtonPolygon newton_polygon(const LPolynomial& L) {
    WeilReport rep = validate_weil(L);
    if (!rep.all_pass())
        throw std::invalid_argument("newton_polygon needs a valid L-polynomial: " +
                                    rep.describe());
    NewtonPolygon np;
    np.p = L.p;
    np.genus = L.genus;

    for (unsigned i = 0; i < L.a.size(); ++i)
        if (L.a[i] != 0) np.points.emplace_back(i, p_adic_valuation(L.a[i], L.p));

    // Monotone chain over points already sorted by abscissa.
    for (const auto& pt : np.points) {
        while (np.vertices.size() >= 2 &&
               cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), pt) <= 0)
            np.vertices.pop_back();
        np.vertices.push_back(pt);
    }

    for (std::size_t i = 1; i < np.vertices.size(); ++i) {
        auto [x0, y0] = np.vertices[i - 1];
        auto [x1, y1] = np.vertices[i];
        np.slopes.push_back(
            {Rational(std::int64_t(y1) - y0, std::int64_t(x1) - x0), x1 - x0});
    }
    return np;
}

bool is_supersingular(const LPolynomial& L) {
    NewtonPolygon np = newton_polygon(L);
    const Rational half(1, 2);
    bool by_slopes = true;
    for (const auto& seg : np.slopes) by_slopes = by_slopes && seg.slope == half;

    bool by_valuations = true;
    for (unsigned i = 1; i < 2 * L.genus; ++i)
        if (L.a[i] != 0 && 2 * p_adic_valuation(L.a[i], L.p) < i) by_valuations = false;

    if (by_slopes != by_valuations)
        throw std::logic_error("slope test and valuation test disagree");
    return by_slopes;
}

unsigned p_rank(const LPolynomial& L) {
    for (const auto& seg : newton_polygon(L).slopes)
        if (seg.slope == Rational(0)) return seg.multiplicity;
    return 0;
}

}  // namespace ssc
