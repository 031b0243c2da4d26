#include "ssc/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ssc {

namespace {

std::uint32_t mulmod_u32(std::uint32_t a, std::uint32_t b, std::uint32_t n) {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % n);
}

unsigned euler_phi(std::uint32_t n) {
    unsigned count = 0;
    for (std::uint32_t u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) ++count;
    return count;
}

bool in_subgroup(std::uint32_t x, const std::vector<std::uint32_t>& h) {
    return std::binary_search(h.begin(), h.end(), x);
}

// Least t >= 1 with u^t in H; divides the quotient order by Lagrange.
unsigned quotient_order(std::uint32_t u, const CyclicFieldSpec& spec) {
    std::uint32_t x = u % spec.conductor;
    for (unsigned t = 1; t <= spec.degree; ++t) {
        if (in_subgroup(x, spec.subgroup)) return t;
        x = mulmod_u32(x, u % spec.conductor, spec.conductor);
    }
    throw std::logic_error("element order does not divide the quotient order");
}

}  // namespace

CyclicFieldSpec make_field_spec(std::string name, std::uint32_t conductor,
                                const std::vector<std::uint32_t>& generators,
                                unsigned expected_degree) {
    if (conductor < 2) throw std::invalid_argument("conductor must be >= 2");
    std::set<std::uint32_t> h{1};
    for (std::uint32_t g : generators) {
        if (std::gcd(g % conductor, conductor) != 1)
            throw std::invalid_argument("subgroup generator is not a unit mod n");
        h.insert(g % conductor);
    }
    // Close under multiplication.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> cur(h.begin(), h.end());
        for (std::uint32_t a : cur)
            for (std::uint32_t b : cur)
                if (h.insert(mulmod_u32(a, b, conductor)).second) grew = true;
    }

    unsigned phi = euler_phi(conductor);
    if (phi % h.size() != 0 || phi / h.size() != expected_degree)
        throw std::invalid_argument("phi(n)/|H| != expected degree");

    CyclicFieldSpec spec{std::move(name), conductor,
                         std::vector<std::uint32_t>(h.begin(), h.end()), expected_degree};

    // Cyclic quotient: some unit must have full quotient order.
    bool cyclic = false;
    for (std::uint32_t u = 1; u < conductor && !cyclic; ++u)
        if (std::gcd(u, conductor) == 1 && quotient_order(u, spec) == expected_degree)
            cyclic = true;
    if (!cyclic) throw std::invalid_argument("(Z/nZ)^x / H is not cyclic");
    return spec;
}

const std::vector<CyclicFieldSpec>& field_specs() {
    static const std::vector<CyclicFieldSpec> specs = [] {
        auto crt = [](std::uint32_t n, std::uint32_t r9, std::uint32_t other_mod,
                      std::uint32_t other_r) {
            for (std::uint32_t h = 1; h < n; ++h)
                if (h % 9 == r9 && h % other_mod == other_r) return h;
            throw std::logic_error("CRT solution not found");
        };
        std::vector<CyclicFieldSpec> v;
        v.push_back(make_field_spec("Q(zeta9)", 9, {}, 6));
        v.push_back(make_field_spec("Q(zeta9)+(i)", 36, {crt(36, 8, 4, 1)}, 6));
        v.push_back(make_field_spec("Q(zeta9)+(zeta5)", 45, {crt(45, 8, 5, 1)}, 12));
        return v;
    }();
    return specs;
}

unsigned frobenius_order(std::uint32_t p, const CyclicFieldSpec& spec) {
    if (std::gcd(p, spec.conductor) != 1)
        throw RamifiedPrime("p = " + std::to_string(p) + " ramifies in " + spec.name);
    return quotient_order(p, spec);
}

bool has_even_frobenius(std::uint32_t p, const CyclicFieldSpec& spec) {
    return frobenius_order(p, spec) % 2 == 0;
}

unsigned splitting_count(std::uint32_t p, const CyclicFieldSpec& spec) {
    return spec.degree / frobenius_order(p, spec);
}

}  // namespace ssc
