#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

/// A cyclic field K inside Q(zeta_n), encoded by the subgroup H of
/// (Z/nZ)^x that fixes it: Gal(K/Q) = (Z/nZ)^x / H, cyclic of the stated
/// degree. Construction closes H under multiplication and verifies both the
/// degree and cyclicity (by exhibiting a unit of full quotient order).
struct CyclicFieldSpec {
    std::string name;
    std::uint32_t conductor;
    std::vector<std::uint32_t> subgroup;  // sorted, closed, includes 1
    unsigned degree;
};

CyclicFieldSpec make_field_spec(std::string name, std::uint32_t conductor,
                                const std::vector<std::uint32_t>& generators,
                                unsigned expected_degree);

/// The three fields attached to the verified families:
/// Q(zeta9) (n=9, H={1}), Q(zeta9)+(i) (n=36, H={1,17}),
/// Q(zeta9)+(zeta5) (n=45, H={1,26}). The nontrivial H element is solved by
/// CRT from h = -1 mod 9 and h = 1 mod 4 (resp. mod 5): complex conjugation
/// on the zeta9 part only.
const std::vector<CyclicFieldSpec>& field_specs();

// Order of Frob_p in (Z/nZ)^x / H: the least t >= 1 with p^t mod n in H.
unsigned frobenius_order(std::uint32_t p, const CyclicFieldSpec& spec);

bool has_even_frobenius(std::uint32_t p, const CyclicFieldSpec& spec);

// Number of primes of K above p = degree / frobenius_order.
unsigned splitting_count(std::uint32_t p, const CyclicFieldSpec& spec);

}  // namespace ssc
