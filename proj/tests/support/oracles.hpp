#pragma once

// Reference computations kept apart from the library's own algorithms. They
// are slow and only meant for small diagrams.

#include <cstdint>
#include <functional>
#include <vector>

#include "twobridge/diagram.hpp"
#include "twobridge/export.hpp"
#include "twobridge/laurent.hpp"

namespace oracle {

/// Kauffman bracket by summing all 2^n states of the PD code.
twobridge::LaurentPoly state_sum_bracket(const twobridge::PdCode& pd);

/// Number of spanning trees of the white Tait graph. Equals the determinant
/// on alternating diagrams.
std::int64_t tait_determinant(const twobridge::Diagram& d);

/// (numerator, denominator) of c_n + 1/(c_{n-1} + ... + 1/c_1), any signs.
std::pair<std::int64_t, std::int64_t> continued_fraction(const std::vector<int>& entries);

/// 0 when det = +-1 mod 8.
int arf_from_determinant(std::int64_t det);

/// Trivial knot or unlink, decided from the signed twist counts.
bool twist_trivial(const twobridge::Diagram& d);

/// Compositions of `total` into positive parts.
void for_each_composition(int total, const std::function<void(const std::vector<int>&)>& f);

}  // namespace oracle
