#pragma once

#include <cstdint>

#include "twobridge/conway.hpp"
#include "twobridge/diagram.hpp"
#include "twobridge/export.hpp"
#include "twobridge/laurent.hpp"

namespace twobridge {

/// Largest diagram the polynomial oracles accept.
inline constexpr int kOracleCrossingLimit = 24;

/// Kauffman bracket in A, normalized so a crossingless circle is 1.
/// Throws TooManyCrossings above kOracleCrossingLimit.
LaurentPoly kauffman_bracket(const PdCode& pd);
LaurentPoly kauffman_bracket(const Diagram& d);

/// Jones polynomial (-A)^{-3w} <D> in the variable s = t^{1/2} = A^{-2}.
/// Exponent k of the result means t^{k/2}.
LaurentPoly jones(const Diagram& d);
/// Jones value of the crossingless diagram with `loops` circles.
LaurentPoly unlink_jones(int loops);
std::string format_jones(const LaurentPoly& v);

/// |V(t = -1)|.
std::int64_t determinant(const Diagram& d);
std::int64_t determinant(const ConwayWord& w);

/// Jones equals the unknot or 2-component unlink value.
bool is_trivial(const Diagram& d);

/// 0 iff det = +-1 mod 8. Throws NotAKnot for links.
int arf_oracle(const Diagram& d);
int arf_oracle(const ConwayWord& w);

}  // namespace twobridge
