#include "twobridge/invariants.hpp"

#include <cmath>
#include <stdexcept>

#include "twobridge/error.hpp"

namespace twobridge {

LaurentPoly jones(const Diagram& d) {
  const LaurentPoly bracket = kauffman_bracket(d);
  const int w = d.writhe();
  LaurentPoly in_a = bracket.shifted(-3 * w);
  if (w % 2 != 0) in_a *= -1;
  LaurentPoly out;
  for (const auto& [e, c] : in_a.terms()) {
    if (e % 2 != 0) throw std::logic_error("odd A-exponent in normalized bracket");
    out += LaurentPoly::monomial(-e / 2, c);
  }
  return out;
}

LaurentPoly unlink_jones(int loops) {
  LaurentPoly out = LaurentPoly::constant(1);
  const LaurentPoly circle{{-1, -1}, {1, -1}};
  for (int i = 1; i < loops; ++i) out *= circle;
  return out;
}

std::string format_jones(const LaurentPoly& v) { return v.pretty("t", true); }

std::int64_t determinant(const Diagram& d) {
  // evaluate at s = i
  std::int64_t re = 0;
  std::int64_t im = 0;
  const LaurentPoly v = jones(d);
  for (const auto& [e, c] : v.terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      default: im -= c; break;
    }
  }
  const std::int64_t norm = re * re + im * im;
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(norm))));
  while (root * root > norm) --root;
  while ((root + 1) * (root + 1) <= norm) ++root;
  if (root * root != norm) throw std::logic_error("Jones value at t = -1 has non-integral modulus");
  return root;
}

std::int64_t determinant(const ConwayWord& w) { return determinant(build_diagram(w)); }

bool is_trivial(const Diagram& d) { return jones(d) == unlink_jones(d.component_count()); }

int arf_oracle(const Diagram& d) {
  if (d.component_count() != 1)
    throw Error(ErrorCode::NotAKnot, "the determinant rule for Arf applies to knots only");
  const std::int64_t r = determinant(d) % 8;
  return r == 1 || r == 7 ? 0 : 1;
}

int arf_oracle(const ConwayWord& w) { return arf_oracle(build_diagram(w)); }

}  // namespace twobridge
