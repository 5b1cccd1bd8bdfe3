#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace twobridge {

/// Integer Laurent polynomial in one variable, stored sparsely.
class LaurentPoly {
public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const int, Coeff>> terms);
  static LaurentPoly constant(Coeff c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, Coeff c = 1);

  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(Coeff c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= -1; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiply by x^k.
  LaurentPoly shifted(int k) const;
  /// Substitute x -> x^factor (factor may be negative).
  LaurentPoly substituted(int factor) const;
  /// Exact division; throws std::domain_error when the divisor does not divide.
  LaurentPoly divided_by(const LaurentPoly& divisor) const;

  /// Sparse `exponent:coefficient` pairs, ascending, space separated.
  std::string serialize() const;
  static LaurentPoly deserialize(std::string_view text);
  /// Human form such as `-t^-4 + t^-3 + t^-1`; `halve` prints exponents as k/2.
  std::string pretty(std::string_view var, bool halve = false) const;

private:
  void add_term(int exponent, Coeff c);
  std::map<int, Coeff> terms_;
};

}  // namespace twobridge
