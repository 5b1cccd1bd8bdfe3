#include "twobridge/laurent.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace twobridge {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Coeff>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::substituted(int factor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
  return out;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const int lead_e = divisor.max_exponent();
  const Coeff lead_c = divisor.coeff(lead_e);
  LaurentPoly rest = *this;
  LaurentPoly quotient;
  // the minimum exponent of `rest` never decreases and its maximum strictly
  // drops, so the loop terminates
  while (!rest.is_zero()) {
    const int e = rest.max_exponent();
    const Coeff c = rest.coeff(e);
    if (rest.span() < divisor.span() || c % lead_c != 0) throw std::domain_error("inexact polynomial division");
    const LaurentPoly step = monomial(e - lead_e, c / lead_c);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

std::string LaurentPoly::serialize() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    out << (first ? "" : " ") << e << ':' << c;
    first = false;
  }
  return out.str();
}

LaurentPoly LaurentPoly::deserialize(std::string_view text) {
  LaurentPoly out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    const std::size_t end = std::min(text.find(' ', pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("bad polynomial term");
    int e = 0;
    Coeff c = 0;
    auto r1 = std::from_chars(token.data(), token.data() + colon, e);
    auto r2 = std::from_chars(token.data() + colon + 1, token.data() + token.size(), c);
    if (r1.ec != std::errc{} || r1.ptr != token.data() + colon || r2.ec != std::errc{} ||
        r2.ptr != token.data() + token.size())
      throw std::invalid_argument("bad polynomial term");
    out.add_term(e, c);
    pos = end;
  }
  return out;
}

std::string LaurentPoly::pretty(std::string_view var, bool halve) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Coeff mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += var;
    std::string exp;
    if (halve && e % 2 != 0)
      exp = std::to_string(e) + "/2";
    else
      exp = std::to_string(halve ? e / 2 : e);
    if (exp != "1") out += "^" + exp;
  }
  return out;
}

}  // namespace twobridge
