#include "twobridge/conway.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "twobridge/error.hpp"

namespace twobridge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::MalformedSyntax: return "MalformedSyntax";
    case ErrorCode::ImproperInput: return "ImproperInput";
    case ErrorCode::UnknownRegionLabel: return "UnknownRegionLabel";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotTrivializing: return "NotTrivializing";
    case ErrorCode::OddSum: return "OddSum";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::UnorientedComponent: return "UnorientedComponent";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

ConwayWord::ConwayWord(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::EmptyWord, "Conway word has no entries");
  for (int c : entries_) {
    if (c <= 0) {
      throw Error(ErrorCode::NonPositiveEntry,
                  "Conway entries must be positive, got " + std::to_string(c));
    }
  }
}

int ConwayWord::crossing_count() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string ConwayWord::str() const {
  std::string out = "C(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorCode::MalformedSyntax, "cannot parse Conway word '" + std::string(text) + "'");
}

}  // namespace

ConwayWord parse_conway(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && (body.front() == 'C' || body.front() == 'c')) {
    body.remove_prefix(1);
    body = trim(body);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')') malformed(text);
    body = body.substr(1, body.size() - 2);
  }
  if (trim(body).empty()) throw Error(ErrorCode::EmptyWord, "Conway word has no entries");

  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view field = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    field = trim(field);
    if (field.empty()) malformed(text);
    // a comma-separated field may still hold several space-separated values
    while (!field.empty()) {
      const char* first = field.data();
      const char* last = field.data() + field.size();
      int value = 0;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr == first) malformed(text);
      if (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr))) malformed(text);
      entries.push_back(value);
      field = trim(field.substr(static_cast<std::size_t>(ptr - first)));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ConwayWord(std::move(entries));
}

namespace {

std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(prod, c, &sum))
    throw Error(ErrorCode::Overflow, "continued fraction exceeds 64-bit range");
  return sum;
}

}  // namespace

SignedFraction signed_fraction(const std::vector<int>& entries) {
  // x_1 = e_1, x_k = e_k + 1/x_{k-1}; starting from 1/0 keeps zero entries exact
  std::int64_t p = 1, q = 0;
  for (int e : entries) {
    std::int64_t next = checked_mul_add(e, p, q);
    q = p;
    p = next;
  }
  return {p, q};
}

Fraction fraction(const ConwayWord& w) {
  SignedFraction f = signed_fraction(w.entries());
  std::int64_t g = std::gcd(f.numerator, f.denominator);
  if (g == 0) g = 1;
  return {f.numerator / g, f.denominator / g};
}

}  // namespace twobridge
