#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twobridge {

/// Sequence C(c1,...,cn) of positive half-twist counts. Odd positions are
/// horizontal twist blocks, even positions vertical ones.
class ConwayWord {
public:
  ConwayWord() = default;
  explicit ConwayWord(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int length() const noexcept { return static_cast<int>(entries_.size()); }
  /// 1-based tangle access.
  int tangle(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  int crossing_count() const noexcept;
  /// Canonical text form `C(c1,c2,...,cn)`.
  std::string str() const;

  friend bool operator==(const ConwayWord&, const ConwayWord&) = default;

private:
  std::vector<int> entries_;
};

ConwayWord parse_conway(std::string_view text);

struct Fraction {
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
};

/// c_n + 1/(c_{n-1} + ... + 1/c_1) in lowest terms.
Fraction fraction(const ConwayWord& w);

/// Numerator and denominator of the same continued fraction over arbitrary
/// signed entries (zero allowed). |numerator| is the determinant.
struct SignedFraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};
SignedFraction signed_fraction(const std::vector<int>& entries);

enum class LinkKind { Knot, TwoComponentLink };

struct LinkClass {
  LinkKind kind = LinkKind::Knot;
  std::optional<bool> proper;
  std::optional<int> linking_number;

  bool is_knot() const noexcept { return kind == LinkKind::Knot; }
  /// Knots and proper links; the inputs region crossing changes can trivialize.
  bool admissible() const noexcept { return is_knot() || proper.value_or(false); }
};

/// Strand tracing on the standard diagram; the sign of the linking number is
/// taken under the default orientation.
LinkClass classify(const ConwayWord& w);

}  // namespace twobridge
