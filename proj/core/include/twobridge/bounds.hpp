#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/diagram.hpp"

namespace twobridge {

enum class TheoremTag { T2_1, T2_2, T2_4, T2_5, T2_6, T2_7, T2_8a, T2_8b };
enum class BoundKind { Exact, Upper };

std::string to_string(TheoremTag tag);
std::string to_string(BoundKind kind);
/// Accepts "T2.1" ... "T2.8b"; "T2.8" matches either parity family.
std::optional<TheoremTag> parse_theorem_tag(std::string_view text);
bool tag_matches(std::string_view pattern, TheoremTag tag);

struct BoundReport {
  TheoremTag theorem = TheoremTag::T2_1;
  BoundKind kind = BoundKind::Upper;
  int value = 0;
  RegionSelection certificate;
  std::string note;
  /// The certificate has `value` distinct regions and trivializes the
  /// standard diagram.
  bool verified = false;
};

struct LSet {
  std::vector<int> members;    // even indices, increasing
  std::vector<int> residuals;  // k_j for j = 1..n, each in {-2,-1,0,1}
  bool contains(int j) const;
  int residual(int j) const { return residuals.at(static_cast<std::size_t>(j - 1)); }
};

/// Exact value for two-tangle words. Throws ImproperInput.
BoundReport ur_cmn(int m, int n);
/// C(m,2,n). Throws ImproperInput.
BoundReport bound_m2n(int m, int n);
/// Every applicable three-tangle bound, p = middle entry. Throws ImproperInput.
std::vector<BoundReport> bound_mpn(int m, int p, int n);

LSet l_set(const ConwayWord& w);
/// Bound from the greedy index set; applies to every knot or proper link.
BoundReport bound_general(const ConwayWord& w);
/// Parity families: odd-index entries all even, or even-index entries all
/// even with an even number of tangles. Throws FamilyMismatch, ImproperInput.
std::vector<BoundReport> bound_parity_families(const ConwayWord& w);

/// All reports applicable to the word. Throws ImproperInput.
std::vector<BoundReport> all_bounds(const ConwayWord& w);
/// Minimum over verified reports; ties prefer Exact, then smaller certificates.
BoundReport best_bound(const ConwayWord& w);

/// Distinct regions, all labels resolve, and the result is trivial.
bool certificate_trivializes(const Diagram& d, const RegionSelection& selection);
/// Throws ImproperInput unless the word is a knot or proper link.
void require_admissible(const ConwayWord& w);

/// Progression start, start+4, ... up to `last` inclusive.
std::vector<int> progression(int start, int last);

}  // namespace twobridge
