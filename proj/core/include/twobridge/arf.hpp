#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twobridge/diagram.hpp"

namespace twobridge {

/// Per-crossing a(c) (smoothing type against the checkerboard coloring) and
/// w(c) (crossing sign), both +-1.
struct CrossingWeights {
  std::vector<int> a;
  std::vector<int> w;
};

/// Throws UnorientedComponent when the diagram carries no orientation.
CrossingWeights weights(const Diagram& d);

/// White: (1/2) sum(a - w); Black: -(1/2) sum(a + w), over boundary crossings.
int a_of_region(const Diagram& d, const CrossingWeights& cw, int region_id);
/// Throws UnknownRegionLabel.
int a_of_region(const Diagram& d, const RegionLabel& label);

enum class ArfSource { Formula, RegionSum, DeterminantOracle };
std::string to_string(ArfSource source);

struct ArfResult {
  int value = 0;
  ArfSource source = ArfSource::Formula;
  /// Set for two-component links.
  std::optional<Orientation> orientation;
  /// Sum of A(R) over the selection, each region weighed after the earlier
  /// ones were changed (region-sum route only).
  std::optional<int> region_sum;
  /// Same regions, all weighed in the input diagram.
  std::optional<int> literal_sum;
  /// Entries were exchanged before applying a closed form.
  bool swapped = false;
  std::string note;
};

/// Arf from a trivializing selection. Throws ImproperInput, NotTrivializing,
/// OddSum, UnknownRegionLabel.
ArfResult arf_via_regions(const Diagram& d, std::span<const int> region_ids);
ArfResult arf_via_regions(const Diagram& d, const RegionSelection& selection);

/// Sum of A(R) over the given regions, in order, each A(R) taken in the
/// diagram left by the changes before it. Congruent mod 4 for every order.
int region_sum(const Diagram& d, std::span<const int> region_ids);
/// Sum of A(R) with every region weighed in d itself. Differs from
/// region_sum by 2 mod 4 when shared crossings contribute an odd count.
int literal_region_sum(const Diagram& d, std::span<const int> region_ids);

/// Closed form for C(m,n): knots, or proper links under orientation variant
/// A or B. Throws ImproperInput.
ArfResult arf_formula_cmn(int m, int n, Orientation variant = Orientation::A);
/// Closed form for the knot C(m,p,n). Throws NotAKnot.
ArfResult arf_formula_cmpn(int m, int p, int n);

}  // namespace twobridge
