#include "twobridge/arf.hpp"

#include <algorithm>

#include "twobridge/error.hpp"
#include "twobridge/invariants.hpp"

namespace twobridge {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

// 0 for sums = 0 mod 4, 1 for sums = 2 mod 4.
int arf_of_sum(int sum) {
  if (sum % 2 != 0) throw Error(ErrorCode::OddSum, "region sum " + std::to_string(sum) + " is odd");
  return mod4(sum) == 0 ? 0 : 1;
}

bool trivial(const Diagram& d) {
  return d.crossing_count() <= kOracleCrossingLimit ? is_trivial(d) : four_plat_trivial(d);
}

}  // namespace

std::string to_string(ArfSource source) {
  switch (source) {
    case ArfSource::Formula: return "formula";
    case ArfSource::RegionSum: return "region-sum";
    case ArfSource::DeterminantOracle: return "determinant-oracle";
  }
  return "?";
}

CrossingWeights weights(const Diagram& d) {
  CrossingWeights out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    // the two sectors swept counterclockwise by the over-strand
    const int first = d.crossing(c).nwse_over ? 0 : 1;
    const Color color = d.region(d.region_at({c, first})).color;
    out.a.push_back(color == Color::Black ? 1 : -1);
    out.w.push_back(d.sign(c));
  }
  return out;
}

int a_of_region(const Diagram& d, const CrossingWeights& cw, int region_id) {
  const Region& r = d.region(region_id);
  int total = 0;
  for (int c : r.boundary) {
    const auto i = static_cast<std::size_t>(c);
    total += r.color == Color::White ? cw.a[i] - cw.w[i] : -(cw.a[i] + cw.w[i]);
  }
  return total / 2;
}

int a_of_region(const Diagram& d, const RegionLabel& label) { return a_of_region(d, weights(d), d.resolve(label)); }

int region_sum(const Diagram& d, std::span<const int> region_ids) {
  Diagram current = d;
  int total = 0;
  for (int id : region_ids) {
    total += a_of_region(current, weights(current), id);
    const int one[] = {id};
    current = current.flipped(current.effect(one));
  }
  return total;
}

int literal_region_sum(const Diagram& d, std::span<const int> region_ids) {
  const CrossingWeights cw = weights(d);
  int total = 0;
  for (int id : region_ids) total += a_of_region(d, cw, id);
  return total;
}

ArfResult arf_via_regions(const Diagram& d, std::span<const int> region_ids) {
  if (!d.is_reduced()) throw Error(ErrorCode::ImproperInput, "the region formula needs a reduced diagram");
  if (d.component_count() == 2 && *d.linking_number() % 2 != 0)
    throw Error(ErrorCode::ImproperInput, "Arf is defined for knots and proper links only");
  if (!trivial(d.flipped(d.effect(region_ids))))
    throw Error(ErrorCode::NotTrivializing, "the selection does not trivialize the diagram");
  const CrossingWeights cw = weights(d);
  const int sum = region_sum(d, region_ids);
  ArfResult out;
  out.value = arf_of_sum(sum);
  out.source = ArfSource::RegionSum;
  out.region_sum = sum;
  out.literal_sum = literal_region_sum(d, region_ids);
  if (d.component_count() == 2) out.orientation = d.orientation();

  // one white region: the single-change relation gives the same parity
  if (region_ids.size() == 1 && d.region(region_ids[0]).color == Color::White) {
    int half = 0;
    for (int c : d.region(region_ids[0]).boundary)
      half += cw.a[static_cast<std::size_t>(c)] - cw.w[static_cast<std::size_t>(c)];
    if (arf_of_sum(half / 2) != out.value) throw std::logic_error("single-region relation disagrees with region sum");
  }
  return out;
}

ArfResult arf_via_regions(const Diagram& d, const RegionSelection& selection) {
  const auto ids = d.resolve(selection);
  return arf_via_regions(d, std::span<const int>(ids));
}

ArfResult arf_formula_cmn(int m, int n, Orientation variant) {
  ArfResult out;
  out.source = ArfSource::Formula;
  if (m % 2 == 1 && n % 2 == 1) {
    if ((m + n) % 4 != 0)
      throw Error(ErrorCode::ImproperInput, "C(" + std::to_string(m) + "," + std::to_string(n) + ") is not proper");
    out.orientation = variant;
    out.value = arf_of_sum(variant == Orientation::A ? 2 * ((m + 2) / 4) : 2 * ((n + 2) / 4));
    out.note = "proper link, orientation variant " + std::string(variant == Orientation::A ? "A" : "B");
    return out;
  }
  if (n % 2 == 1) {
    std::swap(m, n);
    out.swapped = true;
  }
  if (m % 2 == 1) {
    out.value = n % 4 == 0 ? arf_of_sum(n / 2) : arf_of_sum(m + n / 2);
    out.note = n % 4 == 0 ? "one entry even, 0 mod 4" : "one entry even, 2 mod 4";
  } else {
    out.value = n % 4 == 0 ? 0 : arf_of_sum(m);
    out.note = n % 4 == 0 ? "both entries even, second 0 mod 4" : "both entries even, second 2 mod 4";
  }
  return out;
}

ArfResult arf_formula_cmpn(int m, int p, int n) {
  const bool one_even = (m % 2 == 0) != (n % 2 == 0);
  const bool all_odd = m % 2 == 1 && p % 2 == 1 && n % 2 == 1;
  if (!one_even && !all_odd)
    throw Error(ErrorCode::NotAKnot, "C(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) +
                                         ") is a two-component link");
  ArfResult out;
  out.source = ArfSource::Formula;
  if (one_even) {
    if (m % 2 == 1) {
      std::swap(m, n);
      out.swapped = true;
    }
    const int shift = m % 4 == 2 ? p : 0;
    if (p % 2 == 0) {
      out.value = arf_of_sum(2 * ((m + n + 2) / 4) + shift);
      out.note = "outer entry even, middle even";
    } else {
      out.value = arf_of_sum(m / 2 + shift);
      out.note = "outer entry even, middle odd";
    }
    return out;
  }
  if ((p + n) % 4 == 0) {
    out.value = arf_of_sum(2 * ((p + 2) / 4));
    out.note = "all odd, p + n = 0 mod 4";
  } else {
    out.value = arf_of_sum(m + 1 + 2 * (p / 4));
    out.note = "all odd, p + n = 2 mod 4";
  }
  return out;
}

}  // namespace twobridge
