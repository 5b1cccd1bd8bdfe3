#include "twobridge/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

void append_chain(RegionSelection& s, RegionLabel (*make)(int), const std::vector<int>& indices) {
  for (int j : indices) s.labels.push_back(make(j));
}

// R_3, R_7, ... with `count` members, shifted by `offset`.
std::vector<int> picks(int count, int offset = 0) {
  std::vector<int> out;
  for (int t = 0; t < count; ++t) out.push_back(offset + 3 + 4 * t);
  return out;
}

void finish(BoundReport& r, const ConwayWord& w) {
  r.verified = static_cast<int>(r.certificate.labels.size()) == r.value &&
               certificate_trivializes(build_diagram(w), r.certificate);
}

// Certificate for a two-tangle word that reduces one twist block to zero.
RegionSelection block_reduction(int c, RegionLabel (*make)(int)) {
  RegionSelection s;
  if (c % 4 == 0) {
    append_chain(s, make, picks(c / 4));
  } else {
    append_chain(s, make, picks((c - 2) / 4));
    s.labels.push_back(make(1));
  }
  return s;
}

}  // namespace

std::vector<int> progression(int start, int last) {
  std::vector<int> out;
  for (int j = start; j <= last; j += 4) out.push_back(j);
  return out;
}

std::string to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::T2_1: return "T2.1";
    case TheoremTag::T2_2: return "T2.2";
    case TheoremTag::T2_4: return "T2.4";
    case TheoremTag::T2_5: return "T2.5";
    case TheoremTag::T2_6: return "T2.6";
    case TheoremTag::T2_7: return "T2.7";
    case TheoremTag::T2_8a: return "T2.8a";
    case TheoremTag::T2_8b: return "T2.8b";
  }
  return "?";
}

std::string to_string(BoundKind kind) { return kind == BoundKind::Exact ? "exact" : "upper"; }

std::optional<TheoremTag> parse_theorem_tag(std::string_view text) {
  for (auto tag : {TheoremTag::T2_1, TheoremTag::T2_2, TheoremTag::T2_4, TheoremTag::T2_5, TheoremTag::T2_6,
                   TheoremTag::T2_7, TheoremTag::T2_8a, TheoremTag::T2_8b})
    if (to_string(tag) == text) return tag;
  return std::nullopt;
}

bool tag_matches(std::string_view pattern, TheoremTag tag) {
  if (pattern == "T2.8") return tag == TheoremTag::T2_8a || tag == TheoremTag::T2_8b;
  return to_string(tag) == pattern;
}

bool LSet::contains(int j) const { return std::find(members.begin(), members.end(), j) != members.end(); }

void require_admissible(const ConwayWord& w) {
  const LinkClass k = classify(w);
  if (!k.admissible())
    throw Error(ErrorCode::ImproperInput, w.str() + " is a link with odd linking number " +
                                              std::to_string(*k.linking_number) +
                                              "; region crossing changes cannot unlink it");
}

bool certificate_trivializes(const Diagram& d, const RegionSelection& selection) {
  std::vector<int> ids;
  for (const auto& label : selection.labels) {
    const auto id = d.find_region(label);
    if (!id) return false;
    ids.push_back(*id);
  }
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return four_plat_trivial(d.flipped(d.effect(ids)));
}

BoundReport ur_cmn(int m, int n) {
  const ConwayWord w({m, n});
  require_admissible(w);
  BoundReport r;
  r.theorem = TheoremTag::T2_1;
  r.kind = BoundKind::Exact;
  if (m % 2 == 0 && n % 2 == 0) {
    const int k = std::min(m, n);
    r.value = (k + 2) / 4;
    r.certificate = n <= m ? block_reduction(n, RegionLabel::vertical) : block_reduction(m, RegionLabel::horizontal);
    r.note = "both entries even";
  } else if (m % 2 == 0) {
    r.value = (m + 2) / 4;
    r.certificate = block_reduction(m, RegionLabel::horizontal);
    r.note = "first entry even";
  } else if (n % 2 == 0) {
    r.value = (n + 2) / 4;
    r.certificate = block_reduction(n, RegionLabel::vertical);
    r.note = "second entry even";
  } else {
    r.value = (m + n) / 4;
    const int vertical = (n + 2) / 4;
    append_chain(r.certificate, RegionLabel::vertical, picks(vertical));
    append_chain(r.certificate, RegionLabel::horizontal, picks(r.value - vertical));
    r.note = "both entries odd, proper link";
  }
  finish(r, w);
  return r;
}

BoundReport bound_m2n(int m, int n) {
  const ConwayWord w({m, 2, n});
  require_admissible(w);
  BoundReport r;
  r.theorem = TheoremTag::T2_2;
  const int extra = (std::abs(m - n) + 2) / 4;
  r.value = extra + 1;
  r.kind = std::abs(m - n) <= 1 ? BoundKind::Exact : BoundKind::Upper;
  r.certificate.labels.push_back(RegionLabel::vertical(1));
  if (m > n) append_chain(r.certificate, RegionLabel::horizontal, picks(extra));
  if (n > m) append_chain(r.certificate, RegionLabel::horizontal, picks(extra, m));
  r.note = r.kind == BoundKind::Exact ? "outer entries differ by at most one" : "middle entry 2";
  finish(r, w);
  return r;
}

std::vector<BoundReport> bound_mpn(int m, int p, int n) {
  const ConwayWord w({m, p, n});
  require_admissible(w);
  std::vector<BoundReport> out;
  const auto horizontal_chain = [&] {
    RegionSelection s;
    const auto idx = progression(3, 3 + 4 * floor_div(m + n - 2, 4));
    if (m % 2 == 0) {
      append_chain(s, RegionLabel::horizontal, idx);
    } else {
      for (int j : idx) s.labels.push_back(RegionLabel::horizontal(m + n + 2 - j));
    }
    return s;
  };

  if (m % 2 == 0 || n % 2 == 0) {
    BoundReport r;
    r.theorem = TheoremTag::T2_4;
    r.value = (m + n + 2) / 4;
    r.certificate = horizontal_chain();
    r.note = m % 2 == 0 ? "first entry even" : "last entry even";
    finish(r, w);
    out.push_back(std::move(r));
  }

  if (p % 2 == 0) {
    BoundReport r;
    r.theorem = TheoremTag::T2_5;
    const auto vertical = progression(3, 3 + 4 * floor_div(p - 2, 4));
    if (p % 4 == 2) {
      const int extra = (std::abs(m - n) + 2) / 4;
      r.value = extra + (p + 2) / 4;
      append_chain(r.certificate, RegionLabel::vertical, vertical);
      if (m > n) append_chain(r.certificate, RegionLabel::horizontal, picks(extra));
      if (n > m) append_chain(r.certificate, RegionLabel::horizontal, picks(extra, m));
      r.note = "middle entry 2 mod 4";
    } else if (m % 2 == 0 || n % 2 == 0) {
      r.value = (m + n + 2) / 4;
      r.certificate = horizontal_chain();
      r.note = "middle entry 0 mod 4, an outer entry even";
    } else {
      r.value = (m + n + p) / 4;
      append_chain(r.certificate, RegionLabel::horizontal, progression(3, 3 + 4 * floor_div(m + n - 2, 4)));
      append_chain(r.certificate, RegionLabel::vertical, vertical);
      r.note = "middle entry 0 mod 4, outer entries odd";
    }
    finish(r, w);
    out.push_back(std::move(r));
  }

  if (p % 2 == 1 && (m % 2 == 1 || n % 2 == 1)) {
    const bool k_is_m = (m % 2 == 1 && n % 2 == 1) ? m <= n : m % 2 == 1;
    const int k = k_is_m ? m : n;
    BoundReport r;
    r.theorem = TheoremTag::T2_6;
    append_chain(r.certificate, RegionLabel::horizontal, picks((k + 2) / 4, k_is_m ? 0 : m));
    if ((p + k) % 4 == 0) {
      r.value = (p + k) / 4;
      append_chain(r.certificate, RegionLabel::vertical, progression(3, 3 + 4 * floor_div(p - 2, 4)));
      r.note = "k = " + std::to_string(k) + ", p + k = 0 mod 4";
    } else {
      r.value = (p + k + 2) / 4;
      const int last = p % 4 == 1 ? 3 + 4 * floor_div(p - 2, 4) : 3 + 4 * floor_div(p - 4, 4);
      append_chain(r.certificate, RegionLabel::vertical, progression(3, last));
      r.certificate.labels.push_back(RegionLabel::vertical(k_is_m ? p + 1 : 1));
      r.note = "k = " + std::to_string(k) + ", p + k = 2 mod 4";
    }
    finish(r, w);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BoundReport> bound_parity_families(const ConwayWord& w) {
  const auto& c = w.entries();
  const int n = w.length();
  bool odd_even = true;
  bool even_even = n % 2 == 0;
  int odd_sum = 0;
  int even_sum = 0;
  for (int i = 1; i <= n; ++i) {
    const int e = c[static_cast<std::size_t>(i - 1)];
    if (i % 2 == 1) {
      odd_sum += e;
      odd_even = odd_even && e % 2 == 0;
    } else {
      even_sum += e;
      even_even = even_even && e % 2 == 0;
    }
  }
  if (!odd_even && !even_even)
    throw Error(ErrorCode::FamilyMismatch, w.str() + " is in neither parity family");
  require_admissible(w);

  std::vector<BoundReport> out;
  if (odd_even) {
    BoundReport r;
    r.theorem = TheoremTag::T2_8a;
    r.value = (odd_sum + 2) / 4;
    append_chain(r.certificate, RegionLabel::horizontal, progression(3, 3 + 4 * floor_div(odd_sum - 2, 4)));
    r.note = "odd-index entries even";
    finish(r, w);
    out.push_back(std::move(r));
  }
  if (even_even) {
    BoundReport chain;
    chain.theorem = TheoremTag::T2_8b;
    chain.value = (even_sum + 2) / 4;
    append_chain(chain.certificate, RegionLabel::vertical, progression(3, 3 + 4 * floor_div(even_sum - 2, 4)));
    chain.note = "even-index entries even, vertical chain";
    finish(chain, w);
    BoundReport general = bound_general(w);
    if (general.value < chain.value) {
      general.theorem = TheoremTag::T2_8b;
      general.note = "even-index entries even, index-set bound is smaller";
      out.push_back(std::move(general));
    } else {
      out.push_back(std::move(chain));
    }
  }
  return out;
}

std::vector<BoundReport> all_bounds(const ConwayWord& w) {
  require_admissible(w);
  std::vector<BoundReport> out;
  const auto& c = w.entries();
  if (w.length() == 2) out.push_back(ur_cmn(c[0], c[1]));
  if (w.length() == 3) {
    if (c[1] == 2) out.push_back(bound_m2n(c[0], c[2]));
    for (auto& r : bound_mpn(c[0], c[1], c[2])) out.push_back(std::move(r));
  }
  try {
    for (auto& r : bound_parity_families(w)) out.push_back(std::move(r));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FamilyMismatch) throw;
  }
  out.push_back(bound_general(w));
  return out;
}

BoundReport best_bound(const ConwayWord& w) {
  auto reports = all_bounds(w);
  const bool any_verified = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.verified; });
  const BoundReport* best = nullptr;
  for (const auto& r : reports) {
    if (any_verified && !r.verified) continue;
    if (!best) {
      best = &r;
      continue;
    }
    const auto key = [](const BoundReport& x) {
      return std::tuple{x.value, x.kind == BoundKind::Exact ? 0 : 1, x.certificate.labels.size()};
    };
    if (key(r) < key(*best)) best = &r;
  }
  return *best;
}

}  // namespace twobridge
