#include <doctest.h>

#include "support/oracles.hpp"
#include "twobridge/bounds.hpp"
#include "twobridge/error.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/search.hpp"

using namespace twobridge;

namespace {

std::string labels(const BoundReport& r) { return r.certificate.str(); }

const BoundReport* find_tag(const std::vector<BoundReport>& reports, TheoremTag tag) {
  for (const auto& r : reports)
    if (r.theorem == tag) return &r;
  return nullptr;
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Overflow;
}

bool trivializes(const ConwayWord& w, const BoundReport& r) {
  const Diagram d = build_diagram(w);
  return static_cast<int>(r.certificate.labels.size()) == r.value && is_trivial(region_crossing_change(d, r.certificate));
}

}  // namespace

TEST_CASE("tags") {
  CHECK(to_string(TheoremTag::T2_8a) == "T2.8a");
  CHECK(parse_theorem_tag("T2.6") == TheoremTag::T2_6);
  CHECK_FALSE(parse_theorem_tag("T9.9"));
  CHECK(tag_matches("T2.8", TheoremTag::T2_8a));
  CHECK(tag_matches("T2.8", TheoremTag::T2_8b));
  CHECK_FALSE(tag_matches("T2.8", TheoremTag::T2_7));
  CHECK(progression(3, 11) == std::vector<int>{3, 7, 11});
  CHECK(progression(3, 2).empty());
}

TEST_CASE("two-tangle exact values") {
  CHECK(ur_cmn(4, 4).kind == BoundKind::Exact);
  CHECK(ur_cmn(4, 4).value == 1);
  CHECK(ur_cmn(2, 3).value == 1);
  CHECK(ur_cmn(3, 5).value == 2);
  CHECK(error_of([] { ur_cmn(3, 3); }) == ErrorCode::ImproperInput);
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      const ConwayWord w({m, n});
      if (!classify(w).admissible()) continue;
      CAPTURE(w.str());
      const BoundReport r = ur_cmn(m, n);
      int expected = 0;
      if (m % 2 == 0 && n % 2 == 0) expected = (std::min(m, n) + 2) / 4;
      else if (m % 2 == 0) expected = (m + 2) / 4;
      else if (n % 2 == 0) expected = (n + 2) / 4;
      else expected = (m + n) / 4;
      CHECK(r.value == expected);
      CHECK(r.certificate.labels.empty() == (r.value == 0));
      CHECK(trivializes(w, r));
    }
  }
}

TEST_CASE("C(m,2,n)") {
  CHECK(bound_m2n(3, 3).kind == BoundKind::Exact);
  CHECK(bound_m2n(3, 3).value == 1);
  CHECK(bound_m2n(2, 6).kind == BoundKind::Upper);
  CHECK(bound_m2n(2, 6).value == 2);
  CHECK(bound_m2n(3, 4).kind == BoundKind::Exact);
  CHECK(bound_m2n(3, 4).value == 1);
  CHECK(error_of([] { bound_m2n(3, 5); }) == ErrorCode::ImproperInput);
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      const ConwayWord w({m, 2, n});
      if (!classify(w).admissible()) continue;
      CAPTURE(w.str());
      const BoundReport r = bound_m2n(m, n);
      CHECK(r.value == (std::abs(m - n) + 2) / 4 + 1);
      CHECK(trivializes(w, r));
    }
}

TEST_CASE("three-tangle bounds") {
  for (int p = 1; p <= 8; ++p) {
    const auto reports = bound_mpn(2, p, 3);
    const auto best = std::min_element(reports.begin(), reports.end(),
                                       [](const auto& a, const auto& b) { return a.value < b.value; });
    REQUIRE(best != reports.end());
    CHECK(best->value == 1);
  }
  const auto r853 = bound_mpn(8, 5, 3);
  REQUIRE(find_tag(r853, TheoremTag::T2_4));
  CHECK(find_tag(r853, TheoremTag::T2_4)->value == 3);
  REQUIRE(find_tag(r853, TheoremTag::T2_6));
  CHECK(find_tag(r853, TheoremTag::T2_6)->value == 2);
  CHECK(trivializes(ConwayWord({8, 5, 3}), *find_tag(r853, TheoremTag::T2_6)));

  const auto r345 = bound_mpn(3, 4, 5);
  REQUIRE(find_tag(r345, TheoremTag::T2_5));
  CHECK(find_tag(r345, TheoremTag::T2_5)->value == 3);

  for (int m = 1; m <= 6; ++m)
    for (int p = 1; p <= 6; ++p)
      for (int n = 1; n <= 6; ++n) {
        const ConwayWord w({m, p, n});
        if (!classify(w).admissible()) continue;
        for (const auto& r : bound_mpn(m, p, n)) {
          CAPTURE(w.str());
          CAPTURE(to_string(r.theorem));
          CHECK(trivializes(w, r));
        }
      }
}

TEST_CASE("index set") {
  CHECK(l_set(ConwayWord({5})).members.empty());
  CHECK(l_set(ConwayWord({2, 3, 4, 2, 6})).members == std::vector<int>{2, 4});
  CHECK(l_set(ConwayWord({3, 2, 3})).members.empty());
  CHECK(l_set(ConwayWord({2, 3, 4, 2, 6})).contains(4));
  for (int r : l_set(ConwayWord({3, 1, 4, 2, 5, 3})).residuals) {
    CHECK(r >= -2);
    CHECK(r <= 1);
  }
}

TEST_CASE("general bound") {
  CHECK(bound_general(ConwayWord({2, 3, 4, 2, 6})).value == 3);
  CHECK(bound_general(ConwayWord({3})).value == 1);
  for (int m = 2; m <= 8; m += 2)
    for (int n = 1; n <= 7; ++n) CHECK(bound_general(ConwayWord({m, n})).value == (m + 2) / 4);
}

TEST_CASE("general bound certificates are either valid or provably impossible") {
  for (int total = 1; total <= 11; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      const ConwayWord w(e);
      if (!classify(w).admissible()) return;
      const BoundReport r = bound_general(w);
      CAPTURE(w.str());
      if (r.verified) {
        CHECK(trivializes(w, r));
      } else {
        CHECK_FALSE(find_trivializing_selection(build_diagram(w), r.value));
      }
    });
}

TEST_CASE("parity families") {
  const auto example = bound_parity_families(ConwayWord({2, 3, 4, 2, 6}));
  const BoundReport* a = find_tag(example, TheoremTag::T2_8a);
  REQUIRE(a);
  CHECK(a->value == 3);
  CHECK(labels(*a) == "{R3, R7, R11}");
  CHECK(trivializes(ConwayWord({2, 3, 4, 2, 6}), *a));

  for (int c2 = 1; c2 <= 4; ++c2)
    for (int c4 = 1; c4 <= 4; ++c4) {
      const ConwayWord w({2, c2, 2, c4});
      if (!classify(w).admissible()) continue;
      int best = 99;
      for (const auto& r : bound_parity_families(w)) best = std::min(best, r.value);
      CHECK(best == 1);
    }
  CHECK(error_of([] { bound_parity_families(ConwayWord({3, 2, 5})); }) == ErrorCode::FamilyMismatch);
}

TEST_CASE("odd-index family improperness rule matches classification") {
  for (int total = 3; total <= 12; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      if (e.size() % 2 == 0) return;
      int odd_sum = 0;
      for (std::size_t i = 0; i < e.size(); i += 2) {
        if (e[i] % 2 != 0) return;
        odd_sum += e[i];
      }
      const LinkClass k = classify(ConwayWord(e));
      if (k.is_knot()) return;
      CAPTURE(ConwayWord(e).str());
      CHECK(*k.proper == (odd_sum % 4 != 2));
    });
}

TEST_CASE("best bound") {
  CHECK(best_bound(ConwayWord({8, 5, 3})).value == 2);
  const BoundReport b44 = best_bound(ConwayWord({4, 4}));
  CHECK(b44.value == 1);
  CHECK(b44.kind == BoundKind::Exact);
  for (int c2 = 1; c2 <= 4; ++c2) {
    const ConwayWord w({6, c2, 2});
    if (classify(w).admissible()) CHECK(best_bound(w).value <= 2);
  }
  CHECK(error_of([] { best_bound(ConwayWord({3, 3})); }) == ErrorCode::ImproperInput);
}

TEST_CASE("verified best bounds are sound against search") {
  for (int total = 1; total <= 12; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      const ConwayWord w(e);
      if (!classify(w).admissible()) return;
      const BoundReport b = best_bound(w);
      if (!b.verified) return;
      const SearchResult s = exact_ur(build_diagram(w));
      REQUIRE(s.status == SearchStatus::Found);
      CAPTURE(w.str());
      CHECK(b.value >= s.value);
      if (b.kind == BoundKind::Exact) CHECK(b.value == s.value);
    });
}
