#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>

#include "support/oracles.hpp"
#include "twobridge/diagram.hpp"
#include "twobridge/error.hpp"
#include "twobridge/export.hpp"

using namespace twobridge;

namespace {

int boundary_size(const Diagram& d, const RegionLabel& label) {
  return static_cast<int>(d.region(d.resolve(label)).boundary.size());
}

bool same_crossings(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count()) return false;
  for (int c = 0; c < a.crossing_count(); ++c)
    if (a.crossing(c).nwse_over != b.crossing(c).nwse_over) return false;
  return true;
}

// Tag balance plus attribute quoting; enough to catch broken output.
bool well_formed_xml(const std::string& s) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while ((i = s.find('<', i)) != std::string::npos) {
    const std::size_t end = s.find('>', i);
    if (end == std::string::npos) return false;
    std::string tag = s.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (tag[0] == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    const std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
    if (!self_closing) stack.push_back(name);
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("euler count") {
  CHECK(build_diagram(ConwayWord({3})).face_count() == 5);
  const Diagram d = build_diagram(ConwayWord({2, 3, 4, 2, 6}));
  CHECK(d.crossing_count() == 17);
  CHECK(d.face_count() == 19);
  for (int total = 1; total <= 10; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      const Diagram d = build_diagram(ConwayWord(e));
      CHECK(d.face_count() == d.crossing_count() + 2);
    });
}

TEST_CASE("every crossing has four corners and every edge two faces") {
  const Diagram d = build_diagram(ConwayWord({2, 1, 3, 2}));
  std::vector<int> corners(static_cast<std::size_t>(d.crossing_count()), 0);
  for (const auto& r : d.regions())
    for (const auto& p : r.corners) ++corners[static_cast<std::size_t>(p.crossing)];
  for (int k : corners) CHECK(k == 4);
  int total_corners = 0;
  for (const auto& r : d.regions()) total_corners += static_cast<int>(r.corners.size());
  CHECK(total_corners == 4 * d.crossing_count());
}

TEST_CASE("region census of C(m,n)") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      if (m + n < 3) continue;
      CAPTURE(m);
      CAPTURE(n);
      const Diagram d = build_diagram(ConwayWord({m, n}));
      CHECK(d.face_count() == m + n + 2);
      CHECK(boundary_size(d, RegionLabel::horizontal(1)) == n + 1);
      CHECK(boundary_size(d, RegionLabel::horizontal(m + 1)) == n + 1);
      CHECK(boundary_size(d, RegionLabel::vertical(1)) == m + 1);
      CHECK(boundary_size(d, RegionLabel::vertical(n + 1)) == m + 1);
      std::multiset<int> sizes;
      for (const auto& r : d.regions()) sizes.insert(static_cast<int>(r.boundary.size()));
      if (m > 1 && n > 1) CHECK(static_cast<int>(sizes.count(2)) == m + n - 2);
    }
  }
}

TEST_CASE("local labels share faces across tangles") {
  const ConwayWord w({2, 3, 4, 2, 6});
  const Diagram d = build_diagram(w);
  for (int i = 1; i + 2 <= w.length(); ++i)
    CHECK(d.resolve(RegionLabel::local(i, w.tangle(i) + 1)) == d.resolve(RegionLabel::local(i + 2, 1)));
}

TEST_CASE("labels parse and print") {
  CHECK(parse_region_label("R3").str() == "R3");
  CHECK(parse_region_label("R'2").str() == "R'2");
  CHECK(parse_region_label("R[2,3]").str() == "R[2,3]");
  CHECK(parse_region_label("R_inf") == RegionLabel::unbounded());
  CHECK(parse_region_label("F7") == RegionLabel::face(7));
  CHECK_THROWS_AS(build_diagram(ConwayWord({3})).resolve(RegionLabel::horizontal(40)), Error);
}

TEST_CASE("every face has a label that resolves back to it") {
  for (int total = 1; total <= 10; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      const Diagram d = build_diagram(ConwayWord(e));
      CHECK(d.region(d.unbounded_region()).labels.back() == RegionLabel::unbounded());
      for (const auto& r : d.regions()) {
        REQUIRE_FALSE(r.labels.empty());
        for (const auto& l : r.labels) CHECK(d.resolve(l) == r.id);
      }
    });
}

TEST_CASE("unknot diagram") {
  const Diagram d = Diagram::trivial();
  CHECK(d.crossing_count() == 0);
  REQUIRE(d.face_count() == 2);
  CHECK(d.region(d.unbounded_region()).color == Color::White);
  int black = 0;
  for (const auto& r : d.regions()) black += r.color == Color::Black;
  CHECK(black == 1);
  CHECK(d.writhe() == 0);
}

TEST_CASE("checkerboard alternates around every crossing") {
  for (int total = 1; total <= 9; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      const Diagram d = build_diagram(ConwayWord(e));
      CHECK(d.region(d.unbounded_region()).color == Color::White);
      for (int c = 0; c < d.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s)
          CHECK(d.region(d.region_at({c, s})).color != d.region(d.region_at({c, (s + 1) % 4})).color);
    });
}

TEST_CASE("standard diagrams are alternating and reduced") {
  for (int total = 2; total <= 9; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      const Diagram d = build_diagram(ConwayWord(e));
      CHECK(d.is_alternating());
      CHECK(d.is_reduced());
    });
  CHECK_FALSE(build_diagram(ConwayWord({1})).is_reduced());
}

TEST_CASE("region crossing change") {
  const Diagram d = build_diagram(ConwayWord({3, 4}));
  CHECK(same_crossings(region_crossing_change(d, {}), d));

  const RegionSelection one{{RegionLabel::horizontal(2)}};
  const Diagram once = region_crossing_change(d, one);
  CHECK_FALSE(same_crossings(once, d));
  CHECK(same_crossings(region_crossing_change(once, one), d));

  CHECK_THROWS_AS(region_crossing_change(d, RegionSelection{{RegionLabel::vertical(30)}}), Error);
}

TEST_CASE("R1 on C(m,n) flips one crossing of the first twist and the whole second twist") {
  for (int m = 3; m <= 6; ++m) {
    for (int n = 3; n <= 6; ++n) {
      const Diagram d = build_diagram(ConwayWord({m, n}));
      const CrossingSet e = d.effect(RegionSelection{{RegionLabel::horizontal(1)}});
      CHECK(e.count() == n + 1);
      const auto [p, q] = oracle::continued_fraction(d.flipped(e).signed_twists());
      CHECK(std::llabs(p) == std::llabs(oracle::continued_fraction({m - 2, -n}).first));
    }
  }
}

TEST_CASE("effect is linear") {
  const Diagram d = build_diagram(ConwayWord({2, 3, 1, 4}));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, d.face_count() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<int> a;
    std::set<int> b;
    for (int k = 0; k < 3; ++k) a.insert(pick(rng));
    for (int k = 0; k < 3; ++k) b.insert(pick(rng));
    std::vector<int> va(a.begin(), a.end());
    std::vector<int> vb(b.begin(), b.end());
    std::vector<int> sym;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
    CHECK((d.effect(va) ^ d.effect(vb)) == d.effect(sym));
  }
  CHECK(d.effect(std::vector<int>{}).none());
}

TEST_CASE("tangle orientation in C(m,n) with the even entry last") {
  const Diagram d = build_diagram(ConwayWord({3, 2}));
  CHECK_FALSE(d.tangle_parallel(1));
  CHECK(d.tangle_parallel(2));
  // with the even entry first the roles exchange
  const Diagram e = build_diagram(ConwayWord({2, 3}));
  CHECK(e.tangle_parallel(1));
  CHECK_FALSE(e.tangle_parallel(2));
}

TEST_CASE("crossing signs follow the tangle orientation") {
  for (int total = 2; total <= 9; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      const Diagram d = build_diagram(ConwayWord(e));
      if (d.component_count() != 1) return;
      const auto signs = crossing_signs(d);
      for (int t = 1; t <= d.tangle_count(); ++t) {
        const bool horizontal = d.axis(t) == Axis::Horizontal;
        const int expected = horizontal == d.tangle_parallel(t) ? -1 : 1;
        for (int c : d.tangle_crossings(t)) CHECK(signs[static_cast<std::size_t>(c)] == expected);
      }
    });
}

TEST_CASE("orientation variants of a link") {
  const Diagram a = build_diagram(ConwayWord({7, 5}), Orientation::A);
  const Diagram b = build_diagram(ConwayWord({7, 5}), Orientation::B);
  REQUIRE(a.linking_number());
  CHECK(*a.linking_number() <= 0);
  CHECK(*b.linking_number() == -*a.linking_number());
  CHECK(a.reoriented(Orientation::B).writhe() == b.writhe());
}

TEST_CASE("pd and gauss codes") {
  const PdCode pd = pd_code(build_diagram(ConwayWord({2, 2})));
  CHECK(pd.crossings.size() == 4);
  std::map<int, int> uses;
  for (const auto& x : pd.crossings)
    for (int label : x) ++uses[label];
  CHECK(uses.size() == 8);
  for (const auto& [label, n] : uses) CHECK(n == 2);

  const auto gauss = gauss_code(build_diagram(ConwayWord({3})));
  REQUIRE(gauss.size() == 1);
  CHECK(gauss[0].size() == 6);
  std::map<int, int> seen;
  for (int g : gauss[0]) ++seen[std::abs(g)];
  CHECK(seen.size() == 3);
  for (const auto& [k, n] : seen) CHECK(n == 2);
  CHECK(format_gauss(build_diagram(ConwayWord({3, 5}))).find('\n') != std::string::npos);
  CHECK(format_pd(pd).find("X[") == 0);
}

TEST_CASE("svg output") {
  CHECK(well_formed_xml(render_svg(build_diagram(ConwayWord({3})))));
  const Diagram d = build_diagram(ConwayWord({2, 2}));
  const std::string svg = render_svg(d, {{d.resolve(RegionLabel::vertical(1))}, true});
  CHECK(well_formed_xml(svg));
  CHECK(svg.find("id=\"highlight\"") != std::string::npos);
  CHECK(well_formed_xml(render_svg(build_diagram(ConwayWord({2, 3, 4, 2, 6})), {{}, false})));
}
