#include <doctest.h>

#include "support/oracles.hpp"
#include "twobridge/error.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/search.hpp"

using namespace twobridge;

TEST_CASE("search examples") {
  const SearchResult trefoil = exact_ur(build_diagram(ConwayWord({3})));
  CHECK(trefoil.status == SearchStatus::Found);
  CHECK(trefoil.value == 1);
  CHECK(trefoil.certificate.labels.size() == 1);

  const SearchResult c33 = exact_ur(build_diagram(ConwayWord({3, 3})));
  CHECK(c33.status == SearchStatus::Infeasible);
  CHECK(c33.shortcut);
  CHECK(c33.explored == 0);

  CHECK(exact_ur(build_diagram(ConwayWord({4, 4}))).value == 1);
  CHECK(exact_ur(Diagram::trivial()).value == 0);
}

TEST_CASE("improper links are infeasible without the shortcut too") {
  SearchOptions o;
  o.properness_shortcut = false;
  o.max_size = 8;
  for (const auto& e : std::vector<std::vector<int>>{{3, 3}, {1, 1}, {5, 5}, {2, 2, 4}}) {
    const ConwayWord w(e);
    REQUIRE_FALSE(classify(w).admissible());
    const SearchResult r = exact_ur(build_diagram(w), o);
    CHECK(r.status == SearchStatus::Infeasible);
    CHECK_FALSE(r.shortcut);
  }
}

TEST_CASE("word-level search") {
  const WordSearchResult a = exact_ur_word(ConwayWord({2, 3}));
  CHECK(a.result.value == 1);
  CHECK(a.knot_exact);
  const WordSearchResult b = exact_ur_word(ConwayWord({3, 2, 3}));
  CHECK(b.result.value == 1);
  CHECK_FALSE(b.knot_exact);
  CHECK(exact_ur_word(ConwayWord({2, 2})).result.value == 1);
}

TEST_CASE("limits") {
  SearchOptions small;
  small.max_size = 1;
  CHECK(exact_ur(build_diagram(ConwayWord({3, 5})), small).status == SearchStatus::LimitExceeded);
  try {
    exact_ur(build_diagram(ConwayWord({13, 12})));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyCrossings);
  }
}

TEST_CASE("found certificates are minimal and trivialize") {
  for (int total = 1; total <= 9; ++total)
    oracle::for_each_composition(total, [](const std::vector<int>& e) {
      const ConwayWord w(e);
      if (!classify(w).admissible()) return;
      const Diagram d = build_diagram(w);
      const SearchResult r = exact_ur(d);
      CAPTURE(w.str());
      REQUIRE(r.status == SearchStatus::Found);
      CHECK(static_cast<int>(r.regions.size()) == r.value);
      CHECK(is_trivial(d.flipped(d.effect(r.regions))));
      CHECK(trivializing_selections(d, r.value - 1).empty());
    });
}

TEST_CASE("deduplication and the triviality test do not change values") {
  SearchOptions plain;
  plain.dedup = false;
  SearchOptions poly;
  poly.test = TrivialityTest::Jones;
  for (int total = 1; total <= 8; ++total)
    oracle::for_each_composition(total, [&](const std::vector<int>& e) {
      const ConwayWord w(e);
      if (!classify(w).admissible()) return;
      const Diagram d = build_diagram(w);
      const SearchResult base = exact_ur(d);
      CAPTURE(w.str());
      CHECK(exact_ur(d, plain).value == base.value);
      CHECK(exact_ur(d, poly).value == base.value);
      CHECK(exact_ur(d, plain).explored >= base.explored);
    });
}

TEST_CASE("exhaustive selection listing") {
  const Diagram d = build_diagram(ConwayWord({2, 2}));
  const auto all = trivializing_selections(d, 2);
  REQUIRE_FALSE(all.empty());
  CHECK(all.front().size() == 1);
  for (const auto& ids : all) CHECK(is_trivial(d.flipped(d.effect(ids))));
  const auto found = find_trivializing_selection(d, 2);
  REQUIRE(found);
  CHECK(found->size() == 2);
  CHECK(selection_for(d, *found).labels.size() == 2);
}
