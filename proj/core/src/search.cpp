#include "twobridge/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_map>

#include "twobridge/error.hpp"
#include "twobridge/invariants.hpp"

namespace twobridge {

namespace {

using Mask = std::uint64_t;

class MaskOracle {
public:
  MaskOracle(const Diagram& d, TrivialityTest test) : d_(d), test_(test) {
    for (const auto& r : d.regions()) {
      Mask m = 0;
      for (int c : r.boundary) m ^= Mask{1} << c;
      regions_.push_back(m);
    }
    for (int t = 1; t <= d.tangle_count(); ++t) {
      Mask pos = 0;
      Mask neg = 0;
      for (int c : d.tangle_crossings(t)) (d.changed(c) ? neg : pos) |= Mask{1} << c;
      positive_.push_back(pos);
      negative_.push_back(neg);
    }
  }

  int face_count() const { return static_cast<int>(regions_.size()); }
  Mask region(int id) const { return regions_[static_cast<std::size_t>(id)]; }

  bool trivial(Mask flips) const {
    if (test_ == TrivialityTest::Jones) {
      CrossingSet s(d_.crossing_count());
      for (int c = 0; c < d_.crossing_count(); ++c)
        if ((flips >> c) & 1) s.set(c);
      return is_trivial(d_.flipped(s));
    }
    if (d_.crossing_count() == 0) return d_.component_count() <= 2;
    twists_.clear();
    for (std::size_t t = 0; t < positive_.size(); ++t) {
      const Mask pos = positive_[t];
      const Mask neg = negative_[t];
      twists_.push_back(std::popcount(pos) - std::popcount(neg) - 2 * std::popcount(flips & pos) +
                        2 * std::popcount(flips & neg));
    }
    const std::int64_t p = signed_fraction(twists_).numerator;
    return d_.component_count() == 1 ? std::llabs(p) == 1 : p == 0;
  }

  Mask combine(const std::vector<int>& ids) const {
    Mask m = 0;
    for (int id : ids) m ^= region(id);
    return m;
  }

private:
  const Diagram& d_;
  TrivialityTest test_;
  std::vector<Mask> regions_;
  std::vector<Mask> positive_;
  std::vector<Mask> negative_;
  mutable std::vector<int> twists_;
};

void check_size(const Diagram& d) {
  if (d.crossing_count() > kSearchCrossingLimit)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(d.crossing_count()) +
                                                 " crossings exceeds the search limit of " +
                                                 std::to_string(kSearchCrossingLimit));
}

// Advances a sorted k-subset of {0..n-1}; false after the last one.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::vector<int> first_combination(int k) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  return idx;
}

SearchResult found(const Diagram& d, std::vector<int> ids, std::int64_t explored) {
  std::sort(ids.begin(), ids.end());
  SearchResult r;
  r.status = SearchStatus::Found;
  r.value = static_cast<int>(ids.size());
  r.certificate = selection_for(d, ids);
  r.regions = std::move(ids);
  r.explored = explored;
  return r;
}

}  // namespace

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::LimitExceeded: return "limit-exceeded";
  }
  return "?";
}

int default_max_size(const Diagram& d) { return (d.crossing_count() + 3) / 2; }

RegionSelection selection_for(const Diagram& d, std::span<const int> ids) {
  RegionSelection s;
  for (int id : ids) {
    const auto& r = d.region(id);
    if (!r.labels.empty()) s.labels.push_back(r.labels.front());
  }
  return s;
}

SearchResult exact_ur(const Diagram& d, const SearchOptions& options) {
  check_size(d);
  if (options.properness_shortcut && d.component_count() == 2 && *d.linking_number() % 2 != 0) {
    SearchResult r;
    r.status = SearchStatus::Infeasible;
    r.shortcut = true;
    return r;
  }
  const int max_size = options.max_size.value_or(default_max_size(d));
  const MaskOracle oracle(d, options.test);
  const int faces = oracle.face_count();
  if (oracle.trivial(0)) return found(d, {}, 1);

  if (!options.dedup) {
    std::int64_t explored = 1;
    for (int k = 1; k <= std::min(max_size, faces); ++k) {
      auto idx = first_combination(k);
      do {
        ++explored;
        if (oracle.trivial(oracle.combine(idx))) return found(d, idx, explored);
      } while (next_combination(idx, faces));
    }
    SearchResult r;
    r.status = max_size >= faces ? SearchStatus::Infeasible : SearchStatus::LimitExceeded;
    r.explored = explored;
    return r;
  }

  struct Parent {
    Mask from;
    int region;
  };
  std::unordered_map<Mask, Parent> seen;
  seen.emplace(0, Parent{0, -1});
  std::vector<Mask> frontier{0};
  const auto trace = [&](Mask m) {
    std::vector<int> ids;
    while (m != 0) {
      const Parent p = seen.at(m);
      ids.push_back(p.region);
      m = p.from;
    }
    return ids;
  };
  for (int k = 1; k <= max_size; ++k) {
    std::vector<Mask> next;
    for (Mask m : frontier) {
      for (int id = 0; id < faces; ++id) {
        const Mask x = m ^ oracle.region(id);
        if (!seen.emplace(x, Parent{m, id}).second) continue;
        if (oracle.trivial(x)) return found(d, trace(x), static_cast<std::int64_t>(seen.size()));
        next.push_back(x);
      }
    }
    if (next.empty()) {
      SearchResult r;
      r.status = SearchStatus::Infeasible;
      r.explored = static_cast<std::int64_t>(seen.size());
      return r;
    }
    frontier = std::move(next);
  }
  SearchResult r;
  r.status = SearchStatus::LimitExceeded;
  r.explored = static_cast<std::int64_t>(seen.size());
  return r;
}

WordSearchResult exact_ur_word(const ConwayWord& w, const SearchOptions& options) {
  WordSearchResult out;
  out.result = exact_ur(build_diagram(w), options);
  out.knot_exact = w.length() <= 2;
  return out;
}

std::vector<std::vector<int>> trivializing_selections(const Diagram& d, int max_size) {
  check_size(d);
  const MaskOracle oracle(d, TrivialityTest::Fraction);
  const int faces = oracle.face_count();
  std::vector<std::vector<int>> out;
  if (max_size >= 0 && oracle.trivial(0)) out.emplace_back();
  for (int k = 1; k <= std::min(max_size, faces); ++k) {
    auto idx = first_combination(k);
    do {
      if (oracle.trivial(oracle.combine(idx))) out.push_back(idx);
    } while (next_combination(idx, faces));
  }
  return out;
}

std::optional<std::vector<int>> find_trivializing_selection(const Diagram& d, int size, std::int64_t budget) {
  check_size(d);
  const MaskOracle oracle(d, TrivialityTest::Fraction);
  const int faces = oracle.face_count();
  if (size < 0 || size > faces) return std::nullopt;
  if (size == 0) return oracle.trivial(0) ? std::optional<std::vector<int>>{std::vector<int>{}} : std::nullopt;
  auto idx = first_combination(size);
  std::int64_t tried = 0;
  do {
    if (++tried > budget) return std::nullopt;
    if (oracle.trivial(oracle.combine(idx))) return idx;
  } while (next_combination(idx, faces));
  return std::nullopt;
}

}  // namespace twobridge
