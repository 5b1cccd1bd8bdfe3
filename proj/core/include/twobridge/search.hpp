#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/diagram.hpp"

namespace twobridge {

inline constexpr int kSearchCrossingLimit = 24;

enum class SearchStatus { Found, Infeasible, LimitExceeded };
std::string to_string(SearchStatus status);

enum class TrivialityTest {
  Fraction,  // exact continued-fraction test on the signed twist sequence
  Jones,     // polynomial oracle
};

struct SearchOptions {
  /// Largest selection size tried; defaults to ceil((crossings + 2) / 2).
  std::optional<int> max_size;
  /// Report odd-linking-number links as Infeasible without searching.
  bool properness_shortcut = true;
  /// Merge selections with equal effect vectors.
  bool dedup = true;
  TrivialityTest test = TrivialityTest::Fraction;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  int value = -1;               // meaningful when Found
  std::vector<int> regions;     // region ids of the certificate
  RegionSelection certificate;  // display labels of the same regions
  std::int64_t explored = 0;    // distinct effect vectors visited
  bool shortcut = false;        // Infeasible decided by the properness test
};

int default_max_size(const Diagram& d);

/// Least number of region crossing changes making `d` trivial.
/// Throws TooManyCrossings above kSearchCrossingLimit.
SearchResult exact_ur(const Diagram& d, const SearchOptions& options = {});

struct WordSearchResult {
  SearchResult result;
  /// True for two-tangle words, whose standard diagram is the only minimal
  /// diagram; otherwise the value only bounds the knot invariant from above.
  bool knot_exact = false;
};
WordSearchResult exact_ur_word(const ConwayWord& w, const SearchOptions& options = {});

/// Every set of at most `max_size` distinct regions that trivializes `d`,
/// each sorted, in lexicographic order of (size, ids).
std::vector<std::vector<int>> trivializing_selections(const Diagram& d, int max_size);

/// Some set of exactly `size` distinct regions that trivializes `d`, trying at
/// most `budget` subsets.
std::optional<std::vector<int>> find_trivializing_selection(const Diagram& d, int size,
                                                            std::int64_t budget = 5'000'000);

/// Display labels for region ids.
RegionSelection selection_for(const Diagram& d, std::span<const int> ids);

}  // namespace twobridge
