#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/invariants.hpp"

namespace twobridge {

namespace {

// Open ends of partial smoothings, paired by the arcs that join them.
using Matching = std::vector<std::pair<int, int>>;

const LaurentPoly& loop_value() {
  static const LaurentPoly d{{-2, -1}, {2, -1}};
  return d;
}

std::optional<int> take_partner(Matching& m, int e) {
  for (auto it = m.begin(); it != m.end(); ++it) {
    if (it->first == e || it->second == e) {
      const int other = it->first == e ? it->second : it->first;
      m.erase(it);
      return other;
    }
  }
  return std::nullopt;
}

void insert_pair(Matching& m, int a, int b) {
  if (a > b) std::swap(a, b);
  m.insert(std::lower_bound(m.begin(), m.end(), std::pair{a, b}), {a, b});
}

// Joins edge ends x and y; returns whether a closed loop was formed.
bool join(Matching& m, int x, int y) {
  if (x == y) return true;
  const auto px = take_partner(m, x);
  if (px && *px == y) return true;
  const auto py = take_partner(m, y);
  insert_pair(m, px.value_or(x), py.value_or(y));
  return false;
}

}  // namespace

LaurentPoly kauffman_bracket(const PdCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (n > kOracleCrossingLimit)
    throw Error(ErrorCode::TooManyCrossings,
                std::to_string(n) + " crossings exceeds the oracle limit of " + std::to_string(kOracleCrossingLimit));
  LaurentPoly scale = LaurentPoly::constant(1);
  for (int i = n == 0 ? 1 : 0; i < pd.free_loops; ++i) scale *= loop_value();
  if (n == 0) return scale;

  std::map<Matching, LaurentPoly> states;
  states.emplace(Matching{}, LaurentPoly::constant(1));
  for (const auto& x : pd.crossings) {
    std::map<Matching, LaurentPoly> next;
    for (const auto& [matching, poly] : states) {
      // A-smoothing joins (x0,x1)(x2,x3); B-smoothing joins (x0,x3)(x1,x2)
      for (int variant = 0; variant < 2; ++variant) {
        Matching m = matching;
        int loops = 0;
        if (variant == 0) {
          loops += join(m, x[0], x[1]);
          loops += join(m, x[2], x[3]);
        } else {
          loops += join(m, x[0], x[3]);
          loops += join(m, x[1], x[2]);
        }
        LaurentPoly term = poly.shifted(variant == 0 ? 1 : -1);
        for (int i = 0; i < loops; ++i) term *= loop_value();
        next[std::move(m)] += term;
      }
    }
    states = std::move(next);
    std::erase_if(states, [](const auto& entry) { return entry.second.is_zero(); });
  }
  LaurentPoly total;
  for (const auto& [matching, poly] : states) {
    if (!matching.empty()) throw std::logic_error("PD code has unmatched edges");
    total += poly;
  }
  return total.divided_by(loop_value()) * scale;
}

LaurentPoly kauffman_bracket(const Diagram& d) {
  if (d.crossing_count() > kOracleCrossingLimit)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(d.crossing_count()) +
                                                 " crossings exceeds the oracle limit of " +
                                                 std::to_string(kOracleCrossingLimit));
  return kauffman_bracket(pd_code(d));
}

}  // namespace twobridge
