#include "oracles.hpp"

#include <cstdlib>
#include <map>

namespace oracle {

using twobridge::Color;
using twobridge::Diagram;
using twobridge::LaurentPoly;
using twobridge::PdCode;

namespace {

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    const int root = find(it->second);
    parent[x] = root;
    return root;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int n = 0;
    for (auto& [k, v] : parent)
      if (find(k) == k) ++n;
    return n;
  }
};

LaurentPoly loop_power(int k) {
  const LaurentPoly d{{-2, -1}, {2, -1}};
  LaurentPoly out = LaurentPoly::constant(1);
  for (int i = 0; i < k; ++i) out *= d;
  return out;
}

}  // namespace

LaurentPoly state_sum_bracket(const PdCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return loop_power(pd.free_loops - 1);
  LaurentPoly total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    UnionFind uf;
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = pd.crossings[static_cast<std::size_t>(c)];
      if ((state >> c) & 1u) {
        uf.unite(x[0], x[3]);
        uf.unite(x[1], x[2]);
      } else {
        ++a_count;
        uf.unite(x[0], x[1]);
        uf.unite(x[2], x[3]);
      }
    }
    const int loops = uf.components() + pd.free_loops;
    total += loop_power(loops - 1).shifted(a_count - (n - a_count));
  }
  return total;
}

std::int64_t tait_determinant(const Diagram& d) {
  std::map<int, int> vertex;
  for (const auto& r : d.regions())
    if (r.color == Color::White) vertex.emplace(r.id, static_cast<int>(vertex.size()));
  const int v = static_cast<int>(vertex.size());
  if (v <= 1) return 1;
  std::vector<std::vector<__int128>> lap(static_cast<std::size_t>(v), std::vector<__int128>(static_cast<std::size_t>(v), 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    std::vector<int> whites;
    for (int s = 0; s < 4; ++s) {
      const int id = d.region_at({c, s});
      if (d.region(id).color == Color::White) whites.push_back(vertex.at(id));
    }
    if (whites.size() != 2 || whites[0] == whites[1]) continue;
    const auto i = static_cast<std::size_t>(whites[0]);
    const auto j = static_cast<std::size_t>(whites[1]);
    lap[i][i] += 1;
    lap[j][j] += 1;
    lap[i][j] -= 1;
    lap[j][i] -= 1;
  }
  // Bareiss elimination on the reduced Laplacian
  const std::size_t m = static_cast<std::size_t>(v - 1);
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (lap[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < m && lap[p][k] == 0) ++p;
      if (p == m) return 0;
      std::swap(lap[p], lap[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i)
      for (std::size_t j = k + 1; j < m; ++j) lap[i][j] = (lap[i][j] * lap[k][k] - lap[i][k] * lap[k][j]) / prev;
    prev = lap[k][k];
  }
  const __int128 det = sign * lap[m - 1][m - 1];
  return static_cast<std::int64_t>(det < 0 ? -det : det);
}

std::pair<std::int64_t, std::int64_t> continued_fraction(const std::vector<int>& entries) {
  std::int64_t p = 1;
  std::int64_t q = 0;
  for (int e : entries) {
    const std::int64_t next = e * p + q;
    q = p;
    p = next;
  }
  return {p, q};
}

int arf_from_determinant(std::int64_t det) {
  const std::int64_t r = det % 8;
  return r == 1 || r == 7 ? 0 : 1;
}

bool twist_trivial(const Diagram& d) {
  const auto [p, q] = continued_fraction(d.signed_twists());
  return d.component_count() == 1 ? std::llabs(p) == 1 : p == 0;
}

void for_each_composition(int total, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parts;
  std::function<void(int)> go = [&](int left) {
    if (left == 0) {
      f(parts);
      return;
    }
    for (int first = 1; first <= left; ++first) {
      parts.push_back(first);
      go(left - first);
      parts.pop_back();
    }
  };
  if (total > 0) go(total);
}

}  // namespace oracle
