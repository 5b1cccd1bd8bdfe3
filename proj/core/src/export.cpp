#include "twobridge/export.hpp"

#include <sstream>

namespace twobridge {

namespace {

struct Pass {
  int crossing;
  int in;
};

// Passes of each component in orientation order, starting from its first strand.
std::vector<std::vector<Pass>> component_passes(const Diagram& d) {
  std::vector<std::vector<Pass>> out(static_cast<std::size_t>(d.component_count()));
  std::vector<char> started(out.size(), 0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 2; ++s) {
      const int k = d.component_of(c, s);
      if (started[static_cast<std::size_t>(k)]) continue;
      started[static_cast<std::size_t>(k)] = 1;
      const PortRef start{c, d.entry_port(c, s)};
      PortRef cur = start;
      do {
        out[static_cast<std::size_t>(k)].push_back({cur.crossing, cur.port});
        cur = d.partner({cur.crossing, (cur.port + 2) % 4});
      } while (cur != start);
    }
  }
  return out;
}

}  // namespace

PdCode pd_code(const Diagram& d) {
  PdCode pd;
  if (d.crossing_count() == 0) {
    pd.free_loops = d.component_count();
    return pd;
  }
  std::vector<std::array<int, 4>> edge(static_cast<std::size_t>(d.crossing_count()), {0, 0, 0, 0});
  int base = 1;
  for (const auto& passes : component_passes(d)) {
    const int length = static_cast<int>(passes.size());
    for (int i = 0; i < length; ++i) {
      const Pass& p = passes[static_cast<std::size_t>(i)];
      auto& e = edge[static_cast<std::size_t>(p.crossing)];
      e[static_cast<std::size_t>(p.in)] = base + i;
      e[static_cast<std::size_t>((p.in + 2) % 4)] = base + (i + 1) % length;
    }
    base += length;
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int under = d.crossing(c).nwse_over ? 1 : 0;
    const int start = d.entry_port(c, under);
    const auto& e = edge[static_cast<std::size_t>(c)];
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) tuple[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>((start + k) % 4)];
    pd.crossings.push_back(tuple);
  }
  return pd;
}

std::string format_pd(const PdCode& pd) {
  std::ostringstream out;
  for (const auto& x : pd.crossings) out << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << "]\n";
  for (int i = 0; i < pd.free_loops; ++i) out << "Loop[]\n";
  return out.str();
}

std::vector<std::vector<int>> gauss_code(const Diagram& d) {
  std::vector<std::vector<int>> out;
  if (d.crossing_count() == 0) {
    out.assign(static_cast<std::size_t>(d.component_count()), {});
    return out;
  }
  for (const auto& passes : component_passes(d)) {
    std::vector<int> word;
    for (const Pass& p : passes) {
      const bool on_nwse = p.in == NW || p.in == SE;
      const bool over = on_nwse == d.crossing(p.crossing).nwse_over;
      word.push_back(over ? p.crossing + 1 : -(p.crossing + 1));
    }
    out.push_back(std::move(word));
  }
  return out;
}

std::string format_gauss(const Diagram& d) {
  std::ostringstream out;
  for (const auto& word : gauss_code(d)) {
    for (std::size_t i = 0; i < word.size(); ++i) out << (i ? " " : "") << word[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace twobridge
