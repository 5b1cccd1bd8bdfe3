#include "twobridge/diagram.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

constexpr int through(int port) { return (port + 2) % 4; }
constexpr bool on_nwse(int port) { return port == NW || port == SE; }
constexpr int strand_of(int port) { return on_nwse(port) ? 0 : 1; }

struct Vec {
  int x;
  int y;
};
constexpr std::array<Vec, 4> kPortDirection = {{{-1, 1}, {-1, -1}, {1, -1}, {1, 1}}};

}  // namespace

Diagram Diagram::trivial(int loops) {
  if (loops < 1) throw std::invalid_argument("trivial diagram needs at least one loop");
  Diagram d;
  d.components_ = loops;
  // Disjoint round circles: one outer face plus one disk per loop.
  d.regions_.resize(static_cast<std::size_t>(loops + 1));
  for (int i = 0; i <= loops; ++i) {
    Region& r = d.regions_[static_cast<std::size_t>(i)];
    r.id = i;
    r.unbounded = i == 0;
    r.labels.push_back(r.unbounded ? RegionLabel::unbounded() : RegionLabel::face(i));
    r.color = i == 0 ? Color::White : Color::Black;
  }
  return d;
}

const std::vector<int>& Diagram::tangle_crossings(int tangle) const {
  if (tangle < 1 || tangle > tangle_count()) throw std::out_of_range("tangle index out of range");
  return tangles_[static_cast<std::size_t>(tangle)];
}

Diagram build_diagram(const ConwayWord& w, Orientation variant) {
  Diagram d;
  d.entries_ = w.entries();
  const int total = w.crossing_count();
  d.partner_.assign(static_cast<std::size_t>(total) * 4, PortRef{-1, -1});
  d.tangles_.assign(static_cast<std::size_t>(w.length() + 1), {});

  auto link = [&](PortRef a, PortRef b) {
    d.partner_[Diagram::index(a)] = b;
    d.partner_[Diagram::index(b)] = a;
  };

  // Loose arc ends waiting at each of the four 4-plat positions. An end is
  // either anchored at a crossing port or is one end of a cap whose other end
  // waits at `other`.
  struct Loose {
    std::optional<PortRef> anchor;
    int other = 0;
  };
  std::array<Loose, 5> pos{};
  pos[1] = {std::nullopt, 2};
  pos[2] = {std::nullopt, 1};
  pos[3] = {std::nullopt, 4};
  pos[4] = {std::nullopt, 3};

  auto attach = [&](int k, PortRef p) {
    Loose& loose = pos[static_cast<std::size_t>(k)];
    if (loose.anchor) {
      link(p, *loose.anchor);
    } else {
      pos[static_cast<std::size_t>(loose.other)] = {p, 0};
    }
  };

  int next_id = 0;
  for (int t = 1; t <= w.length(); ++t) {
    const int top = (t % 2) ? 2 : 1;
    for (int j = 0; j < w.tangle(t); ++j) {
      const int c = next_id++;
      d.crossings_.push_back({t, j, top, false, false});
      d.tangles_[static_cast<std::size_t>(t)].push_back(c);
      const PortRef nw{c, NW}, sw{c, SW};
      const Loose& upper = pos[static_cast<std::size_t>(top)];
      if (!upper.anchor && upper.other == top + 1) {
        link(nw, sw);
      } else {
        attach(top, nw);
        attach(top + 1, sw);
      }
      pos[static_cast<std::size_t>(top)] = {PortRef{c, NE}, 0};
      pos[static_cast<std::size_t>(top + 1)] = {PortRef{c, SE}, 0};
    }
  }

  auto close = [&](int a, int b) {
    const Loose& la = pos[static_cast<std::size_t>(a)];
    const Loose& lb = pos[static_cast<std::size_t>(b)];
    if (!la.anchor || !lb.anchor) throw std::logic_error("4-plat closure left a free arc");
    link(*la.anchor, *lb.anchor);
  };
  if (w.length() % 2) {
    close(1, 2);
    close(3, 4);
  } else {
    close(2, 3);
    close(1, 4);
  }

  // Alternating over/under, seeded with the SW-NE strand over at crossing 0.
  std::vector<int> state(static_cast<std::size_t>(total), -1);
  state[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int p = 0; p < 4; ++p) {
      const bool over_here = on_nwse(p) == (state[static_cast<std::size_t>(c)] == 1);
      const PortRef q = d.partner({c, p});
      const bool nwse_over = on_nwse(q.port) ? !over_here : over_here;
      int& s = state[static_cast<std::size_t>(q.crossing)];
      if (s < 0) {
        s = nwse_over ? 1 : 0;
        queue.push_back(q.crossing);
      } else if ((s == 1) != nwse_over) {
        throw std::logic_error("standard diagram is not alternating");
      }
    }
  }
  for (int c = 0; c < total; ++c) {
    auto& x = d.crossings_[static_cast<std::size_t>(c)];
    x.nwse_over = x.built_nwse_over = state[static_cast<std::size_t>(c)] == 1;
  }

  d.trace_faces();
  d.color_faces();
  d.assign_labels();
  d.trace_components(variant);
  return d;
}

void Diagram::trace_faces() {
  const int total = crossing_count();
  region_of_sector_.assign(static_cast<std::size_t>(total) * 4, -1);
  regions_.clear();
  for (int c = 0; c < total; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (region_of_sector_[index({c, s})] >= 0) continue;
      Region r;
      r.id = static_cast<int>(regions_.size());
      PortRef cur{c, s};
      while (region_of_sector_[index(cur)] < 0) {
        region_of_sector_[index(cur)] = r.id;
        r.corners.push_back(cur);
        r.boundary.push_back(cur.crossing);
        const PortRef next = partner({cur.crossing, cur.port});
        cur = {next.crossing, (next.port + 3) % 4};
      }
      regions_.push_back(std::move(r));
    }
  }
  unbounded_ = region_of_sector_[index({0, NE})];
  regions_[static_cast<std::size_t>(unbounded_)].unbounded = true;
}

void Diagram::color_faces() {
  std::vector<int> color(regions_.size(), -1);
  color[static_cast<std::size_t>(unbounded_)] = 0;
  std::deque<int> queue{unbounded_};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const PortRef& corner : regions_[static_cast<std::size_t>(f)].corners) {
      // the faces on either side of the edge at port `corner.port`
      const int g = region_at({corner.crossing, (corner.port + 3) % 4});
      const int want = 1 - color[static_cast<std::size_t>(f)];
      int& cg = color[static_cast<std::size_t>(g)];
      if (cg < 0) {
        cg = want;
        queue.push_back(g);
      } else if (cg != want) {
        throw std::logic_error("face adjacency graph is not bipartite");
      }
    }
  }
  for (auto& r : regions_) r.color = color[static_cast<std::size_t>(r.id)] == 0 ? Color::White : Color::Black;
}

void Diagram::trace_components(Orientation variant) {
  const int total = crossing_count();
  strand_component_.assign(static_cast<std::size_t>(total) * 2, -1);
  strand_entry_.assign(static_cast<std::size_t>(total) * 2, -1);
  int count = 0;
  for (int c = 0; c < total; ++c) {
    for (int s = 0; s < 2; ++s) {
      if (strand_component_[strand_index(c, s)] >= 0) continue;
      PortRef cur{c, s == 0 ? NW : SW};
      while (strand_component_[strand_index(cur.crossing, strand_of(cur.port))] < 0) {
        strand_component_[strand_index(cur.crossing, strand_of(cur.port))] = count;
        strand_entry_[strand_index(cur.crossing, strand_of(cur.port))] = cur.port;
        cur = partner({cur.crossing, through(cur.port)});
      }
      ++count;
    }
  }
  components_ = std::max(count, 1);
  orientation_ = Orientation::A;
  if (components_ == 2) {
    auto lk = linking_number();
    if (lk && *lk > 0) {
      for (std::size_t i = 0; i < strand_entry_.size(); ++i)
        if (strand_component_[i] == 1) strand_entry_[i] = through(strand_entry_[i]);
    }
    if (variant == Orientation::B) {
      for (std::size_t i = 0; i < strand_entry_.size(); ++i)
        if (strand_component_[i] == 1) strand_entry_[i] = through(strand_entry_[i]);
      orientation_ = Orientation::B;
    }
  }
}

Diagram Diagram::reoriented(Orientation variant) const {
  Diagram d = *this;
  if (components_ != 2 || variant == orientation_) return d;
  for (std::size_t i = 0; i < d.strand_entry_.size(); ++i)
    if (d.strand_component_[i] == 1) d.strand_entry_[i] = through(d.strand_entry_[i]);
  d.orientation_ = variant;
  return d;
}

int Diagram::sign(int c) const {
  if (strand_entry_.empty()) throw Error(ErrorCode::UnorientedComponent, "diagram carries no orientation");
  auto direction = [&](int strand) {
    const int in = entry_port(c, strand);
    if (in < 0) throw Error(ErrorCode::UnorientedComponent, "strand without orientation");
    const Vec a = kPortDirection[static_cast<std::size_t>(in)];
    const Vec b = kPortDirection[static_cast<std::size_t>(through(in))];
    return Vec{b.x - a.x, b.y - a.y};
  };
  const int over = crossing_at(c).nwse_over ? 0 : 1;
  const Vec o = direction(over);
  const Vec u = direction(1 - over);
  return o.x * u.y - o.y * u.x > 0 ? 1 : -1;
}

int Diagram::writhe() const {
  int total = 0;
  for (int c = 0; c < crossing_count(); ++c) total += sign(c);
  return total;
}

std::optional<int> Diagram::linking_number() const {
  if (components_ != 2) return std::nullopt;
  int total = 0;
  for (int c = 0; c < crossing_count(); ++c)
    if (component_of(c, 0) != component_of(c, 1)) total += sign(c);
  return total / 2;
}

bool Diagram::tangle_parallel(int tangle) const {
  const int c = tangle_crossings(tangle).front();
  const bool first_rightward = entry_port(c, 0) == NW;
  const bool second_rightward = entry_port(c, 1) == SW;
  return first_rightward == second_rightward;
}

CrossingSet Diagram::effect(std::span<const int> region_ids) const {
  CrossingSet out(crossing_count());
  for (int id : region_ids)
    for (int c : region(id).boundary) out.flip(c);
  return out;
}

CrossingSet Diagram::effect(const RegionSelection& selection) const {
  const auto ids = resolve(selection);
  return effect(std::span<const int>(ids));
}

Diagram Diagram::flipped(const CrossingSet& flips) const {
  if (flips.size() != crossing_count()) throw std::invalid_argument("flip vector size mismatch");
  Diagram d = *this;
  for (int c = 0; c < crossing_count(); ++c)
    if (flips.test(c)) d.crossings_[static_cast<std::size_t>(c)].nwse_over ^= true;
  return d;
}

std::vector<int> Diagram::signed_twists() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (int t = 1; t <= tangle_count(); ++t) {
    int sum = 0;
    for (int c : tangle_crossings(t)) sum += changed(c) ? -1 : 1;
    out.push_back(sum);
  }
  return out;
}

bool Diagram::is_alternating() const {
  std::vector<char> seen(strand_component_.size(), 0);
  for (int c = 0; c < crossing_count(); ++c) {
    for (int s = 0; s < 2; ++s) {
      if (seen[strand_index(c, s)]) continue;
      std::vector<bool> passes;
      PortRef cur{c, entry_port(c, s)};
      while (!seen[strand_index(cur.crossing, strand_of(cur.port))]) {
        seen[strand_index(cur.crossing, strand_of(cur.port))] = 1;
        passes.push_back(on_nwse(cur.port) == crossing_at(cur.crossing).nwse_over);
        cur = partner({cur.crossing, through(cur.port)});
      }
      for (std::size_t i = 0; i < passes.size(); ++i)
        if (passes[i] == passes[(i + 1) % passes.size()]) return false;
    }
  }
  return true;
}

bool Diagram::is_reduced() const {
  for (int c = 0; c < crossing_count(); ++c)
    if (region_at({c, 0}) == region_at({c, 2}) || region_at({c, 1}) == region_at({c, 3})) return false;
  return true;
}

Diagram region_crossing_change(const Diagram& d, const RegionSelection& selection) {
  return d.flipped(d.effect(selection));
}

std::vector<Color> checkerboard(const Diagram& d) {
  std::vector<Color> out;
  out.reserve(d.regions().size());
  for (const auto& r : d.regions()) out.push_back(r.color);
  return out;
}

std::vector<int> crossing_signs(const Diagram& d) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(d.crossing_count()));
  for (int c = 0; c < d.crossing_count(); ++c) out.push_back(d.sign(c));
  return out;
}

bool four_plat_trivial(const Diagram& d) {
  if (d.crossing_count() == 0) return d.component_count() <= 2;
  const std::int64_t p = signed_fraction(d.signed_twists()).numerator;
  return d.component_count() == 1 ? std::llabs(p) == 1 : p == 0;
}

}  // namespace twobridge
