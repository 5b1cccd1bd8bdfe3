#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/crossing_set.hpp"

namespace twobridge {

/// Crossing ports in counterclockwise order. A strand runs NW-SE or SW-NE.
enum Port : int { NW = 0, SW = 1, SE = 2, NE = 3 };

struct PortRef {
  int crossing = 0;
  int port = 0;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

enum class Axis { Horizontal, Vertical };
enum class Color { White, Black };
/// Orientation of the second component of a two-component link. Variant A
/// makes the linking number non-positive, variant B reverses it.
enum class Orientation { A, B };

struct Crossing {
  int tangle = 0;  // 1-based
  int index = 0;   // 0-based, left to right within the twist block
  int top = 0;     // upper 4-plat position of the block (1 or 2)
  bool nwse_over = false;
  bool built_nwse_over = false;
};

/// R_j (horizontal chain), R'_j (vertical chain), R[i,k] (tangle-local),
/// Rinf for the unbounded face, or F<id> for a face none of those reach.
struct RegionLabel {
  enum class Kind { Horizontal, Vertical, Local, Unbounded, Face };
  Kind kind = Kind::Horizontal;
  int first = 0;
  int second = 0;

  static RegionLabel horizontal(int j) { return {Kind::Horizontal, j, 0}; }
  static RegionLabel vertical(int j) { return {Kind::Vertical, j, 0}; }
  static RegionLabel local(int tangle, int k) { return {Kind::Local, tangle, k}; }
  static RegionLabel unbounded() { return {Kind::Unbounded, 0, 0}; }
  static RegionLabel face(int id) { return {Kind::Face, id, 0}; }

  std::string str() const;
  friend auto operator<=>(const RegionLabel&, const RegionLabel&) = default;
};

RegionLabel parse_region_label(std::string_view text);

struct Region {
  int id = 0;
  /// Sector (c, i) is the angle between port i and port i+1.
  std::vector<PortRef> corners;
  std::vector<int> boundary;
  Color color = Color::White;
  bool unbounded = false;
  /// All labels naming this face; the first is the display name.
  std::vector<RegionLabel> labels;

  std::string name() const;
};

struct RegionSelection {
  std::vector<RegionLabel> labels;
  std::string str() const;
};

class Diagram {
public:
  /// Crossingless diagram of `loops` disjoint circles.
  static Diagram trivial(int loops = 1);

  const std::vector<int>& word_entries() const noexcept { return entries_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int face_count() const noexcept { return static_cast<int>(regions_.size()); }
  int tangle_count() const noexcept { return static_cast<int>(entries_.size()); }
  Axis axis(int tangle) const noexcept { return tangle % 2 ? Axis::Horizontal : Axis::Vertical; }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }
  const std::vector<int>& tangle_crossings(int tangle) const;
  PortRef partner(PortRef p) const { return partner_[index(p)]; }

  const std::vector<Region>& regions() const noexcept { return regions_; }
  const Region& region(int id) const { return regions_.at(static_cast<std::size_t>(id)); }
  int region_at(PortRef sector) const { return region_of_sector_[index(sector)]; }
  int unbounded_region() const noexcept { return unbounded_; }
  std::optional<int> find_region(const RegionLabel& label) const;
  /// Throws UnknownRegionLabel.
  int resolve(const RegionLabel& label) const;
  std::vector<int> resolve(const RegionSelection& selection) const;

  int component_count() const noexcept { return components_; }
  /// Strand 0 runs NW-SE, strand 1 runs SW-NE.
  int component_of(int crossing, int strand) const { return strand_component_[strand_index(crossing, strand)]; }
  int entry_port(int crossing, int strand) const { return strand_entry_[strand_index(crossing, strand)]; }
  Orientation orientation() const noexcept { return orientation_; }
  Diagram reoriented(Orientation variant) const;

  int sign(int crossing) const;
  int writhe() const;
  std::optional<int> linking_number() const;
  /// Both strands of a twist block run the same way along it.
  bool tangle_parallel(int tangle) const;

  CrossingSet effect(std::span<const int> region_ids) const;
  CrossingSet effect(const RegionSelection& selection) const;
  /// Copy with over/under exchanged where `flips` is set.
  Diagram flipped(const CrossingSet& flips) const;
  bool changed(int crossing) const { return crossing_at(crossing).nwse_over != crossing_at(crossing).built_nwse_over; }
  /// Signed half-twist count per tangle relative to the alternating build.
  std::vector<int> signed_twists() const;
  bool is_alternating() const;
  /// No face meets a crossing from two opposite sides.
  bool is_reduced() const;

private:
  friend Diagram build_diagram(const ConwayWord& w, Orientation variant);

  static std::size_t index(PortRef p) { return static_cast<std::size_t>(p.crossing * 4 + p.port); }
  static std::size_t strand_index(int c, int s) { return static_cast<std::size_t>(c * 2 + s); }
  const Crossing& crossing_at(int c) const { return crossings_[static_cast<std::size_t>(c)]; }

  void trace_faces();
  void assign_labels();
  void color_faces();
  void trace_components(Orientation variant);

  std::vector<int> entries_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> tangles_;
  std::vector<PortRef> partner_;
  std::vector<Region> regions_;
  std::vector<int> region_of_sector_;
  int unbounded_ = 0;
  int components_ = 1;
  std::vector<int> strand_component_;
  std::vector<int> strand_entry_;
  Orientation orientation_ = Orientation::A;
};

/// Standard alternating 4-plat diagram of the word.
Diagram build_diagram(const ConwayWord& w, Orientation variant = Orientation::A);

/// Throws UnknownRegionLabel for labels that name no face.
Diagram region_crossing_change(const Diagram& d, const RegionSelection& selection);

std::vector<Color> checkerboard(const Diagram& d);
std::vector<int> crossing_signs(const Diagram& d);

/// Exact triviality test for 4-plat diagrams: the closure of the signed
/// twist sequence is the unknot (one component) or the unlink (two).
bool four_plat_trivial(const Diagram& d);

}  // namespace twobridge
