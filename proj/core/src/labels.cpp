#include <algorithm>
#include <cctype>
#include <charconv>

#include "twobridge/diagram.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

std::string RegionLabel::str() const {
  switch (kind) {
    case Kind::Horizontal: return "R" + std::to_string(first);
    case Kind::Vertical: return "R'" + std::to_string(first);
    case Kind::Local: return "R[" + std::to_string(first) + "," + std::to_string(second) + "]";
    case Kind::Unbounded: return "Rinf";
    case Kind::Face: return "F" + std::to_string(first);
  }
  return {};
}

namespace {

[[noreturn]] void bad_label(std::string_view text) {
  throw Error(ErrorCode::UnknownRegionLabel, "malformed region label '" + std::string(text) + "'");
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) bad_label(whole);
  return value;
}

}  // namespace

RegionLabel parse_region_label(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  std::string_view s = compact;
  if (!s.empty() && (s.front() == 'F' || s.front() == 'f')) return RegionLabel::face(parse_int(s.substr(1), text));
  if (s.empty() || (s.front() != 'R' && s.front() != 'r')) bad_label(text);
  s.remove_prefix(1);
  if (!s.empty() && s.front() == '_') s.remove_prefix(1);
  if (s == "inf" || s == "INF") return RegionLabel::unbounded();
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') bad_label(text);
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) bad_label(text);
    return RegionLabel::local(parse_int(s.substr(0, comma), text), parse_int(s.substr(comma + 1), text));
  }
  if (!s.empty() && s.front() == '\'') {
    s.remove_prefix(1);
    if (!s.empty() && s.front() == '_') s.remove_prefix(1);
    return RegionLabel::vertical(parse_int(s, text));
  }
  return RegionLabel::horizontal(parse_int(s, text));
}

std::string Region::name() const {
  return labels.empty() ? RegionLabel::face(id).str() : labels.front().str();
}

std::string RegionSelection::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i].str();
  }
  return out + "}";
}

void Diagram::assign_labels() {
  std::vector<std::vector<RegionLabel>> chain(regions_.size());
  std::vector<std::vector<RegionLabel>> local(regions_.size());
  int horizontal_offset = 0;
  int vertical_offset = 0;
  for (int t = 1; t <= tangle_count(); ++t) {
    const auto& cs = tangle_crossings(t);
    const int size = static_cast<int>(cs.size());
    const bool horizontal = axis(t) == Axis::Horizontal;
    for (int r = 1; r <= size + 1; ++r) {
      // r = 1 is left of the first crossing, r = k the face right of crossing k-1
      const int face = r == 1 ? region_at({cs.front(), NW}) : region_at({cs[static_cast<std::size_t>(r - 2)], SE});
      local[static_cast<std::size_t>(face)].push_back(RegionLabel::local(t, r));
      const RegionLabel global = horizontal ? RegionLabel::horizontal(horizontal_offset + r)
                                            : RegionLabel::vertical(vertical_offset + r);
      auto& names = chain[static_cast<std::size_t>(face)];
      if (std::find(names.begin(), names.end(), global) == names.end()) names.push_back(global);
    }
    (horizontal ? horizontal_offset : vertical_offset) += size;
  }
  for (auto& region : regions_) {
    auto& names = chain[static_cast<std::size_t>(region.id)];
    const auto& extra = local[static_cast<std::size_t>(region.id)];
    names.insert(names.end(), extra.begin(), extra.end());
    if (region.unbounded) names.push_back(RegionLabel::unbounded());
    if (names.empty()) names.push_back(RegionLabel::face(region.id));
    region.labels = std::move(names);
  }
}

std::optional<int> Diagram::find_region(const RegionLabel& label) const {
  for (const auto& r : regions_)
    if (std::find(r.labels.begin(), r.labels.end(), label) != r.labels.end()) return r.id;
  return std::nullopt;
}

int Diagram::resolve(const RegionLabel& label) const {
  if (auto id = find_region(label)) return *id;
  throw Error(ErrorCode::UnknownRegionLabel, "no region labelled " + label.str());
}

std::vector<int> Diagram::resolve(const RegionSelection& selection) const {
  std::vector<int> ids;
  ids.reserve(selection.labels.size());
  for (const auto& label : selection.labels) ids.push_back(resolve(label));
  return ids;
}

}  // namespace twobridge
