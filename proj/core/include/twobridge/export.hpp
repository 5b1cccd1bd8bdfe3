#pragma once

#include <array>
#include <string>
#include <vector>

#include "twobridge/diagram.hpp"

namespace twobridge {

/// Planar diagram code. Each tuple lists the four incident edge labels
/// counterclockwise, starting from the incoming under-strand.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;
  /// Crossingless circles carried alongside the tuples.
  int free_loops = 0;
};

PdCode pd_code(const Diagram& d);
std::string format_pd(const PdCode& pd);

/// Signed double-occurrence words, one per component: +k over, -k under.
std::vector<std::vector<int>> gauss_code(const Diagram& d);
std::string format_gauss(const Diagram& d);

struct SvgOptions {
  std::vector<int> highlight;  // region ids to shade
  bool labels = true;
};
std::string render_svg(const Diagram& d, const SvgOptions& options = {});

}  // namespace twobridge
