#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "twobridge/export.hpp"

namespace twobridge {

namespace {

constexpr double kColumn = 48.0;
constexpr double kRow = 48.0;
constexpr double kMargin = 40.0;
constexpr double kHalf = 16.0;

struct Point {
  double x;
  double y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

class Layout {
public:
  explicit Layout(const Diagram& d) : d_(d) {}

  double row(int position) const { return kMargin + position * kRow; }
  double column(int c) const { return kMargin + (c + 1) * kColumn; }
  double left_edge() const { return kMargin; }
  double right_edge() const { return column(d_.crossing_count() - 1) + kColumn; }
  double width() const { return right_edge() + kColumn + kMargin; }
  double height() const { return row(4) + kRow; }

  Point center(int c) const {
    const auto& x = d_.crossing(c);
    return {column(c), (row(x.top) + row(x.top + 1)) / 2};
  }

  Point port(PortRef p) const {
    const auto& x = d_.crossing(p.crossing);
    const double cx = column(p.crossing);
    const bool left = p.port == NW || p.port == SW;
    const bool upper = p.port == NW || p.port == NE;
    return {left ? cx - kHalf : cx + kHalf, upper ? row(x.top) : row(x.top + 1)};
  }

  Point sector(PortRef s) const {
    static constexpr double kOffset = 20.0;
    const Point c = center(s.crossing);
    switch (s.port) {
      case 0: return {c.x - kOffset, c.y};
      case 1: return {c.x, c.y + kOffset};
      case 2: return {c.x + kOffset, c.y};
      default: return {c.x, c.y - kOffset};
    }
  }

private:
  const Diagram& d_;
};

}  // namespace

std::string render_svg(const Diagram& d, const SvgOptions& options) {
  std::string out;
  if (d.crossing_count() == 0) {
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"160\" height=\"120\">\n";
    for (int i = 0; i < d.component_count(); ++i)
      out += "  <circle cx=\"" + num(50.0 + 60.0 * i) + "\" cy=\"60\" r=\"25\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
    out += "</svg>\n";
    return out;
  }

  const Layout layout(d);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(layout.width()) +
         "\" height=\"" + num(layout.height()) + "\">\n";
  std::string title = "C(";
  for (std::size_t i = 0; i < d.word_entries().size(); ++i)
    title += (i ? "," : "") + std::to_string(d.word_entries()[i]);
  out += "  <title>" + escape(title + ")") + "</title>\n";

  // region anchors
  std::vector<Point> anchor(d.regions().size(), Point{0, 0});
  for (const auto& r : d.regions()) {
    Point sum{0, 0};
    for (const auto& corner : r.corners) {
      const Point p = layout.sector(corner);
      sum.x += p.x;
      sum.y += p.y;
    }
    const double k = static_cast<double>(std::max<std::size_t>(r.corners.size(), 1));
    anchor[static_cast<std::size_t>(r.id)] = {sum.x / k, sum.y / k};
    if (r.unbounded) anchor[static_cast<std::size_t>(r.id)] = {kMargin / 2, kMargin / 2};
  }

  out += "  <g id=\"highlight\" fill=\"#f4a261\" fill-opacity=\"0.55\" stroke=\"none\">\n";
  for (int id : options.highlight) {
    if (id < 0 || id >= d.face_count()) continue;
    const Point p = anchor[static_cast<std::size_t>(id)];
    out += "    <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"13\"/>\n";
  }
  out += "  </g>\n";

  out += "  <g id=\"strands\" fill=\"none\" stroke=\"black\" stroke-width=\"3\" stroke-linejoin=\"round\">\n";
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int p = 0; p < 4; ++p) {
      const PortRef a{c, p};
      const PortRef b = d.partner(a);
      if (b < a) continue;
      const Point pa = layout.port(a);
      const Point pb = layout.port(b);
      const bool a_left = p == NW || p == SW;
      const bool b_left = b.port == NW || b.port == SW;
      std::string path = "M" + num(pa.x) + " " + num(pa.y);
      const double spread = std::abs(pa.y - pb.y) / kRow;
      if (a_left && b_left) {
        const double x = layout.left_edge() - 10.0 * spread;
        path += " H" + num(x) + " V" + num(pb.y) + " H" + num(pb.x);
      } else if (!a_left && !b_left) {
        const double x = layout.right_edge() + 10.0 * spread;
        path += " H" + num(x) + " V" + num(pb.y) + " H" + num(pb.x);
      } else {
        path += " L" + num(pb.x) + " " + num(pb.y);
      }
      out += "    <path d=\"" + path + "\"/>\n";
    }
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    const bool nwse_over = d.crossing(c).nwse_over;
    const Point nw = layout.port({c, NW}), se = layout.port({c, SE});
    const Point sw = layout.port({c, SW}), ne = layout.port({c, NE});
    const Point& o1 = nwse_over ? nw : sw;
    const Point& o2 = nwse_over ? se : ne;
    const Point& u1 = nwse_over ? sw : nw;
    const Point& u2 = nwse_over ? ne : se;
    const Point mid = layout.center(c);
    constexpr double gap = 0.3;
    out += "    <path d=\"M" + num(o1.x) + " " + num(o1.y) + " L" + num(o2.x) + " " + num(o2.y) + "\"/>\n";
    out += "    <path d=\"M" + num(u1.x) + " " + num(u1.y) + " L" + num(mid.x + (u1.x - mid.x) * gap) + " " +
           num(mid.y + (u1.y - mid.y) * gap) + " M" + num(mid.x + (u2.x - mid.x) * gap) + " " +
           num(mid.y + (u2.y - mid.y) * gap) + " L" + num(u2.x) + " " + num(u2.y) + "\"/>\n";
  }
  out += "  </g>\n";

  if (options.labels) {
    out += "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
    for (const auto& r : d.regions()) {
      const Point p = anchor[static_cast<std::size_t>(r.id)];
      out += "    <text x=\"" + num(p.x) + "\" y=\"" + num(p.y + 3) + "\">" + escape(r.name()) + "</text>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace twobridge
