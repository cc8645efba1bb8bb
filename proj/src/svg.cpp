#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

#include "format.hpp"
#include "octa/decomposition.hpp"

namespace octa {

namespace {

// Stroke per chart coordinate a, b, c, d.
constexpr std::array<const char*, 4> kEdgeColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
constexpr std::array<const char*, 4> kCoordNames{"a", "b", "c", "d"};
// Fill per deficit group delta1/2, delta2/2, delta3/2.
constexpr std::array<const char*, 3> kFaceFills{"#fdd9b5", "#c6e2f5", "#d4efc4"};

using detail::shortest;

} // namespace

std::string svg_net(const ChartPoint& p, const ConeDeficits& d, const SvgOptions& options) {
  const GluingComplex g = build_gluing(parallelogram_family(p, d));
  const FaceLayout layout = unfold_net(g);

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const auto& face : layout) {
    for (Vec2 q : face) {
      lo_x = std::min(lo_x, q.x);
      lo_y = std::min(lo_y, q.y);
      hi_x = std::max(hi_x, q.x);
      hi_y = std::max(hi_y, q.y);
    }
  }
  const double span_x = std::max(hi_x - lo_x, 1e-300);
  const double span_y = hi_y - lo_y;
  const double scale = (options.width - 2.0 * options.margin) / span_x;
  const double width = options.width;
  const double height = span_y * scale + 2.0 * options.margin;
  // SVG y grows downward; flip so the picture keeps the layout orientation.
  struct Pixel {
    std::string x, y;
  };
  auto px = [&](Vec2 q) {
    return Pixel{shortest(options.margin + (q.x - lo_x) * scale),
                 shortest(options.margin + (hi_y - q.y) * scale)};
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << shortest(width)
      << "\" height=\"" << shortest(height) << "\" viewBox=\"0 0 " << shortest(width) << " "
      << shortest(height) << "\">\n";
  out << "<title>Parallelogram net: deficits " << shortest(d[0]) << ", " << shortest(d[1]) << ", "
      << shortest(d[2]) << "; chart " << shortest(p.a) << ", " << shortest(p.b) << ", "
      << shortest(p.c) << ", " << shortest(p.d) << "</title>\n";

  out << "<g id=\"faces\" stroke=\"none\">\n";
  for (int f = 0; f < kFaceCount; ++f) {
    const auto& spec = g.faces()[f];
    out << "<polygon id=\"" << name(spec.label) << "\" class=\"face delta" << (spec.deficit_index + 1)
        << "\" fill=\"" << kFaceFills[spec.deficit_index] << "\" fill-opacity=\""
        << (f < 6 ? "1" : "0.7") << "\" points=\"";
    for (int c = 0; c < 4; ++c) {
      const Pixel q = px(layout[f][c]);
      out << (c ? " " : "") << q.x << "," << q.y;
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"edges\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (int f = 0; f < kFaceCount; ++f) {
    const auto& spec = g.faces()[f];
    for (int e = 0; e < 4; ++e) {
      const Pixel a = px(layout[f][e]);
      const Pixel b = px(layout[f][(e + 1) % 4]);
      out << "<line class=\"edge " << kCoordNames[spec.edge_coord(e)] << "\" stroke=\""
          << kEdgeColors[spec.edge_coord(e)] << "\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\""
          << b.x << "\" y2=\"" << b.y << "\"/>\n";
    }
  }
  out << "</g>\n";

  if (options.labels) {
    out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (int f = 0; f < kFaceCount; ++f) {
      const auto& spec = g.faces()[f];
      const Vec2 centre = 0.25 * (layout[f][0] + layout[f][1] + layout[f][2] + layout[f][3]);
      const Pixel c = px(centre);
      out << "<text class=\"face-label\" x=\"" << c.x << "\" y=\"" << c.y << "\">"
          << name(spec.label) << "</text>\n";
      // The delta/2 corner, pulled slightly toward the face centre.
      const Pixel k = px(layout[f][0] + 0.2 * (centre - layout[f][0]));
      out << "<text class=\"corner-label\" font-size=\"9\" x=\"" << k.x << "\" y=\"" << k.y
          << "\">" << name(spec.corners[0]) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace octa
