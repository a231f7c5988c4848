#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyck4d/error.hpp"
#include "dyck4d/geometry.hpp"
#include "dyck4d/projection.hpp"
#include "dyck4d/vec4.hpp"
#include "dyck4d/word.hpp"

namespace dyck4d {

// Colors follow the axis convention: l yellow, r red, j blue, i green.
enum class ColorRole : std::uint8_t { YellowL, RedR, BlueJ, GreenI, Path, Neutral };

constexpr std::string_view role_color(ColorRole role) noexcept {
  switch (role) {
    case ColorRole::YellowL: return "#E8C547";
    case ColorRole::RedR: return "#C0392B";
    case ColorRole::BlueJ: return "#2E6DA4";
    case ColorRole::GreenI: return "#27AE60";
    case ColorRole::Path: return "#1B1B1B";
    case ColorRole::Neutral: return "#8C8C8C";
  }
  return "#000000";
}

constexpr ColorRole axis_role(Axis a) noexcept {
  switch (a) {
    case Axis::I: return ColorRole::GreenI;
    case Axis::J: return ColorRole::BlueJ;
    case Axis::L: return ColorRole::YellowL;
    case Axis::R: return ColorRole::RedR;
  }
  return ColorRole::Neutral;
}

constexpr ColorRole side_role(Side s) noexcept {
  switch (s) {
    case Side::Blue: return ColorRole::BlueJ;
    case Side::Red: return ColorRole::RedR;
    case Side::Yellow: return ColorRole::YellowL;
  }
  return ColorRole::Neutral;
}

inline constexpr double kPixelsPerUnit = 40.0;
inline constexpr double kMargin = 20.0;

struct Point2 {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class ElementKind : std::uint8_t { Polyline, Segment, Label, NodeMarker };

struct Element {
  ElementKind kind = ElementKind::Segment;
  std::vector<Point2> points;  // canvas pixels
  ColorRole role = ColorRole::Neutral;
  int layer = 0;
  std::string css_class;
  std::string text;  // labels only
  bool dashed = false;
};

/// Drawing in canvas pixels (x right, y down). Elements are emitted by
/// layer, and in insertion order within a layer.
struct Scene {
  double width = 0;
  double height = 0;
  std::vector<Element> elements;

  void segment(Point2 a, Point2 b, ColorRole role, int layer, std::string css_class,
               bool dashed = false) {
    elements.push_back({ElementKind::Segment, {a, b}, role, layer, std::move(css_class), {}, dashed});
  }
  void polyline(std::vector<Point2> pts, ColorRole role, int layer, std::string css_class) {
    elements.push_back({ElementKind::Polyline, std::move(pts), role, layer, std::move(css_class), {}, false});
  }
  void marker(Point2 at, ColorRole role, int layer, std::string css_class) {
    elements.push_back({ElementKind::NodeMarker, {at}, role, layer, std::move(css_class), {}, false});
  }
  void label(Point2 at, std::string text, ColorRole role, int layer) {
    elements.push_back({ElementKind::Label, {at}, role, layer, "label", std::move(text), false});
  }

  std::size_t count(std::string_view css_class) const {
    return static_cast<std::size_t>(std::count_if(
        elements.begin(), elements.end(), [&](const Element& e) { return e.css_class == css_class; }));
  }
};

namespace detail {

// Rounds to 1/1000 pixel and prints the shortest decimal that round-trips.
inline std::string format_number(double v) {
  double rounded = std::round(v * 1000.0) / 1000.0;
  if (rounded == 0.0) rounded = 0.0;  // no "-0"
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), rounded);
  return std::string(buf, res.ptr);
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace detail

inline std::string to_svg(const Scene& scene) {
  using detail::format_number;
  std::vector<const Element*> order;
  order.reserve(scene.elements.size());
  for (const Element& e : scene.elements) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const Element* a, const Element* b) { return a->layer < b->layer; });

  std::ostringstream os;
  const std::string w = format_number(scene.width);
  const std::string h = format_number(scene.height);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  for (const Element* e : order) {
    const std::string_view color = role_color(e->role);
    const std::string cls = detail::xml_escape(e->css_class);
    switch (e->kind) {
      case ElementKind::Segment:
        os << "  <line class=\"" << cls << "\" x1=\"" << format_number(e->points[0].x)
           << "\" y1=\"" << format_number(e->points[0].y) << "\" x2=\""
           << format_number(e->points[1].x) << "\" y2=\"" << format_number(e->points[1].y)
           << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
        if (e->dashed) os << " stroke-dasharray=\"6 4\"";
        os << "/>\n";
        break;
      case ElementKind::Polyline:
        os << "  <polyline class=\"" << cls << "\" points=\"";
        for (std::size_t k = 0; k < e->points.size(); ++k) {
          if (k) os << ' ';
          os << format_number(e->points[k].x) << ',' << format_number(e->points[k].y);
        }
        os << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
        break;
      case ElementKind::NodeMarker:
        os << "  <circle class=\"" << cls << "\" cx=\"" << format_number(e->points[0].x)
           << "\" cy=\"" << format_number(e->points[0].y) << "\" r=\"3\" fill=\"" << color
           << "\"/>\n";
        break;
      case ElementKind::Label:
        os << "  <text class=\"" << cls << "\" x=\"" << format_number(e->points[0].x)
           << "\" y=\"" << format_number(e->points[0].y) << "\" fill=\"" << color
           << "\" font-family=\"sans-serif\" font-size=\"14\">" << detail::xml_escape(e->text)
           << "</text>\n";
        break;
    }
  }
  os << "</svg>\n";
  return os.str();
}

/// Scene for a 2-axis grid: isolines of both axes, the j = 0 diagonal for
/// the (l, r) grid, and the optional path. The first axis runs right, the
/// second up; i spans 2n units and the others n.
///
/// Throws WrongArity if `axes` has more than two axes, and
/// InconsistentProjection if `path` was projected onto different axes.
inline Scene grid_scene(const AxisSet& axes, Coordinate n,
                        const std::optional<ProjectedPath>& path = std::nullopt) {
  if (axes.size() != 2) {
    throw Error(ErrorKind::WrongArity, "a 2D grid needs exactly two axes, got " +
                                           std::to_string(axes.size()));
  }
  if (path && !(path->axes == axes)) {
    throw Error(ErrorKind::InconsistentProjection, "path axes do not match the grid axes");
  }
  const Axis ax = axes[0];
  const Axis ay = axes[1];
  Coordinate wx = DoubleTesseract::extent(ax, std::max<Coordinate>(n, 0));
  Coordinate wy = DoubleTesseract::extent(ay, std::max<Coordinate>(n, 0));
  if (path) {
    for (const auto& p : path->points) {
      wx = std::max(wx, p[0]);
      wy = std::max(wy, p[1]);
    }
  }
  const auto to_canvas = [&](double a, double b) {
    return Point2{kMargin + kPixelsPerUnit * a, kMargin + kPixelsPerUnit * (static_cast<double>(wy) - b)};
  };

  Scene s;
  s.width = 2 * kMargin + kPixelsPerUnit * static_cast<double>(wx);
  s.height = 2 * kMargin + kPixelsPerUnit * static_cast<double>(wy);
  for (Coordinate a = 0; a <= wx; ++a) {
    s.segment(to_canvas(a, 0), to_canvas(a, wy), axis_role(ax), 0, "isoline");
  }
  for (Coordinate b = 0; b <= wy; ++b) {
    s.segment(to_canvas(0, b), to_canvas(wx, b), axis_role(ay), 0, "isoline");
  }
  if (ax == Axis::L && ay == Axis::R) {
    const Coordinate d = std::min(wx, wy);
    s.segment(to_canvas(0, 0), to_canvas(d, d), ColorRole::BlueJ, 1, "central-ray", true);
  }
  if (path) {
    std::vector<Point2> pts;
    pts.reserve(path->points.size());
    for (const auto& p : path->points) pts.push_back(to_canvas(p[0], p[1]));
    s.polyline(pts, ColorRole::Path, 2, "path");
    for (const Point2& p : pts) s.marker(p, ColorRole::Path, 3, "node");
  }
  s.label({kMargin + kPixelsPerUnit * static_cast<double>(wx) + 4, kMargin + kPixelsPerUnit * static_cast<double>(wy) + 14},
          std::string(1, axis_letter(ax)), axis_role(ax), 4);
  s.label({4, kMargin - 6}, std::string(1, axis_letter(ay)), axis_role(ay), 4);
  return s;
}

inline std::string render_grid_2d(const AxisSet& axes, Coordinate n,
                                  const std::optional<ProjectedPath>& path = std::nullopt) {
  return to_svg(grid_scene(axes, n, path));
}

enum class WireframeStyle : std::uint8_t { Orthographic3d, Schlegel };

struct WireframeOptions {
  bool triangle_overlay = false;
  std::optional<Path4D> path;
};

struct Wireframe {
  Scene scene;
  std::string svg;
  std::string edge_list;
};

/// Fixed view maps from 4D to canvas pixels, before translation.
///
/// Orthographic: one unit along i, j, l, r moves by (20, 12), (20, -14),
/// (40, 0), (0, -40) pixels. No signed combination of these with
/// coefficients in {-2, ..., 2} vanishes, so the 16 box corners never
/// collide for any n >= 1.
///
/// Schlegel: the i = 0 cell is the outer cube, the i = 2n cell the inner
/// one, shrunk by 1/2 about the common center; points in between are
/// scaled linearly in i. The (j, l, r) result is then drawn with the
/// orthographic j, l, r vectors.
struct ViewMap {
  WireframeStyle style = WireframeStyle::Orthographic3d;
  Coordinate n = 1;

  Point2 operator()(const Point4& p) const {
    double i = static_cast<double>(p.i);
    double j = static_cast<double>(p.j);
    double l = static_cast<double>(p.l);
    double r = static_cast<double>(p.r);
    if (style == WireframeStyle::Schlegel) {
      const double c = static_cast<double>(n) / 2.0;
      const double scale = 1.0 - i / (4.0 * static_cast<double>(n));
      j = c + scale * (j - c);
      l = c + scale * (l - c);
      r = c + scale * (r - c);
      i = 0;
    }
    return {20.0 * i + 20.0 * j + 40.0 * l, 12.0 * i - 14.0 * j - 40.0 * r};
  }
};

namespace detail {

inline std::string edge_list_text(std::span<const Point4> vertices,
                                  std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::ostringstream os;
  for (const Point4& v : vertices) os << "v " << v.i << ' ' << v.j << ' ' << v.l << ' ' << v.r << '\n';
  for (auto [a, b] : edges) os << "e " << a << ' ' << b << '\n';
  return os.str();
}

inline Axis differing_axis(const Point4& a, const Point4& b) {
  for (Axis x : kAllAxes) {
    if (a[x] != b[x]) return x;
  }
  return Axis::I;
}

// Draws the given vertices/edges plus overlays, with `flatten` applied to
// overlay points first (cells pin their fixed axis).
template <typename Flatten>
Wireframe draw_wireframe(const ViewMap& view, std::span<const Point4> vertices,
                         std::span<const std::pair<std::size_t, std::size_t>> edges,
                         Coordinate n, const WireframeOptions& opts, Flatten flatten) {
  std::vector<Point2> all;
  const auto map = [&](const Point4& p) {
    const Point2 q = view(p);
    all.push_back(q);
    return q;
  };

  std::vector<Point2> vpix;
  for (const Point4& v : vertices) vpix.push_back(map(v));
  std::vector<Point2> path_pix;
  if (opts.path) {
    for (const Point4& p : opts.path->nodes()) path_pix.push_back(map(flatten(p)));
  }
  const TriangleGeometry tri = triangle(n);
  std::array<std::pair<Point2, Point2>, 3> side_pix{};
  std::array<Point2, 3> anchor_pix{};
  if (opts.triangle_overlay) {
    for (Side s : kAllSides) {
      const TriangleSide& side = tri.side(s);
      side_pix[static_cast<int>(s)] = {map(flatten(side.from)), map(flatten(side.to))};
    }
    anchor_pix = {map(flatten(tri.vertex_origin)), map(flatten(tri.vertex_end)),
                  map(flatten(tri.vertex_apex))};
  }

  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const Point2& p : all) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const auto shift = [&](Point2 p) { return Point2{p.x - min_x + kMargin, p.y - min_y + kMargin}; };

  Wireframe out;
  Scene& s = out.scene;
  s.width = max_x - min_x + 2 * kMargin;
  s.height = max_y - min_y + 2 * kMargin;
  for (auto [a, b] : edges) {
    s.segment(shift(vpix[a]), shift(vpix[b]), axis_role(differing_axis(vertices[a], vertices[b])), 0,
              "edge");
  }
  if (opts.triangle_overlay) {
    for (Side s_ : kAllSides) {
      const auto& [from, to] = side_pix[static_cast<int>(s_)];
      s.segment(shift(from), shift(to), side_role(s_), 1, "triangle-side", s_ == Side::Blue);
    }
  }
  if (!path_pix.empty()) {
    std::vector<Point2> pts;
    for (const Point2& p : path_pix) pts.push_back(shift(p));
    s.polyline(std::move(pts), ColorRole::Path, 2, "path");
  }
  for (const Point2& p : vpix) s.marker(shift(p), ColorRole::Neutral, 3, "vertex");
  if (opts.triangle_overlay) {
    for (const Point2& p : anchor_pix) s.marker(shift(p), ColorRole::Path, 4, "anchor");
  }
  out.svg = to_svg(s);
  out.edge_list = edge_list_text(vertices, edges);
  return out;
}

}  // namespace detail

/// Wireframe of the whole double tesseract in either view. Overlays: the
/// triangle's three sides with anchor markers at its vertices, and a path.
inline Wireframe render_wireframe(const DoubleTesseract& t, WireframeStyle style,
                                  const WireframeOptions& opts = {}) {
  const ViewMap view{style, t.n};
  return detail::draw_wireframe(view, t.vertices, t.edges, t.n, opts,
                                [](const Point4& p) { return p; });
}

/// Orthographic wireframe of one 3D cell. Overlay points are pinned to the
/// cell's fixed coordinate, which draws the 3-axis image of the path.
inline Wireframe render_wireframe(const DoubleTesseract& t, const Cell& cell,
                                  const WireframeOptions& opts = {}) {
  const ViewMap view{WireframeStyle::Orthographic3d, t.n};
  const auto edges = t.cell_edges(cell);
  const Coordinate pinned = cell.at_max ? DoubleTesseract::extent(cell.fixed_axis, t.n) : 0;
  const Axis fixed = cell.fixed_axis;
  return detail::draw_wireframe(view, cell.vertices, edges, t.n, opts, [=](Point4 p) {
    switch (fixed) {
      case Axis::I: p.i = pinned; break;
      case Axis::J: p.j = pinned; break;
      case Axis::L: p.l = pinned; break;
      case Axis::R: p.r = pinned; break;
    }
    return p;
  });
}

}  // namespace dyck4d
