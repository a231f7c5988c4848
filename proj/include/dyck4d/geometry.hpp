#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dyck4d/error.hpp"
#include "dyck4d/lattice.hpp"
#include "dyck4d/vec4.hpp"
#include "dyck4d/word.hpp"

namespace dyck4d {

/// The three sides of the Dyck n-triangle, named by their colors:
/// Blue is the j-isoline #0, Red the r-isoline #0, Yellow the l-isoline #n.
enum class Side : std::uint8_t { Blue, Red, Yellow };

inline constexpr std::array<Side, 3> kAllSides{Side::Blue, Side::Red, Side::Yellow};

constexpr std::string_view side_name(Side s) noexcept {
  switch (s) {
    case Side::Blue: return "blue";
    case Side::Red: return "red";
    case Side::Yellow: return "yellow";
  }
  return "";
}

struct TriangleSide {
  Side side;
  LatticeNode from;
  LatticeNode to;
  std::vector<LatticeNode> nodes;
};

struct TriangleGeometry {
  Coordinate n = 0;
  LatticeNode vertex_origin;
  LatticeNode vertex_end;
  LatticeNode vertex_apex;
  std::array<TriangleSide, 3> sides;  // Blue, Red, Yellow

  const TriangleSide& side(Side s) const& noexcept { return sides[static_cast<int>(s)]; }
  const TriangleSide& side(Side s) const&& = delete;
};

/// Node k (0 <= k <= n) along a side.
constexpr LatticeNode side_node(Side s, Coordinate n, Coordinate k) noexcept {
  switch (s) {
    case Side::Blue: return {2 * k, 0, k, k};
    case Side::Red: return {k, k, k, 0};
    case Side::Yellow: return {n + k, n - k, n, k};
  }
  return {};
}

inline TriangleGeometry triangle(Coordinate n) {
  if (n < 0) throw Error(ErrorKind::Degenerate, "half-length must be non-negative");
  TriangleGeometry t;
  t.n = n;
  t.vertex_origin = kOrigin;
  t.vertex_end = {2 * n, 0, n, n};
  t.vertex_apex = {n, n, n, 0};
  for (Side s : kAllSides) {
    TriangleSide& side = t.sides[static_cast<int>(s)];
    side.side = s;
    side.from = side_node(s, n, 0);
    side.to = side_node(s, n, n);
    side.nodes.reserve(static_cast<std::size_t>(n + 1));
    for (Coordinate k = 0; k <= n; ++k) side.nodes.push_back(side_node(s, n, k));
  }
  return t;
}

/// Exact |side|^2: 6n^2 for Blue, 3n^2 for Red and Yellow.
constexpr Coordinate squared_side_length(Side s, Coordinate n) noexcept {
  return squared_norm(side_node(s, n, n) - side_node(s, n, 0));
}

inline double side_length(Side s, Coordinate n) {
  return std::sqrt(static_cast<double>(squared_side_length(s, n)));
}

struct FlatnessReport {
  bool flat = true;
  std::optional<Point4> witness;  // first node off the plane, if any
};

/// Checks q = l(q) * up + r(q) * down for every node, i.e. that all nodes
/// lie in the 2-plane through the origin spanned by the step vectors.
inline FlatnessReport verify_flat(std::span<const Point4> nodes) {
  for (const Point4& q : nodes) {
    const Vec4 spanned = q.l * kUp + q.r * kDown;
    if (q.as_vector() != spanned) return {false, q};
  }
  return {};
}

inline FlatnessReport verify_flat(const Path4D& path) { return verify_flat(path.nodes()); }

inline FlatnessReport verify_flat(const LatticeRegion& region) {
  const auto nodes = enumerate_nodes(region);
  return verify_flat(std::span<const Point4>(nodes));
}

struct RightIsoscelesReport {
  // Three nodes around the apex B: A on the red side, C on the yellow side.
  Point4 a;
  Point4 b;
  Point4 c;
  Vec4 ab;
  Vec4 bc;
  Coordinate red_squared = 0;
  Coordinate yellow_squared = 0;
  Coordinate blue_squared = 0;
  bool right_angle = false;
  bool isosceles = false;
  bool pythagoras = false;

  bool all() const noexcept { return right_angle && isosceles && pythagoras; }
};

/// Exact checks of the triangle shape. Throws Degenerate for n < 1, where
/// the triangle collapses to a point and has no angle.
inline RightIsoscelesReport verify_right_isosceles(Coordinate n) {
  if (n < 1) throw Error(ErrorKind::Degenerate, "the triangle needs n >= 1");
  RightIsoscelesReport rep;
  rep.a = side_node(Side::Red, n, n - 1);
  rep.b = side_node(Side::Red, n, n);
  rep.c = side_node(Side::Yellow, n, 1);
  rep.ab = rep.b - rep.a;
  rep.bc = rep.c - rep.b;
  rep.red_squared = squared_side_length(Side::Red, n);
  rep.yellow_squared = squared_side_length(Side::Yellow, n);
  rep.blue_squared = squared_side_length(Side::Blue, n);
  rep.right_angle = dot(rep.ab, rep.bc) == 0;
  rep.isosceles = rep.red_squared == rep.yellow_squared;
  rep.pythagoras = rep.red_squared + rep.yellow_squared == rep.blue_squared;
  return rep;
}

/// A three-dimensional face of the double tesseract: all vertices with one
/// axis held at its minimum or maximum.
struct Cell {
  Axis fixed_axis;
  bool at_max = false;
  std::array<std::size_t, 8> vertex_ids{};  // into DoubleTesseract::vertices, ascending
  std::array<Point4, 8> vertices{};
  bool is_cube = false;
};

/// The 4D box [0, 2n] x [0, n]^3 in (i, j, l, r) order.
///
/// Vertex k has axis a at its maximum iff bit a of k is set (bit 0 = i).
/// Edges join vertices differing in one bit and are sorted. Cells come in
/// axis order, minimum before maximum.
struct DoubleTesseract {
  Coordinate n = 0;
  std::array<Point4, 16> vertices{};
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::array<Cell, 8> cells{};

  static constexpr Coordinate extent(Axis a, Coordinate n) noexcept {
    return a == Axis::I ? 2 * n : n;
  }

  const Cell& cell(Axis fixed, bool at_max) const noexcept {
    return cells[static_cast<std::size_t>(fixed) * 2 + (at_max ? 1 : 0)];
  }

  /// Edges with both ends in `c`, as indices into c.vertices.
  std::vector<std::pair<std::size_t, std::size_t>> cell_edges(const Cell& c) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [a, b] : edges) {
      std::optional<std::size_t> la, lb;
      for (std::size_t k = 0; k < 8; ++k) {
        if (c.vertex_ids[k] == a) la = k;
        if (c.vertex_ids[k] == b) lb = k;
      }
      if (la && lb) out.emplace_back(*la, *lb);
    }
    return out;
  }

  bool contains(const Point4& p) const noexcept {
    for (Axis a : kAllAxes) {
      if (p[a] < 0 || p[a] > extent(a, n)) return false;
    }
    return true;
  }
};

inline bool cell_contains(const Cell& c, const Point4& p, Coordinate n) noexcept {
  for (Axis a : kAllAxes) {
    if (p[a] < 0 || p[a] > DoubleTesseract::extent(a, n)) return false;
  }
  return p[c.fixed_axis] == (c.at_max ? DoubleTesseract::extent(c.fixed_axis, n) : 0);
}

/// Throws Degenerate for n < 1.
inline DoubleTesseract double_tesseract(Coordinate n) {
  if (n < 1) throw Error(ErrorKind::Degenerate, "the double tesseract needs n >= 1");
  DoubleTesseract t;
  t.n = n;
  for (std::size_t k = 0; k < 16; ++k) {
    Point4& v = t.vertices[k];
    v.i = (k & 1u) ? 2 * n : 0;
    v.j = (k & 2u) ? n : 0;
    v.l = (k & 4u) ? n : 0;
    v.r = (k & 8u) ? n : 0;
  }
  for (std::size_t a = 0; a < 16; ++a) {
    for (std::size_t b = a + 1; b < 16; ++b) {
      if (std::popcount(a ^ b) == 1) t.edges.emplace_back(a, b);
    }
  }
  for (Axis axis : kAllAxes) {
    const auto bit = std::size_t{1} << static_cast<unsigned>(axis);
    for (bool at_max : {false, true}) {
      Cell& c = t.cells[static_cast<std::size_t>(axis) * 2 + (at_max ? 1 : 0)];
      c.fixed_axis = axis;
      c.at_max = at_max;
      std::size_t slot = 0;
      for (std::size_t k = 0; k < 16; ++k) {
        if (((k & bit) != 0) == at_max) {
          c.vertex_ids[slot] = k;
          c.vertices[slot] = t.vertices[k];
          ++slot;
        }
      }
      // Every free extent equal: only when i is the fixed axis.
      std::optional<Coordinate> common;
      c.is_cube = true;
      for (Axis free : kAllAxes) {
        if (free == axis) continue;
        const Coordinate e = DoubleTesseract::extent(free, n);
        if (common && *common != e) c.is_cube = false;
        common = e;
      }
    }
  }
  return t;
}

enum class CubeHalf : std::uint8_t { Whole, Left, Right };

/// Where a triangle side sits in the double tesseract: the containing cell,
/// and for Red and Yellow the half-cube (split at i = n) of which the side
/// is a space diagonal.
struct SideFace {
  Side side;
  Cell cell;
  CubeHalf half = CubeHalf::Whole;
  std::array<Point4, 8> box_vertices{};  // the cell, or the half-cube
  Point4 diagonal_from;
  Point4 diagonal_to;
};

inline SideFace face_of_side(Side s, Coordinate n) {
  const DoubleTesseract t = double_tesseract(n);
  SideFace f;
  f.side = s;
  switch (s) {
    case Side::Blue: f.cell = t.cell(Axis::J, false); f.half = CubeHalf::Whole; break;
    case Side::Red: f.cell = t.cell(Axis::R, false); f.half = CubeHalf::Left; break;
    case Side::Yellow: f.cell = t.cell(Axis::L, true); f.half = CubeHalf::Right; break;
  }
  f.box_vertices = f.cell.vertices;
  if (f.half != CubeHalf::Whole) {
    // Move the far i-face of the cell to i = n.
    const Coordinate keep = f.half == CubeHalf::Left ? 0 : 2 * n;
    for (Point4& v : f.box_vertices) {
      if (v.i != keep) v.i = n;
    }
  }
  f.diagonal_from = side_node(s, n, 0);
  f.diagonal_to = side_node(s, n, n);
  return f;
}

}  // namespace dyck4d
