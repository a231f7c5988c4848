#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "dyck4d/error.hpp"
#include "dyck4d/lattice.hpp"
#include "dyck4d/vec4.hpp"
#include "dyck4d/word.hpp"

namespace dyck4d {

/// A set of 2, 3 or 4 distinct axes, always held in canonical order
/// i < j < l < r. Each axis set names one coordinate grid ("modification")
/// in which Dyck paths can be drawn.
class AxisSet {
 public:
  AxisSet(std::initializer_list<Axis> axes) : AxisSet(std::vector<Axis>(axes)) {}

  explicit AxisSet(const std::vector<Axis>& axes) {
    for (Axis a : axes) {
      const auto bit = static_cast<std::uint8_t>(1u << static_cast<unsigned>(a));
      if (mask_ & bit) throw Error(ErrorKind::WrongArity, "repeated axis in axis set");
      mask_ |= bit;
    }
    for (Axis a : kAllAxes) {
      if (contains(a)) axes_.push_back(a);
    }
    if (axes_.size() < 2) {
      throw Error(ErrorKind::WrongArity, "an axis set needs at least two axes");
    }
  }

  /// Accepts letters from "ijlr", optionally separated by commas or spaces,
  /// e.g. "lr", "l,r", "jlr". Case-insensitive.
  static AxisSet parse(std::string_view text) {
    std::vector<Axis> axes;
    for (char c : text) {
      switch (c) {
        case 'i': case 'I': axes.push_back(Axis::I); break;
        case 'j': case 'J': axes.push_back(Axis::J); break;
        case 'l': case 'L': axes.push_back(Axis::L); break;
        case 'r': case 'R': axes.push_back(Axis::R); break;
        case ',': case ' ': break;
        default:
          throw Error(ErrorKind::WrongArity, "unknown axis '" + std::string(1, c) + "'");
      }
    }
    return AxisSet(axes);
  }

  const std::vector<Axis>& axes() const noexcept { return axes_; }
  std::size_t size() const noexcept { return axes_.size(); }
  Axis operator[](std::size_t k) const noexcept { return axes_[k]; }
  bool contains(Axis a) const noexcept {
    return (mask_ >> static_cast<unsigned>(a)) & 1u;
  }

  std::string name() const {
    std::string s;
    for (Axis a : axes_) s.push_back(axis_letter(a));
    return s;
  }

  friend bool operator==(const AxisSet& a, const AxisSet& b) noexcept {
    return a.mask_ == b.mask_;
  }

 private:
  std::uint8_t mask_ = 0;
  std::vector<Axis> axes_;
};

/// The 11 grids: six 2-axis, four 3-axis, and the full 4-axis set, each
/// group in lexicographic order.
inline std::vector<AxisSet> all_modifications() {
  using enum Axis;
  return {
      {I, J}, {I, L}, {I, R}, {J, L}, {J, R}, {L, R},
      {I, J, L}, {I, J, R}, {I, L, R}, {J, L, R},
      {I, J, L, R},
  };
}

/// Image of a path in the grid spanned by `axes`. Each point has one
/// coordinate per axis, in canonical axis order.
struct ProjectedPath {
  AxisSet axes;
  std::vector<std::vector<Coordinate>> points;

  friend bool operator==(const ProjectedPath&, const ProjectedPath&) = default;
};

inline std::vector<Coordinate> project_point(const Point4& p, const AxisSet& axes) {
  std::vector<Coordinate> out;
  out.reserve(axes.size());
  for (Axis a : axes.axes()) out.push_back(p[a]);
  return out;
}

inline ProjectedPath project(const Path4D& path, const AxisSet& axes) {
  ProjectedPath out{axes, {}};
  out.points.reserve(path.size());
  for (const LatticeNode& node : path.nodes()) out.points.push_back(project_point(node, axes));
  return out;
}

/// Recovers the 4D path from any of its projections.
///
/// Each point is completed from its first two axes; any further axes are
/// checked against the completion. Errors:
/// - InconsistentProjection(k): point k has the wrong width, an (i, j)
///   pair of odd sum, or a redundant coordinate that disagrees with the tie.
/// - MalformedPath(k): point 0 is not the origin, or point k is not one
///   up/down step from point k - 1 while staying at j >= 0.
inline Path4D lift(const ProjectedPath& proj) {
  const AxisSet& axes = proj.axes;
  std::vector<LatticeNode> nodes;
  nodes.reserve(proj.points.size());
  for (std::size_t k = 0; k < proj.points.size(); ++k) {
    const auto& pt = proj.points[k];
    const auto index = static_cast<std::int64_t>(k);
    if (pt.size() != axes.size()) {
      throw Error(ErrorKind::InconsistentProjection,
                  "point " + std::to_string(k) + " has the wrong number of coordinates", index);
    }
    // Membership is enforced by the step checks in Path4D so that a
    // premature close reads as a bad path rather than a bad projection.
    const auto solved = detail::solve_tie(axes[0], pt[0], axes[1], pt[1]);
    if (!solved) {
      throw Error(ErrorKind::InconsistentProjection,
                  "point " + std::to_string(k) + " has odd i + j", index);
    }
    const LatticeNode& node = *solved;
    for (std::size_t c = 2; c < axes.size(); ++c) {
      if (node[axes[c]] != pt[c]) {
        throw Error(ErrorKind::InconsistentProjection,
                    "point " + std::to_string(k) + " contradicts the coordinate tie on axis " +
                        std::string(1, axis_letter(axes[c])),
                    index);
      }
    }
    nodes.push_back(node);
  }
  return Path4D::from_nodes(std::move(nodes));
}

}  // namespace dyck4d
