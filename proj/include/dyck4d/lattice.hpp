#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyck4d/error.hpp"
#include "dyck4d/vec4.hpp"

namespace dyck4d {

using BigInt = boost::multiprecision::cpp_int;

/// Either the whole Catalan lattice or the Dyck n-triangle (l <= n).
struct LatticeRegion {
  std::optional<Coordinate> bound;

  static LatticeRegion infinite() { return {}; }
  static LatticeRegion triangle(Coordinate n) { return {n}; }

  bool bounded() const noexcept { return bound.has_value(); }
};

constexpr bool is_lattice_node(Coordinate i, Coordinate j, Coordinate l, Coordinate r,
                               const LatticeRegion& region = {}) noexcept {
  if (i != l + r || j != l - r) return false;
  if (r < 0 || l < r) return false;
  if (region.bound && l > *region.bound) return false;
  return true;
}

constexpr bool is_lattice_node(const Point4& p, const LatticeRegion& region = {}) noexcept {
  return is_lattice_node(p.i, p.j, p.l, p.r, region);
}

struct AxisValue {
  Axis axis;
  Coordinate value;
};

namespace detail {

// Solves the tie for the two unknown coordinates given axes a < b. Pure
// arithmetic: the result may have negative coordinates. Returns nullopt
// only for an (i, j) pair of odd sum.
constexpr std::optional<Point4> solve_tie(Axis axis_a, Coordinate a, Axis axis_b,
                                          Coordinate b) noexcept {
  Coordinate l = 0;
  Coordinate r = 0;
  switch (static_cast<int>(axis_a) * 4 + static_cast<int>(axis_b)) {
    case 0 * 4 + 1:  // (i, j)
      if ((a + b) % 2 != 0) return std::nullopt;
      l = (a + b) / 2;
      r = (a - b) / 2;
      break;
    case 0 * 4 + 2: l = b; r = a - b; break;  // (i, l)
    case 0 * 4 + 3: l = a - b; r = b; break;  // (i, r)
    case 1 * 4 + 2: l = b; r = b - a; break;  // (j, l)
    case 1 * 4 + 3: l = a + b; r = b; break;  // (j, r)
    case 2 * 4 + 3: l = a; r = b; break;      // (l, r)
    default: break;
  }
  return Point4{l + r, l - r, l, r};
}

}  // namespace detail

/// Any two coordinates determine the other two through the tie
/// i = l + r, j = l - r.
///
/// Throws WrongArity when both values name the same axis, ParityViolation
/// for an (i, j) pair of odd sum, NotInLattice when the completed point has
/// a negative coordinate or l < r.
inline LatticeNode complete_node(AxisValue first, AxisValue second) {
  if (first.axis == second.axis) {
    throw Error(ErrorKind::WrongArity, "complete_node needs two distinct axes");
  }
  if (first.axis > second.axis) std::swap(first, second);
  const auto node = detail::solve_tie(first.axis, first.value, second.axis, second.value);
  if (!node) {
    throw Error(ErrorKind::ParityViolation,
                "i + j must be even, got i=" + std::to_string(first.value) +
                    " j=" + std::to_string(second.value));
  }
  if (!is_lattice_node(*node)) {
    throw Error(ErrorKind::NotInLattice, "completion leaves the lattice");
  }
  return *node;
}

/// All nodes of the Dyck n-triangle, sorted by (i, j). There are
/// (n + 1)(n + 2) / 2 of them.
inline std::vector<LatticeNode> enumerate_nodes(const LatticeRegion& region) {
  if (!region.bounded()) {
    throw Error(ErrorKind::UnboundedRegion, "cannot enumerate the infinite lattice");
  }
  const Coordinate n = *region.bound;
  std::vector<LatticeNode> out;
  if (n < 0) return out;
  out.reserve(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  for (Coordinate i = 0; i <= 2 * n; ++i) {
    const Coordinate top = std::min(i, 2 * n - i);
    for (Coordinate j = i % 2; j <= top; j += 2) {
      const Coordinate l = (i + j) / 2;
      out.push_back({i, j, l, l - j});
    }
  }
  return out;
}

/// Counts of Dyck paths of half-length n through each node of the
/// n-triangle, as a product of prefix and suffix counts. The two tables
/// are filled level by level; both keep j >= 0.
class PathCounts {
 public:
  explicit PathCounts(Coordinate n) : n_(n) {
    if (n < 0) throw Error(ErrorKind::NotInLattice, "half-length must be non-negative");
    const auto levels = static_cast<std::size_t>(2 * n + 1);
    const auto width = static_cast<std::size_t>(n + 2);
    prefix_.assign(levels, std::vector<BigInt>(width));
    suffix_.assign(levels, std::vector<BigInt>(width));

    prefix_[0][0] = 1;
    for (std::size_t i = 1; i < levels; ++i) {
      for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
        BigInt ways = prefix_[i - 1][j + 1];
        if (j > 0) ways += prefix_[i - 1][j - 1];
        prefix_[i][j] = std::move(ways);
      }
    }

    suffix_[levels - 1][0] = 1;
    for (std::size_t i = levels - 1; i-- > 0;) {
      for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
        BigInt ways = suffix_[i + 1][j + 1];
        if (j > 0) ways += suffix_[i + 1][j - 1];
        suffix_[i][j] = std::move(ways);
      }
    }
  }

  Coordinate half_length() const noexcept { return n_; }

  /// Throws NotInLattice for nodes outside the n-triangle.
  BigInt through(const LatticeNode& node) const {
    if (!is_lattice_node(node, LatticeRegion::triangle(n_))) {
      throw Error(ErrorKind::NotInLattice, "node is outside the Dyck n-triangle");
    }
    const auto i = static_cast<std::size_t>(node.i);
    const auto j = static_cast<std::size_t>(node.j);
    return prefix_[i][j] * suffix_[i][j];
  }

 private:
  Coordinate n_;
  // Indexed [i][j]; column n + 1 stays zero and absorbs the j + 1 lookups.
  std::vector<std::vector<BigInt>> prefix_;
  std::vector<std::vector<BigInt>> suffix_;
};

/// Number of Dyck words of half-length n whose path visits `node`.
inline BigInt count_paths_through(const LatticeNode& node, Coordinate n) {
  if (n < 0 || !is_lattice_node(node, LatticeRegion::triangle(n))) {
    throw Error(ErrorKind::NotInLattice, "node is outside the Dyck n-triangle");
  }
  return PathCounts(n).through(node);
}

}  // namespace dyck4d
