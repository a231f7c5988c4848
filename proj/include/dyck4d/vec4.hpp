#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>

namespace dyck4d {

using Coordinate = std::int64_t;

/// The four lattice axes, in the fixed order (i, j, l, r):
/// i = position, j = unbalance, l = opens read, r = closes read.
enum class Axis : std::uint8_t { I = 0, J = 1, L = 2, R = 3 };

inline constexpr std::array<Axis, 4> kAllAxes{Axis::I, Axis::J, Axis::L, Axis::R};

constexpr char axis_letter(Axis a) noexcept { return "ijlr"[static_cast<int>(a)]; }

/// Displacement in the (i, j, l, r) space.
struct Vec4 {
  Coordinate i = 0;
  Coordinate j = 0;
  Coordinate l = 0;
  Coordinate r = 0;

  friend constexpr bool operator==(const Vec4&, const Vec4&) = default;
  friend constexpr auto operator<=>(const Vec4&, const Vec4&) = default;

  constexpr Vec4& operator+=(const Vec4& o) noexcept {
    i += o.i; j += o.j; l += o.l; r += o.r;
    return *this;
  }
  friend constexpr Vec4 operator+(Vec4 a, const Vec4& b) noexcept { return a += b; }
  friend constexpr Vec4 operator-(const Vec4& a, const Vec4& b) noexcept {
    return {a.i - b.i, a.j - b.j, a.l - b.l, a.r - b.r};
  }
  friend constexpr Vec4 operator*(Coordinate s, const Vec4& v) noexcept {
    return {s * v.i, s * v.j, s * v.l, s * v.r};
  }
};

/// Point of the integer 4D grid. A Point4 satisfying the coordinate tie
/// (i = l + r, j = l - r, l >= r >= 0) is a node of the Catalan lattice;
/// see `is_lattice_node`.
struct Point4 {
  Coordinate i = 0;
  Coordinate j = 0;
  Coordinate l = 0;
  Coordinate r = 0;

  friend constexpr bool operator==(const Point4&, const Point4&) = default;
  friend constexpr auto operator<=>(const Point4&, const Point4&) = default;

  constexpr Coordinate operator[](Axis a) const noexcept {
    switch (a) {
      case Axis::I: return i;
      case Axis::J: return j;
      case Axis::L: return l;
      case Axis::R: return r;
    }
    return 0;
  }

  constexpr Vec4 as_vector() const noexcept { return {i, j, l, r}; }

  friend constexpr Vec4 operator-(const Point4& a, const Point4& b) noexcept {
    return {a.i - b.i, a.j - b.j, a.l - b.l, a.r - b.r};
  }
  friend constexpr Point4 operator+(const Point4& p, const Vec4& v) noexcept {
    return {p.i + v.i, p.j + v.j, p.l + v.l, p.r + v.r};
  }
};

using LatticeNode = Point4;

inline constexpr Point4 kOrigin{};

/// Step vectors: an open parenthesis moves by `kUp`, a close by `kDown`.
inline constexpr Vec4 kUp{1, 1, 1, 0};
inline constexpr Vec4 kDown{1, -1, 0, 1};

constexpr Coordinate dot(const Vec4& a, const Vec4& b) noexcept {
  return a.i * b.i + a.j * b.j + a.l * b.l + a.r * b.r;
}

constexpr Coordinate squared_norm(const Vec4& v) noexcept { return dot(v, v); }

inline std::ostream& operator<<(std::ostream& os, const Vec4& v) {
  return os << '<' << v.i << ',' << v.j << ',' << v.l << ',' << v.r << '>';
}

inline std::ostream& operator<<(std::ostream& os, const Point4& p) {
  return os << '(' << p.i << ',' << p.j << ',' << p.l << ',' << p.r << ')';
}

}  // namespace dyck4d
