// Walks through the n-triangle: vertices, side lengths, the right angle at
// the apex, and how many paths pass through each node of the blue side.

#include <iostream>
#include <string>

#include "dyck4d/dyck4d.hpp"

using namespace dyck4d;

int main(int argc, char** argv) {
  const Coordinate n = argc > 1 ? std::stoll(argv[1]) : 6;
  const TriangleGeometry tri = triangle(n);
  std::cout << "origin " << tri.vertex_origin << "  apex " << tri.vertex_apex << "  end " << tri.vertex_end << "\n";

  for (Side s : kAllSides) {
    std::cout << side_name(s) << ": squared length " << squared_side_length(s, n)
              << ", length " << side_length(s, n) << "\n";
  }

  const RightIsoscelesReport rep = verify_right_isosceles(n);
  std::cout << "AB . BC = " << dot(rep.ab, rep.bc) << ", right-angled isosceles: "
            << (rep.all() ? "yes" : "no") << "\n";

  const PathCounts counts(n);
  std::cout << "paths through the blue side:\n";
  for (const LatticeNode& q : tri.side(Side::Blue).nodes) {
    std::cout << "  " << q << "  " << counts.through(q) << "\n";
  }

  // Every lattice path stays in the plane spanned by the two step vectors.
  const DyckWord w = sample_uniform(static_cast<std::size_t>(n), 1);
  std::cout << render_word(w) << " flat: " << (verify_flat(word_to_path(w)).flat ? "yes" : "no")
            << "\n";
}
