// Writes a Schlegel view of the double tesseract with the triangle and one
// sampled path drawn in, plus the exact edge list next to it.

#include <fstream>
#include <iostream>

#include "dyck4d/dyck4d.hpp"

int main(int argc, char** argv) {
  using namespace dyck4d;
  const Coordinate n = argc > 1 ? std::stoll(argv[1]) : 6;
  const std::string stem = argc > 2 ? argv[2] : "schlegel";

  const DoubleTesseract t = double_tesseract(n);
  const Path4D path = word_to_path(sample_uniform(static_cast<std::size_t>(n), 2024));
  const Wireframe w = render_wireframe(t, WireframeStyle::Schlegel, {true, path});

  std::ofstream(stem + ".svg") << w.svg;
  std::ofstream(stem + ".edges.txt") << w.edge_list;
  std::cout << "wrote " << stem << ".svg and " << stem << ".edges.txt\n";
}
