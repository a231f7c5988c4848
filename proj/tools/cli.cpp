#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyck4d/dyck4d.hpp"

namespace dyck4d::cli {
namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

// Positional beats --file beats stdin. File and stdin input is one item
// per line; a final newline does not start an extra (empty) item.
struct InputSource {
  std::vector<std::string> positional;
  std::string file;

  std::vector<std::string> items(std::istream& in) const {
    if (!positional.empty()) return positional;
    std::string text;
    if (!file.empty()) {
      std::ifstream f(file, std::ios::binary);
      if (!f) throw UsageError("cannot open " + file);
      text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
    return lines;
  }
};

// Positional inputs are taken from the subcommand's leftovers rather than a
// CLI11 option: CLI11 would split a JSON array argument at its commas.
void add_input(CLI::App* sub, InputSource& src, const std::string& what) {
  sub->allow_extras();
  sub->footer("Positional: " + what + " (one or more); otherwise --file, otherwise stdin.");
  sub->add_option("--file", src.file, "Read inputs from a file, one per line");
}

void take_positionals(const CLI::App* sub, InputSource& src) {
  for (std::string& arg : sub->remaining()) {
    if (arg.size() > 1 && arg[0] == '-' && arg[1] == '-') throw UsageError("unknown option " + arg);
    src.positional.push_back(std::move(arg));
  }
}

void add_format(CLI::App* sub, Format& fmt) {
  sub->add_option("--format", fmt, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}));
}

std::string error_line(const Error& e) {
  std::string line = "error:" + std::string(kind_name(e.kind()));
  if (e.detail()) line += ":" + std::to_string(*e.detail());
  return line + " " + e.what();
}

Point4 parse_node_option(const std::string& text) {
  std::vector<Coordinate> v;
  std::istringstream is(text);
  for (std::string part; std::getline(is, part, ',');) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--node expects four integers i,j,l,r");
    }
  }
  if (v.size() != 4) throw UsageError("--node expects four integers i,j,l,r");
  return {v[0], v[1], v[2], v[3]};
}

std::string word_json(const DyckWord& w, const std::optional<Rank>& rank = std::nullopt) {
  Json j{{"word", render_word(w)}};
  if (rank) j["rank"] = rank->value.str();
  return j.dump();
}

// --- subcommands -----------------------------------------------------------

int cmd_validate(const InputSource& src, Format fmt, Streams io) {
  int status = kExitOk;
  for (const std::string& item : src.items(io.in)) {
    try {
      const DyckWord w = parse_word(item);
      if (fmt == Format::Json) {
        io.out << Json{{"word", render_word(w)}, {"valid", true}, {"n", w.half_length()}}.dump()
               << '\n';
      } else {
        io.out << "valid n=" << w.half_length() << '\n';
      }
    } catch (const Error& e) {
      status = kExitDomainError;
      if (fmt == Format::Json) {
        Json j{{"valid", false}, {"error", kind_name(e.kind())}};
        if (e.detail()) j["position"] = *e.detail();
        io.out << j.dump() << '\n';
      }
      io.err << error_line(e) << '\n';
    }
  }
  return status;
}

int cmd_convert(const InputSource& src, const std::string& to, Format fmt, Streams io) {
  for (const std::string& item : src.items(io.in)) {
    if (to == "path") {
      io.out << path_to_json(word_to_path(parse_word(item))).dump() << '\n';
    } else {
      if (item.empty()) continue;
      const DyckWord w = path_to_word(path_from_json_text(item));
      io.out << (fmt == Format::Json ? word_json(w) : render_word(w)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_project(const InputSource& src, const std::string& axes_text, Streams io) {
  const AxisSet axes = AxisSet::parse(axes_text);
  for (const std::string& item : src.items(io.in)) {
    io.out << projected_to_json(project(word_to_path(parse_word(item)), axes)).dump() << '\n';
  }
  return kExitOk;
}

int cmd_lift(const InputSource& src, const std::string& to, Format fmt, Streams io) {
  for (const std::string& item : src.items(io.in)) {
    if (item.empty()) continue;
    const Path4D path = lift(projected_from_json_text(item));
    if (to == "word") {
      const DyckWord w = path_to_word(path);
      io.out << (fmt == Format::Json ? word_json(w) : render_word(w)) << '\n';
    } else {
      io.out << path_to_json(path).dump() << '\n';
    }
  }
  return kExitOk;
}

int cmd_count(Coordinate n, const std::vector<std::string>& node_texts, Format fmt, Streams io) {
  if (n < 0) throw UsageError("--n must be non-negative");
  std::vector<Point4> nodes;
  for (const std::string& t : node_texts) nodes.push_back(parse_node_option(t));
  if (nodes.empty()) nodes = enumerate_nodes(LatticeRegion::triangle(n));
  const PathCounts counts(n);
  for (const Point4& node : nodes) {
    const BigInt c = counts.through(node);
    if (fmt == Format::Json) {
      io.out << Json{{"node", node_to_json(node)}, {"n", n}, {"count", c.str()}}.dump() << '\n';
    } else {
      io.out << node.i << ' ' << node.j << ' ' << node.l << ' ' << node.r << ' ' << c.str() << '\n';
    }
  }
  return kExitOk;
}

Json geometry_report(Coordinate n) {
  const TriangleGeometry tri = triangle(n);
  const RightIsoscelesReport shape = verify_right_isosceles(n);
  const DoubleTesseract tess = double_tesseract(n);
  const auto cubes = std::count_if(tess.cells.begin(), tess.cells.end(),
                                   [](const Cell& c) { return c.is_cube; });
  Json sides = Json::object();
  for (Side s : kAllSides) {
    const TriangleSide& side = tri.side(s);
    const SideFace face = face_of_side(s, n);
    Json cell = Json::array();
    for (const Point4& v : face.cell.vertices) cell.push_back(node_to_json(v));
    sides[std::string(side_name(s))] = {
        {"from", node_to_json(side.from)},
        {"to", node_to_json(side.to)},
        {"squared_length", squared_side_length(s, n)},
        {"length", side_length(s, n)},
        {"cell", {{"fixed_axis", std::string(1, axis_letter(face.cell.fixed_axis))},
                  {"at_max", face.cell.at_max},
                  {"vertices", std::move(cell)}}},
    };
  }
  const FlatnessReport flat = verify_flat(LatticeRegion::triangle(n));
  return {
      {"n", n},
      {"vertices",
       {{"origin", node_to_json(tri.vertex_origin)},
        {"end", node_to_json(tri.vertex_end)},
        {"apex", node_to_json(tri.vertex_apex)}}},
      {"sides", std::move(sides)},
      {"apex_check",
       {{"a", node_to_json(shape.a)},
        {"b", node_to_json(shape.b)},
        {"c", node_to_json(shape.c)},
        {"ab", {shape.ab.i, shape.ab.j, shape.ab.l, shape.ab.r}},
        {"bc", {shape.bc.i, shape.bc.j, shape.bc.l, shape.bc.r}},
        {"dot", dot(shape.ab, shape.bc)}}},
      {"right_angle", shape.right_angle},
      {"isosceles", shape.isosceles},
      {"pythagoras", shape.pythagoras},
      {"flat", flat.flat},
      {"tesseract",
       {{"vertices", tess.vertices.size()},
        {"edges", tess.edges.size()},
        {"cells", tess.cells.size()},
        {"cube_cells", cubes}}},
  };
}

int cmd_geometry(Coordinate n, Format fmt, Streams io) {
  const Json rep = geometry_report(n);
  if (fmt == Format::Json) {
    io.out << rep.dump() << '\n';
    return kExitOk;
  }
  io.out << "n=" << n << '\n';
  for (const char* s : {"blue", "red", "yellow"}) {
    const Json& side = rep["sides"][s];
    io.out << s << " side " << side["from"].dump() << " -> " << side["to"].dump()
           << " squared_length=" << side["squared_length"].get<Coordinate>() << '\n';
  }
  io.out << "right_angle=" << rep["right_angle"] << " isosceles=" << rep["isosceles"]
         << " pythagoras=" << rep["pythagoras"] << " flat=" << rep["flat"] << '\n';
  const Json& t = rep["tesseract"];
  io.out << "tesseract vertices=" << t["vertices"] << " edges=" << t["edges"]
         << " cells=" << t["cells"] << " cube_cells=" << t["cube_cells"] << '\n';
  return kExitOk;
}

int cmd_enumerate(std::size_t n, Format fmt, Streams io) {
  WordEnumerator gen(n);
  BigInt k = 0;
  while (auto w = gen.next()) {
    io.out << (fmt == Format::Json ? word_json(*w, Rank{k}) : render_word(*w)) << '\n';
    ++k;
  }
  return kExitOk;
}

int cmd_rank(const InputSource& src, const std::optional<std::string>& unrank_k,
             std::optional<std::size_t> n, Format fmt, Streams io) {
  if (unrank_k) {
    if (!n) throw UsageError("--unrank needs --n");
    BigInt k;
    try {
      k = BigInt(*unrank_k);
    } catch (const std::exception&) {
      throw UsageError("--unrank expects a decimal integer");
    }
    const DyckWord w = unrank(Rank{k}, *n);
    io.out << (fmt == Format::Json ? word_json(w, Rank{k}) : render_word(w)) << '\n';
    return kExitOk;
  }
  for (const std::string& item : src.items(io.in)) {
    const DyckWord w = parse_word(item);
    const Rank r = rank(w);
    io.out << (fmt == Format::Json ? word_json(w, r) : r.value.str()) << '\n';
  }
  return kExitOk;
}

int cmd_sample(std::size_t n, std::uint64_t seed, std::size_t count, Format fmt, Streams io) {
  const Ranker ranker(n);
  for (std::size_t k = 0; k < count; ++k) {
    const Rank r = sample_rank(n, seed + k);
    const DyckWord w = ranker.unrank(r);
    io.out << (fmt == Format::Json ? word_json(w, r) : render_word(w)) << '\n';
  }
  return kExitOk;
}

struct RenderArgs {
  int figure = 0;
  std::optional<Coordinate> n;
  std::string word;
  std::string axes;
  std::string cell = "i=min";
  bool triangle = false;
  std::string out_file;
  std::string edges_file;
};

Cell parse_cell(const DoubleTesseract& t, const std::string& text) {
  const std::string side = text.size() > 2 ? text.substr(2) : "";
  if (text.size() < 3 || text[1] != '=' || (side != "min" && side != "max")) {
    throw UsageError("--cell expects <axis>=min|max");
  }
  Axis axis = Axis::I;
  switch (text[0]) {
    case 'i': axis = Axis::I; break;
    case 'j': axis = Axis::J; break;
    case 'l': axis = Axis::L; break;
    case 'r': axis = Axis::R; break;
    default: throw UsageError("--cell axis must be one of i, j, l, r");
  }
  return t.cell(axis, side == "max");
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << data;
}

int cmd_render(const RenderArgs& a, Streams io) {
  std::optional<DyckWord> word;
  if (!a.word.empty()) word = parse_word(a.word);
  Coordinate n = a.n ? *a.n : (word ? static_cast<Coordinate>(word->half_length()) : -1);
  if (n < 0) throw UsageError("render needs --n or --word");
  if (word && static_cast<Coordinate>(word->half_length()) > n) {
    throw Error(ErrorKind::NotInLattice, "word is longer than the n-triangle");
  }
  std::optional<Path4D> path;
  if (word) path = word_to_path(*word);

  std::string svg;
  std::string edges;
  switch (a.figure) {
    case 1:
    case 2: {
      const AxisSet axes = !a.axes.empty() ? AxisSet::parse(a.axes)
                           : a.figure == 1 ? AxisSet{Axis::I, Axis::J}
                                           : AxisSet{Axis::L, Axis::R};
      std::optional<ProjectedPath> proj;
      if (path) proj = project(*path, axes);
      svg = render_grid_2d(axes, n, proj);
      break;
    }
    case 4:
    case 5:
    case 6:
    case 7: {
      const DoubleTesseract t = double_tesseract(n);
      const WireframeOptions opts{a.triangle, path};
      Wireframe w;
      if (a.figure == 4) {
        w = render_wireframe(t, parse_cell(t, a.cell), opts);
      } else {
        w = render_wireframe(t, a.figure == 7 ? WireframeStyle::Schlegel : WireframeStyle::Orthographic3d,
                             opts);
      }
      svg = std::move(w.svg);
      edges = std::move(w.edge_list);
      break;
    }
    default:
      throw UsageError("--figure must be one of 1, 2, 4, 5, 6, 7");
  }
  if (a.out_file.empty()) {
    io.out << svg;
  } else {
    write_file(a.out_file, svg);
  }
  if (!a.edges_file.empty()) {
    if (edges.empty()) throw UsageError("--edges applies to figures 4-7 only");
    write_file(a.edges_file, edges);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  const Streams io{in, out, err};
  CLI::App app{"Dyck paths in the 4D Catalan lattice", "dyck4d"};
  app.require_subcommand(1, 1);

  Format fmt = Format::Text;
  InputSource src;
  std::string to;
  std::string axes;
  Coordinate n = 0;
  std::size_t un = 0;
  std::optional<std::size_t> opt_n;
  std::optional<std::string> unrank_k;
  std::vector<std::string> nodes;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  RenderArgs ra;

  auto* validate = app.add_subcommand("validate", "Check parenthesis words");
  add_input(validate, src, "Word to check");
  add_format(validate, fmt);

  auto* convert = app.add_subcommand("convert", "Convert between words and 4D paths");
  add_input(convert, src, "Word, or JSON path with --to word");
  convert->add_option("--to", to, "Target form")->required()->check(CLI::IsMember({"path", "word"}));
  add_format(convert, fmt);

  auto* proj = app.add_subcommand("project", "Project a word's 4D path onto an axis set");
  add_input(proj, src, "Word");
  proj->add_option("--axes", axes, "Axis letters, e.g. lr or jlr")->required();
  add_format(proj, fmt);

  auto* lift_cmd = app.add_subcommand("lift", "Recover the 4D path from a projected path");
  add_input(lift_cmd, src, "Projected path JSON");
  lift_cmd->add_option("--to", to, "Output form")->check(CLI::IsMember({"path", "word"}));
  add_format(lift_cmd, fmt);

  auto* count_cmd = app.add_subcommand("count", "Count Dyck paths through lattice nodes");
  count_cmd->add_option("--n", n, "Half-length")->required();
  count_cmd->add_option("--node", nodes, "Node i,j,l,r (repeatable); default all nodes");
  add_format(count_cmd, fmt);

  auto* geometry = app.add_subcommand("geometry", "Report on the n-triangle and double tesseract");
  geometry->add_option("--n", n, "Half-length")->required();
  add_format(geometry, fmt);

  auto* enumerate = app.add_subcommand("enumerate", "List all words of half-length n");
  enumerate->add_option("--n", un, "Half-length")->required();
  add_format(enumerate, fmt);

  auto* rank_cmd = app.add_subcommand("rank", "Rank words, or unrank with --unrank");
  add_input(rank_cmd, src, "Word");
  rank_cmd->add_option("--unrank", unrank_k, "Rank to turn back into a word");
  rank_cmd->add_option("--n", opt_n, "Half-length for --unrank");
  add_format(rank_cmd, fmt);

  auto* sample = app.add_subcommand("sample", "Draw uniformly random words");
  sample->add_option("--n", un, "Half-length")->required();
  sample->add_option("--seed", seed, "Seed of the first draw")->required();
  sample->add_option("--count", count, "Number of draws (seeds seed, seed+1, ...)");
  add_format(sample, fmt);

  auto* render = app.add_subcommand("render", "Write a figure as SVG");
  render->add_option("--figure", ra.figure, "1, 2 (grids), 4 (cell), 5, 6 (tesseract), 7 (Schlegel)")
      ->required();
  render->add_option("--n", ra.n, "Half-length");
  render->add_option("--word", ra.word, "Path to draw");
  render->add_option("--axes", ra.axes, "Grid axes for figures 1 and 2");
  render->add_option("--cell", ra.cell, "Cell for figure 4, <axis>=min|max");
  render->add_flag("--triangle", ra.triangle, "Overlay the n-triangle");
  render->add_option("--out", ra.out_file, "SVG output file (default stdout)");
  render->add_option("--edges", ra.edges_file, "Edge-list output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error:usage " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (const CLI::App* sub : {validate, convert, proj, lift_cmd, rank_cmd}) {
      if (*sub) take_positionals(sub, src);
    }
    if (*validate) return cmd_validate(src, fmt, io);
    if (*convert) return cmd_convert(src, to, fmt, io);
    if (*proj) return cmd_project(src, axes, io);
    if (*lift_cmd) return cmd_lift(src, to, fmt, io);
    if (*count_cmd) return cmd_count(n, nodes, fmt, io);
    if (*geometry) return cmd_geometry(n, fmt, io);
    if (*enumerate) return cmd_enumerate(un, fmt, io);
    if (*rank_cmd) return cmd_rank(src, unrank_k, opt_n, fmt, io);
    if (*sample) return cmd_sample(un, seed, count, fmt, io);
    if (*render) return cmd_render(ra, io);
  } catch (const UsageError& e) {
    err << "error:usage " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << error_line(e) << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace dyck4d::cli
