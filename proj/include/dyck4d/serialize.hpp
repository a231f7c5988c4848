#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dyck4d/error.hpp"
#include "dyck4d/projection.hpp"
#include "dyck4d/vec4.hpp"
#include "dyck4d/word.hpp"

// JSON forms: a node is [i, j, l, r]; a path is an array of nodes; a
// projected path is {"axes": ["l", "r"], "points": [[0, 0], ...]}.
// Every *_from_json function throws Error(InvalidJson) on shape errors and
// the usual domain errors on invalid content.

namespace dyck4d {

using Json = nlohmann::json;

inline Json node_to_json(const Point4& p) { return Json::array({p.i, p.j, p.l, p.r}); }

inline Json path_to_json(const Path4D& path) {
  Json out = Json::array();
  for (const LatticeNode& node : path.nodes()) out.push_back(node_to_json(node));
  return out;
}

inline Json projected_to_json(const ProjectedPath& proj) {
  Json axes = Json::array();
  for (Axis a : proj.axes.axes()) axes.push_back(std::string(1, axis_letter(a)));
  return Json{{"axes", std::move(axes)}, {"points", proj.points}};
}

namespace detail {

inline std::vector<Coordinate> int_tuple(const Json& j, std::size_t width, std::size_t index) {
  if (!j.is_array() || (width != 0 && j.size() != width)) {
    throw Error(ErrorKind::InvalidJson,
                "element " + std::to_string(index) + " is not an integer tuple of width " +
                    std::to_string(width),
                static_cast<std::int64_t>(index));
  }
  std::vector<Coordinate> out;
  for (const Json& c : j) {
    if (!c.is_number_integer()) {
      throw Error(ErrorKind::InvalidJson,
                  "element " + std::to_string(index) + " has a non-integer coordinate",
                  static_cast<std::int64_t>(index));
    }
    out.push_back(c.get<Coordinate>());
  }
  return out;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidJson, e.what(), static_cast<std::int64_t>(e.byte));
  }
}

}  // namespace detail

inline Point4 node_from_json(const Json& j) {
  const auto t = detail::int_tuple(j, 4, 0);
  return {t[0], t[1], t[2], t[3]};
}

inline Path4D path_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidJson, "a path must be a JSON array");
  std::vector<LatticeNode> nodes;
  nodes.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto t = detail::int_tuple(j[k], 4, k);
    nodes.push_back({t[0], t[1], t[2], t[3]});
  }
  return Path4D::from_nodes(std::move(nodes));
}

inline ProjectedPath projected_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("axes") || !j.contains("points") || !j["axes"].is_array() ||
      !j["points"].is_array()) {
    throw Error(ErrorKind::InvalidJson, "expected {\"axes\": [...], \"points\": [...]}");
  }
  std::string letters;
  for (const Json& a : j["axes"]) {
    if (!a.is_string() || a.get<std::string>().size() != 1) {
      throw Error(ErrorKind::InvalidJson, "axis names are single letters i, j, l, r");
    }
    letters += a.get<std::string>();
  }
  ProjectedPath out{AxisSet::parse(letters), {}};
  // Points are listed in the file's axis order; store them canonically.
  std::vector<std::size_t> column;
  for (char c : letters) {
    for (std::size_t k = 0; k < out.axes.size(); ++k) {
      if (axis_letter(out.axes[k]) == (c | 0x20)) column.push_back(k);
    }
  }
  const auto& points = j["points"];
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto t = detail::int_tuple(points[k], out.axes.size(), k);
    std::vector<Coordinate> canonical(t.size());
    for (std::size_t c = 0; c < t.size(); ++c) canonical[column[c]] = t[c];
    out.points.push_back(std::move(canonical));
  }
  return out;
}

inline Path4D path_from_json_text(const std::string& text) {
  return path_from_json(detail::parse_json_text(text));
}

inline ProjectedPath projected_from_json_text(const std::string& text) {
  return projected_from_json(detail::parse_json_text(text));
}

}  // namespace dyck4d
