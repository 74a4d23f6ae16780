#include <sstream>

#include "json.hpp"
#include "slopeforge/errors.hpp"
#include "slopeforge/io.hpp"

namespace slopeforge::geometry {

namespace {

using nlohmann::json;

json coordinate(const Rational& q) { return q.get_den() == 1 ? q.get_num().get_str() : q.get_str(); }

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("exact coordinates must be strings \"p/q\"");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
    throw ParseError("bad rational '" + j.get<std::string>() + "'");
  }
  q.canonicalize();
  return q;
}

double parse_double(const json& j) {
  if (!j.is_number()) throw ParseError("numeric coordinates must be numbers");
  return j.get<double>();
}

template <typename P>
json point_json(const P& p) {
  if constexpr (std::is_same_v<P, QPoint>) {
    return json::array({coordinate(p.x), coordinate(p.y)});
  } else {
    return json::array({p.x, p.y});
  }
}

template <typename P>
P parse_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("points must be [x, y]");
  if constexpr (std::is_same_v<P, QPoint>) {
    return {parse_rational(j[0]), parse_rational(j[1])};
  } else {
    return {parse_double(j[0]), parse_double(j[1])};
  }
}

std::size_t parse_index(const std::string& key, std::size_t edges) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty()) throw ParseError("bad edge index '" + key + "'");
  if (v >= edges) throw ParseError("edge index " + key + " out of range");
  return v;
}

std::map<std::size_t, int> parse_labels(const json& j, std::size_t edges) {
  std::map<std::size_t, int> out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw ParseError("class labels must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw ParseError("class labels must be integers");
    out[parse_index(key, edges)] = value.get<int>();
  }
  return out;
}

json labels_json(const std::map<std::size_t, int>& labels) {
  json out = json::object();
  for (const auto& [e, c] : labels) out[std::to_string(e)] = c;
  return out;
}

template <typename P>
Layout<P> parse_layout(const json& doc, std::size_t edges) {
  Layout<P> layout;
  const auto& verts = doc.at("vertices");
  if (!verts.is_array()) throw ParseError("vertices must be an array");
  for (const auto& p : verts) layout.vertices.push_back(parse_point<P>(p));
  if (doc.contains("bends") && !doc["bends"].is_null()) {
    if (!doc["bends"].is_object()) throw ParseError("bends must be an object");
    for (const auto& [key, value] : doc["bends"].items()) layout.bends[parse_index(key, edges)] = parse_point<P>(value);
  }
  return layout;
}

}  // namespace

std::string drawing_to_json(const Drawing& d, int indent) {
  json doc;
  doc["mode"] = d.mode() == CoordMode::exact ? "exact" : "numeric";
  std::visit(
      [&](const auto& layout) {
        json verts = json::array();
        for (const auto& p : layout.vertices) verts.push_back(point_json(p));
        doc["vertices"] = std::move(verts);
        json bends = json::object();
        for (const auto& [e, p] : layout.bends) bends[std::to_string(e)] = point_json(p);
        doc["bends"] = std::move(bends);
      },
      d.layout);
  json edges = json::array();
  for (const auto& e : d.edges) edges.push_back(json::array({e.u, e.v}));
  doc["edges"] = std::move(edges);
  doc["slope_class"] = labels_json(d.slope_class);
  doc["length_class"] = labels_json(d.length_class);
  return doc.dump(indent);
}

Drawing drawing_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed drawing JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("drawing JSON must be an object");
    const std::string mode = doc.value("mode", std::string("numeric"));
    Drawing d;
    const auto& edges = doc.at("edges");
    if (!edges.is_array()) throw ParseError("edges must be an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw ParseError("edges must be pairs of vertex ids");
      }
      d.edges.push_back({e[0].get<graph::Vertex>(), e[1].get<graph::Vertex>()});
    }
    if (mode == "exact") {
      d.layout = parse_layout<QPoint>(doc, d.edges.size());
    } else if (mode == "numeric") {
      d.layout = parse_layout<DPoint>(doc, d.edges.size());
    } else {
      throw ParseError("mode must be \"exact\" or \"numeric\"");
    }
    for (const auto& e : d.edges) {
      if (e.u >= d.vertex_count() || e.v >= d.vertex_count()) throw ParseError("edge endpoint out of range");
    }
    d.slope_class = parse_labels(doc.value("slope_class", json()), d.edges.size());
    d.length_class = parse_labels(doc.value("length_class", json()), d.edges.size());
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed drawing JSON: ") + e.what());
  }
}

}  // namespace slopeforge::geometry
