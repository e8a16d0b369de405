#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pseudoform/decompose.hpp"
#include "pseudoform/pcb.hpp"
#include "pseudoform/rigidity.hpp"

namespace pseudoform::io {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

inline json face_json(const Face& f) { return json(std::vector<Vertex>(f.begin(), f.end())); }

inline Face face_from(const json& j) {
  if (!j.is_array()) bad("a face is an array of vertex labels");
  std::vector<Vertex> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("vertex labels are integers");
    v.push_back(x.get<Vertex>());
  }
  return Face(v);
}

}  // namespace detail

inline json to_json(const SimplicialComplex& k, const std::string& name = {}) {
  json j;
  if (!name.empty()) j["name"] = name;
  j["dim"] = k.dim();
  json facets = json::array();
  for (const Face& f : k.facets()) facets.push_back(detail::face_json(f));
  j["facets"] = std::move(facets);
  return j;
}

inline SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array()) detail::bad("complex needs a \"facets\" array");
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) detail::bad("a facet is an array of vertex labels");
    std::vector<Vertex> v;
    for (const auto& x : f) {
      if (!x.is_number_integer()) detail::bad("vertex labels are integers");
      v.push_back(x.get<Vertex>());
    }
    facets.push_back(std::move(v));
  }
  SimplicialComplex k = SimplicialComplex::from_facets(facets);
  if (j.contains("dim") && detail::get<int>(j, "dim") != k.dim()) {
    detail::bad("declared dim " + j["dim"].dump() + " but facets have dim " + std::to_string(k.dim()));
  }
  return k;
}

inline json to_json(const ConstructionRecord& r) {
  json j{{"op", r.op}, {"inputs", r.inputs}};
  json b = json::array();
  for (auto [x, y] : r.bijection) b.push_back({x, y});
  j["bijection"] = std::move(b);
  j["face"] = r.face ? detail::face_json(*r.face) : json(nullptr);
  j["vertex"] = r.vertex ? json(*r.vertex) : json(nullptr);
  j["fresh"] = r.fresh;
  j["retired"] = r.retired;
  return j;
}

inline ConstructionRecord record_from_json(const json& j) {
  ConstructionRecord r;
  r.op = detail::get<std::string>(j, "op");
  if (j.contains("inputs")) r.inputs = detail::get<std::vector<std::string>>(j, "inputs");
  if (j.contains("bijection")) {
    for (const auto& p : j["bijection"]) {
      if (!p.is_array() || p.size() != 2) detail::bad("bijection entries are [from, to] pairs");
      r.bijection.emplace_back(p[0].get<Vertex>(), p[1].get<Vertex>());
    }
  }
  if (j.contains("face") && !j["face"].is_null()) r.face = detail::face_from(j["face"]);
  if (j.contains("vertex") && !j["vertex"].is_null()) r.vertex = detail::get<Vertex>(j, "vertex");
  if (j.contains("fresh")) r.fresh = detail::get<std::map<std::string, Vertex>>(j, "fresh");
  if (j.contains("retired")) r.retired = detail::get<std::vector<Vertex>>(j, "retired");
  return r;
}

inline json to_json(const TraceNode& t) {
  if (t.is_leaf()) {
    json j = to_json(t.leaf);
    j["seed"] = t.seed;
    return j;
  }
  json kids = json::array();
  for (const auto& c : t.children) kids.push_back(to_json(c));
  return json{{"record", to_json(*t.record)}, {"children", std::move(kids)}};
}

inline TraceNode trace_from_json(const json& j) {
  if (!j.is_object()) detail::bad("trace node must be an object");
  if (j.contains("record")) {
    std::vector<TraceNode> kids;
    if (!j.contains("children") || !j["children"].is_array()) detail::bad("trace node needs \"children\"");
    for (const auto& c : j["children"]) kids.push_back(trace_from_json(c));
    return TraceNode::make_node(record_from_json(j["record"]), std::move(kids));
  }
  return TraceNode::make_leaf(j.value("seed", std::string("leaf")), complex_from_json(j));
}

inline json to_json(const FaceVectorReport& r) {
  return json{{"dim", r.dim}, {"f", r.f}, {"h", r.h}, {"g", r.g}, {"g2", r.g2}, {"euler", r.euler}};
}

inline json to_json(const SurfaceClass& c) {
  return json{{"b1", c.b1}, {"orientable", c.orientable}, {"name", to_string(c)}};
}

inline SurfaceClass surface_class_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "RP2") return {1, false};
    if (s == "T2" || s == "torus") return {2, true};
    if (s == "K2" || s == "klein") return {2, false};
    detail::bad("unknown surface name " + s);
  }
  return {detail::get<int>(j, "b1"), detail::get<bool>(j, "orientable")};
}

inline json to_json(const SingularityMultiset& m) {
  json a = json::array();
  for (const auto& c : m) a.push_back(to_json(c));
  return a;
}

inline SingularityMultiset multiset_from_json(const json& j) {
  if (!j.is_array()) detail::bad("a multiset is an array of surface classes");
  SingularityMultiset m;
  for (const auto& x : j) m.push_back(surface_class_from_json(x));
  return m;
}

inline json to_json(const StressSpaceReport& r) {
  return json{{"ambient_d", r.ambient_d},       {"edge_count", r.edge_count},
              {"matrix_rank", r.matrix_rank},   {"stress_dim", r.stress_dim},
              {"trials", r.trials},             {"is_generically_rigid", r.is_generically_rigid},
              {"trial_ranks", r.trial_ranks},   {"trials_agree", r.trials_agree()}};
}

inline json to_json(const PCBMultisetVerdict& v) {
  return json{{"admissible", v.admissible},
              {"failed_condition", v.failed_condition ? json(*v.failed_condition) : json(nullptr)}};
}

inline json to_json(const MissingTetraClassification& c) {
  json sides = json::array();
  for (const auto& s : c.sides) {
    sides.push_back({{"vertex", s.vertex}, {"components", s.side.component_count}, {"two_sided", s.side.two_sided}});
  }
  return json{{"tetra", detail::face_json(c.tetra)},
              {"verdict", std::string(to_string(c.verdict))},
              {"apex", c.apex ? json(*c.apex) : json(nullptr)},
              {"edge", c.edge ? detail::face_json(*c.edge) : json(nullptr)},
              {"sides", std::move(sides)}};
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    detail::bad(path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) detail::bad("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace pseudoform::io
