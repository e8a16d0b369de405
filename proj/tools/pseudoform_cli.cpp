#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pseudoform.hpp"

using namespace pseudoform;
using io::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PSEUDOFORM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("PSEUDOFORM_SEED is not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

std::vector<Vertex> parse_list(const std::string& s, const char* flag) {
  std::vector<Vertex> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

// "a:b,c:d" -> {(a,b), (c,d)}
std::vector<std::pair<Vertex, Vertex>> parse_pairs(const std::string& s) {
  std::vector<std::pair<Vertex, Vertex>> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw UsageError("--bijection: expected pairs like 1:5,2:6, got '" + s + "'");
    try {
      out.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("--bijection: bad pair '" + tok + "'");
    }
  }
  return out;
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_file(out, j);
  }
}

json info_json(const SimplicialComplex& k) {
  json j = io::to_json(face_vectors(k));
  j["vertices"] = k.num_vertices();
  j["pseudomanifold"] = is_pseudomanifold(k);
  const bool normal = is_normal_pseudomanifold(k);
  j["normal"] = normal;
  if (k.dim() == 2 && is_closed_surface(k)) {
    j["class"] = io::to_json(surface_classify(k));
    j["graph_cone_points"] = graph_cone_points(k);
  }
  if (normal && k.dim() >= 3) {
    j["singular_vertices"] = singular_vertices(k);
    if (k.dim() == 3) j["singularities"] = io::to_json(singularity_multiset(k));
  }
  return j;
}

json golden_json(const catalog::GoldenInstance& g) {
  json j = io::to_json(g.complex, g.name);
  j["base"] = io::to_json(g.base);
  j["record"] = g.record ? io::to_json(*g.record) : json(nullptr);
  return j;
}

SimplicialComplex generate(const std::string& name, int d, int n, int b1, bool nonorientable, std::uint64_t seed,
                           json& extra) {
  if (name == "boundary_simplex") return catalog::boundary_simplex(d);
  if (name == "stacked_sphere") return catalog::stacked_sphere(d, n, seed);
  if (name == "stacked_chain") return catalog::stacked_chain(d, n);
  if (name == "cyclic") return catalog::cyclic_polytope_boundary(d, n);
  if (name == "rp2_6") return catalog::rp2_6();
  if (name == "torus_7") return catalog::torus_7();
  if (name == "suspended_rp2") return catalog::suspended_rp2();
  if (name == "cone_point_surface") {
    auto [s, cone] = catalog::cone_point_surface(b1, !nonorientable);
    extra["cone_point"] = cone;
    return s;
  }
  for (const auto& g : catalog::golden_instances()) {
    if (g.name == name) {
      extra = golden_json(g);
      return g.complex;
    }
  }
  for (const auto& e : catalog::standard_entries()) {
    if (e.name == name) return e.complex;
  }
  throw UsageError("gen: unknown name '" + name + "'");
}

std::optional<Vertex> first_vertex_witness(const SimplicialComplex& k) {
  for (const auto& w : relatively_minimal_witnesses(k)) {
    if (w.face.size() == 1) return w.face.front();
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudoform: normal pseudomanifolds, g2 constructions and rigidity"};
  app.require_subcommand(1);

  std::string file, file2, out, property, op, face_s, bijection_s, name, multiset_s, trace_out;
  std::optional<int> vertex;
  std::optional<std::uint64_t> seed;
  int ambient = -1, trials = 3, d = 3, n = 8, b1 = 2;
  bool explain_flag = false, basis_flag = false, build_flag = false, nonorientable = false;

  auto* info = app.add_subcommand("info", "face vectors, normality and singularities");
  info->add_option("file", file, "complex JSON")->required();

  auto* check = app.add_subcommand("check", "test one property");
  check->add_option("file", file, "complex JSON")->required();
  check->add_option("--property", property, "pseudomanifold|normal|stacked|relmin")
      ->required()
      ->check(CLI::IsMember({"pseudomanifold", "normal", "stacked", "relmin"}));

  auto* apply = app.add_subcommand("apply", "apply one construction");
  apply->add_option("file", file, "complex JSON")->required();
  apply->add_option("--op", op, "suspension|subdivide|handle|sum|vertex_fold|edge_fold")
      ->required()
      ->check(CLI::IsMember({"suspension", "subdivide", "handle", "sum", "vertex_fold", "edge_fold"}));
  apply->add_option("--bijection", bijection_s, "pairs like 1:5,2:6,3:7,4:8");
  apply->add_option("--face", face_s, "facet like 0,1,2,3");
  apply->add_option("--vertex", vertex, "vertex for suspension");
  apply->add_option("--other", file2, "second complex for sum");
  apply->add_option("-o,--output", out, "output complex JSON");

  auto* decompose = app.add_subcommand("decompose", "trace back to seeds");
  decompose->add_option("file", file, "complex JSON")->required();
  decompose->add_option("--vertex", vertex, "witness vertex (default: first found)");
  decompose->add_flag("--explain", explain_flag, "add a readable narrative");
  decompose->add_option("-o,--output", out, "trace JSON");

  auto* replay_cmd = app.add_subcommand("replay", "rebuild a complex from a trace");
  replay_cmd->add_option("trace", file, "trace JSON")->required();
  replay_cmd->add_option("-o,--output", out, "output complex JSON");

  auto* rig = app.add_subcommand("rigidity", "generic stress space");
  rig->add_option("file", file, "complex JSON")->required();
  rig->add_option("--ambient", ambient, "ambient dimension (default dim + 1)");
  rig->add_option("--trials", trials, "random configurations")->check(CLI::PositiveNumber);
  rig->add_option("--seed", seed, "seed");
  rig->add_flag("--stress-basis", basis_flag, "dump an exact stress basis");

  auto* gen = app.add_subcommand("gen", "write a catalog complex");
  gen->add_option("name", name, "catalog name")->required();
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--d", d, "dimension");
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--b1", b1, "first Betti number (cone_point_surface)");
  gen->add_flag("--nonorientable", nonorientable, "nonorientable surface (cone_point_surface)");
  gen->add_option("-o,--output", out, "output complex JSON");

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("file1", file, "complex JSON")->required();
  iso->add_option("file2", file2, "complex JSON")->required();

  auto* pcb = app.add_subcommand("pcb", "pseudocompression multisets");
  pcb->add_option("--multiset", multiset_s, R"(JSON array, e.g. '["RP2","RP2"]' or '[{"b1":2,"orientable":true}]')")
      ->required();
  pcb->add_flag("--build", build_flag, "construct a triangulation");
  pcb->add_option("--seed", seed, "seed");
  pcb->add_option("-o,--output", out, "output complex JSON (with --build)");
  pcb->add_option("--trace", trace_out, "output trace JSON (with --build)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*info) {
      std::cout << info_json(io::complex_from_json(io::read_file(file))).dump(2) << '\n';
    } else if (*check) {
      const auto k = io::complex_from_json(io::read_file(file));
      json j{{"property", property}};
      if (property == "pseudomanifold") {
        j["holds"] = is_pseudomanifold(k);
      } else if (property == "normal") {
        j["holds"] = is_normal_pseudomanifold(k);
      } else if (property == "stacked") {
        j["holds"] = is_stacked_sphere(k);
      } else {
        json w = json::array();
        for (const auto& x : relatively_minimal_witnesses(k)) w.push_back(io::detail::face_json(x.face));
        j["holds"] = !w.empty();
        j["witnesses"] = std::move(w);
      }
      std::cout << j.dump(2) << '\n';
    } else if (*apply) {
      const auto k = io::complex_from_json(io::read_file(file));
      const auto need = [&](bool ok, const char* what) {
        if (!ok) throw UsageError("--op " + op + " needs " + what);
      };
      json report{{"g2_before", g2(k)}};
      ConstructionResult r;
      if (op == "suspension") {
        need(vertex.has_value(), "--vertex");
        r = one_vertex_suspension(k, *vertex);
      } else if (op == "subdivide") {
        need(!face_s.empty(), "--face");
        r = facet_subdivide(k, Face(parse_list(face_s, "--face")));
      } else {
        need(!bijection_s.empty(), "--bijection");
        const auto pairs = parse_pairs(bijection_s);
        if (op == "handle") {
          r = handle_addition(k, FacetBijection::make(pairs, FoldKind::Plain));
        } else if (op == "sum") {
          need(!file2.empty(), "--other");
          r = connected_sum(k, io::complex_from_json(io::read_file(file2)), FacetBijection::make(pairs, FoldKind::Plain));
        } else if (op == "vertex_fold") {
          r = vertex_fold(k, FacetBijection::make(pairs, FoldKind::VertexFolding));
        } else {
          auto e = edge_fold(k, FacetBijection::make(pairs, FoldKind::EdgeFolding));
          report["normality"] = e.normality == NormalityFlag::Normal ? "normal" : "non-normal";
          r = {std::move(e.complex), std::move(e.record)};
        }
      }
      report["g2_after"] = g2(r.complex);
      report["record"] = io::to_json(r.record);
      json written = io::to_json(r.complex);
      written["record"] = report["record"];
      if (!out.empty()) io::write_file(out, written);
      else report["complex"] = written;
      std::cout << report.dump(2) << '\n';
    } else if (*decompose) {
      const auto k = io::complex_from_json(io::read_file(file));
      if (!vertex) vertex = k.dim() == 3 && is_normal_pseudomanifold(k) ? first_vertex_witness(k) : std::nullopt;
      if (!vertex) throw Error(ErrorCode::HypothesisNotMet, "no vertex witness of relative minimality");
      const auto t = decompose_relmin(k, *vertex);
      json j = io::to_json(t);
      if (explain_flag) {
        json tetras = json::array();
        for (const Face& tau : missing_simplices(k, 3)) tetras.push_back(io::to_json(classify_missing_tetrahedron(k, tau)));
        json wrapped{{"trace", std::move(j)}, {"witness", *vertex}, {"missing_tetrahedra", std::move(tetras)},
                     {"explanation", explain(t)}};
        j = std::move(wrapped);
      }
      emit(j, out);
      if (explain_flag) std::cerr << explain(t);
    } else if (*replay_cmd) {
      json in = io::read_file(file);
      if (in.contains("trace")) in = in["trace"];
      emit(io::to_json(replay(io::trace_from_json(in))), out);
    } else if (*rig) {
      const auto k = io::complex_from_json(io::read_file(file));
      const int amb = ambient > 0 ? ambient : k.dim() + 1;
      const auto s = default_seed(seed);
      const auto rep = stress_dimension(k, amb, {.trials = trials, .seed = s});
      json j = io::to_json(rep);
      j["rank"] = rep.matrix_rank;
      j["seed"] = s;
      j["g2"] = g2(k);
      if (basis_flag) {
        const auto sb = stress_basis(graph_of(k), amb, s);
        json edges = json::array();
        for (auto [a, b] : graph_of(k).edges) edges.push_back({a, b});
        json basis = json::array();
        for (const auto& w : sb.basis) {
          json vec = json::array();
          for (const auto& x : w) vec.push_back(x.get_str());
          basis.push_back(std::move(vec));
        }
        j["edges"] = std::move(edges);
        j["stress_basis"] = std::move(basis);
      }
      std::cout << j.dump(2) << '\n';
    } else if (*gen) {
      json extra;
      const auto k = generate(name, d, n, b1, nonorientable, default_seed(seed), extra);
      json j = extra.is_object() && extra.contains("facets") ? extra : io::to_json(k, name);
      if (extra.is_object() && extra.contains("cone_point")) j["cone_point"] = extra["cone_point"];
      emit(j, out);
    } else if (*iso) {
      const auto a = io::complex_from_json(io::read_file(file));
      const auto b = io::complex_from_json(io::read_file(file2));
      const auto m = is_isomorphic(a, b);
      json j{{"isomorphic", m.has_value()}};
      if (m) {
        json map = json::object();
        for (auto [x, y] : *m) map[std::to_string(x)] = y;
        j["map"] = std::move(map);
      }
      std::cout << j.dump(2) << '\n';
    } else if (*pcb) {
      json parsed;
      try {
        parsed = json::parse(multiset_s);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("--multiset: ") + e.what());
      }
      const auto m = io::multiset_from_json(parsed);
      json j = io::to_json(pcb_multiset_admissible(m));
      if (build_flag) {
        const auto b = build_pseudocompression(m, {.seed = default_seed(seed)});
        j["g2"] = g2(b.complex);
        j["top"] = b.top;
        j["subdivisions"] = b.subdivisions;
        j["gamma_bounds"] = {{"lower", b.gamma.lower}, {"upper", b.gamma.upper}};
        json c = io::to_json(b.complex);
        if (!out.empty()) io::write_file(out, c);
        else j["complex"] = std::move(c);
        if (!trace_out.empty()) io::write_file(trace_out, io::to_json(b.trace));
      }
      std::cout << j.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
