#pragma once

#include <string>
#include <vector>

#include "pseudoform/catalog.hpp"
#include "pseudoform/pcb.hpp"

namespace pseudoform::catalog {

/// A constructed complex together with the input it was built from and the
/// record that rebuilds it.
struct GoldenInstance {
  std::string name;
  SimplicialComplex base;
  std::optional<ConstructionRecord> record;  // empty for plain seeds
  SimplicialComplex complex;
};

inline std::vector<GoldenInstance> golden_instances() {
  std::vector<GoldenInstance> out;

  auto [sphere, folded] = edge_folded_sphere(true);
  out.push_back({"edge_folded_sphere", sphere, folded.record, folded.complex});
  auto [sphere2, pinched] = edge_folded_sphere(false);
  out.push_back({"edge_folded_sphere_nonnormal", sphere2, pinched.record, pinched.complex});

  // A vertex folding on a subdivided suspension of RP2, taken from the builder.
  const auto built = build_pseudocompression({{3, false}, {1, false}});
  detail::ensure(built.trace.record && built.trace.record->op == "vertex_fold", "builder ends in a vertex folding");
  out.push_back({"vertex_folded_suspension", replay(built.trace.children.front()), built.trace.record, built.complex});

  const SimplicialComplex chain = stacked_chain(3, 16);
  const auto plain = admissible_bijections(chain, FoldKind::Plain, std::nullopt, 1);
  detail::ensure(!plain.empty(), "chain has a distance-3 facet pair");
  auto handle = handle_addition(chain, plain.front());
  out.push_back({"distance3_stacked_sphere", chain, std::nullopt, chain});
  out.push_back({"handle_addition", chain, handle.record, handle.complex});

  auto [klein, cone] = cone_point_surface(2, false);
  auto susp = one_vertex_suspension(klein, cone);
  out.push_back({"klein_cone_point", klein, std::nullopt, klein});
  out.push_back({"suspended_klein", klein, susp.record, susp.complex});
  return out;
}

}  // namespace pseudoform::catalog
