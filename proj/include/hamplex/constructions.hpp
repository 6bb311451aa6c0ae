#pragma once

// Parameterized generators for the complex families studied by this
// library, plus two literal complexes (S on 6 vertices, K on 13).

#include <string>
#include <vector>

#include "core.hpp"

namespace hamplex {

/// Cone over the (d-1)-skeleton of the 2d-simplex: apex 2d+2 joined with
/// skeleton(d-1, 2d+1). n = 2d+2; every vertex has facet-degree > n/2,
/// yet the complex has no Hamiltonian path or cycle of any kind.
inline PureComplex dirac_complex(int d) {
  if (d < 2) throw Error(Errc::invalid_parameters, "dirac_complex requires d >= 2");
  return join(skeleton(d - 1, 2 * d + 1), point(2 * d + 2));
}

/// Three apices over one (d-1)-simplex: facets {1..d, d+j} for j = 1,2,3.
/// Maximal among complexes without weak Hamiltonian paths: adding any
/// missing facet of skeleton(d, d+3) creates a weak Hamiltonian cycle.
inline PureComplex triple_apex(int d) {
  if (d < 2) throw Error(Errc::invalid_parameters, "triple_apex requires d >= 2");
  std::vector<std::vector<VertexId>> facets;
  for (int j = 1; j <= 3; ++j) {
    std::vector<VertexId> f;
    for (int i = 1; i <= d; ++i) f.push_back(i);
    f.push_back(d + j);
    facets.push_back(std::move(f));
  }
  return from_facets(facets);
}

/// A self-complementary 2-complex on 6 vertices (10 of the 20 triangles)
/// with weak Hamiltonian cycles but no Hamiltonian path of any kind.
inline PureComplex complex_S() {
  return from_facets({
      {1, 3, 5}, {2, 3, 4}, {1, 2, 4}, {1, 3, 6}, {1, 2, 5},
      {2, 3, 5}, {1, 4, 5}, {1, 2, 3}, {1, 2, 6}, {1, 3, 4},
  });
}

/// A 2-strongly-connected 2-complex on 13 vertices (23 triangles) whose
/// square has no tight, loose, or weak Hamiltonian cycle.
inline PureComplex complex_K() {
  return from_facets({
      {2, 4, 12}, {1, 2, 4},  {1, 2, 12}, {1, 4, 12},  {2, 4, 13},  {2, 3, 13},
      {3, 12, 13}, {2, 3, 12}, {4, 5, 9},  {4, 9, 13},  {9, 10, 13}, {10, 12, 13},
      {10, 11, 12}, {4, 11, 12}, {4, 5, 11}, {5, 6, 9},  {6, 7, 9},   {7, 8, 10},
      {7, 8, 11}, {5, 6, 7},  {5, 7, 11}, {7, 9, 10},  {8, 10, 11},
  });
}

/// The d-complex on n = d+12 vertices whose facets are all n cyclic
/// windows H_1..H_n of the identity labeling plus four extra facets
/// F_1..F_4. Its dual graph is 2-connected but not Hamiltonian.
inline PureComplex cycle_family(int d) {
  if (d < 2) throw Error(Errc::invalid_parameters, "cycle_family requires d >= 2");
  const int n = d + 12;
  std::vector<std::vector<VertexId>> facets;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    facets.push_back(window({n, d, i, true}));
    names.push_back("H_" + std::to_string(i));
  }
  auto run = [](std::vector<VertexId>& f, int lo, int hi) {
    for (int v = lo; v <= hi; ++v) f.push_back(v);
  };
  std::vector<VertexId> f1{1, 5};
  run(f1, 7, d + 5);
  std::vector<VertexId> f2{1};
  run(f2, 7, d + 5);
  f2.push_back(d + 7);
  std::vector<VertexId> f3{2, 8};
  run(f3, 10, d + 8);
  std::vector<VertexId> f4{2};
  run(f4, 10, d + 8);
  f4.push_back(d + 10);
  int idx = 1;
  for (auto* f : {&f1, &f2, &f3, &f4}) {
    facets.push_back(*f);
    names.push_back("F_" + std::to_string(idx++));
  }
  return with_names(from_facets(facets), std::move(names));
}

}  // namespace hamplex
