#pragma once

// Vertex-preserving bistellar flips and the square of a complex.
//
// A move is a pair (A, B): A a face of c with 1 <= |A| <= d, B a vertex
// set with |A| + |B| = d + 2 drawn from existing vertices, B not a face
// of c. Strict mode demands link(A) = boundary(B) exactly (the textbook
// flip); relaxed mode only demands that every facet of A * boundary(B) is
// present. Strict implies relaxed. Relaxed is the mode under which the
// d=1 case reduces to the classical graph square, hence the default.
// Either way the move would introduce the facets (A \ {a}) u B, and the
// square of c adjoins every facet any admissible move introduces.

#include <set>
#include <vector>

#include "core.hpp"

namespace hamplex {

enum class FlipMode { strict, relaxed };

inline const char* flip_mode_name(FlipMode m) {
  return m == FlipMode::strict ? "strict" : "relaxed";
}
inline FlipMode flip_mode_from_name(const std::string& s) {
  if (s == "strict") return FlipMode::strict;
  if (s == "relaxed") return FlipMode::relaxed;
  throw Error(Errc::invalid_parameters, "unknown flip mode '" + s + "'");
}

struct FlipMove {
  Facet a_face;
  Facet b_simplex;
  std::vector<Facet> introduced;  // (A \ {a}) u B for each a in A, sorted
  FlipMode mode = FlipMode::relaxed;
};

namespace detail {

inline bool is_face_of(const PureComplex& c, const std::vector<VertexId>& verts) {
  for (const Facet& f : c.facets()) {
    bool inside = true;
    for (VertexId v : verts)
      if (!f.contains(v)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

}  // namespace detail

/// All admissible moves of the given mode, keyed by (A, B) and emitted in
/// lexicographic (A, B) order — independent of facet input order.
inline std::vector<FlipMove> enumerate_flips(const PureComplex& c, FlipMode mode) {
  if (c.degenerate()) throw Error(Errc::degenerate_complex, "flips of degenerate complex");
  const int d = c.dim();
  // candidate faces A of cardinality 1..d, in lexicographic order
  std::set<std::vector<VertexId>> faces;
  for (const Facet& f : c.facets())
    for (int k = 1; k <= d; ++k)
      detail::for_each_combination(f.vertices(), k,
                                   [&](const std::vector<VertexId>& a) { faces.insert(a); });

  std::vector<FlipMove> moves;
  for (const auto& a : faces) {
    const int b_size = d + 2 - static_cast<int>(a.size());
    // link of A at facet level: F \ A over facets F containing A
    std::set<std::vector<VertexId>> link;
    std::vector<VertexId> link_union;
    for (const Facet& f : c.facets()) {
      bool has_a = true;
      for (VertexId v : a)
        if (!f.contains(v)) {
          has_a = false;
          break;
        }
      if (!has_a) continue;
      std::vector<VertexId> rest;
      for (VertexId v : f.vertices())
        if (std::find(a.begin(), a.end(), v) == a.end()) rest.push_back(v);
      link.insert(rest);
      link_union.insert(link_union.end(), rest.begin(), rest.end());
    }
    if (link.empty()) continue;
    link_union = detail::sorted_unique(std::move(link_union));

    auto all_boundary_in_link = [&](const std::vector<VertexId>& b) {
      bool ok = true;
      detail::for_each_combination(b, b_size - 1, [&](const std::vector<VertexId>& sub) {
        if (ok && !link.count(sub)) ok = false;
      });
      return ok;
    };
    auto emit = [&](const std::vector<VertexId>& b) {
      if (detail::is_face_of(c, b)) return;  // B already a face: inadmissible
      FlipMove mv;
      mv.a_face = Facet(a);
      mv.b_simplex = Facet(b);
      mv.mode = mode;
      for (VertexId drop : a) {
        std::vector<VertexId> facet_verts = b;
        for (VertexId v : a)
          if (v != drop) facet_verts.push_back(v);
        mv.introduced.emplace_back(std::move(facet_verts));
      }
      std::sort(mv.introduced.begin(), mv.introduced.end());
      moves.push_back(std::move(mv));
    };

    if (mode == FlipMode::strict) {
      // link(A) must be exactly the boundary of one b_size-simplex
      if (static_cast<int>(link.size()) != b_size) continue;
      if (static_cast<int>(link_union.size()) != b_size) continue;
      if (all_boundary_in_link(link_union)) emit(link_union);
    } else {
      detail::for_each_combination(link_union, b_size, [&](const std::vector<VertexId>& b) {
        if (all_boundary_in_link(b)) emit(b);
      });
    }
  }
  return moves;
}

/// c plus every facet an admissible move would introduce (deduplicated);
/// dimension and vertex universe unchanged.
inline PureComplex square(const PureComplex& c, FlipMode mode = FlipMode::relaxed) {
  if (c.degenerate()) throw Error(Errc::degenerate_complex, "square of degenerate complex");
  std::set<std::vector<VertexId>> seen;
  std::vector<std::vector<VertexId>> facet_lists;
  for (const Facet& f : c.facets()) {
    seen.insert(f.vertices());
    facet_lists.push_back(f.vertices());
  }
  std::set<std::vector<VertexId>> added;
  for (const FlipMove& mv : enumerate_flips(c, mode))
    for (const Facet& f : mv.introduced)
      if (!seen.count(f.vertices())) added.insert(f.vertices());
  for (const auto& fv : added) facet_lists.push_back(fv);
  return from_facets(facet_lists, c.universe());
}

}  // namespace hamplex
