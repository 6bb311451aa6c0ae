#pragma once

// Complex isomorphism (exact backtracking over vertex assignments, pruned
// by per-vertex facet-degree signatures refined once through neighbor
// degrees) and self-complementarity.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "core.hpp"

namespace hamplex {

struct VertexBijection {
  std::map<VertexId, VertexId> map;

  VertexId apply(VertexId v) const {
    auto it = map.find(v);
    if (it == map.end()) throw Error(Errc::unknown_vertex, "vertex not in bijection domain");
    return it->second;
  }
};

/// Literal witness check: the map is a bijection universe(a) -> universe(b)
/// and pushes the facet family of a exactly onto the facet family of b.
inline bool verify_bijection(const PureComplex& a, const PureComplex& b,
                             const VertexBijection& bij) {
  if (bij.map.size() != a.universe().size()) return false;
  std::vector<VertexId> image;
  for (VertexId v : a.universe()) {
    auto it = bij.map.find(v);
    if (it == bij.map.end()) return false;
    image.push_back(it->second);
  }
  std::sort(image.begin(), image.end());
  if (image != b.universe()) return false;
  std::set<std::vector<VertexId>> mapped;
  for (const Facet& f : a.facets()) {
    std::vector<VertexId> verts;
    for (VertexId v : f.vertices()) verts.push_back(bij.map.at(v));
    std::sort(verts.begin(), verts.end());
    mapped.insert(std::move(verts));
  }
  std::set<std::vector<VertexId>> target;
  for (const Facet& f : b.facets()) target.insert(f.vertices());
  return mapped == target;
}

namespace detail {

// (facet degree, sorted degrees of co-facet neighbors) per vertex
inline std::vector<std::pair<int, std::vector<int>>> vertex_signatures(const PureComplex& c) {
  std::vector<std::pair<int, std::vector<int>>> sig;
  for (VertexId v : c.universe()) {
    std::set<VertexId> nbrs;
    for (const Facet& f : c.facets())
      if (f.contains(v))
        for (VertexId u : f.vertices())
          if (u != v) nbrs.insert(u);
    std::vector<int> nbr_degs;
    for (VertexId u : nbrs) nbr_degs.push_back(c.vertex_degree(u));
    std::sort(nbr_degs.begin(), nbr_degs.end());
    sig.emplace_back(c.vertex_degree(v), std::move(nbr_degs));
  }
  return sig;
}

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) /
                                    static_cast<unsigned long long>(i);
  return r;
}

}  // namespace detail

/// Witness bijection between a and b, or definitive absence.
inline std::optional<VertexBijection> are_isomorphic(const PureComplex& a, const PureComplex& b) {
  if (a.degenerate() || b.degenerate())
    throw Error(Errc::degenerate_complex, "isomorphism of degenerate complex");
  if (a.dim() != b.dim() || a.vertex_count() != b.vertex_count() ||
      a.facet_count() != b.facet_count())
    return std::nullopt;
  const int n = a.vertex_count();
  const auto sig_a = detail::vertex_signatures(a);
  const auto sig_b = detail::vertex_signatures(b);
  {
    auto ms_a = sig_a, ms_b = sig_b;
    std::sort(ms_a.begin(), ms_a.end());
    std::sort(ms_b.begin(), ms_b.end());
    if (ms_a != ms_b) return std::nullopt;
  }
  // assign a-vertices in order of ascending candidate-set size (ties by id)
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sig_a[static_cast<std::size_t>(i)] == sig_b[static_cast<std::size_t>(j)])
        cand[static_cast<std::size_t>(i)].push_back(j);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return cand[static_cast<std::size_t>(x)].size() < cand[static_cast<std::size_t>(y)].size();
  });

  std::vector<int> img(static_cast<std::size_t>(n), -1);   // a-index -> b-index
  std::vector<char> used(static_cast<std::size_t>(n), 0);  // b-index
  // facets of b as sorted index lists, for mapped-facet lookups
  std::set<std::vector<int>> b_facets;
  auto index_in = [](const std::vector<VertexId>& uni, VertexId v) {
    return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), v) - uni.begin());
  };
  for (const Facet& f : b.facets()) {
    std::vector<int> idx;
    for (VertexId v : f.vertices()) idx.push_back(index_in(b.universe(), v));
    std::sort(idx.begin(), idx.end());
    b_facets.insert(std::move(idx));
  }
  std::vector<std::vector<int>> a_facets_idx;
  for (const Facet& f : a.facets()) {
    std::vector<int> idx;
    for (VertexId v : f.vertices()) idx.push_back(index_in(a.universe(), v));
    a_facets_idx.push_back(std::move(idx));
  }

  std::function<bool(int)> assign = [&](int step) -> bool {
    if (step == n) return true;
    const int u = order[static_cast<std::size_t>(step)];
    for (int w : cand[static_cast<std::size_t>(u)]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      img[static_cast<std::size_t>(u)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      bool ok = true;
      for (const auto& fa : a_facets_idx) {
        bool complete = true;
        for (int x : fa)
          if (img[static_cast<std::size_t>(x)] < 0) {
            complete = false;
            break;
          }
        if (!complete) continue;
        std::vector<int> mapped;
        for (int x : fa) mapped.push_back(img[static_cast<std::size_t>(x)]);
        std::sort(mapped.begin(), mapped.end());
        if (!b_facets.count(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && assign(step + 1)) return true;
      img[static_cast<std::size_t>(u)] = -1;
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  VertexBijection bij;
  for (int i = 0; i < n; ++i)
    bij.map[a.universe()[static_cast<std::size_t>(i)]] =
        b.universe()[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])];
  return bij;
}

/// True iff c is isomorphic to its complement inside skeleton(d, n).
/// Requires the canonical universe {1..n}; a facet-count parity mismatch
/// short-circuits to false.
inline bool is_self_complementary(const PureComplex& c) {
  if (!c.canonical_universe())
    throw Error(Errc::universe_not_canonical, "self-complementarity requires universe {1..n}");
  const unsigned long long total = detail::binomial(c.vertex_count(), c.dim() + 1);
  if (2ull * static_cast<unsigned long long>(c.facet_count()) != total) return false;
  return are_isomorphic(c, complement(c)).has_value();
}

}  // namespace hamplex
