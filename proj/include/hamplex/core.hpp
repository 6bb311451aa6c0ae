#pragma once

// Pure d-dimensional simplicial complexes: representation, validation,
// and the basic combinators (skeleton, join, complement, vertex deletion,
// relabeling, window faces).
//
// Conventions:
//   - vertex labels are 1-based positive integers
//   - a facet of a pure d-complex has exactly d+1 vertices
//   - facets keep a sorted vertex list plus a 64-bit occupancy mask when
//     every vertex id fits in a machine word; the two views must agree

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamplex {

using VertexId = int;

enum class Errc {
  non_uniform_cardinality,
  duplicate_facet,
  vertex_outside_universe,
  empty_family,
  invalid_parameters,
  universe_not_canonical,
  unknown_vertex,
  start_out_of_range,
  overlapping_universes,
  degenerate_complex,
  too_few_vertices,
  instance_too_large,
  labeling_not_bijective,
  empty_graph,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::non_uniform_cardinality: return "NonUniformCardinality";
    case Errc::duplicate_facet: return "DuplicateFacet";
    case Errc::vertex_outside_universe: return "VertexOutsideUniverse";
    case Errc::empty_family: return "EmptyFamily";
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::universe_not_canonical: return "UniverseNotCanonical";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::start_out_of_range: return "StartOutOfRange";
    case Errc::overlapping_universes: return "OverlappingUniverses";
    case Errc::degenerate_complex: return "DegenerateComplex";
    case Errc::too_few_vertices: return "TooFewVertices";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::labeling_not_bijective: return "LabelingNotBijective";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

namespace detail {
inline std::uint64_t bit_of(VertexId v) { return std::uint64_t{1} << (v - 1); }
}  // namespace detail

/// A single facet: a set of distinct positive vertex ids, kept sorted.
class Facet {
 public:
  Facet() = default;

  explicit Facet(std::vector<VertexId> verts) : verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (verts_[i] < 1)
        throw Error(Errc::invalid_parameters, "vertex ids must be positive");
      if (i > 0 && verts_[i] == verts_[i - 1])
        throw Error(Errc::invalid_parameters, "facet vertices must be distinct");
    }
    mask_ok_ = !verts_.empty() && verts_.back() <= 64;
    if (mask_ok_)
      for (VertexId v : verts_) mask_ |= detail::bit_of(v);
    assert(views_agree());
  }

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<VertexId>& vertices() const { return verts_; }

  bool has_mask() const { return mask_ok_; }
  std::uint64_t mask() const { return mask_; }

  bool contains(VertexId v) const {
    if (mask_ok_) return v >= 1 && v <= 64 && (mask_ & detail::bit_of(v));
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  int intersection_size(const Facet& o) const {
    if (mask_ok_ && o.mask_ok_) return std::popcount(mask_ & o.mask_);
    int k = 0;
    std::size_t i = 0, j = 0;
    while (i < verts_.size() && j < o.verts_.size()) {
      if (verts_[i] == o.verts_[j]) ++k, ++i, ++j;
      else if (verts_[i] < o.verts_[j]) ++i;
      else ++j;
    }
    return k;
  }

  /// Sorted-list view and bitmask view describe the same vertex set.
  bool views_agree() const {
    if (!mask_ok_) return verts_.empty() || verts_.back() > 64;
    std::uint64_t m = 0;
    for (VertexId v : verts_) {
      if (v < 1 || v > 64) return false;
      m |= detail::bit_of(v);
    }
    return m == mask_ && std::popcount(m) == static_cast<int>(verts_.size());
  }

  bool operator==(const Facet& o) const { return verts_ == o.verts_; }
  bool operator!=(const Facet& o) const { return verts_ != o.verts_; }
  bool operator<(const Facet& o) const { return verts_ < o.verts_; }

 private:
  std::vector<VertexId> verts_;
  std::uint64_t mask_ = 0;
  bool mask_ok_ = false;
};

class PureComplex;

namespace detail {
PureComplex make_complex(int dim, std::vector<VertexId> universe, std::vector<Facet> facets,
                         std::vector<std::string> names, bool degenerate, bool explicit_universe);
}

/// A pure d-dimensional complex: every facet has exactly d+1 vertices.
///
/// Values are immutable after construction. A complex with an empty facet
/// family is "degenerate"; it can only arise from complement() or
/// delete_vertex(), and the search/connectivity operations reject it.
class PureComplex {
 public:
  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(universe_.size()); }
  const std::vector<VertexId>& universe() const { return universe_; }
  const std::vector<Facet>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  bool degenerate() const { return degenerate_; }
  bool has_explicit_universe() const { return explicit_universe_; }

  /// "" when the facet carries no name.
  std::string facet_name(int i) const {
    return names_.empty() ? std::string() : names_[static_cast<std::size_t>(i)];
  }
  bool has_names() const { return !names_.empty(); }

  bool contains_vertex(VertexId v) const {
    return std::binary_search(universe_.begin(), universe_.end(), v);
  }

  bool contains_facet(const Facet& f) const {
    return std::find(facets_.begin(), facets_.end(), f) != facets_.end();
  }

  /// Universe is exactly {1..n}.
  bool canonical_universe() const {
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if (universe_[i] != static_cast<VertexId>(i) + 1) return false;
    return !universe_.empty();
  }

  /// Number of facets containing v.
  int vertex_degree(VertexId v) const {
    int k = 0;
    for (const Facet& f : facets_)
      if (f.contains(v)) ++k;
    return k;
  }

  /// Set-level equality: dimension, universe and facet family (order and
  /// names ignored).
  bool operator==(const PureComplex& o) const {
    if (dim_ != o.dim_ || universe_ != o.universe_ || degenerate_ != o.degenerate_) return false;
    std::vector<Facet> a = facets_, b = o.facets_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
  bool operator!=(const PureComplex& o) const { return !(*this == o); }

 private:
  PureComplex() = default;
  friend PureComplex detail::make_complex(int, std::vector<VertexId>, std::vector<Facet>,
                                          std::vector<std::string>, bool, bool);

  int dim_ = 0;
  std::vector<VertexId> universe_;  // sorted
  std::vector<Facet> facets_;       // construction order, duplicate-free
  std::vector<std::string> names_;  // empty, or one entry per facet
  bool degenerate_ = false;
  bool explicit_universe_ = false;
};

namespace detail {

inline PureComplex make_complex(int dim, std::vector<VertexId> universe, std::vector<Facet> facets,
                                std::vector<std::string> names, bool degenerate,
                                bool explicit_universe) {
  assert(degenerate == facets.empty());
  assert(names.empty() || names.size() == facets.size());
  assert(std::is_sorted(universe.begin(), universe.end()));
  PureComplex c;
  c.dim_ = dim;
  c.universe_ = std::move(universe);
  c.facets_ = std::move(facets);
  c.names_ = std::move(names);
  c.degenerate_ = degenerate;
  c.explicit_universe_ = explicit_universe;
  return c;
}

inline std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Calls fn(combo) for every k-subset of pool, in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<VertexId>& pool, int k, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<VertexId> combo(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    fn(combo);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

/// Builds a validated pure complex from a facet family. Dimension is
/// inferred from the (uniform) cardinality. With an explicit universe the
/// facets must stay inside it; otherwise the universe is the facet union.
inline PureComplex from_facets(const std::vector<std::vector<VertexId>>& facet_lists,
                               std::optional<std::vector<VertexId>> universe = std::nullopt) {
  if (facet_lists.empty()) throw Error(Errc::empty_family, "facet family is empty");
  const std::size_t card = facet_lists.front().size();
  if (card < 2)
    throw Error(Errc::invalid_parameters, "facets need at least 2 vertices (dimension >= 1)");
  std::vector<Facet> facets;
  facets.reserve(facet_lists.size());
  std::vector<VertexId> verts;
  for (const auto& fl : facet_lists) {
    if (fl.size() != card)
      throw Error(Errc::non_uniform_cardinality, "facet cardinalities differ");
    Facet f(fl);
    if (std::find(facets.begin(), facets.end(), f) != facets.end())
      throw Error(Errc::duplicate_facet, "duplicate facet in input family");
    verts.insert(verts.end(), f.vertices().begin(), f.vertices().end());
    facets.push_back(std::move(f));
  }
  std::vector<VertexId> uni = detail::sorted_unique(std::move(verts));
  bool explicit_uni = false;
  if (universe) {
    std::vector<VertexId> given = detail::sorted_unique(std::move(*universe));
    for (VertexId v : given)
      if (v < 1) throw Error(Errc::invalid_parameters, "universe ids must be positive");
    if (!std::includes(given.begin(), given.end(), uni.begin(), uni.end()))
      throw Error(Errc::vertex_outside_universe, "facet vertex outside the supplied universe");
    uni = std::move(given);
    explicit_uni = true;
  }
  return detail::make_complex(static_cast<int>(card) - 1, std::move(uni), std::move(facets), {},
                              false, explicit_uni);
}

/// Attaches names to the facets of c, in facet order.
inline PureComplex with_names(const PureComplex& c, std::vector<std::string> names) {
  if (names.size() != static_cast<std::size_t>(c.facet_count()))
    throw Error(Errc::invalid_parameters, "one name per facet required");
  return detail::make_complex(c.dim(), c.universe(), c.facets(), std::move(names), c.degenerate(),
                              c.has_explicit_universe());
}

/// The d-skeleton of the (n-1)-simplex: all (d+1)-subsets of {1..n}.
inline PureComplex skeleton(int d, int n) {
  if (d < 1 || n < d + 1)
    throw Error(Errc::invalid_parameters, "skeleton requires 1 <= d and n >= d+1");
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Facet> facets;
  detail::for_each_combination(pool, d + 1,
                               [&](const std::vector<VertexId>& combo) { facets.emplace_back(combo); });
  return detail::make_complex(d, std::move(pool), std::move(facets), {}, false, true);
}

/// A single vertex as a 0-complex (join factor).
inline PureComplex point(VertexId v) {
  if (v < 1) throw Error(Errc::invalid_parameters, "vertex ids must be positive");
  return detail::make_complex(0, {v}, {Facet({v})}, {}, false, false);
}

/// Several isolated vertices as a 0-complex.
inline PureComplex isolated_points(std::vector<VertexId> vs) {
  vs = detail::sorted_unique(std::move(vs));
  if (vs.empty()) throw Error(Errc::empty_family, "no points given");
  std::vector<Facet> facets;
  for (VertexId v : vs) facets.push_back(Facet({v}));
  return detail::make_complex(0, std::move(vs), std::move(facets), {}, false, false);
}

/// The full simplex on the given vertex set, as a single-facet complex.
inline PureComplex simplex(std::vector<VertexId> vs) {
  Facet f(std::move(vs));
  if (f.size() < 1) throw Error(Errc::empty_family, "empty simplex");
  return detail::make_complex(f.size() - 1, f.vertices(), {f}, {}, false, false);
}

/// Join of two complexes on disjoint universes: facets are all unions of
/// one facet from each side; dim(a*b) = dim(a) + dim(b) + 1.
inline PureComplex join(const PureComplex& a, const PureComplex& b) {
  if (a.degenerate() || b.degenerate())
    throw Error(Errc::degenerate_complex, "join of a degenerate complex");
  for (VertexId v : a.universe())
    if (b.contains_vertex(v))
      throw Error(Errc::overlapping_universes, "join requires disjoint vertex universes");
  std::vector<VertexId> uni = a.universe();
  uni.insert(uni.end(), b.universe().begin(), b.universe().end());
  std::sort(uni.begin(), uni.end());
  std::vector<Facet> facets;
  facets.reserve(a.facets().size() * b.facets().size());
  for (const Facet& fa : a.facets())
    for (const Facet& fb : b.facets()) {
      std::vector<VertexId> u = fa.vertices();
      u.insert(u.end(), fb.vertices().begin(), fb.vertices().end());
      facets.emplace_back(std::move(u));
    }
  return detail::make_complex(a.dim() + b.dim() + 1, std::move(uni), std::move(facets), {}, false,
                              a.has_explicit_universe() || b.has_explicit_universe());
}

/// Facets of the ambient skeleton(d, n) that are absent from c. Requires a
/// canonical universe {1..n}. The result may be degenerate (empty family).
inline PureComplex complement(const PureComplex& c) {
  if (!c.canonical_universe())
    throw Error(Errc::universe_not_canonical, "complement requires universe {1..n}");
  const int d = c.dim();
  std::vector<Facet> rest;
  detail::for_each_combination(c.universe(), d + 1, [&](const std::vector<VertexId>& combo) {
    Facet f(combo);
    if (!c.contains_facet(f)) rest.push_back(std::move(f));
  });
  const bool degenerate = rest.empty();
  return detail::make_complex(d, c.universe(), std::move(rest), {}, degenerate, true);
}

/// Removes every facet containing v; the universe shrinks to the union of
/// the surviving facets. The result may be degenerate.
inline PureComplex delete_vertex(const PureComplex& c, VertexId v) {
  if (!c.contains_vertex(v)) throw Error(Errc::unknown_vertex, "vertex not in universe");
  std::vector<Facet> kept;
  std::vector<std::string> names;
  std::vector<VertexId> verts;
  for (int i = 0; i < c.facet_count(); ++i) {
    const Facet& f = c.facets()[static_cast<std::size_t>(i)];
    if (f.contains(v)) continue;
    kept.push_back(f);
    if (c.has_names()) names.push_back(c.facet_name(i));
    verts.insert(verts.end(), f.vertices().begin(), f.vertices().end());
  }
  const bool degenerate = kept.empty();
  if (degenerate) names.clear();
  return detail::make_complex(c.dim(), detail::sorted_unique(std::move(verts)), std::move(kept),
                              std::move(names), degenerate, false);
}

/// c plus one extra facet of matching cardinality (duplicate is an error).
inline PureComplex add_facet(const PureComplex& c, std::vector<VertexId> verts) {
  if (c.degenerate()) throw Error(Errc::degenerate_complex, "add_facet on degenerate complex");
  Facet f(std::move(verts));
  if (f.size() != c.dim() + 1)
    throw Error(Errc::non_uniform_cardinality, "facet cardinality does not match dimension");
  if (c.contains_facet(f)) throw Error(Errc::duplicate_facet, "facet already present");
  std::vector<Facet> facets = c.facets();
  std::vector<VertexId> uni = c.universe();
  uni.insert(uni.end(), f.vertices().begin(), f.vertices().end());
  facets.push_back(std::move(f));
  return detail::make_complex(c.dim(), detail::sorted_unique(std::move(uni)), std::move(facets), {},
                              false, c.has_explicit_universe());
}

/// Applies an injective vertex map (every universe vertex must be mapped).
inline PureComplex relabel(const PureComplex& c, const std::map<VertexId, VertexId>& map) {
  std::vector<VertexId> image;
  for (VertexId v : c.universe()) {
    auto it = map.find(v);
    if (it == map.end()) throw Error(Errc::invalid_parameters, "relabel map misses a vertex");
    if (it->second < 1) throw Error(Errc::invalid_parameters, "relabel target must be positive");
    image.push_back(it->second);
  }
  if (detail::sorted_unique(image).size() != image.size())
    throw Error(Errc::invalid_parameters, "relabel map is not injective");
  std::vector<Facet> facets;
  for (const Facet& f : c.facets()) {
    std::vector<VertexId> u;
    u.reserve(f.vertices().size());
    for (VertexId v : f.vertices()) u.push_back(map.at(v));
    facets.emplace_back(std::move(u));
  }
  return detail::make_complex(c.dim(), detail::sorted_unique(std::move(image)), std::move(facets),
                              c.has_names() ? std::vector<std::string>(c.facets().size()) : std::vector<std::string>{},
                              c.degenerate(), c.has_explicit_universe());
}

/// Shifts every vertex id by a fixed offset (disjointness helper for join).
inline PureComplex shift_labels(const PureComplex& c, int offset) {
  std::map<VertexId, VertexId> m;
  for (VertexId v : c.universe()) m[v] = v + offset;
  return relabel(c, m);
}

struct WindowSpec {
  int n = 0;
  int d = 0;
  int start = 0;
  bool cyclic = false;
};

/// The label set {start, start+1, ..., start+d}, reduced mod n into 1..n in
/// cyclic mode; no wraparound is allowed in path mode.
inline std::vector<int> window(const WindowSpec& spec) {
  if (spec.d < 1 || spec.n < spec.d + 1)
    throw Error(Errc::invalid_parameters, "window requires 1 <= d < n");
  if (spec.cyclic) {
    if (spec.start < 1 || spec.start > spec.n)
      throw Error(Errc::start_out_of_range, "cyclic start must lie in 1..n");
  } else {
    if (spec.start < 1 || spec.start > spec.n - spec.d)
      throw Error(Errc::start_out_of_range, "path start must lie in 1..n-d");
  }
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(spec.d) + 1);
  for (int k = 0; k <= spec.d; ++k) {
    int l = spec.start + k;
    if (spec.cyclic) l = (l - 1) % spec.n + 1;
    labels.push_back(l);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace hamplex
