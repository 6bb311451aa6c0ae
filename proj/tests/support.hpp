#pragma once

// Shared test support: deterministic random instances and independent
// oracles (permutation-DFS graph Hamiltonicity, distance-2 graph squares,
// literal flip enumeration, exhaustive isomorphism). The oracles recompute
// everything from first principles with plain std containers and share no
// pruning, ordering, or bitmask logic with the library under test.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamplex/constructions.hpp"
#include "hamplex/core.hpp"
#include "hamplex/dual.hpp"
#include "hamplex/flips.hpp"
#include "hamplex/hamiltonian.hpp"
#include "hamplex/iso.hpp"

namespace testsupport {

using hamplex::PureComplex;
using hamplex::VertexId;

inline std::set<std::vector<VertexId>> facet_set(const PureComplex& c) {
  std::set<std::vector<VertexId>> out;
  for (const hamplex::Facet& f : c.facets()) out.insert(f.vertices());
  return out;
}

inline std::string facet_str(const std::vector<VertexId>& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "]";
  return os.str();
}

/// All k-subsets of pool, in lexicographic order (own recursion).
inline std::vector<std::vector<VertexId>> k_subsets(const std::vector<VertexId>& pool, int k) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  if (k >= 0 && k <= static_cast<int>(pool.size())) rec(rec, 0);
  return out;
}

/// Random pure d-complex on universe {1..n}: every (d+1)-subset kept with a
/// per-instance probability; at least one facet is always kept.
inline PureComplex random_complex(std::mt19937& rng, int n, int d) {
  const std::vector<std::vector<VertexId>> all = [&] {
    std::vector<VertexId> pool;
    for (int v = 1; v <= n; ++v) pool.push_back(v);
    return k_subsets(pool, d + 1);
  }();
  std::uniform_real_distribution<double> prob(0.15, 0.85);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double keep = prob(rng);
  std::vector<std::vector<VertexId>> kept;
  for (const auto& f : all)
    if (coin(rng) < keep) kept.push_back(f);
  if (kept.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    kept.push_back(all[pick(rng)]);
  }
  std::vector<VertexId> uni;
  for (int v = 1; v <= n; ++v) uni.push_back(v);
  return hamplex::from_facets(kept, uni);
}

// ---- graph oracles (d = 1) ------------------------------------------------

struct AdjView {
  std::vector<VertexId> verts;        // universe, sorted
  std::vector<std::vector<char>> adj; // by universe index
};

inline AdjView graph_adjacency(const PureComplex& g) {
  AdjView v;
  v.verts = g.universe();
  const std::size_t n = v.verts.size();
  v.adj.assign(n, std::vector<char>(n, 0));
  auto index = [&](VertexId x) {
    return static_cast<std::size_t>(
        std::lower_bound(v.verts.begin(), v.verts.end(), x) - v.verts.begin());
  };
  for (const hamplex::Facet& f : g.facets()) {
    const std::size_t a = index(f.vertices()[0]), b = index(f.vertices()[1]);
    v.adj[a][b] = v.adj[b][a] = 1;
  }
  return v;
}

namespace detail {

inline bool extend_tour(const AdjView& g, std::vector<std::size_t>& seq, std::vector<char>& used,
                        bool cycle) {
  const std::size_t n = g.verts.size();
  if (seq.size() == n) return !cycle || g.adj[seq.back()][seq.front()];
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v] || !g.adj[seq.back()][v]) continue;
    used[v] = 1;
    seq.push_back(v);
    if (extend_tour(g, seq, used, cycle)) return true;
    seq.pop_back();
    used[v] = 0;
  }
  return false;
}

}  // namespace detail

/// Exhaustive vertex-sequence search, no window machinery involved.
inline bool graph_ham_cycle(const PureComplex& g) {
  AdjView a = graph_adjacency(g);
  const std::size_t n = a.verts.size();
  if (n < 3) return false;
  std::vector<std::size_t> seq{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  return detail::extend_tour(a, seq, used, true);
}

inline bool graph_ham_path(const PureComplex& g) {
  AdjView a = graph_adjacency(g);
  const std::size_t n = a.verts.size();
  if (n < 2) return false;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> seq{s};
    std::vector<char> used(n, 0);
    used[s] = 1;
    if (detail::extend_tour(a, seq, used, false)) return true;
  }
  return false;
}

/// Classical graph square: original edges plus every pair at distance 2.
inline std::set<std::vector<VertexId>> graph_square_edges(const PureComplex& g) {
  AdjView a = graph_adjacency(g);
  const std::size_t n = a.verts.size();
  std::set<std::vector<VertexId>> out = facet_set(g);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = u + 1; w < n; ++w) {
      if (a.adj[u][w]) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (a.adj[u][x] && a.adj[w][x]) {
          out.insert({a.verts[u], a.verts[w]});
          break;
        }
    }
  return out;
}

// ---- literal flip oracle ----------------------------------------------------

struct NaiveMove {
  std::vector<VertexId> a, b;
  std::vector<std::vector<VertexId>> adds;  // sorted

  bool operator<(const NaiveMove& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator==(const NaiveMove& o) const { return a == o.a && b == o.b && adds == o.adds; }
};

/// Every admissible move recomputed literally from the definitions: A a face
/// with 1 <= |A| <= d, B a (d+2-|A|)-subset of the universe that is not a
/// face, every facet of A * boundary(B) present; strict additionally demands
/// link(A) = boundary(B) as literal set families.
inline std::vector<NaiveMove> naive_flips(const PureComplex& c, hamplex::FlipMode mode) {
  const int d = c.dim();
  std::set<std::vector<VertexId>> faces;  // all nonempty faces of c
  for (const hamplex::Facet& f : c.facets()) {
    const std::vector<VertexId>& fv = f.vertices();
    for (int k = 1; k <= static_cast<int>(fv.size()); ++k)
      for (const auto& s : k_subsets(fv, k)) faces.insert(s);
  }
  const std::set<std::vector<VertexId>> facets = facet_set(c);

  std::vector<NaiveMove> out;
  for (const auto& a : faces) {
    if (static_cast<int>(a.size()) > d) continue;
    const int b_size = d + 2 - static_cast<int>(a.size());
    for (const auto& b : k_subsets(c.universe(), b_size)) {
      if (faces.count(b)) continue;  // B already a face
      bool relaxed_ok = true;
      for (const auto& s : k_subsets(b, b_size - 1)) {
        std::vector<VertexId> u = a;
        u.insert(u.end(), s.begin(), s.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        if (static_cast<int>(u.size()) != d + 1 || !facets.count(u)) {
          relaxed_ok = false;
          break;
        }
      }
      if (!relaxed_ok) continue;
      if (mode == hamplex::FlipMode::strict) {
        std::set<std::vector<VertexId>> link;
        for (const auto& f : facets) {
          if (!std::includes(f.begin(), f.end(), a.begin(), a.end())) continue;
          std::vector<VertexId> rest;
          std::set_difference(f.begin(), f.end(), a.begin(), a.end(), std::back_inserter(rest));
          link.insert(rest);
        }
        std::set<std::vector<VertexId>> bdry;
        for (const auto& s : k_subsets(b, b_size - 1)) bdry.insert(s);
        if (link != bdry) continue;
      }
      NaiveMove mv{a, b, {}};
      for (VertexId drop : a) {
        std::vector<VertexId> add = b;
        for (VertexId v : a)
          if (v != drop) add.push_back(v);
        std::sort(add.begin(), add.end());
        mv.adds.push_back(std::move(add));
      }
      std::sort(mv.adds.begin(), mv.adds.end());
      out.push_back(std::move(mv));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::vector<VertexId>> naive_square(const PureComplex& c, hamplex::FlipMode mode) {
  std::set<std::vector<VertexId>> out = facet_set(c);
  for (const NaiveMove& mv : naive_flips(c, mode))
    for (const auto& f : mv.adds) out.insert(f);
  return out;
}

inline std::vector<NaiveMove> moves_as_naive(const std::vector<hamplex::FlipMove>& moves) {
  std::vector<NaiveMove> out;
  for (const hamplex::FlipMove& mv : moves) {
    NaiveMove nm{mv.a_face.vertices(), mv.b_simplex.vertices(), {}};
    for (const hamplex::Facet& f : mv.introduced) nm.adds.push_back(f.vertices());
    std::sort(nm.adds.begin(), nm.adds.end());
    out.push_back(std::move(nm));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- exhaustive isomorphism oracle ------------------------------------------

/// Tries every bijection between the two universes.
inline bool naive_isomorphic(const PureComplex& a, const PureComplex& b) {
  if (a.dim() != b.dim() || a.vertex_count() != b.vertex_count() ||
      a.facet_count() != b.facet_count())
    return false;
  const std::set<std::vector<VertexId>> target = facet_set(b);
  std::vector<VertexId> image = b.universe();
  std::sort(image.begin(), image.end());
  do {
    std::map<VertexId, VertexId> m;
    for (std::size_t i = 0; i < image.size(); ++i) m[a.universe()[i]] = image[i];
    std::set<std::vector<VertexId>> mapped;
    for (const hamplex::Facet& f : a.facets()) {
      std::vector<VertexId> fv;
      for (VertexId v : f.vertices()) fv.push_back(m[v]);
      std::sort(fv.begin(), fv.end());
      mapped.insert(std::move(fv));
    }
    if (mapped == target) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

// ---- property runners (shared by the property suite and the acceptance gate)

struct PropertyOutcome {
  int checked = 0;       // instances examined
  int certificates = 0;  // certificates verified along the way
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string first_failures(std::size_t limit = 3) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < failures.size() && i < limit; ++i)
      os << (i ? "\n" : "") << failures[i];
    if (failures.size() > limit) os << "\n... and " << failures.size() - limit << " more";
    return os.str();
  }
};

inline const std::vector<hamplex::HamKind>& all_kinds() {
  static const std::vector<hamplex::HamKind> k{hamplex::HamKind::tight, hamplex::HamKind::loose,
                                               hamplex::HamKind::weak};
  return k;
}
inline const std::vector<hamplex::HamShape>& all_shapes() {
  static const std::vector<hamplex::HamShape> s{hamplex::HamShape::path, hamplex::HamShape::cycle};
  return s;
}
inline const std::vector<hamplex::ChainPolicy>& all_policies() {
  static const std::vector<hamplex::ChainPolicy> p{hamplex::ChainPolicy::sorted_adjacent,
                                                   hamplex::ChainPolicy::coverage_only};
  return p;
}

/// Search vs brute-force oracle on random complexes (n <= 7, d in {1,2,3}),
/// all kind/shape/policy combinations; every certificate from either side
/// must verify.
inline PropertyOutcome run_oracle_equivalence(int instances, unsigned seed) {
  using namespace hamplex;
  PropertyOutcome out;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int i = 0; i < instances; ++i) {
    const int d = dim(rng);
    std::uniform_int_distribution<int> verts(d + 2, 7);
    const int n = verts(rng);
    PureComplex c = random_complex(rng, n, d);
    ++out.checked;
    for (HamKind k : all_kinds())
      for (HamShape s : all_shapes())
        for (ChainPolicy p : all_policies()) {
          const HamAnswer fast = find_hamiltonian(c, k, s, p);
          const HamAnswer slow = find_hamiltonian_bruteforce(c, k, s, p);
          auto describe = [&](const char* what) {
            std::ostringstream os;
            os << what << " (instance " << i << ", n=" << n << ", d=" << d << ", "
               << kind_name(k) << " " << shape_name(s) << " " << policy_name(p) << ")";
            return os.str();
          };
          if (fast.found() != slow.found()) {
            out.failures.push_back(describe(fast.found() ? "search finds a chain the oracle rules out"
                                                         : "oracle finds a chain the search misses"));
            continue;
          }
          for (const HamAnswer* ans : {&fast, &slow}) {
            if (!ans->found()) continue;
            const ChainCheck chk = verify_chain(c, *ans->chain, p);
            if (!chk.ok)
              out.failures.push_back(describe(("certificate violates " + chk.violation).c_str()));
            else
              ++out.certificates;
          }
        }
  }
  return out;
}

/// tight-present => weak-present and loose-present => weak-present, over the
/// built-in constructions plus random complexes.
inline PropertyOutcome run_implication_suite(int random_instances, unsigned seed) {
  using namespace hamplex;
  PropertyOutcome out;
  std::vector<std::pair<std::string, PureComplex>> complexes;
  complexes.emplace_back("dirac_complex(2)", dirac_complex(2));
  complexes.emplace_back("dirac_complex(3)", dirac_complex(3));
  for (int d : {2, 3, 4})
    complexes.emplace_back("triple_apex(" + std::to_string(d) + ")", triple_apex(d));
  complexes.emplace_back("S", complex_S());
  complexes.emplace_back("K", complex_K());
  complexes.emplace_back("cycle_family(2)", cycle_family(2));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int i = 0; i < random_instances; ++i) {
    const int d = dim(rng);
    std::uniform_int_distribution<int> verts(d + 2, 7);
    complexes.emplace_back("random " + std::to_string(i), random_complex(rng, verts(rng), d));
  }
  for (const auto& [name, c] : complexes) {
    ++out.checked;
    for (HamShape s : all_shapes())
      for (ChainPolicy p : all_policies()) {
        const bool weak_present = find_hamiltonian(c, HamKind::weak, s, p).found();
        for (HamKind k : {HamKind::tight, HamKind::loose}) {
          const HamAnswer strong = find_hamiltonian(c, k, s, p);
          if (!strong.found()) continue;
          const ChainCheck chk = verify_chain(c, *strong.chain, p);
          if (!chk.ok)
            out.failures.push_back(name + ": " + kind_name(k) + " " + shape_name(s) +
                                   " certificate violates " + chk.violation);
          else
            ++out.certificates;
          if (!weak_present)
            out.failures.push_back(name + ": " + kind_name(k) + " " + shape_name(s) + " (" +
                                   policy_name(p) + ") present but weak absent");
        }
      }
  }
  return out;
}

/// d=1 reductions: window-chain Hamiltonicity under the default policy
/// coincides with graph Hamiltonicity, and the relaxed square coincides with
/// the classical graph square.
inline PropertyOutcome run_graph_reduction(int graphs, unsigned seed) {
  using namespace hamplex;
  PropertyOutcome out;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> verts(4, 8);
  for (int i = 0; i < graphs; ++i) {
    PureComplex g = random_complex(rng, verts(rng), 1);
    ++out.checked;
    const bool cyc = graph_ham_cycle(g);
    const bool pth = graph_ham_path(g);
    for (HamKind k : all_kinds()) {
      for (HamShape s : all_shapes()) {
        const bool expected = s == HamShape::cycle ? cyc : pth;
        const HamAnswer a = find_hamiltonian(g, k, s, ChainPolicy::sorted_adjacent);
        if (a.found() != expected) {
          std::ostringstream os;
          os << "graph " << i << " (n=" << g.vertex_count() << "): " << kind_name(k) << " "
             << shape_name(s) << " " << (a.found() ? "present" : "absent")
             << " but the graph oracle says " << (expected ? "present" : "absent");
          out.failures.push_back(os.str());
        } else if (a.found()) {
          const ChainCheck chk = verify_chain(g, *a.chain, ChainPolicy::sorted_adjacent);
          if (!chk.ok)
            out.failures.push_back("graph " + std::to_string(i) + ": certificate violates " +
                                   chk.violation);
          else
            ++out.certificates;
        }
      }
    }
    const std::set<std::vector<VertexId>> expected_sq = graph_square_edges(g);
    const PureComplex sq = square(g, FlipMode::relaxed);
    if (facet_set(sq) != expected_sq)
      out.failures.push_back("graph " + std::to_string(i) +
                             ": relaxed square differs from the classical graph square");
    else if (sq.universe() != g.universe())
      out.failures.push_back("graph " + std::to_string(i) + ": square changed the universe");
  }
  return out;
}

/// Witness verification beyond window chains: dual-graph sequences and
/// isomorphism bijections returned by the library verify literally.
inline PropertyOutcome run_witness_verification() {
  using namespace hamplex;
  PropertyOutcome out;
  {
    DualGraph g = dual_graph(cycle_family(2));
    auto seq = graph_hamiltonian(g, HamShape::path);
    ++out.checked;
    if (!seq)
      out.failures.push_back("dual of cycle_family(2): Hamiltonian path unexpectedly absent");
    else if (!verify_graph_sequence(g, *seq, HamShape::path))
      out.failures.push_back("dual of cycle_family(2): returned path fails verification");
    else
      ++out.certificates;
  }
  {
    PureComplex s = complex_S();
    auto bij = are_isomorphic(s, complement(s));
    ++out.checked;
    if (!bij)
      out.failures.push_back("S and complement(S) unexpectedly not isomorphic");
    else if (!verify_bijection(s, complement(s), *bij))
      out.failures.push_back("isomorphism witness for S fails verification");
    else
      ++out.certificates;
  }
  for (auto [kind, shape, c, name] :
       {std::tuple{HamKind::tight, HamShape::cycle, cycle_family(2), "cycle_family(2)"},
        std::tuple{HamKind::weak, HamShape::cycle, complex_S(), "S"},
        std::tuple{HamKind::tight, HamShape::cycle, skeleton(2, 6), "skeleton(2,6)"}}) {
    ++out.checked;
    const HamAnswer a = find_hamiltonian(c, kind, shape);
    if (!a.found()) {
      out.failures.push_back(std::string(name) + ": expected chain absent");
      continue;
    }
    // a sorted-adjacent certificate satisfies the coverage-only relaxation too
    bool all_ok = true;
    for (ChainPolicy p : all_policies()) {
      const ChainCheck chk = verify_chain(c, *a.chain, p);
      if (!chk.ok) {
        out.failures.push_back(std::string(name) + ": certificate violates " + chk.violation);
        all_ok = false;
      }
    }
    if (all_ok) ++out.certificates;
  }
  return out;
}

}  // namespace testsupport
