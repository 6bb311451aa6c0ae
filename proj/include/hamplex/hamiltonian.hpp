#pragma once

// Exact decision procedures for tight / loose / weak Hamiltonian paths and
// cycles in pure d-complexes.
//
// A window chain is a labeling of the vertices by 1..n together with a
// strictly increasing list of window starts. The defining conditions:
//   - the window at every start is a facet
//   - the windows cover every label 1..n
//   - paths: starts begin at 1 and end at n-d
//   - tight: starts = all admissible starts (n for cycles, n-d for paths)
//   - loose: consecutive start gaps (cyclic for cycles) all equal d
//   - weak (sorted-adjacent policy): consecutive windows in start order
//     (cyclically for cycles) intersect; (coverage-only policy): nothing
//     beyond facet-membership + coverage
//
// find_hamiltonian is a backtracking search over labelings; for a fixed
// labeling let A be the set of admissible starts whose window is a facet.
// Validity of some start subset is equivalent to a per-gap bound on the
// consecutive elements of A (taking all of A is optimal: inserting extra
// facet windows only refines gaps), which is what the search prunes on.
// verify_chain re-checks certificates clause by clause, with literal set
// intersections, sharing no logic with the search.

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core.hpp"

namespace hamplex {

enum class HamKind { tight, loose, weak };
enum class HamShape { path, cycle };
enum class ChainPolicy { sorted_adjacent, coverage_only };

inline const char* kind_name(HamKind k) {
  switch (k) {
    case HamKind::tight: return "tight";
    case HamKind::loose: return "loose";
    case HamKind::weak: return "weak";
  }
  return "?";
}
inline const char* shape_name(HamShape s) { return s == HamShape::path ? "path" : "cycle"; }
inline const char* policy_name(ChainPolicy p) {
  return p == ChainPolicy::sorted_adjacent ? "sorted-adjacent" : "coverage-only";
}

inline HamKind kind_from_name(const std::string& s) {
  if (s == "tight") return HamKind::tight;
  if (s == "loose") return HamKind::loose;
  if (s == "weak") return HamKind::weak;
  throw Error(Errc::invalid_parameters, "unknown kind '" + s + "'");
}
inline HamShape shape_from_name(const std::string& s) {
  if (s == "path") return HamShape::path;
  if (s == "cycle") return HamShape::cycle;
  throw Error(Errc::invalid_parameters, "unknown shape '" + s + "'");
}
inline ChainPolicy policy_from_name(const std::string& s) {
  if (s == "sorted-adjacent" || s == "sorted") return ChainPolicy::sorted_adjacent;
  if (s == "coverage-only") return ChainPolicy::coverage_only;
  throw Error(Errc::invalid_parameters, "unknown chain policy '" + s + "'");
}

struct WindowChain {
  std::vector<VertexId> labeling;  // position i-1 = the vertex carrying label i
  std::vector<int> starts;         // strictly increasing window start labels
  HamKind kind = HamKind::weak;
  HamShape shape = HamShape::cycle;
};

struct ChainCheck {
  bool ok = false;
  std::string violation;  // first violated clause when !ok
  explicit operator bool() const { return ok; }
};

struct HamAnswer {
  std::optional<WindowChain> chain;
  std::string absence_reason;  // "exhausted" or "divisibility" when absent
  bool found() const { return chain.has_value(); }
};

/// Independent certificate checker. Throws on a non-bijective labeling or
/// degenerate complex; otherwise reports the first violated clause among
/// starts-range, facet-membership, coverage, path-endpoints, tight-starts,
/// loose-gaps, weak-adjacency.
inline ChainCheck verify_chain(const PureComplex& c, const WindowChain& ch, ChainPolicy policy) {
  if (c.degenerate())
    throw Error(Errc::degenerate_complex, "cannot verify a chain on a degenerate complex");
  const int n = c.vertex_count();
  const int d = c.dim();
  if (static_cast<int>(ch.labeling.size()) != n)
    throw Error(Errc::labeling_not_bijective, "labeling length differs from vertex count");
  {
    std::vector<VertexId> sorted = ch.labeling;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.universe())
      throw Error(Errc::labeling_not_bijective, "labeling is not a bijection onto the vertices");
  }
  const bool cyclic = ch.shape == HamShape::cycle;
  const int max_start = cyclic ? n : n - d;
  const auto& st = ch.starts;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (st[i] < 1 || st[i] > max_start) return {false, "starts-range"};
    if (i > 0 && st[i] <= st[i - 1]) return {false, "starts-range"};
  }

  // window label sets, in start order
  std::vector<std::vector<int>> wins;
  wins.reserve(st.size());
  for (int s : st) wins.push_back(window({n, d, s, cyclic}));

  for (const auto& labels : wins) {
    std::vector<VertexId> verts;
    verts.reserve(labels.size());
    for (int l : labels) verts.push_back(ch.labeling[static_cast<std::size_t>(l - 1)]);
    if (!c.contains_facet(Facet(verts))) return {false, "facet-membership"};
  }

  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& labels : wins)
    for (int l : labels) covered[static_cast<std::size_t>(l)] = 1;
  for (int l = 1; l <= n; ++l)
    if (!covered[static_cast<std::size_t>(l)]) return {false, "coverage"};

  if (!cyclic && (st.front() != 1 || st.back() != n - d)) return {false, "path-endpoints"};

  switch (ch.kind) {
    case HamKind::tight:
      if (static_cast<int>(st.size()) != max_start) return {false, "tight-starts"};
      break;
    case HamKind::loose: {
      for (std::size_t i = 1; i < st.size(); ++i)
        if (st[i] - st[i - 1] != d) return {false, "loose-gaps"};
      if (cyclic && st.front() + n - st.back() != d) return {false, "loose-gaps"};
      break;
    }
    case HamKind::weak: {
      if (policy == ChainPolicy::coverage_only) break;
      auto intersect = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
          if (a[i] == b[j]) return true;
          if (a[i] < b[j]) ++i;
          else ++j;
        }
        return false;
      };
      for (std::size_t i = 1; i < wins.size(); ++i)
        if (!intersect(wins[i - 1], wins[i])) return {false, "weak-adjacency"};
      if (cyclic && wins.size() >= 2 && !intersect(wins.back(), wins.front()))
        return {false, "weak-adjacency"};
      break;
    }
  }
  return {true, ""};
}

namespace detail {

inline std::uint64_t idx_bit(int i) { return std::uint64_t{1} << i; }

struct SharedFound {
  std::atomic<bool> found{false};
  std::mutex m;
  std::optional<WindowChain> chain;
};

struct PrefixState {
  std::vector<int> lab;
  std::uint64_t used = 0;
  int last_in_a = 0;
};

// Backtracking searcher. Assigns labels 1..n to vertex indices in
// ascending-id branch order; the window at start j-d is decided as soon as
// label j lands, enabling the per-kind pruning described in the header
// comment. Symmetry breaking (all sound because the facet-window set is
// invariant under label rotation for cycles and label reflection for both
// shapes):
//   - cycles: the window at start 1 must be a facet (rotate any valid
//     labeling so that a facet window starts at 1);
//   - cycles: reflection l -> (d+2-l) mod n fixes start 1 and swaps labels
//     1 and d+1, broken by vertex(1) < vertex(d+1);
//   - paths: reflection l -> n+1-l swaps labels 1 and n, broken by
//     vertex(1) < vertex(n); window starts 1 and n-d are forced facets
//     (coverage of labels 1 and n).
class HamSearch {
 public:
  HamSearch(const PureComplex& c, HamKind kind, HamShape shape, ChainPolicy policy)
      : c_(c), kind_(kind), shape_(shape), n_(c.vertex_count()), d_(c.dim()) {
    cyclic_ = shape == HamShape::cycle;
    max_start_ = cyclic_ ? n_ : n_ - d_;
    verts_ = c.universe();
    for (const Facet& f : c.facets()) {
      std::uint64_t m = 0;
      for (VertexId v : f.vertices()) m |= idx_bit(index_of(v));
      facet_masks_.insert(m);
      for (VertexId v : f.vertices()) {
        const int vi = index_of(v);
        completions_[m & ~idx_bit(vi)].push_back(vi);
      }
    }
    for (auto& kv : completions_) std::sort(kv.second.begin(), kv.second.end());
    if (kind == HamKind::weak) {
      if (policy == ChainPolicy::coverage_only) gap_bound_ = d_ + 1;
      else if (!cyclic_) gap_bound_ = d_;
      else gap_bound_ = (n_ >= 2 * d_ + 2) ? d_ : d_ + 1;  // wrap meets from the far side
    }
  }

  HamAnswer run(int threads) const {
    if (threads <= 1) {
      Runner r(*this);
      if (r.dfs(1, 0)) return {std::move(r.result), ""};
      return {std::nullopt, "exhausted"};
    }
    // Split the tree at depth d+1 (the first decided window), then let
    // workers drain the prefix pool. Presence/absence is worker-count
    // independent: every prefix is either fully searched or cut off after
    // a witness is already recorded.
    std::vector<PrefixState> prefixes;
    {
      Runner r(*this);
      r.prefix_depth = d_ + 1;
      r.prefixes = &prefixes;
      r.dfs(1, 0);
    }
    SharedFound shared;
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size() || shared.found.load(std::memory_order_relaxed)) break;
        Runner r(*this);
        r.lab = prefixes[i].lab;
        r.used = prefixes[i].used;
        r.shared = &shared;
        r.dfs(d_ + 2, prefixes[i].last_in_a);
      }
    };
    const std::size_t nw =
        std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(prefixes.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (shared.chain) return {std::move(shared.chain), ""};
    return {std::nullopt, "exhausted"};
  }

 private:
  struct Runner {
    const HamSearch& s;
    std::vector<int> lab;  // label -> vertex index; lab[0] unused
    std::uint64_t used = 0;
    std::optional<WindowChain> result;
    SharedFound* shared = nullptr;
    int prefix_depth = 0;  // nonzero: collect states at depth+1 instead of recursing
    std::vector<PrefixState>* prefixes = nullptr;

    explicit Runner(const HamSearch& hs) : s(hs), lab(static_cast<std::size_t>(hs.n_) + 1, -1) {}

    bool dfs(int j, int last_in_a) {
      if (shared && shared->found.load(std::memory_order_relaxed)) return false;
      if (prefixes && j > prefix_depth) {
        prefixes->push_back({lab, used, last_in_a});
        return false;
      }
      if (j > s.n_) {
        emit();
        return true;
      }
      const int w = j - s.d_;  // window start decided by this assignment
      const std::vector<int>* completion = nullptr;
      if (j >= s.d_ + 1 && s.required_start(w)) {
        std::uint64_t ridge = 0;
        for (int l = w; l < j; ++l) ridge |= idx_bit(lab[static_cast<std::size_t>(l)]);
        auto it = s.completions_.find(ridge);
        if (it == s.completions_.end()) return false;
        completion = &it->second;
      }
      const int cand_count = completion ? static_cast<int>(completion->size()) : s.n_;
      for (int ci = 0; ci < cand_count; ++ci) {
        const int v = completion ? (*completion)[static_cast<std::size_t>(ci)] : ci;
        if (used & idx_bit(v)) continue;
        // reflection breaking
        if (s.cyclic_ && j == s.d_ + 1 && v < lab[1]) continue;
        if (!s.cyclic_ && j == s.n_ && v < lab[1]) continue;
        lab[static_cast<std::size_t>(j)] = v;
        used |= idx_bit(v);
        bool ok = true;
        int la = last_in_a;
        if (j >= s.d_ + 1) {
          if (j < s.n_) {
            la = s.step(lab, w, la, &ok);
          } else {
            for (int t = s.n_ - s.d_; t <= s.max_start_ && ok; ++t) la = s.step(lab, t, la, &ok);
            // cyclic wrap gap from the last facet window back to start 1
            if (ok && s.kind_ == HamKind::weak && s.cyclic_ && 1 + s.n_ - la > s.gap_bound_)
              ok = false;
          }
        }
        if (ok && dfs(j + 1, la)) {
          used &= ~idx_bit(v);
          lab[static_cast<std::size_t>(j)] = -1;
          return true;
        }
        used &= ~idx_bit(v);
        lab[static_cast<std::size_t>(j)] = -1;
      }
      return false;
    }

    void emit() {
      WindowChain ch = s.build_chain(lab);
      if (shared) {
        std::lock_guard<std::mutex> g(shared->m);
        if (!shared->chain) shared->chain = std::move(ch);
        shared->found.store(true);
      } else {
        result = std::move(ch);
      }
    }
  };
  friend struct Runner;

  int index_of(VertexId v) const {
    return static_cast<int>(std::lower_bound(verts_.begin(), verts_.end(), v) - verts_.begin());
  }

  // Starts whose window must be a facet in every acceptable labeling.
  bool required_start(int w) const {
    switch (kind_) {
      case HamKind::tight: return true;
      case HamKind::loose: return (w - 1) % d_ == 0;
      case HamKind::weak: return w == 1 || (!cyclic_ && w == n_ - d_);
    }
    return false;
  }

  std::uint64_t window_mask(const std::vector<int>& lab, int s) const {
    std::uint64_t m = 0;
    for (int k = 0; k <= d_; ++k) {
      int l = s + k;
      if (l > n_) l -= n_;
      m |= idx_bit(lab[static_cast<std::size_t>(l)]);
    }
    return m;
  }

  // Feeds one decided window into the pruning state; returns the updated
  // last element of A (the facet-window start set).
  int step(const std::vector<int>& lab, int wstart, int last_in_a, bool* ok) const {
    const bool facet = facet_masks_.count(window_mask(lab, wstart)) > 0;
    if (kind_ == HamKind::weak) {
      if (facet) {
        if (last_in_a > 0 && wstart - last_in_a > gap_bound_) {
          *ok = false;
          return last_in_a;
        }
        return wstart;
      }
      if (required_start(wstart) || (last_in_a > 0 && wstart - last_in_a >= gap_bound_))
        *ok = false;
      return last_in_a;
    }
    if (!facet && required_start(wstart)) *ok = false;
    return last_in_a;
  }

  WindowChain build_chain(const std::vector<int>& lab) const {
    WindowChain ch;
    ch.kind = kind_;
    ch.shape = shape_;
    ch.labeling.reserve(static_cast<std::size_t>(n_));
    for (int l = 1; l <= n_; ++l)
      ch.labeling.push_back(verts_[static_cast<std::size_t>(lab[static_cast<std::size_t>(l)])]);
    switch (kind_) {
      case HamKind::tight:
        for (int sidx = 1; sidx <= max_start_; ++sidx) ch.starts.push_back(sidx);
        break;
      case HamKind::loose:
        for (int sidx = 1; sidx <= max_start_; sidx += d_) ch.starts.push_back(sidx);
        break;
      case HamKind::weak:
        for (int sidx = 1; sidx <= max_start_; ++sidx)
          if (facet_masks_.count(window_mask(lab, sidx))) ch.starts.push_back(sidx);
        break;
    }
    return ch;
  }

  const PureComplex& c_;
  HamKind kind_;
  HamShape shape_;
  int n_;
  int d_;
  bool cyclic_ = false;
  int max_start_ = 0;
  int gap_bound_ = 0;  // weak kind only
  std::vector<VertexId> verts_;
  std::unordered_set<std::uint64_t> facet_masks_;
  std::unordered_map<std::uint64_t, std::vector<int>> completions_;  // ridge -> vertex indices
};

inline void check_search_input(const PureComplex& c, int vertex_limit) {
  if (c.degenerate())
    throw Error(Errc::degenerate_complex, "Hamiltonicity search rejects degenerate complexes");
  if (c.vertex_count() < c.dim() + 2)
    throw Error(Errc::too_few_vertices, "need at least d+2 vertices");
  if (c.vertex_count() > vertex_limit)
    throw Error(Errc::instance_too_large,
                "instance exceeds " + std::to_string(vertex_limit) + " vertices");
}

inline bool loose_divisibility_fails(int n, int d, HamShape shape) {
  return shape == HamShape::cycle ? (n % d != 0) : ((n - 1) % d != 0);
}

}  // namespace detail

/// Exact search. Returns a certificate chain, or a definitive absence with
/// a reason ("divisibility" when the loose start arithmetic is impossible,
/// otherwise "exhausted"). Certificates are deterministic for threads <= 1.
inline HamAnswer find_hamiltonian(const PureComplex& c, HamKind kind, HamShape shape,
                                  ChainPolicy policy = ChainPolicy::sorted_adjacent,
                                  int threads = 1) {
  detail::check_search_input(c, 64);
  if (kind == HamKind::loose && detail::loose_divisibility_fails(c.vertex_count(), c.dim(), shape))
    return {std::nullopt, "divisibility"};
  detail::HamSearch search(c, kind, shape, policy);
  return search.run(threads);
}

/// Complete-enumeration oracle: every labeling (n! of them) times every
/// subset of its facet-window starts, with each chain condition checked
/// literally. Shares no pruning or symmetry logic with find_hamiltonian.
inline HamAnswer find_hamiltonian_bruteforce(const PureComplex& c, HamKind kind, HamShape shape,
                                             ChainPolicy policy = ChainPolicy::sorted_adjacent) {
  detail::check_search_input(c, 8);
  const int n = c.vertex_count();
  const int d = c.dim();
  if (kind == HamKind::loose && detail::loose_divisibility_fails(n, d, shape))
    return {std::nullopt, "divisibility"};
  const bool cyclic = shape == HamShape::cycle;
  const int max_start = cyclic ? n : n - d;
  const std::uint64_t all_labels = (std::uint64_t{1} << n) - 1;

  std::vector<VertexId> perm = c.universe();  // ascending = lexicographically first
  do {
    // facet windows of this labeling, with label-bitmask per window
    std::vector<int> a_starts;
    std::vector<std::uint64_t> wmask(static_cast<std::size_t>(max_start) + 1, 0);
    for (int s = 1; s <= max_start; ++s) {
      const std::vector<int> labels = window({n, d, s, cyclic});
      std::vector<VertexId> verts;
      verts.reserve(labels.size());
      std::uint64_t m = 0;
      for (int l : labels) {
        verts.push_back(perm[static_cast<std::size_t>(l - 1)]);
        m |= std::uint64_t{1} << (l - 1);
      }
      if (c.contains_facet(Facet(verts))) {
        a_starts.push_back(s);
        wmask[static_cast<std::size_t>(s)] = m;
      }
    }
    const int ka = static_cast<int>(a_starts.size());
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << ka); ++sub) {
      std::vector<int> st;
      for (int i = 0; i < ka; ++i)
        if (sub & (std::uint64_t{1} << i)) st.push_back(a_starts[static_cast<std::size_t>(i)]);
      // coverage
      std::uint64_t cov = 0;
      for (int s : st) cov |= wmask[static_cast<std::size_t>(s)];
      if (cov != all_labels) continue;
      // path endpoints
      if (!cyclic && (st.front() != 1 || st.back() != n - d)) continue;
      bool ok = true;
      switch (kind) {
        case HamKind::tight:
          ok = static_cast<int>(st.size()) == max_start;
          break;
        case HamKind::loose:
          for (std::size_t i = 1; ok && i < st.size(); ++i) ok = st[i] - st[i - 1] == d;
          if (ok && cyclic) ok = st.front() + n - st.back() == d;
          break;
        case HamKind::weak:
          if (policy == ChainPolicy::sorted_adjacent) {
            for (std::size_t i = 1; ok && i < st.size(); ++i)
              ok = (wmask[static_cast<std::size_t>(st[i - 1])] &
                    wmask[static_cast<std::size_t>(st[i])]) != 0;
            if (ok && cyclic && st.size() >= 2)
              ok = (wmask[static_cast<std::size_t>(st.back())] &
                    wmask[static_cast<std::size_t>(st.front())]) != 0;
          }
          break;
      }
      if (ok) {
        WindowChain ch;
        ch.labeling = perm;
        ch.starts = std::move(st);
        ch.kind = kind;
        ch.shape = shape;
        return {std::move(ch), ""};
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {std::nullopt, "exhausted"};
}

/// Three-line certificate text: labeling, starts, then kind/shape/policy.
inline std::string format_certificate(const WindowChain& ch, ChainPolicy policy) {
  std::ostringstream os;
  os << "labeling:";
  for (VertexId v : ch.labeling) os << ' ' << v;
  os << "\nstarts:";
  for (int s : ch.starts) os << ' ' << s;
  os << "\nkind: " << kind_name(ch.kind) << " shape: " << shape_name(ch.shape)
     << " policy: " << policy_name(policy) << '\n';
  return os.str();
}

struct ParsedCertificate {
  WindowChain chain;
  ChainPolicy policy = ChainPolicy::sorted_adjacent;
};

inline ParsedCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto need_line = [&](const char* what) {
    if (!std::getline(in, line))
      throw Error(Errc::parse_error, std::string("certificate missing ") + what + " line");
  };
  auto parse_ints = [](const std::string& s, const std::string& prefix, const char* what) {
    if (s.rfind(prefix, 0) != 0)
      throw Error(Errc::parse_error, std::string("expected '") + prefix + "' line");
    std::istringstream ls(s.substr(prefix.size()));
    std::vector<int> out;
    int x;
    while (ls >> x) out.push_back(x);
    std::string trailing;
    if (ls.clear(), ls >> trailing; !trailing.empty())
      throw Error(Errc::parse_error, std::string("bad integer in ") + what + " line");
    return out;
  };
  ParsedCertificate pc;
  need_line("labeling");
  pc.chain.labeling = parse_ints(line, "labeling:", "labeling");
  need_line("starts");
  pc.chain.starts = parse_ints(line, "starts:", "starts");
  need_line("kind");
  {
    std::istringstream ls(line);
    std::string k1, kv, k2, sv, k3, pv;
    if (!(ls >> k1 >> kv >> k2 >> sv >> k3 >> pv) || k1 != "kind:" || k2 != "shape:" ||
        k3 != "policy:")
      throw Error(Errc::parse_error, "expected 'kind: ... shape: ... policy: ...' line");
    pc.chain.kind = kind_from_name(kv);
    pc.chain.shape = shape_from_name(sv);
    pc.policy = policy_from_name(pv);
  }
  return pc;
}

}  // namespace hamplex
