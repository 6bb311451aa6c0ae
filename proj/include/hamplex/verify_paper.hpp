#pragma once

// The verify-paper claim registry: one entry per published result, each an
// independent computation that either reproduces the result or reports the
// first discrepancy. Claims are pure functions; the report order is the
// registry order regardless of how claims are scheduled.
//
// Flip-mode pinning for the section-5 claims: the published figure of 46
// added triangles equals the number of facets introduced by the 23
// generalized (relaxed) ridge flips counted per flip (23 x 2, one triangle
// arising twice), not the number of distinct new facets, which is 39 in
// strict mode and 48 in relaxed mode. The square claims pin relaxed mode,
// whose flip arithmetic reproduces the published figure.
//
// The published cycle-absence assertion for the square of K does not
// survive verification in either mode: the relaxed square admits a tight
// Hamiltonian cycle, and even the strict square admits weak Hamiltonian
// cycles under both chain policies (tight is exhausted and loose is ruled
// out by divisibility there). S5-Ksq-no-ham-cycle therefore fails by
// design, carrying the refuting certificates in its details; they verify
// independently via verify_chain, and every window of the strict-square
// certificate re-derives by hand from the printed facet list.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "constructions.hpp"
#include "core.hpp"
#include "dual.hpp"
#include "flips.hpp"
#include "hamiltonian.hpp"
#include "iso.hpp"

namespace hamplex {

inline constexpr FlipMode pinned_flip_mode = FlipMode::relaxed;

struct ClaimSpec {
  std::string id;
  std::string section;  // S1..S5
  std::string description;
  std::chrono::milliseconds budget;
  std::function<std::pair<bool, std::string>()> run;  // (ok, details)
};

struct ClaimResult {
  std::string claim_id;
  std::string section;
  std::string description;
  std::string status;  // pass | fail | skipped
  std::string details;
  std::chrono::milliseconds elapsed{0};
};

/// Glob match with '*' (any run) and '?' (any one character).
inline bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p, ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace detail {

inline std::string facet_text(const std::vector<VertexId>& f) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  out << "]";
  return out.str();
}

inline std::string facet_list_text(const std::vector<Facet>& fs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fs.size(); ++i) out << (i ? " " : "") << facet_text(fs[i].vertices());
  return out.str();
}

inline PureComplex strip_complex() { return from_facets({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}); }

/// Absence of every (kind, shape, policy) combination, optionally
/// cross-checked against the brute-force oracle.
inline std::pair<bool, std::string> check_all_absent(const PureComplex& c,
                                                     const std::vector<HamKind>& kinds,
                                                     const std::vector<HamShape>& shapes,
                                                     bool with_oracle) {
  int combos = 0;
  for (HamKind k : kinds)
    for (HamShape s : shapes)
      for (ChainPolicy p : {ChainPolicy::sorted_adjacent, ChainPolicy::coverage_only}) {
        HamAnswer a = find_hamiltonian(c, k, s, p);
        if (a.found()) {
          return {false, std::string("unexpected ") + kind_name(k) + " " + shape_name(s) +
                             " under " + policy_name(p) + ":\n" + format_certificate(*a.chain, p)};
        }
        if (with_oracle) {
          HamAnswer o = find_hamiltonian_bruteforce(c, k, s, p);
          if (o.found())
            return {false, std::string("oracle disagrees: found ") + kind_name(k) + " " +
                               shape_name(s) + " under " + policy_name(p)};
        }
        ++combos;
      }
  std::ostringstream out;
  out << "absent for all " << combos << " kind/shape/policy combinations";
  if (with_oracle) out << "; brute-force oracle agrees on each";
  return {true, out.str()};
}

/// Find a chain, demand it verifies under both policies when
/// `both_policies`, and return its certificate text.
inline std::pair<bool, std::string> check_present_with_cert(const PureComplex& c, HamKind k,
                                                            HamShape s, bool both_policies) {
  HamAnswer a = find_hamiltonian(c, k, s, ChainPolicy::sorted_adjacent);
  if (!a.found())
    return {false, std::string(kind_name(k)) + " " + shape_name(s) + " unexpectedly absent (" +
                       a.absence_reason + ")"};
  std::vector<ChainPolicy> policies{ChainPolicy::sorted_adjacent};
  if (both_policies) policies.push_back(ChainPolicy::coverage_only);
  for (ChainPolicy p : policies) {
    ChainCheck chk = verify_chain(c, *a.chain, p);
    if (!chk.ok)
      return {false, std::string("certificate failed verification (") + policy_name(p) +
                         "): " + chk.violation};
  }
  return {true, format_certificate(*a.chain, ChainPolicy::sorted_adjacent)};
}

// ---- section 1 ----------------------------------------------------------

inline std::pair<bool, std::string> claim_dirac_degrees() {
  std::ostringstream out;
  for (int d : {2, 3}) {
    PureComplex c = dirac_complex(d);
    const int n = c.vertex_count();
    int min_deg = -1;
    for (VertexId v : c.universe()) {
      int deg = c.vertex_degree(v);
      if (min_deg < 0 || deg < min_deg) min_deg = deg;
    }
    const int expected = d == 2 ? 4 : 15;
    if (min_deg != expected)
      return {false, "d=" + std::to_string(d) + ": minimum facet degree " +
                         std::to_string(min_deg) + ", expected " + std::to_string(expected)};
    if (2 * min_deg <= n)
      return {false, "d=" + std::to_string(d) + ": minimum degree " + std::to_string(min_deg) +
                         " does not exceed n/2 = " + std::to_string(n / 2)};
    out << (d == 2 ? "" : "; ") << "d=" << d << ": minimum facet degree " << min_deg << " > "
        << n / 2 << " = n/2";
  }
  return {true, out.str()};
}

inline std::pair<bool, std::string> claim_dirac_no_ham(int d) {
  PureComplex c = dirac_complex(d);
  return check_all_absent(c, {HamKind::tight, HamKind::loose, HamKind::weak},
                          {HamShape::path, HamShape::cycle}, d == 2);
}

// ---- section 2 ----------------------------------------------------------

inline std::pair<bool, std::string> claim_apex_no_weak(int d) {
  PureComplex c = triple_apex(d);
  return check_all_absent(c, {HamKind::weak}, {HamShape::path, HamShape::cycle}, false);
}

inline std::pair<bool, std::string> claim_apex_completion(int d) {
  PureComplex apex = triple_apex(d);
  PureComplex full = skeleton(d, d + 3);
  int completions = 0;
  for (const Facet& f : full.facets()) {
    if (apex.contains_facet(f)) continue;
    PureComplex plus = add_facet(apex, f.vertices());
    HamAnswer a = find_hamiltonian(plus, HamKind::weak, HamShape::cycle);
    if (!a.found())
      return {false, "no weak cycle after adding " + facet_text(f.vertices()) + " (" +
                         a.absence_reason + ")"};
    ChainCheck chk = verify_chain(plus, *a.chain, ChainPolicy::sorted_adjacent);
    if (!chk.ok)
      return {false,
              "certificate failed for completion " + facet_text(f.vertices()) + ": " +
                  chk.violation};
    ++completions;
  }
  // The two explicit three-window chains: adding the window at start d+2
  // (two apices) or at start d+1 (three apices) closes a weak cycle with
  // windows 1, that start, and d+3.
  const int n = d + 3;
  std::ostringstream out;
  out << "weak cycle found and verified for all " << completions
      << " missing facets (sorted-adjacent policy; coverage-only follows a fortiori)";
  for (int start : {d + 2, d + 1}) {
    std::vector<VertexId> f = window({n, d, start, true});
    PureComplex plus = add_facet(triple_apex(d), f);
    WindowChain chain;
    for (int i = 1; i <= n; ++i) chain.labeling.push_back(i);
    chain.starts = {1, start, d + 3};
    chain.kind = HamKind::weak;
    chain.shape = HamShape::cycle;
    for (ChainPolicy p : {ChainPolicy::sorted_adjacent, ChainPolicy::coverage_only}) {
      ChainCheck chk = verify_chain(plus, chain, p);
      if (!chk.ok)
        return {false, "three-window chain {1," + std::to_string(start) + "," +
                           std::to_string(d + 3) + "} for F=" + facet_text(f) + " failed (" +
                           policy_name(p) + "): " + chk.violation};
    }
    out << "\nthree-window chain verified for F=" << facet_text(f) << ": starts {1,"
        << start << "," << d + 3 << "}, both policies";
  }
  return {true, out.str()};
}

inline std::pair<bool, std::string> claim_dirac_plus_triangle() {
  PureComplex d2 = dirac_complex(2);
  PureComplex full = skeleton(2, 6);
  int completions = 0;
  for (const Facet& f : full.facets()) {
    if (d2.contains_facet(f)) continue;
    PureComplex plus = add_facet(d2, f.vertices());
    HamAnswer a = find_hamiltonian(plus, HamKind::weak, HamShape::cycle);
    if (!a.found())
      return {false, "no weak cycle after adding " + facet_text(f.vertices()) + " (" +
                         a.absence_reason + ")"};
    ChainCheck chk = verify_chain(plus, *a.chain, ChainPolicy::sorted_adjacent);
    if (!chk.ok)
      return {false,
              "certificate failed for completion " + facet_text(f.vertices()) + ": " +
                  chk.violation};
    ++completions;
  }
  return {true, "weak cycle found and verified for all " + std::to_string(completions) +
                    " missing triangles"};
}

// ---- section 3 ----------------------------------------------------------

inline std::pair<bool, std::string> claim_s_self_complementary() {
  PureComplex s = complex_S();
  PureComplex sc = complement(s);
  const PureComplex printed = from_facets({{1, 4, 6},
                                           {1, 5, 6},
                                           {2, 3, 6},
                                           {2, 4, 5},
                                           {2, 4, 6},
                                           {2, 5, 6},
                                           {3, 4, 5},
                                           {3, 4, 6},
                                           {3, 5, 6},
                                           {4, 5, 6}});
  if (!(sc == printed)) return {false, "complement(S) differs from the published facet list"};
  VertexBijection map;
  map.map = {{1, 6}, {2, 5}, {3, 4}, {4, 2}, {5, 3}, {6, 1}};
  if (!verify_bijection(s, sc, map))
    return {false, "published map 1->6 2->5 3->4 4->2 5->3 6->1 is not an isomorphism witness"};
  if (!is_self_complementary(s)) return {false, "is_self_complementary(S) returned false"};
  return {true,
          "complement matches the published 10 facets; map 1->6 2->5 3->4 4->2 5->3 6->1 "
          "verified as a witness; self-complementarity confirmed by search"};
}

inline std::pair<bool, std::string> claim_s_no_ham_path() {
  PureComplex s = complex_S();
  return check_all_absent(s, {HamKind::tight, HamKind::loose, HamKind::weak}, {HamShape::path},
                          true);
}

inline std::pair<bool, std::string> claim_s_weak_cycle() {
  return check_present_with_cert(complex_S(), HamKind::weak, HamShape::cycle, true);
}

// ---- section 4 ----------------------------------------------------------

inline std::pair<bool, std::string> claim_cycle_tight_cycle() {
  PureComplex c = cycle_family(2);
  HamAnswer a = find_hamiltonian(c, HamKind::tight, HamShape::cycle);
  if (!a.found()) return {false, "tight cycle unexpectedly absent (" + a.absence_reason + ")"};
  ChainCheck chk = verify_chain(c, *a.chain, ChainPolicy::sorted_adjacent);
  if (!chk.ok) return {false, "tight cycle certificate failed: " + chk.violation};
  if (a.chain->labeling != c.universe())
    return {false, "expected the identity labeling as the canonical certificate"};
  return {true, "identity-labeling tight cycle verified:\n" +
                    format_certificate(*a.chain, ChainPolicy::sorted_adjacent)};
}

inline std::pair<bool, std::string> claim_dual_adjacency() {
  PureComplex c = cycle_family(2);
  DualGraph g = dual_graph(c);
  const int n = 14;
  std::map<std::string, int> index;
  for (int i = 0; i < g.node_count; ++i) index[g.label(i)] = i;
  std::vector<std::pair<std::string, std::string>> expected;
  for (int i = 1; i <= n; ++i)
    expected.push_back({"H_" + std::to_string(i), "H_" + std::to_string(i % n + 1)});
  expected.push_back({"F_1", "H_5"});
  expected.push_back({"F_1", "F_2"});
  expected.push_back({"F_2", "H_7"});
  expected.push_back({"F_3", "F_4"});
  expected.push_back({"F_3", "H_8"});
  expected.push_back({"F_4", "H_10"});
  if (g.edges.size() != expected.size())
    return {false, "dual graph has " + std::to_string(g.edges.size()) + " edges, expected " +
                       std::to_string(expected.size())};
  for (const auto& [ua, vb] : expected) {
    if (!index.count(ua) || !index.count(vb)) return {false, "missing dual node " + ua};
    if (!g.adjacent(index[ua], index[vb]))
      return {false, "expected dual adjacency " + ua + " -- " + vb + " is missing"};
  }
  return {true,
          "dual graph is the 14-cycle H_1..H_14 plus exactly F_1--H_5, F_1--F_2, F_2--H_7, "
          "F_3--F_4, F_3--H_8, F_4--H_10 (20 edges)"};
}

inline std::pair<bool, std::string> claim_dual_two_connected() {
  DualGraph g = dual_graph(cycle_family(2));
  if (!graph_connected(g)) return {false, "dual graph is not even connected"};
  if (!graph_two_connected(g)) return {false, "dual graph has an articulation point"};
  return {true, "dual graph is 2-connected (no articulation point among its 18 nodes)"};
}

inline std::pair<bool, std::string> claim_dual_no_ham_cycle() {
  DualGraph g = dual_graph(cycle_family(2));
  if (graph_hamiltonian(g, HamShape::cycle))
    return {false, "dual graph unexpectedly has a Hamiltonian cycle"};
  return {true, "exhaustive search confirms the dual graph has no Hamiltonian cycle"};
}

inline std::pair<bool, std::string> claim_dual_ham_path() {
  DualGraph g = dual_graph(cycle_family(2));
  auto seq = graph_hamiltonian(g, HamShape::path);
  if (!seq) return {false, "dual graph unexpectedly has no Hamiltonian path"};
  if (!verify_graph_sequence(g, *seq, HamShape::path))
    return {false, "returned Hamiltonian path failed verification"};
  std::ostringstream out;
  out << "Hamiltonian path through all " << g.node_count << " dual nodes:";
  for (int v : *seq) out << " " << g.label(v);
  return {true, out.str()};
}

// ---- section 5 ----------------------------------------------------------

inline std::pair<bool, std::string> claim_strip_square() {
  PureComplex strip = strip_complex();
  const PureComplex expected = from_facets(
      {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 2, 4}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}});
  for (FlipMode mode : {FlipMode::strict, FlipMode::relaxed}) {
    PureComplex sq = square(strip, mode);
    if (!(sq == expected))
      return {false, std::string("square in ") + flip_mode_name(mode) +
                         " mode differs from the published four-triangle completion"};
  }
  auto moves = enumerate_flips(strip, FlipMode::strict);
  if (moves.size() != 2)
    return {false, "expected exactly two strict flips on the strip, found " +
                       std::to_string(moves.size())};
  return {true, "both modes add exactly [1,2,4] [1,3,4] [2,3,5] [2,4,5]; the two flips are at "
                "A=[2,3] (B=[1,4]) and A=[3,4] (B=[2,5])"};
}

inline std::pair<bool, std::string> claim_k_square_count() {
  PureComplex k = complex_K();
  const std::size_t base = k.facets().size();
  const std::size_t strict_new = square(k, FlipMode::strict).facets().size() - base;
  const std::size_t relaxed_new = square(k, FlipMode::relaxed).facets().size() - base;
  std::size_t ridge_moves = 0, ridge_intros = 0, vertex_moves = 0;
  std::map<std::vector<VertexId>, int> times_introduced;
  for (const FlipMove& mv : enumerate_flips(k, FlipMode::relaxed)) {
    if (static_cast<int>(mv.a_face.size()) == k.dim()) {  // |A| = d: ridge flip
      ++ridge_moves;
      ridge_intros += mv.introduced.size();
      for (const Facet& f : mv.introduced) ++times_introduced[f.vertices()];
    } else {
      ++vertex_moves;
    }
  }
  std::vector<std::vector<VertexId>> duplicates;
  for (const auto& [f, count] : times_introduced)
    if (count > 1) duplicates.push_back(f);
  const bool reconciled = ridge_moves == 23 && ridge_intros == 46 && strict_new == 39 &&
                          relaxed_new == 48 && vertex_moves == 3 && duplicates.size() == 1 &&
                          duplicates[0] == std::vector<VertexId>{2, 3, 4};
  std::ostringstream out;
  out << "distinct new triangles: strict " << strict_new << ", relaxed " << relaxed_new
      << "; published total 46 = introductions of the " << ridge_moves
      << " relaxed ridge flips counted per flip (" << ridge_intros << " = " << ridge_moves
      << " x 2, with [2,3,4] introduced by two flips), vertex flips (" << vertex_moves
      << ") not included; pinned mode: relaxed";
  if (!reconciled) return {false, "reconciliation failed; " + out.str()};
  return {true, out.str()};
}

inline std::pair<bool, std::string> claim_k_two_strongly_connected() {
  PureComplex k = complex_K();
  if (!is_strongly_connected(k)) return {false, "K itself is not strongly connected"};
  if (!is_k_strongly_connected(k, 2))
    return {false, "some single-vertex deletion leaves K not strongly connected"};
  return {true, "K and every single-vertex deletion of K are strongly connected"};
}

inline std::pair<bool, std::string> claim_k_square_no_ham_cycle() {
  PureComplex k = complex_K();
  std::ostringstream out;
  bool any_cycle = false;
  for (FlipMode mode : {pinned_flip_mode, FlipMode::strict}) {
    if (mode == FlipMode::strict && pinned_flip_mode == FlipMode::strict) break;
    PureComplex sq = square(k, mode);
    for (HamKind kind : {HamKind::tight, HamKind::loose, HamKind::weak}) {
      for (ChainPolicy p : {ChainPolicy::sorted_adjacent, ChainPolicy::coverage_only}) {
        HamAnswer a = find_hamiltonian(sq, kind, HamShape::cycle, p);
        if (!a.found()) {
          out << flip_mode_name(mode) << " square: " << kind_name(kind) << " cycle absent ("
              << a.absence_reason << ", " << policy_name(p) << ")\n";
          continue;
        }
        any_cycle = true;
        ChainCheck chk = verify_chain(sq, *a.chain, p);
        out << flip_mode_name(mode) << " square: " << kind_name(kind) << " cycle FOUND ("
            << policy_name(p) << "), certificate "
            << (chk.ok ? "verified independently" : "FAILED verification: " + chk.violation)
            << "\n"
            << format_certificate(*a.chain, p);
        if (!chk.ok) return {false, out.str()};
      }
    }
  }
  if (!any_cycle) return {true, "no tight, loose, or weak Hamiltonian cycle in any mode"};
  return {false,
          "published absence refuted by verified certificates in both flip modes:\n" + out.str()};
}

}  // namespace detail

/// The built-in claim registry, in report order.
inline const std::vector<ClaimSpec>& claim_registry() {
  using std::chrono::milliseconds;
  static const std::vector<ClaimSpec> registry = [] {
    std::vector<ClaimSpec> r;
    auto add = [&r](std::string id, std::string section, std::string description, int budget_ms,
                    std::function<std::pair<bool, std::string>()> fn) {
      r.push_back({std::move(id), std::move(section), std::move(description),
                   milliseconds(budget_ms), std::move(fn)});
    };
    add("S1-dirac-degrees", "S1", "Dirac-type complexes: every vertex degree exceeds n/2", 1000,
        detail::claim_dirac_degrees);
    add("S1-dirac-no-ham-d2", "S1",
        "dirac_complex(2) has no Hamiltonian path or cycle of any kind (oracle-checked)", 30000,
        [] { return detail::claim_dirac_no_ham(2); });
    add("S1-dirac-no-ham-d3", "S1",
        "dirac_complex(3) has no Hamiltonian path or cycle of any kind", 30000,
        [] { return detail::claim_dirac_no_ham(3); });
    for (int d : {2, 3, 4}) {
      add("S2-apex-no-weak-d" + std::to_string(d), "S2",
          "triple_apex(" + std::to_string(d) + ") has no weak Hamiltonian path or cycle", 10000,
          [d] { return detail::claim_apex_no_weak(d); });
    }
    for (int d : {2, 3, 4}) {
      add("S2-apex-completion-d" + std::to_string(d), "S2",
          "every facet completion of triple_apex(" + std::to_string(d) +
              ") admits a weak Hamiltonian cycle",
          20000, [d] { return detail::claim_apex_completion(d); });
    }
    add("S2-dirac-plus-triangle", "S2",
        "adding any missing triangle to dirac_complex(2) creates a weak Hamiltonian cycle", 60000,
        detail::claim_dirac_plus_triangle);
    add("S3-S-self-complementary", "S3",
        "S is self-complementary, witnessed by the published bijection", 1000,
        detail::claim_s_self_complementary);
    add("S3-S-no-ham-path", "S3",
        "S has no Hamiltonian path of any kind (oracle-checked)", 15000,
        detail::claim_s_no_ham_path);
    add("S3-S-weak-cycle", "S3", "S admits a weak Hamiltonian cycle", 15000,
        detail::claim_s_weak_cycle);
    add("S4-cycle-tight-cycle", "S4",
        "cycle_family(2) has a tight Hamiltonian cycle with the identity labeling", 15000,
        detail::claim_cycle_tight_cycle);
    add("S4-dual-adjacency", "S4",
        "the dual graph of cycle_family(2) has exactly the published adjacencies", 15000,
        detail::claim_dual_adjacency);
    add("S4-dual-two-connected", "S4", "that dual graph is 2-connected", 10000,
        detail::claim_dual_two_connected);
    add("S4-dual-no-ham-cycle", "S4", "that dual graph has no Hamiltonian cycle", 10000,
        detail::claim_dual_no_ham_cycle);
    add("S4-dual-ham-path", "S4", "that dual graph has a Hamiltonian path", 10000,
        detail::claim_dual_ham_path);
    add("S5-strip-square", "S5",
        "the square of the 3-triangle strip adds exactly the published 4 triangles", 1000,
        detail::claim_strip_square);
    add("S5-K-square-count", "S5",
        "square(K): published 46 = per-flip introduction count; distinct new facets 39/48",
        10000, detail::claim_k_square_count);
    add("S5-K-2-strongly-connected", "S5", "K is 2-strongly connected", 5000,
        detail::claim_k_two_strongly_connected);
    add("S5-Ksq-no-ham-cycle", "S5",
        "square(K) in the pinned mode has no tight, loose, or weak Hamiltonian cycle", 600000,
        detail::claim_k_square_no_ham_cycle);
    return r;
  }();
  return registry;
}

namespace detail {

inline ClaimResult execute_claim(const ClaimSpec& spec) {
  ClaimResult res{spec.id, spec.section, spec.description, "fail", "", {}};
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    auto [claim_ok, details] = spec.run();
    ok = claim_ok;
    res.details = std::move(details);
  } catch (const std::exception& e) {
    ok = false;
    res.details = std::string("exception: ") + e.what();
  }
  res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  if (ok && res.elapsed > spec.budget) {
    ok = false;
    res.details = "timeout: completed in " + std::to_string(res.elapsed.count()) +
                  " ms, budget " + std::to_string(spec.budget.count()) + " ms";
  }
  res.status = ok ? "pass" : "fail";
  return res;
}

}  // namespace detail

/// Run the claims of `registry` whose id matches `only`; everything else is
/// reported as skipped. Order is registry order; `threads` > 1 runs the
/// selected claims concurrently without affecting that order.
inline std::vector<ClaimResult> run_claims_over(const std::vector<ClaimSpec>& registry,
                                                const std::string& only = "*", int threads = 1) {
  std::vector<ClaimResult> results(registry.size());
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (glob_match(only, registry[i].id)) {
      selected.push_back(i);
    } else {
      results[i] = {registry[i].id, registry[i].section, registry[i].description,
                    "skipped",      "not selected",      std::chrono::milliseconds(0)};
    }
  }
  if (threads <= 1 || selected.size() <= 1) {
    for (std::size_t i : selected) results[i] = detail::execute_claim(registry[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t slot = next.fetch_add(1);
      if (slot >= selected.size()) return;
      results[selected[slot]] = detail::execute_claim(registry[selected[slot]]);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<int>(threads, static_cast<int>(selected.size()));
  pool.reserve(count);
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return results;
}

inline std::vector<ClaimResult> run_claims(const std::string& only = "*", int threads = 1) {
  return run_claims_over(claim_registry(), only, threads);
}

inline bool all_selected_pass(const std::vector<ClaimResult>& results) {
  for (const ClaimResult& r : results)
    if (r.status == "fail") return false;
  return true;
}

inline std::string format_report_text(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  int pass = 0, fail = 0, skipped = 0;
  for (const ClaimResult& r : results) {
    out << "[" << r.status << "]"
        << std::string(r.status.size() < 7 ? 7 - r.status.size() : 1, ' ') << r.claim_id << " ("
        << r.section << ", " << r.elapsed.count() << " ms)\n";
    if (r.status == "pass") ++pass;
    if (r.status == "fail") ++fail;
    if (r.status == "skipped") ++skipped;
    if (r.status == "skipped") continue;
    std::istringstream lines(r.details.empty() ? r.description : r.details);
    for (std::string line; std::getline(lines, line);) out << "        " << line << "\n";
  }
  out << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  return out.str();
}

inline std::string format_report_tsv(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  for (const ClaimResult& r : results)
    out << r.claim_id << "\t" << r.status << "\t" << r.elapsed.count() << "\n";
  return out.str();
}

}  // namespace hamplex
