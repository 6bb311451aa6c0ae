#pragma once

// Complex text format (ASCII, LF):
//   - `#` starts a comment line
//   - optional header `vertices <n>` (before any facet) fixes the
//     universe to {1..n}
//   - every other nonempty line is one facet: strictly increasing
//     space-separated positive integers
// The writer emits facets in lexicographic order and a header only when
// the universe exceeds the facet union (such a universe must be {1..n} to
// be representable). parse(write(c)) == c, and writer output is
// byte-stable under a round trip. A degenerate (facet-free) complex has
// no representation in this format.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"

namespace hamplex {

inline PureComplex parse_complex(std::istream& in) {
  std::vector<std::vector<VertexId>> facets;
  std::size_t first_size = 0;
  int header_n = 0;  // 0 = no header
  int lineno = 0;
  std::string line;
  auto fail = [&](Errc code, const std::string& what) {
    throw Error(code, "line " + std::to_string(lineno) + ": " + what);
  };
  std::vector<std::vector<VertexId>> seen_sorted;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t at = line.find_first_not_of(" \t");
    if (at == std::string::npos || line[at] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "vertices") {
      if (header_n != 0) fail(Errc::parse_error, "duplicate 'vertices' header");
      if (!facets.empty()) fail(Errc::parse_error, "'vertices' header after facet lines");
      long long n = 0;
      if (!(ls >> n) || n < 1) fail(Errc::parse_error, "header needs a positive vertex count");
      std::string rest;
      if (ls >> rest) fail(Errc::parse_error, "trailing tokens after header");
      header_n = static_cast<int>(n);
      continue;
    }
    // facet line
    std::istringstream fs(line);
    std::vector<VertexId> verts;
    long long x = 0;
    while (fs >> x) {
      if (x < 1) fail(Errc::parse_error, "vertex ids must be positive integers");
      if (!verts.empty() && x <= verts.back())
        fail(Errc::parse_error, "facet vertices must be strictly increasing");
      verts.push_back(static_cast<VertexId>(x));
    }
    if (!fs.eof()) fail(Errc::parse_error, "invalid token in facet line");
    if (verts.empty()) fail(Errc::parse_error, "empty facet line");
    if (facets.empty()) {
      if (verts.size() < 2) fail(Errc::invalid_parameters, "facets need at least 2 vertices");
      first_size = verts.size();
    } else if (verts.size() != first_size) {
      fail(Errc::non_uniform_cardinality, "facet cardinality differs from previous facets");
    }
    if (header_n != 0 && verts.back() > header_n)
      fail(Errc::vertex_outside_universe, "vertex exceeds declared universe");
    std::vector<VertexId> key = verts;  // already sorted (strictly increasing)
    for (const auto& s : seen_sorted)
      if (s == key) fail(Errc::duplicate_facet, "duplicate facet");
    seen_sorted.push_back(std::move(key));
    facets.push_back(std::move(verts));
  }
  if (facets.empty()) throw Error(Errc::empty_family, "no facet lines in input");
  if (header_n == 0) return from_facets(facets);
  std::vector<VertexId> uni;
  for (int v = 1; v <= header_n; ++v) uni.push_back(v);
  return from_facets(facets, uni);
}

inline PureComplex parse_complex_text(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

inline PureComplex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  return parse_complex(in);
}

inline std::string format_complex(const PureComplex& c) {
  if (c.degenerate())
    throw Error(Errc::invalid_parameters,
                "a degenerate (facet-free) complex has no text representation");
  std::vector<VertexId> facet_union;
  for (const Facet& f : c.facets())
    facet_union.insert(facet_union.end(), f.vertices().begin(), f.vertices().end());
  facet_union = detail::sorted_unique(std::move(facet_union));
  std::ostringstream os;
  if (facet_union != c.universe()) {
    if (!c.canonical_universe())
      throw Error(Errc::invalid_parameters,
                  "universe exceeds the facet union and is not {1..n}: not representable");
    os << "vertices " << c.vertex_count() << '\n';
  }
  std::vector<std::vector<VertexId>> lists;
  for (const Facet& f : c.facets()) lists.push_back(f.vertices());
  std::sort(lists.begin(), lists.end());
  for (const auto& fv : lists) {
    for (std::size_t i = 0; i < fv.size(); ++i) {
      if (i) os << ' ';
      os << fv[i];
    }
    os << '\n';
  }
  return os.str();
}

inline void write_complex_file(const PureComplex& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot open '" + path + "' for writing");
  out << format_complex(c);
}

}  // namespace hamplex
