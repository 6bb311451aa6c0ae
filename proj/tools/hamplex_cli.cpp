// hamplex command-line tool: generate the built-in complex families, decide
// Hamiltonicity with verifiable certificates, compute bistellar squares and
// dual graphs, complement complexes, test isomorphism, and run the
// verify-paper claim suite.
//
// Exit codes: 0 = success / property holds; 1 = property fails to hold
// (absent, invalid, not isomorphic, failing claim); 2 = usage or data error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamplex/constructions.hpp"
#include "hamplex/core.hpp"
#include "hamplex/dual.hpp"
#include "hamplex/flips.hpp"
#include "hamplex/hamiltonian.hpp"
#include "hamplex/io.hpp"
#include "hamplex/iso.hpp"
#include "hamplex/verify_paper.hpp"

namespace {

using namespace hamplex;

PureComplex load_complex(const std::string& path) {
  if (path == "-") return parse_complex(std::cin);
  return parse_complex_file(path);
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot open '" + out_path + "' for writing");
  out << text;
}

std::string brace_list(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << "}";
  return out.str();
}

int run_gen(const std::string& family, int d, const std::string& out_path) {
  PureComplex c = [&] {
    if (family == "dirac") return dirac_complex(d);
    if (family == "triple-apex") return triple_apex(d);
    if (family == "cycle-family") return cycle_family(d);
    if (family == "S") return complex_S();
    if (family == "K") return complex_K();
    throw Error(Errc::invalid_parameters,
                "unknown family '" + family +
                    "' (expected dirac, triple-apex, cycle-family, S, or K)");
  }();
  emit_text(format_complex(c), out_path);
  return 0;
}

int run_check(const std::string& in_path, const std::string& kind, const std::string& shape,
              const std::string& chain, bool oracle, int threads,
              const std::string& verify_path, const std::string& cert_out) {
  PureComplex c = load_complex(in_path);
  const ChainPolicy policy = policy_from_name(chain);
  if (!verify_path.empty()) {
    std::ifstream in(verify_path, std::ios::binary);
    if (!in) throw Error(Errc::parse_error, "cannot open certificate '" + verify_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ParsedCertificate parsed = parse_certificate(buf.str());
    ChainCheck chk = verify_chain(c, parsed.chain, parsed.policy);
    if (chk.ok) {
      std::cout << "valid\n";
      return 0;
    }
    std::cout << "invalid (" << chk.violation << ")\n";
    return 1;
  }
  const HamKind k = kind_from_name(kind);
  const HamShape s = shape_from_name(shape);
  HamAnswer a = oracle ? find_hamiltonian_bruteforce(c, k, s, policy)
                       : find_hamiltonian(c, k, s, policy, threads);
  if (!a.found()) {
    std::cout << "absent (" << a.absence_reason << ")\n";
    return 1;
  }
  ChainCheck chk = verify_chain(c, *a.chain, policy);
  if (!chk.ok) throw Error(Errc::invalid_parameters, "internal: certificate failed " + chk.violation);
  std::cout << "present\n" << format_certificate(*a.chain, policy);
  if (!cert_out.empty()) emit_text(format_certificate(*a.chain, policy), cert_out);
  return 0;
}

int run_square(const std::string& in_path, const std::string& mode_name, bool list_moves,
               const std::string& out_path) {
  PureComplex c = load_complex(in_path);
  const FlipMode mode = flip_mode_from_name(mode_name);
  if (!list_moves) {
    emit_text(format_complex(square(c, mode)), out_path);
    return 0;
  }
  std::vector<FlipMove> moves = enumerate_flips(c, mode);
  std::sort(moves.begin(), moves.end(), [](const FlipMove& a, const FlipMove& b) {
    if (a.a_face != b.a_face) return a.a_face < b.a_face;
    return a.b_simplex < b.b_simplex;
  });
  std::ostringstream out;
  for (const FlipMove& mv : moves) {
    std::vector<std::vector<VertexId>> adds;
    for (const Facet& f : mv.introduced) adds.push_back(f.vertices());
    std::sort(adds.begin(), adds.end());
    out << "A=" << brace_list(mv.a_face.vertices()) << " B=" << brace_list(mv.b_simplex.vertices())
        << " adds={";
    for (std::size_t i = 0; i < adds.size(); ++i) out << (i ? "," : "") << brace_list(adds[i]);
    out << "}\n";
  }
  emit_text(out.str(), out_path);
  return 0;
}

int run_dual(const std::string& in_path, const std::string& check, int k) {
  PureComplex c = load_complex(in_path);
  if (k > 0) {
    const bool ok = is_k_strongly_connected(c, k);
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
  }
  DualGraph g = dual_graph(c);
  if (check.empty()) {
    std::cout << format_edge_list(g);
    return 0;
  }
  bool ok = false;
  if (check == "connected") {
    ok = graph_connected(g);
  } else if (check == "two-connected") {
    ok = graph_two_connected(g);
  } else if (check == "ham-cycle" || check == "ham-path") {
    const HamShape shape = check == "ham-cycle" ? HamShape::cycle : HamShape::path;
    auto seq = graph_hamiltonian(g, shape);
    if (seq) {
      std::cout << "present\n";
      for (std::size_t i = 0; i < seq->size(); ++i)
        std::cout << (i ? " " : "") << g.label((*seq)[i]);
      std::cout << "\n";
      return 0;
    }
    std::cout << "absent\n";
    return 1;
  } else {
    throw Error(Errc::invalid_parameters,
                "unknown check '" + check +
                    "' (expected connected, two-connected, ham-cycle, or ham-path)");
  }
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int run_complement(const std::string& in_path, const std::string& out_path) {
  emit_text(format_complex(complement(load_complex(in_path))), out_path);
  return 0;
}

int run_iso(const std::string& path_a, const std::string& path_b) {
  PureComplex a = load_complex(path_a);
  PureComplex b = load_complex(path_b);
  auto witness = are_isomorphic(a, b);
  if (!witness) {
    std::cout << "NOT ISOMORPHIC\n";
    return 1;
  }
  for (const auto& [u, v] : witness->map) std::cout << u << " -> " << v << "\n";
  return 0;
}

int run_verify_paper(const std::string& only, const std::string& format, int threads) {
  if (format != "text" && format != "tsv")
    throw Error(Errc::invalid_parameters, "unknown format '" + format + "'");
  std::vector<ClaimResult> results = run_claims(only, threads);
  std::cout << (format == "tsv" ? format_report_tsv(results) : format_report_text(results));
  return all_selected_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pure simplicial complexes: Hamiltonicity certificates, bistellar squares, "
               "dual graphs, isomorphism, and the verify-paper claim suite"};
  app.require_subcommand(1);

  std::string family, in_path, out_path, kind = "weak", shape = "cycle", chain = "sorted-adjacent";
  std::string flip_mode = "relaxed", check, verify_path, cert_out, path_b, only = "*",
              format = "text";
  int d = 2, threads = 1, k = 0;
  bool oracle = false, list_moves = false;

  CLI::App* gen = app.add_subcommand("gen", "write a built-in complex family");
  gen->add_option("family", family, "dirac | triple-apex | cycle-family | S | K")->required();
  gen->add_option("--d", d, "dimension for the parameterized families (default 2)");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* chk = app.add_subcommand("check", "decide Hamiltonicity, emitting a certificate");
  chk->add_option("file", in_path, "complex file ('-' for stdin)")->required();
  chk->add_option("--kind", kind, "tight | loose | weak (default weak)");
  chk->add_option("--shape", shape, "path | cycle (default cycle)");
  chk->add_option("--chain", chain, "sorted | coverage-only (default sorted)");
  chk->add_flag("--oracle", oracle, "use the brute-force oracle (vertex count <= 8)");
  chk->add_option("--threads", threads, "parallel search width (default 1)");
  chk->add_option("--verify", verify_path, "verify this certificate file instead of searching");
  chk->add_option("--certificate-out", cert_out, "also write the certificate to this file");

  CLI::App* sq = app.add_subcommand("square", "adjoin all facets introduced by bistellar flips");
  sq->add_option("file", in_path, "complex file ('-' for stdin)")->required();
  sq->add_option("--flip-mode", flip_mode, "strict | relaxed (default relaxed)");
  sq->add_flag("--list-moves", list_moves, "print the flips instead of the squared complex");
  sq->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* du = app.add_subcommand("dual", "dual graph: edge list, checks, k-strong connectivity");
  du->add_option("file", in_path, "complex file ('-' for stdin)")->required();
  du->add_option("--check", check, "connected | two-connected | ham-cycle | ham-path");
  du->add_option("--k", k, "test k-strong connectivity of the complex instead");

  CLI::App* co = app.add_subcommand("complement", "complement within the same skeleton");
  co->add_option("file", in_path, "complex file ('-' for stdin)")->required();
  co->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* is = app.add_subcommand("iso", "isomorphism test with a vertex-map witness");
  is->add_option("file_a", in_path, "first complex file")->required();
  is->add_option("file_b", path_b, "second complex file")->required();

  CLI::App* vp = app.add_subcommand("verify-paper", "run the built-in claim registry");
  vp->add_option("--only", only, "glob over claim ids (default '*')");
  vp->add_option("--format", format, "text | tsv (default text)");
  vp->add_option("--threads", threads, "claims run concurrently when > 1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(family, d, out_path);
    if (chk->parsed())
      return run_check(in_path, kind, shape, chain, oracle, threads, verify_path, cert_out);
    if (sq->parsed()) return run_square(in_path, flip_mode, list_moves, out_path);
    if (du->parsed()) return run_dual(in_path, check, k);
    if (co->parsed()) return run_complement(in_path, out_path);
    if (is->parsed()) return run_iso(in_path, path_b);
    if (vp->parsed()) return run_verify_paper(only, format, threads);
  } catch (const hamplex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
