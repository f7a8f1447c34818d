// Command-line surface for the 2-bridge 2-adjacency pipeline.
//
// Exit codes: 0 success, 1 verified-false, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "knotadj/graph.hpp"
#include "knotadj/serialize.hpp"

using namespace knotadj;

namespace {

constexpr int kExitVerifiedFalse = 1;
constexpr int kExitUsage = 2;

std::vector<long> parse_range(const std::string& spec) {
  // "a..b" or a single value; zero is never part of a grid.
  long lo = 0, hi = 0;
  auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stol(spec);
    } else {
      lo = std::stol(spec.substr(0, dots));
      hi = std::stol(spec.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw Error("malformed range '" + spec + "'");
  }
  if (lo > hi) throw Error("empty range '" + spec + "'");
  std::vector<long> vals;
  for (long v = lo; v <= hi; ++v)
    if (v != 0) vals.push_back(v);
  if (vals.empty()) throw Error("range '" + spec + "' contains only 0");
  return vals;
}

void print_fingerprint(const Fingerprint& fp) {
  std::cout << "components: " << fp.components << "\n";
  if (fp.fraction) std::cout << "fraction: " << fp.fraction->str() << "\n";
  if (fp.determinant) std::cout << "determinant: " << fp.determinant->str() << "\n";
  if (fp.jones) std::cout << "jones: " << fp.jones->str() << "\n";
  if (fp.alexander) std::cout << "alexander: " << fp.alexander->str() << "\n";
  if (fp.genus) std::cout << "genus: " << *fp.genus << "\n";
}

Laurent parse_delta(const std::string& spec) {
  if (spec.empty() || spec == "1") return Laurent::one('t');
  std::vector<std::string> terms;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) terms.push_back(item);
  return Laurent::from_term_list(terms, 't');
}

int cmd_parse(const std::string& word_text) {
  BraidWord w = parse_braid_word(word_text);
  std::cout << "normal form: " << format_braid_word(w) << "\n";
  std::string vec = format_exponent_vector(w);
  if (!vec.empty()) std::cout << "exponent vector: " << vec << "\n";
  std::cout << "syllables: " << w.size() << "\n";
  std::cout << "crossings: " << w.crossings() << "\n";
  return 0;
}

int cmd_invariants(const std::string& word_text, const FingerprintPolicy& policy) {
  BraidWord w = parse_braid_word(word_text);
  Fingerprint fp = fingerprint(two_bridge_closure(w), policy);
  print_fingerprint(fp);
  return 0;
}

int cmd_closure(const std::string& word_text) {
  BraidWord w = parse_braid_word(word_text);
  PlanarDiagram d = two_bridge_closure(w);
  std::cout << "pd: " << pd_code(d) << "\n";
  std::cout << "components: " << d.components << "\n";
  std::cout << "crossings: " << d.crossing_total() << "\n";
  std::cout << "writhe: " << d.writhe << "\n";
  std::cout << "bottom caps: " << (d.cross_caps ? "0-3,1-2" : "0-1,2-3") << "\n";
  return 0;
}

int cmd_fraction(const std::string& word_text, const std::string& p_text,
                 const std::string& q_text) {
  if (!word_text.empty()) {
    BraidWord w = parse_braid_word(word_text);
    std::cout << word_to_fraction(w).str() << "\n";
    return 0;
  }
  Fraction f;
  try {
    f.p = BigInt(p_text);
    f.q = BigInt(q_text);
  } catch (const std::exception&) {
    throw Error("malformed fraction numbers");
  }
  if (f.p <= 0) throw Error("p must be positive");
  BraidWord w = fraction_to_canonical_word(f);
  std::cout << "canonical: " << canonical(f).str() << "\n";
  std::cout << "word: " << format_braid_word(w) << "\n";
  return 0;
}

int cmd_verify(const std::string& beta_text, long m, long n,
               const FingerprintPolicy& policy) {
  BraidWord beta = parse_braid_word(beta_text);
  if (beta.size() % 2 == 0) beta = normalize_to_odd_length(beta);
  AdjacencyWitness w = verify_two_adjacency(beta, FamilyParams{m, n}, policy);
  std::cout << witness_to_json(w).dump(2) << "\n";
  return w.verdict ? 0 : kExitVerifiedFalse;
}

int cmd_tower(const std::string& beta_text, int depth, long m, long n,
              const FingerprintPolicy& policy) {
  BraidWord beta = parse_braid_word(beta_text);
  if (beta.size() % 2 == 0) beta = normalize_to_odd_length(beta);
  BraidWord cur = beta;
  bool all_ok = true;
  std::cout << "level 0: " << format_braid_word(cur) << "  "
            << word_to_fraction(cur).str() << "\n";
  for (int i = 0; i < depth; ++i) {
    AdjacencyWitness w = verify_two_adjacency(cur, FamilyParams{m, n}, policy);
    cur = w.family_word;
    std::cout << "level " << i + 1 << ": " << w.family_word.size()
              << " syllables  " << word_to_fraction(cur).str() << "  adjacency "
              << (w.verdict ? "verified" : "FAILED") << "\n";
    all_ok = all_ok && w.verdict;
  }
  return all_ok ? 0 : kExitVerifiedFalse;
}

int cmd_graph(const std::string& bases_path, const std::string& m_spec,
              const std::string& n_spec, int depth, long tower_m, long tower_n,
              const std::string& dot_path, const std::string& json_path,
              int jobs, bool allow_loops, const FingerprintPolicy& policy) {
  std::ifstream in(bases_path);
  if (!in) throw Error("cannot read bases file '" + bases_path + "'");
  std::vector<BraidWord> bases;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    auto a = trimmed.find_first_not_of(" \t\r");
    if (a == std::string::npos || trimmed[a] == '#') continue;
    BraidWord w = parse_braid_word(trimmed);
    if (w.size() % 2 == 0) w = normalize_to_odd_length(w);
    bases.push_back(w);
  }
  BuildReport report;
  AdjacencyGraph g =
      build_family_graph(bases, parse_range(m_spec), parse_range(n_spec), depth,
                         FamilyParams{tower_m, tower_n}, policy, jobs, &report);
  if (allow_loops) g.set_allow_loops(true);
  g.set_provenance("tool", "knotadj");
  g.set_provenance("grid", m_spec + " x " + n_spec);
  g.set_provenance("tower_depth", std::to_string(depth));
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw Error("cannot write '" + dot_path + "'");
    out << export_dot(g);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw Error("cannot write '" + json_path + "'");
    out << export_json(g);
  }
  std::cout << "vertices: " << g.vertices().size() << "\n";
  std::cout << "edges: " << g.edges().size() << "\n";
  std::cout << "verified: " << report.verified << "\n";
  std::cout << "failures: " << report.failures.size() << "\n";
  std::cout << "distinct fractions: " << g.vertices().size() << "\n";
  for (const std::string& f : report.failures) std::cerr << "failure: " << f << "\n";
  for (const std::string& n2 : report.notes) std::cerr << "note: " << n2 << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-bridge knot 2-adjacency toolkit"};
  app.require_subcommand(1);

  FingerprintPolicy policy;
  app.add_option("--alexander-cap", policy.alexander_cap,
                 "crossing cap for the Alexander channel")
      ->envname("ADJ_ALEX_CAP");

  std::string word_text, beta_text, p_text = "1", q_text = "0";
  long m = 1, n = 1;
  int depth = 0, jobs = 1;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse and normalize a braid word");
  parse_cmd->add_option("word", word_text, "braid word")->required();

  CLI::App* inv_cmd = app.add_subcommand("invariants", "fingerprint of the 2-bridge closure");
  inv_cmd->add_option("word", word_text, "braid word")->required();

  CLI::App* closure_cmd = app.add_subcommand("closure", "planar diagram of the 2-bridge closure");
  closure_cmd->add_option("word", word_text, "braid word")->required();

  CLI::App* fraction_cmd = app.add_subcommand("fraction", "fraction of a word, or word of a fraction");
  fraction_cmd->add_option("--word", word_text, "braid word");
  fraction_cmd->add_option("--p", p_text, "numerator");
  fraction_cmd->add_option("--q", q_text, "denominator");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify one 2-adjacency instance");
  verify_cmd->add_option("--beta", beta_text, "base braid word")->required();
  verify_cmd->add_option("--m", m, "first surgery order (nonzero)")->required();
  verify_cmd->add_option("--n", n, "second surgery order (nonzero)")->required();

  CLI::App* tower_cmd = app.add_subcommand("tower", "extend and verify a tower");
  tower_cmd->add_option("--beta", beta_text, "base braid word")->required();
  tower_cmd->add_option("--depth", depth, "tower depth")->required();
  tower_cmd->add_option("--m", m, "per-level first order");
  tower_cmd->add_option("--n", n, "per-level second order");

  std::string bases_path, m_spec = "-2..2", n_spec = "-2..2";
  std::string dot_path, json_path;
  long tower_m = 1, tower_n = 1;
  bool allow_loops = false;
  CLI::App* graph_cmd = app.add_subcommand("graph", "build a verified sample of the adjacency graph");
  graph_cmd->add_option("--bases", bases_path, "file with one base word per line")->required();
  graph_cmd->add_option("--m-range", m_spec, "grid range for m, e.g. -2..2 (0 skipped)");
  graph_cmd->add_option("--n-range", n_spec, "grid range for n");
  graph_cmd->add_option("--depth", depth, "tower depth per base");
  graph_cmd->add_option("--tower-m", tower_m, "per-level tower order m");
  graph_cmd->add_option("--tower-n", tower_n, "per-level tower order n");
  graph_cmd->add_option("--dot", dot_path, "write DOT export here");
  graph_cmd->add_option("--json", json_path, "write JSON export here");
  graph_cmd->add_option("--jobs", jobs, "worker threads for grid cells");
  graph_cmd->add_flag("--allow-loops", allow_loops, "keep verified self-loops");

  long genus = 1, genus_src = 1, genus_dst = 0, order = 2;
  std::string delta_spec = "1";
  bool isotopic = false, fibered = true;
  CLI::App* obstruct_cmd = app.add_subcommand("obstruct", "adjacency obstruction predicates");
  obstruct_cmd->require_subcommand(1);
  CLI::App* ob_unknot = obstruct_cmd->add_subcommand("unknot", "n-adjacency to the unknot");
  ob_unknot->add_option("--genus", genus, "Seifert genus, >= 1")->required();
  ob_unknot->add_option("--order", order, "adjacency order n")->required();
  ob_unknot->add_option("--delta", delta_spec,
                        "Alexander polynomial as comma-separated terms, e.g. "
                        "'1*t^-1,-1*t^0,1*t^1'; default trivial");
  CLI::App* ob_pair = obstruct_cmd->add_subcommand("pair", "genus bound for a knot pair");
  ob_pair->add_option("--genus-src", genus_src)->required();
  ob_pair->add_option("--genus-dst", genus_dst)->required();
  ob_pair->add_option("--order", order)->required();
  CLI::App* ob_fib = obstruct_cmd->add_subcommand("fibered", "fibered-target constraint");
  ob_fib->add_option("--genus-src", genus_src)->required();
  ob_fib->add_option("--genus-dst", genus_dst)->required();
  ob_fib->add_flag("--isotopic", isotopic, "source and target are isotopic");
  ob_fib->add_flag("!--not-fibered", fibered, "target is not fibered");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*parse_cmd) return cmd_parse(word_text);
    if (*inv_cmd) return cmd_invariants(word_text, policy);
    if (*closure_cmd) return cmd_closure(word_text);
    if (*fraction_cmd) return cmd_fraction(word_text, p_text, q_text);
    if (*verify_cmd) return cmd_verify(beta_text, m, n, policy);
    if (*tower_cmd) return cmd_tower(beta_text, depth, m, n, policy);
    if (*graph_cmd)
      return cmd_graph(bases_path, m_spec, n_spec, depth, tower_m, tower_n,
                       dot_path, json_path, jobs, allow_loops, policy);
    if (*obstruct_cmd) {
      if (*ob_unknot) {
        std::cout << to_string(obstruct_unknot_adjacency(genus, order,
                                                         parse_delta(delta_spec)))
                  << "\n";
        return 0;
      }
      if (*ob_pair) {
        std::cout << (obstruct_pair_adjacency(genus_src, genus_dst, order)
                          ? "impossible"
                          : "not excluded")
                  << "\n";
        return 0;
      }
      if (*ob_fib) {
        std::cout << (obstruct_fibered_target(fibered, genus_src, genus_dst,
                                              isotopic)
                          ? "contradiction"
                          : "consistent")
                  << "\n";
        return 0;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
