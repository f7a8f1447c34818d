#include "knotadj/graph.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "knotadj/diagram.hpp"
#include "knotadj/serialize.hpp"
#include "knotadj/twobridge.hpp"

namespace knotadj {

using nlohmann::json;

std::string AdjacencyGraph::insert_knot(const BraidWord& w,
                                        const FingerprintPolicy& policy) {
  Fingerprint fp = fingerprint(two_bridge_closure(w), policy);
  if (fp.components != 1 || !fp.fraction)
    throw Error("cannot insert a link closure as a vertex");
  Fraction f = *fp.fraction;
  return insert_vertex(f, std::move(fp), format_braid_word(w));
}

std::string AdjacencyGraph::insert_vertex(const Fraction& fraction,
                                          Fingerprint fp,
                                          const std::string& name) {
  if (!is_canonical(fraction)) throw Error("vertex fraction not canonical");
  std::string id = fraction.str();
  auto it = vertices_.find(id);
  if (it != vertices_.end()) {
    KnotVertex& v = it->second;
    if (v.fp.jones && fp.jones && !(*v.fp.jones == *fp.jones))
      throw Error("Jones mismatch inside Schubert class " + id +
                  "; invariant pipeline bug");
    if (!v.fp.jones && fp.jones) v.fp = std::move(fp);
    if (!name.empty() &&
        std::find(v.names.begin(), v.names.end(), name) == v.names.end())
      v.names.push_back(name);
    return id;
  }
  KnotVertex v;
  v.id = id;
  v.fraction = fraction;
  v.fp = std::move(fp);
  if (!name.empty()) v.names.push_back(name);
  vertices_.emplace(id, std::move(v));
  return id;
}

bool AdjacencyGraph::add_edge(AdjEdge e) {
  if (!vertices_.count(e.src) || !vertices_.count(e.dst))
    throw Error("edge endpoints must be inserted first");
  if (e.src == e.dst && !allow_loops_) return false;
  for (const AdjEdge& old : edges_)
    if (old.src == e.src && old.dst == e.dst && old.params.m == e.params.m &&
        old.params.n == e.params.n)
      return false;
  edges_.push_back(std::move(e));
  return true;
}

const KnotVertex* AdjacencyGraph::find_vertex(const std::string& id) const {
  auto it = vertices_.find(id);
  return it == vertices_.end() ? nullptr : &it->second;
}

int AdjacencyGraph::store_witness(AdjacencyWitness w) {
  witnesses_.push_back(std::move(w));
  return static_cast<int>(witnesses_.size()) - 1;
}

void AdjacencyGraph::set_provenance(const std::string& key,
                                    const std::string& value) {
  provenance_[key] = value;
}

namespace {

struct Cell {
  std::size_t base_index;
  FamilyParams params;
};

std::string cell_label(const BraidWord& base, FamilyParams p) {
  std::ostringstream os;
  os << "base '" << format_braid_word(base) << "' (m=" << p.m << ", n=" << p.n
     << ")";
  return os.str();
}

}  // namespace

AdjacencyGraph build_family_graph(const std::vector<BraidWord>& bases,
                                  const std::vector<long>& m_values,
                                  const std::vector<long>& n_values,
                                  int tower_depth, FamilyParams tower_params,
                                  const FingerprintPolicy& policy, int jobs,
                                  BuildReport* report) {
  AdjacencyGraph g;
  BuildReport local;
  BuildReport& rep = report ? *report : local;

  std::vector<Cell> cells;
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (long m : m_values)
      for (long n : n_values) {
        if (m == 0 || n == 0) throw Error("grid bounds exclude 0");
        cells.push_back({b, FamilyParams{m, n}});
      }
  rep.cells = cells.size();

  struct CellResult {
    bool ok = false;
    std::string error;
    AdjacencyWitness witness;
    Fingerprint family_fp;
  };
  std::vector<CellResult> results(cells.size());

  auto run_cell = [&](std::size_t i) {
    try {
      const BraidWord& base = bases[cells[i].base_index];
      results[i].witness = verify_two_adjacency(base, cells[i].params, policy);
      results[i].family_fp = fingerprint(
          two_bridge_closure(results[i].witness.family_word), policy);
      results[i].ok = true;
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  };

  int workers = std::max(1, jobs);
  if (workers == 1 || cells.size() < 2) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::vector<std::thread> pool;
    std::size_t stride = static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w]() {
        for (std::size_t i = static_cast<std::size_t>(w); i < cells.size();
             i += stride)
          run_cell(i);
      });
    for (std::thread& t : pool) t.join();
  }

  // Sequential merge, one writer, deterministic order.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const BraidWord& base = bases[cells[i].base_index];
    if (!results[i].ok) {
      rep.failures.push_back(cell_label(base, cells[i].params) + ": " +
                             results[i].error);
      continue;
    }
    AdjacencyWitness& w = results[i].witness;
    if (!w.verdict) {
      rep.failures.push_back(cell_label(base, cells[i].params) +
                             ": verdict false");
      continue;
    }
    ++rep.verified;
    std::string dst = g.insert_knot(base, policy);
    const Fingerprint& ffp = results[i].family_fp;
    if (ffp.components != 1 || !ffp.fraction) {
      rep.failures.push_back(cell_label(base, cells[i].params) +
                             ": family closure is not a knot");
      continue;
    }
    std::string src = g.insert_vertex(
        *ffp.fraction, ffp, format_braid_word(w.family_word));
    if (src == dst)
      rep.notes.push_back(cell_label(base, cells[i].params) +
                          ": family knot coincides with the base (loop)");
    AdjEdge e;
    e.src = src;
    e.dst = dst;
    e.construction = "k_beta_family";
    e.params = cells[i].params;
    e.cosmetic = w.cosmetic;
    e.witness = g.store_witness(std::move(w));
    if (g.add_edge(std::move(e)))
      ++rep.edges_added;
  }

  // Towers: each level verifies K_{beta_{i+1}} -> K_{beta_i}.
  for (const BraidWord& base : bases) {
    BraidWord cur = base;
    for (int depth = 0; depth < tower_depth; ++depth) {
      AdjacencyWitness w;
      try {
        w = verify_two_adjacency(cur, tower_params, policy);
      } catch (const std::exception& e) {
        rep.failures.push_back("tower level " + std::to_string(depth + 1) +
                               " of '" + format_braid_word(base) + "': " +
                               e.what());
        break;
      }
      if (!w.verdict) {
        rep.failures.push_back("tower level " + std::to_string(depth + 1) +
                               " of '" + format_braid_word(base) +
                               "': verdict false");
        break;
      }
      ++rep.verified;
      std::string dst = g.insert_knot(cur, policy);
      BraidWord next = w.family_word;
      std::string src = g.insert_knot(next, policy);
      AdjEdge e;
      e.src = src;
      e.dst = dst;
      e.construction = "tower";
      e.params = tower_params;
      e.cosmetic = w.cosmetic;
      e.witness = g.store_witness(std::move(w));
      if (g.add_edge(std::move(e))) {
        ++rep.edges_added;
        ++rep.tower_edges;
      }
      cur = next;
    }
  }
  return g;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

bool fraction_less(const Fraction& a, const Fraction& b) {
  if (a.p != b.p) return a.p < b.p;
  return a.q < b.q;
}

std::vector<const KnotVertex*> sorted_vertices(const AdjacencyGraph& g) {
  std::vector<const KnotVertex*> vs;
  for (const auto& [id, v] : g.vertices()) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(), [](const KnotVertex* a, const KnotVertex* b) {
    return fraction_less(a->fraction, b->fraction);
  });
  return vs;
}

std::vector<const AdjEdge*> sorted_edges(const AdjacencyGraph& g) {
  std::vector<const AdjEdge*> es;
  for (const AdjEdge& e : g.edges()) es.push_back(&e);
  std::sort(es.begin(), es.end(), [](const AdjEdge* a, const AdjEdge* b) {
    auto key = [](const AdjEdge& e) {
      return std::tuple(e.src, e.dst, e.params.m, e.params.n, e.construction);
    };
    return key(*a) < key(*b);
  });
  return es;
}

}  // namespace

std::string export_dot(const AdjacencyGraph& g) {
  std::ostringstream os;
  os << "digraph gamma2 {\n";
  for (const KnotVertex* v : sorted_vertices(g))
    os << "  " << dot_quote(v->id) << " [label=" << dot_quote(v->id) << "];\n";
  for (const AdjEdge* e : sorted_edges(g)) {
    os << "  " << dot_quote(e->src) << " -> " << dot_quote(e->dst)
       << " [label=" << dot_quote("n=" + std::to_string(e->order))
       << ", construction=" << dot_quote(e->construction)
       << ", m=" << dot_quote(std::to_string(e->params.m))
       << ", n=" << dot_quote(std::to_string(e->params.n))
       << ", cosmetic=" << dot_quote(to_string(e->cosmetic));
    if (e->src == e->dst) os << ", dir=" << dot_quote("both");
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const AdjacencyGraph& g) {
  json j;
  j["version"] = 1;
  if (!g.provenance().empty()) {
    json prov = json::object();
    for (const auto& [k, v] : g.provenance()) prov[k] = v;
    j["provenance"] = prov;
  }
  json vs = json::array();
  for (const KnotVertex* v : sorted_vertices(g)) {
    json jv;
    jv["id"] = v->id;
    jv["p"] = v->fraction.p.str();
    jv["q"] = v->fraction.q.str();
    jv["jones"] = v->fp.jones ? laurent_to_json(*v->fp.jones) : json::array();
    jv["names"] = v->names;
    vs.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vs);
  json es = json::array();
  for (const AdjEdge* e : sorted_edges(g)) {
    json je;
    je["src"] = e->src;
    je["dst"] = e->dst;
    je["n"] = e->order;
    je["construction"] = e->construction;
    je["params"] = {{"m", e->params.m}, {"n", e->params.n}};
    je["cosmetic"] = to_string(e->cosmetic);
    es.push_back(std::move(je));
  }
  j["edges"] = std::move(es);
  return j.dump(2) + "\n";
}

AdjacencyGraph import_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version"))
    throw Error("graph JSON missing version");
  if (j["version"] != 1)
    throw Error("unsupported graph schema version");
  AdjacencyGraph g;
  g.set_allow_loops(true);  // stored edges were legitimate at build time
  try {
    if (j.contains("provenance"))
      for (const auto& [k, v] : j["provenance"].items())
        g.set_provenance(k, v.get<std::string>());
    for (const json& jv : j.at("vertices")) {
      Fraction f{BigInt(jv.at("p").get<std::string>()),
                 BigInt(jv.at("q").get<std::string>())};
      if (!is_canonical(f)) throw Error("non-canonical vertex fraction");
      Fingerprint fp;
      fp.components = 1;
      fp.fraction = f;
      if (!jv.at("jones").empty())
        fp.jones = laurent_from_json(jv["jones"], 't');
      std::string id = g.insert_vertex(f, std::move(fp), "");
      if (id != jv.at("id").get<std::string>())
        throw Error("vertex id does not match its fraction");
      for (const json& name : jv.at("names"))
        g.insert_vertex(f, Fingerprint{}, name.get<std::string>());
    }
    for (const json& je : j.at("edges")) {
      AdjEdge e;
      e.src = je.at("src").get<std::string>();
      e.dst = je.at("dst").get<std::string>();
      e.order = je.at("n").get<int>();
      e.construction = je.at("construction").get<std::string>();
      e.params.m = je.at("params").at("m").get<long>();
      e.params.n = je.at("params").at("n").get<long>();
      std::string cs = je.at("cosmetic").get<std::string>();
      e.cosmetic = cs == "trivializable" ? CosmeticFlag::trivializable
                   : cs == "cosmetic"    ? CosmeticFlag::cosmetic
                                         : CosmeticFlag::unknown;
      if (!g.add_edge(std::move(e))) throw Error("duplicate edge in graph JSON");
    }
  } catch (const json::exception& e) {
    throw Error(std::string("graph JSON schema mismatch: ") + e.what());
  }
  return g;
}

bool structurally_equal(const AdjacencyGraph& a, const AdjacencyGraph& b) {
  if (a.vertices().size() != b.vertices().size()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  for (const auto& [id, va] : a.vertices()) {
    const KnotVertex* vb = b.find_vertex(id);
    if (!vb) return false;
    if (!(va.fraction == vb->fraction)) return false;
    bool ja = va.fp.jones.has_value(), jb = vb->fp.jones.has_value();
    if (ja != jb) return false;
    if (ja && !(*va.fp.jones == *vb->fp.jones)) return false;
    std::vector<std::string> na = va.names, nb = vb->names;
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    if (na != nb) return false;
  }
  auto edge_keys = [](const AdjacencyGraph& g) {
    std::vector<std::tuple<std::string, std::string, long, long, int,
                           std::string, std::string>>
        keys;
    for (const AdjEdge& e : g.edges())
      keys.emplace_back(e.src, e.dst, e.params.m, e.params.n, e.order,
                        e.construction, to_string(e.cosmetic));
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  return edge_keys(a) == edge_keys(b);
}

std::size_t spot_check(const AdjacencyGraph& g, const FingerprintPolicy& policy) {
  std::size_t checked = 0;
  for (const AdjEdge& e : g.edges()) {
    const KnotVertex* dst = g.find_vertex(e.dst);
    const KnotVertex* src = g.find_vertex(e.src);
    if (!dst || !src) throw Error("edge with missing endpoint");
    bool have_witness = e.witness >= 0 &&
                        e.witness < static_cast<int>(g.witnesses().size());
    // With the witness at hand the original base word is known and the src
    // class must reappear; an imported edge only pins the dst class, since
    // different words for dst give different neighbors.
    BraidWord base = have_witness ? g.witnesses()[e.witness].base_word
                                  : fraction_to_canonical_word(dst->fraction);
    AdjacencyWitness w = verify_two_adjacency(base, e.params, policy);
    if (!w.verdict)
      throw Error("edge failed re-verification: " + e.src + " -> " + e.dst);
    for (const Fingerprint* fp : {&w.surgered_m, &w.surgered_n, &w.surgered_both})
      if (!fp->fraction || !schubert_equivalent(*fp->fraction, dst->fraction))
        throw Error("re-verified surgery does not land on " + e.dst);
    if (have_witness) {
      Fingerprint ffp = fingerprint(two_bridge_closure(w.family_word), policy);
      if (!ffp.fraction || !schubert_equivalent(*ffp.fraction, src->fraction))
        throw Error("re-verified family knot does not match " + e.src);
    }
    ++checked;
  }
  return checked;
}

}  // namespace knotadj
