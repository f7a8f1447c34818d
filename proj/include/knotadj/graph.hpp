#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotadj/adjacency.hpp"

namespace knotadj {

struct KnotVertex {
  std::string id;     // canonical "S(p,q)"
  Fraction fraction;  // canonical
  Fingerprint fp;
  std::vector<std::string> names;
};

struct AdjEdge {
  std::string src;
  std::string dst;
  int order = 2;
  std::string construction;  // "k_beta_family" or "tower"
  FamilyParams params;
  CosmeticFlag cosmetic = CosmeticFlag::trivializable;
  int witness = -1;  // index into witnesses(); -1 when imported
};

// Finite verified sample of the 2-adjacency graph. Vertex identity is the
// Schubert-canonical fraction; inserting two words of the same class must
// agree on Jones, anything else is a pipeline bug and throws.
class AdjacencyGraph {
 public:
  // Returns the vertex id, creating the vertex if needed.
  std::string insert_knot(const BraidWord& w, const FingerprintPolicy& policy = {});
  std::string insert_vertex(const Fraction& canonical_fraction,
                            Fingerprint fp, const std::string& name);

  // False when a (src,dst,params) duplicate already exists. Loop edges
  // (src == dst) are rejected unless allow_loops() was set.
  bool add_edge(AdjEdge e);

  const std::map<std::string, KnotVertex>& vertices() const { return vertices_; }
  const std::vector<AdjEdge>& edges() const { return edges_; }
  const KnotVertex* find_vertex(const std::string& id) const;

  int store_witness(AdjacencyWitness w);
  const std::vector<AdjacencyWitness>& witnesses() const { return witnesses_; }

  void set_provenance(const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& provenance() const { return provenance_; }

  void set_allow_loops(bool v) { allow_loops_ = v; }
  bool allow_loops() const { return allow_loops_; }

 private:
  std::map<std::string, KnotVertex> vertices_;
  std::vector<AdjEdge> edges_;
  std::vector<AdjacencyWitness> witnesses_;
  std::map<std::string, std::string> provenance_;
  bool allow_loops_ = false;
};

struct BuildReport {
  std::size_t cells = 0;
  std::size_t verified = 0;
  std::size_t edges_added = 0;
  std::size_t tower_edges = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

// Runs verify_two_adjacency for every base and grid cell, inserting the
// verified edge K_beta(m,n) -> K_beta; then extends towers to the given
// depth with fixed per-level params. Cells fan out over a worker pool;
// results merge in deterministic cell order.
AdjacencyGraph build_family_graph(const std::vector<BraidWord>& bases,
                                  const std::vector<long>& m_values,
                                  const std::vector<long>& n_values,
                                  int tower_depth, FamilyParams tower_params,
                                  const FingerprintPolicy& policy = {},
                                  int jobs = 1, BuildReport* report = nullptr);

std::string export_dot(const AdjacencyGraph& g);
std::string export_json(const AdjacencyGraph& g);
AdjacencyGraph import_json(const std::string& text);

bool structurally_equal(const AdjacencyGraph& a, const AdjacencyGraph& b);

// Re-verifies every edge from its stored parameters and the destination
// class; returns the number of edges checked, throws on any mismatch.
std::size_t spot_check(const AdjacencyGraph& g, const FingerprintPolicy& policy = {});

}  // namespace knotadj
