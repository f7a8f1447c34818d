#include "knotadj/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace knotadj {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Slot ids inside a crossing record.
constexpr int kNW = 0, kNE = 1, kSW = 2, kSE = 3;

int slot_edge(const DiagramCrossing& c, int slot) {
  switch (slot) {
    case kNW: return c.in_l;
    case kNE: return c.in_r;
    case kSW: return c.out_l;
    default: return c.out_r;
  }
}

}  // namespace

PlanarDiagram plat_closure(const SyllableSeq& raw, CapRule rule) {
  if (raw.empty()) throw Error("cannot close the empty word");
  for (const Syllable& s : raw) {
    if (s.gen != 1 && s.gen != 2) throw Error("generator must be 1 or 2");
    if (s.exp == 0) throw Error("zero exponent in closure word");
  }
  bool cross = rule == CapRule::cross ||
               (rule == CapRule::by_final_generator && raw.back().gen == 2);

  PlanarDiagram d;
  d.word = raw;
  d.cross_caps = cross;
  d.site_crossings.resize(raw.size());

  int next_edge = 0;
  int e01 = next_edge++;
  int e23 = next_edge++;
  std::array<int, 4> cur = {e01, e01, e23, e23};
  // Last crossing hanging below each strand position, with its bottom slot.
  std::array<int, 4> last_cross = {-1, -1, -1, -1};
  std::array<int, 4> last_slot = {-1, -1, -1, -1};

  for (std::size_t s = 0; s < raw.size(); ++s) {
    int g = raw[s].gen;
    int eps = raw[s].exp > 0 ? 1 : -1;
    long reps = std::labs(raw[s].exp);
    for (long k = 0; k < reps; ++k) {
      DiagramCrossing c;
      c.in_l = cur[g];
      c.in_r = cur[g + 1];
      c.out_l = next_edge++;
      c.out_r = next_edge++;
      c.eps = eps;
      c.syllable = static_cast<int>(s);
      int idx = static_cast<int>(d.crossings.size());
      d.crossings.push_back(c);
      d.site_crossings[s].push_back(idx);
      cur[g] = c.out_l;
      cur[g + 1] = c.out_r;
      last_cross[g] = idx;
      last_slot[g] = kSW;
      last_cross[g + 1] = idx;
      last_slot[g + 1] = kSE;
    }
  }

  // Bottom caps merge the dangling edges.
  Dsu dsu(next_edge);
  if (!cross) {
    dsu.unite(cur[0], cur[1]);
    dsu.unite(cur[2], cur[3]);
  } else {
    dsu.unite(cur[0], cur[3]);
    dsu.unite(cur[1], cur[2]);
  }

  // Compact edge ids.
  std::vector<int> label(next_edge, -1);
  int n_edges = 0;
  auto compact = [&](int raw_id) {
    int r = dsu.find(raw_id);
    if (label[r] < 0) label[r] = n_edges++;
    return label[r];
  };
  for (DiagramCrossing& c : d.crossings) {
    c.in_l = compact(c.in_l);
    c.in_r = compact(c.in_r);
    c.out_l = compact(c.out_l);
    c.out_r = compact(c.out_r);
  }
  // Classes never touching a crossing form free loops (degenerate words).
  int free_loops = 0;
  for (int e = 0; e < next_edge; ++e)
    if (dsu.find(e) == e && label[e] < 0) ++free_loops;
  d.edge_count = n_edges;

  // Each edge must occur in exactly two crossing slots.
  std::vector<std::vector<std::pair<int, int>>> inc(n_edges);
  for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci)
    for (int slot = 0; slot < 4; ++slot)
      inc[slot_edge(d.crossings[ci], slot)].push_back({ci, slot});
  for (int e = 0; e < n_edges; ++e)
    if (inc[e].size() != 2) throw Error("malformed diagram: edge valence");

  // Component trace. Entering a crossing at a slot fixes the pass and the
  // travel direction; strands swap sides, so NW pairs with SE and NE with SW.
  std::vector<std::array<bool, 2>> seen(d.crossings.size(), {false, false});
  struct Step {
    int crossing, pass, dir, exit_edge;
  };
  std::vector<Step> first_walk;

  auto walk_from = [&](int c0, int slot0, std::vector<Step>* record) {
    int c = c0, slot = slot0;
    while (true) {
      int pass = (slot == kNW || slot == kSE) ? 0 : 1;
      if (seen[c][pass]) break;
      seen[c][pass] = true;
      int dir = (slot == kNW || slot == kNE) ? 1 : -1;
      DiagramCrossing& cr = d.crossings[c];
      if (pass == 0)
        cr.dir_left = dir;
      else
        cr.dir_right = dir;
      int exit_slot = 3 - slot;
      cr.entry_edge[pass] = slot_edge(cr, slot);
      cr.exit_edge[pass] = slot_edge(cr, exit_slot);
      int xe = cr.exit_edge[pass];
      if (record) record->push_back({c, pass, dir, xe});
      // Continue along the exit edge to its other incidence.
      auto& pair = inc[xe];
      if (pair[0].first == c && pair[0].second == exit_slot) {
        c = pair[1].first;
        slot = pair[1].second;
      } else {
        c = pair[0].first;
        slot = pair[0].second;
      }
    }
  };

  int components = free_loops;
  if (!d.crossings.empty()) {
    // Canonical start: trace strand 0 down, through the bottom cap, and up
    // into the last crossing on the partner strand.
    int j = cross ? 3 : 1;
    if (last_cross[j] >= 0) {
      walk_from(last_cross[j], last_slot[j], &first_walk);
      ++components;
    }
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
      for (int pass = 0; pass < 2; ++pass)
        if (!seen[c][pass]) {
          walk_from(c, pass == 0 ? kNW : kNE, nullptr);
          ++components;
        }
  }
  d.components = components;

  for (DiagramCrossing& c : d.crossings) {
    c.sign = c.eps * c.dir_left * c.dir_right;
    d.writhe += c.sign;
  }

  d.site_dirs.resize(raw.size());
  for (std::size_t s = 0; s < raw.size(); ++s) {
    const DiagramCrossing& c0 = d.crossings[d.site_crossings[s].front()];
    d.site_dirs[s] = {c0.dir_left, c0.dir_right};
  }

  // Wirtinger arcs: break the knot walk at each under-pass. The left pass
  // goes over exactly when the letter is positive.
  if (d.components == 1 && !first_walk.empty()) {
    d.arc_of_edge.assign(n_edges, -1);
    int entry0 = d.crossings[first_walk[0].crossing].entry_edge[first_walk[0].pass];
    int arc = 0;
    d.arc_of_edge[entry0] = 0;
    for (const Step& st : first_walk) {
      bool over = (st.pass == 0) == (d.crossings[st.crossing].eps > 0);
      if (!over) ++arc;
      d.arc_of_edge[st.exit_edge] = arc == static_cast<int>(d.crossings.size()) ? 0 : arc;
    }
    d.arc_count = static_cast<int>(d.crossings.size());
    for (const DiagramCrossing& c : d.crossings) {
      int over_pass = c.eps > 0 ? 0 : 1;
      int under_pass = 1 - over_pass;
      PlanarDiagram::WirtingerRow row;
      row.over = d.arc_of_edge[c.entry_edge[over_pass]];
      row.under_in = d.arc_of_edge[c.entry_edge[under_pass]];
      row.under_out = d.arc_of_edge[c.exit_edge[under_pass]];
      row.sign = c.sign;
      d.wirtinger.push_back(row);
    }
  }

  return d;
}

PlanarDiagram two_bridge_closure(const BraidWord& w) {
  if (w.empty()) throw Error("cannot close the empty word");
  if (!w.starts_with_sigma1())
    throw Error("2-bridge closure requires the word to start with s1");
  return plat_closure(w.syllables(), CapRule::by_final_generator);
}

PlanarDiagram crossingless_diagram(int loops) {
  if (loops < 1) throw Error("diagram needs at least one loop");
  PlanarDiagram d;
  d.components = loops;
  return d;
}

int component_count(const PlanarDiagram& d) { return d.components; }

int site_algebraic_intersection(const PlanarDiagram& d, SiteRef s) {
  if (s.syllable >= d.word.size()) throw Error("site out of range");
  if (d.components != 1)
    throw Error("algebraic intersection requires a knot closure");
  return d.site_dirs[s.syllable][0] + d.site_dirs[s.syllable][1];
}

std::string pd_code(const PlanarDiagram& d) {
  if (d.crossings.empty()) return "";
  // Each edge is the exit of exactly one pass and the entry of exactly one,
  // so the orientation induces a successor permutation on edges. Number
  // edges 1..E along its cycles.
  std::vector<int> pd_id(d.edge_count, 0);
  {
    std::vector<int> next_edge_of(d.edge_count, -1);
    for (const DiagramCrossing& c : d.crossings)
      for (int pass = 0; pass < 2; ++pass)
        if (c.entry_edge[pass] >= 0)
          next_edge_of[c.entry_edge[pass]] = c.exit_edge[pass];
    int next = 1;
    std::vector<bool> done(d.edge_count, false);
    for (int e = 0; e < d.edge_count; ++e) {
      int x = e;
      while (x >= 0 && !done[x]) {
        done[x] = true;
        pd_id[x] = next++;
        x = next_edge_of[x];
      }
    }
  }
  std::ostringstream os;
  bool first = true;
  for (const DiagramCrossing& c : d.crossings) {
    int under_pass = c.eps > 0 ? 1 : 0;
    int dir = under_pass == 0 ? c.dir_left : c.dir_right;
    int entry_slot;
    if (under_pass == 0)
      entry_slot = dir >= 0 ? kNW : kSE;
    else
      entry_slot = dir >= 0 ? kNE : kSW;
    // Cyclic slot order counterclockwise (strands drawn descending).
    static constexpr int cyc[4] = {kNW, kNE, kSE, kSW};
    int at = 0;
    while (cyc[at] != entry_slot) ++at;
    if (!first) os << ' ';
    first = false;
    os << "X[";
    for (int k = 0; k < 4; ++k) {
      if (k) os << ',';
      os << pd_id[slot_edge(c, cyc[(at + k) % 4])];
    }
    os << ']';
  }
  return os.str();
}

}  // namespace knotadj
