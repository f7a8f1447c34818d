#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotadj/braid.hpp"

namespace knotadj {

// Bottom cap pattern of the plat. The top caps are always (0-1),(2-3).
//   parallel: bottom caps (0-1),(2-3)  -- used when the word ends in sigma_1
//   cross:    bottom caps (0-3),(1-2)  -- used when the word ends in sigma_2
enum class CapRule { by_final_generator, parallel, cross };

struct DiagramCrossing {
  int in_l = -1, in_r = -1, out_l = -1, out_r = -1;  // edge ids
  int eps = 0;       // braid letter sign of the source syllable
  int syllable = 0;  // index into the source word
  // Orientation data filled by the component trace. A pass direction is
  // +1 when the strand runs downward through the crossing.
  int dir_left = 0, dir_right = 0;
  int sign = 0;  // eps * dir_left * dir_right
  // Entry/exit edge of each pass in knot orientation (0 = left NW-SE pass,
  // 1 = right NE-SW pass).
  std::array<int, 2> entry_edge = {-1, -1};
  std::array<int, 2> exit_edge = {-1, -1};
};

// Oriented planar diagram of the 2-bridge closure of a braid word, with the
// inert zero-th strand on the left. Orientation is fixed by tracing from
// strand 0's top cap downward.
struct PlanarDiagram {
  SyllableSeq word;
  bool cross_caps = false;
  std::vector<DiagramCrossing> crossings;
  int edge_count = 0;
  int components = 0;
  long writhe = 0;
  std::vector<std::vector<int>> site_crossings;    // per syllable
  std::vector<std::array<int, 2>> site_dirs;       // strand directions per twist box

  // Knot-only data (single component, at least one crossing).
  std::vector<int> arc_of_edge;  // Wirtinger arc per edge
  int arc_count = 0;
  struct WirtingerRow {
    int over = -1, under_in = -1, under_out = -1, sign = 0;
  };
  std::vector<WirtingerRow> wirtinger;

  long crossing_total() const { return static_cast<long>(crossings.size()); }
};

// The paper's closure: requires a nonempty word whose first generator is
// sigma_1; bottom caps follow the final generator.
PlanarDiagram two_bridge_closure(const BraidWord& w);

// Relaxed builder for internal use (surgered sequences, reduction property
// checks). Accepts any nonempty syllable sequence and an explicit cap rule.
PlanarDiagram plat_closure(const SyllableSeq& raw,
                           CapRule rule = CapRule::by_final_generator);

// Diagram with no crossings and the given number of disjoint circles.
PlanarDiagram crossingless_diagram(int loops);

int component_count(const PlanarDiagram& d);
int site_algebraic_intersection(const PlanarDiagram& d, SiteRef s);

// Text PD code, one "X[a,b,c,d]" token per crossing: a is the incoming
// under-strand edge, then the remaining edges counterclockwise. Edges are
// numbered from 1 along the orientation.
std::string pd_code(const PlanarDiagram& d);

}  // namespace knotadj
