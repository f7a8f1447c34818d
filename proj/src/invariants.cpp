#include "knotadj/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace knotadj {

namespace {

Laurent loop_value() {
  Laurent d('A');
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

Laurent delta_power(int k) {
  Laurent out = Laurent::one('A');
  Laurent d = loop_value();
  for (int i = 0; i < k; ++i) out = out * d;
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Laurent kauffman_bracket(const PlanarDiagram& d) {
  if (d.crossings.empty()) return delta_power(d.components - 1);
  // State vector over the noncrossing pairings of the four endpoints:
  // c0 on {(01),(23)}, c1 on {(03),(12)}. A positive letter contributes
  // A*id + A^{-1}*E, a negative one swaps the weights.
  Laurent delta = loop_value();
  Laurent c0 = Laurent::one('A');
  Laurent c1('A');
  Laurent A = Laurent::monomial(1, 1, 'A');
  Laurent Ainv = Laurent::monomial(1, -1, 'A');
  for (const Syllable& s : d.word) {
    const Laurent& twist = s.exp > 0 ? A : Ainv;
    const Laurent& smooth = s.exp > 0 ? Ainv : A;
    long reps = s.exp < 0 ? -s.exp : s.exp;
    for (long k = 0; k < reps; ++k) {
      Laurent e0, e1;
      if (s.gen == 1) {
        // E1: e0 -> e1, e1 -> delta*e1
        e0 = twist * c0;
        e1 = twist * c1 + smooth * (c0 + delta * c1);
      } else {
        // E2: e0 -> delta*e0, e1 -> e0
        e0 = twist * c0 + smooth * (delta * c0 + c1);
        e1 = twist * c1;
      }
      c0 = std::move(e0);
      c1 = std::move(e1);
    }
  }
  return d.cross_caps ? c0 + delta * c1 : delta * c0 + c1;
}

Laurent kauffman_bracket_state_sum(const PlanarDiagram& d) {
  if (d.crossings.empty()) return delta_power(d.components - 1);
  int c = static_cast<int>(d.crossings.size());
  if (c > 14) throw Error("state sum limited to 14 crossings");
  Laurent out('A');
  Laurent delta = loop_value();
  for (unsigned long state = 0; state < (1ul << c); ++state) {
    int a_minus_b = 0;
    Dsu dsu(d.edge_count);
    for (int i = 0; i < c; ++i) {
      const DiagramCrossing& x = d.crossings[i];
      bool a_smooth = !((state >> i) & 1ul);
      a_minus_b += a_smooth ? 1 : -1;
      // The A-smoothing of a positive letter keeps the strands parallel.
      bool vertical = (x.eps > 0) == a_smooth;
      if (vertical) {
        dsu.unite(x.in_l, x.out_l);
        dsu.unite(x.in_r, x.out_r);
      } else {
        dsu.unite(x.in_l, x.in_r);
        dsu.unite(x.out_l, x.out_r);
      }
    }
    int loops = 0;
    for (int e = 0; e < d.edge_count; ++e)
      if (dsu.find(e) == e) ++loops;
    out += Laurent::monomial(1, a_minus_b, 'A') * delta_power(loops - 1);
  }
  return out;
}

Laurent jones_polynomial(const PlanarDiagram& d) {
  if (d.components != 1)
    throw Error("Jones polynomial requires a knot (one component)");
  Laurent br = kauffman_bracket(d);
  long w = d.writhe;
  Laurent v = br.shifted(static_cast<int>(-3 * w));
  if (w % 2 != 0) v = -v;
  Laurent out('t');
  for (const auto& [e, coef] : v.terms()) {
    if (e % 4 != 0)
      throw Error("bracket exponent not divisible by 4; link input?");
    out.add_term(-e / 4, coef);
  }
  return out;
}

namespace {

// Fraction-free Bareiss elimination; exact over the Laurent ring.
Laurent bareiss_determinant(std::vector<std::vector<Laurent>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Laurent::one('t');
  int sign = 1;
  Laurent prev = Laurent::one('t');
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Laurent('t');  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Laurent num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
      m[i][k] = Laurent('t');
    }
    prev = m[k][k];
  }
  Laurent det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Laurent alexander_polynomial(const PlanarDiagram& d) {
  if (d.components != 1)
    throw Error("Alexander polynomial requires a knot (one component)");
  int c = static_cast<int>(d.crossings.size());
  if (c <= 1) return Laurent::one('t');

  Laurent t = Laurent::monomial(1, 1, 't');
  Laurent tinv = Laurent::monomial(1, -1, 't');
  Laurent one = Laurent::one('t');
  // One relation per crossing; generators are the arcs. Drop the last row
  // and column and take the determinant of the remainder.
  int n = c - 1;
  std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n, Laurent('t')));
  for (int i = 0; i < n; ++i) {
    const auto& row = d.wirtinger[i];
    auto add = [&](int arc, const Laurent& coef) {
      if (arc < n) m[i][arc] += coef;
    };
    if (row.sign > 0) {
      add(row.over, one - t);
      add(row.under_in, t);
      add(row.under_out, -one);
    } else {
      add(row.over, one - tinv);
      add(row.under_in, tinv);
      add(row.under_out, -one);
    }
  }
  Laurent det = bareiss_determinant(std::move(m));
  if (det.is_zero()) throw Error("degenerate Alexander matrix");

  // Normalize: strip the unit t^k, force D(1) = 1, center symmetrically.
  det = det.shifted(-det.min_exp());
  BigInt at_one = det.evaluate(1);
  if (at_one == -1)
    det = -det;
  else if (at_one != 1)
    throw Error("Alexander normalization failed: D(1) != +-1");
  int span = det.max_exp();
  if (span % 2 != 0) throw Error("Alexander polynomial with odd span");
  det = det.shifted(-span / 2);
  if (!(det == det.inverted_variable()))
    throw Error("Alexander polynomial not symmetric");
  return det;
}

BigInt determinant(const PlanarDiagram& d) {
  Laurent delta = alexander_polynomial(d);
  BigInt v = delta.evaluate(-1);
  return v < 0 ? BigInt(-v) : v;
}

bool same_knot_fingerprint(const Fingerprint& a, const Fingerprint& b) {
  if (a.components != 1 || b.components != 1) return false;
  if (!a.fraction || !b.fraction) return false;
  if (!schubert_equivalent(*a.fraction, *b.fraction)) return false;
  if (!a.jones || !b.jones || !(*a.jones == *b.jones)) return false;
  if (a.alexander && b.alexander && !(*a.alexander == *b.alexander))
    return false;
  return true;
}

Fingerprint fingerprint(const PlanarDiagram& d, const FingerprintPolicy& policy) {
  Fingerprint fp;
  fp.components = d.components;
  if (fp.components != 1) return fp;
  fp.fraction = try_sequence_fraction(d.word, d.cross_caps);
  fp.jones = jones_polynomial(d);
  if (d.crossing_total() <= policy.alexander_cap) {
    Laurent delta = alexander_polynomial(d);
    BigInt det = delta.evaluate(-1);
    fp.determinant = det < 0 ? BigInt(-det) : det;
    fp.genus = delta.is_constant() ? 0 : delta.max_exp();
    fp.alexander = std::move(delta);
  }
  return fp;
}

}  // namespace knotadj
