#pragma once

#include <optional>

#include "knotadj/diagram.hpp"
#include "knotadj/laurent.hpp"
#include "knotadj/twobridge.hpp"

namespace knotadj {

// Depth tier for fingerprint assembly. Jones is computed for every word via
// the transfer scan; the Alexander/determinant/genus channel is gated by a
// crossing cap because its elimination cost grows steeply.
struct FingerprintPolicy {
  long alexander_cap = 40;
};

// Bundle of exact invariants used as the isotopy oracle. Knot-only fields
// are absent for 2-component links and above the policy cap; they are never
// guessed.
struct Fingerprint {
  int components = 0;
  std::optional<Fraction> fraction;
  std::optional<BigInt> determinant;
  std::optional<Laurent> jones;
  std::optional<Laurent> alexander;
  std::optional<long> genus;
};

// Verdict-grade comparison: Schubert-equal fractions, equal Jones, and
// equal Alexander where both sides computed one.
bool same_knot_fingerprint(const Fingerprint& a, const Fingerprint& b);

// Kauffman bracket with <unknot> = 1 and loop value -A^2 - A^{-2}.
// Transfer scan over the two planar pairings of the four plat endpoints;
// linear in the crossing count.
Laurent kauffman_bracket(const PlanarDiagram& d);
// Reference oracle: the 2^c state sum. Refuses more than 14 crossings.
Laurent kauffman_bracket_state_sum(const PlanarDiagram& d);

// V(t) = (-A)^{-3w} <D> with t = A^{-4}; knots only.
Laurent jones_polynomial(const PlanarDiagram& d);

// Alexander polynomial from the Wirtinger presentation with free-calculus
// derivatives, normalized so that D(1) = 1 and D(t) = D(1/t).
Laurent alexander_polynomial(const PlanarDiagram& d);

// |D(-1)|.
BigInt determinant(const PlanarDiagram& d);

Fingerprint fingerprint(const PlanarDiagram& d, const FingerprintPolicy& policy = {});

}  // namespace knotadj
