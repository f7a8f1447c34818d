#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotadj/braid.hpp"
#include "knotadj/laurent.hpp"

namespace knotadj {

// The fraction p/q of a 2-bridge knot S(p,q). p > 0 and 0 <= q < p with
// gcd(p,q) = 1; q = 0 only for the unknot S(1,0). Mirrors are distinct:
// S(3,1) and S(3,2) are the two trefoils.
struct Fraction {
  BigInt p = 1;
  BigInt q = 0;
  bool operator==(const Fraction&) const = default;
  std::string str() const;  // "S(p,q)"
};

// Schubert-canonical representative: q replaced by min(q, q^{-1} mod p).
Fraction canonical(const Fraction& f);
bool is_canonical(const Fraction& f);

// p1 == p2 and q1 == q2 or q1*q2 == 1 (mod p).
bool schubert_equivalent(const Fraction& a, const Fraction& b);

// Class of the mirror image: q -> p - q.
Fraction mirror_class(const Fraction& f);

// Fraction of the 2-bridge closure, via one 2x2 integer twist matrix per
// syllable. Throws when the closure is a 2-component link (p even).
Fraction word_to_fraction(const BraidWord& w);
std::optional<Fraction> try_word_to_fraction(const BraidWord& w);
// Relaxed variant for raw sequences (surgered words); the cap pattern is
// taken from the final generator unless forced explicitly.
std::optional<Fraction> try_sequence_fraction(const SyllableSeq& raw);
std::optional<Fraction> try_sequence_fraction(const SyllableSeq& raw,
                                              bool cross_caps);

// Continued-fraction entry points: the list a1,a2,... means twisting
// alternating strands by a1, -a2, a3, -a4, ...; evaluation goes through the
// same calibrated matrices as word_to_fraction.
Fraction cf_to_fraction(const std::vector<long>& a);

// Odd-length word whose closure realizes the given knot fraction.
BraidWord fraction_to_canonical_word(const Fraction& f);

}  // namespace knotadj
