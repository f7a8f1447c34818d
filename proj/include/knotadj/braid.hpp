#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "knotadj/error.hpp"

namespace knotadj {

// One syllable sigma_gen^exp of a word in B3. gen is 1 or 2, exp is nonzero.
struct Syllable {
  int gen = 1;
  long exp = 0;
  bool operator==(const Syllable&) const = default;
};

// Raw syllable sequence, not necessarily freely reduced. Surgery internals
// work on these; the public word type below enforces the normal form.
using SyllableSeq = std::vector<Syllable>;

// Merge adjacent equal-generator syllables and drop zero exponents,
// cascading until stable.
SyllableSeq normalize_syllables(SyllableSeq s);
bool is_normal(const SyllableSeq& s);
long crossing_count(const SyllableSeq& s);

// A word in B3 held in normal form: nonzero exponents, adjacent syllables
// use distinct generators. The empty word is the identity.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(SyllableSeq raw) : syl_(normalize_syllables(std::move(raw))) {}

  const SyllableSeq& syllables() const { return syl_; }
  std::size_t size() const { return syl_.size(); }
  bool empty() const { return syl_.empty(); }
  const Syllable& operator[](std::size_t i) const { return syl_[i]; }
  long crossings() const { return crossing_count(syl_); }
  bool starts_with_sigma1() const { return !syl_.empty() && syl_.front().gen == 1; }
  bool ends_with_sigma1() const { return !syl_.empty() && syl_.back().gen == 1; }

  bool operator==(const BraidWord&) const = default;

 private:
  SyllableSeq syl_;
};

// Position of a syllable inside a word; used to address surgery sites.
struct SiteRef {
  std::size_t syllable = 0;
  bool operator==(const SiteRef&) const = default;
};

// Text grammar: whitespace-separated syllables "s1", "s2^-3", ...; or the
// exponent-vector form "[3,-2,1]" meaning alternating generators starting
// at sigma_1. Explicit zero exponents are rejected in both forms.
BraidWord parse_braid_word(const std::string& text);
std::string format_braid_word(const BraidWord& w);
// "[3,-2,1]" when the word alternates starting at sigma_1, else empty.
std::string format_exponent_vector(const BraidWord& w);

BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord mirror(const BraidWord& w);

// Closure-preserving reduction: free normalization plus removal of a
// leading sigma_2 syllable (absorbed by the top 2-3 cap). Idempotent.
BraidWord reduce_closure_word(const BraidWord& w);
SyllableSeq reduce_closure_syllables(SyllableSeq s);

// Rewrite an even-length word to an odd-length one with the same closure
// (same Schubert class, hence equal fingerprint). Odd input is returned
// unchanged. Defined in twobridge.cpp since it runs on the fraction.
BraidWord normalize_to_odd_length(const BraidWord& w);

}  // namespace knotadj
