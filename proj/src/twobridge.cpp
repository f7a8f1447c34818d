#include "knotadj/twobridge.hpp"

#include <array>
#include <sstream>

namespace knotadj {

std::string Fraction::str() const {
  return "S(" + p.str() + "," + q.str() + ")";
}

namespace {

BigInt mod_positive(BigInt a, const BigInt& m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_positive(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt quot = old_r / r;
    BigInt tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error("no modular inverse");
  return mod_positive(old_s, m);
}

// Twist matrices, fixed once by the calibration tests against the
// determinant, Jones and component-count channels:
//   sigma_1^k -> [[1, k], [0, 1]]      sigma_2^k -> [[1, 0], [-k, 1]]
// The product is taken with the first syllable rightmost, so appending a
// syllable at the bottom of the braid multiplies on the left.
struct Mat2 {
  BigInt a = 1, b = 0, c = 0, d = 1;
};

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 syllable_matrix(const Syllable& s) {
  if (s.gen == 1) return {1, BigInt(s.exp), 0, 1};
  return {1, 0, BigInt(-s.exp), 1};
}

std::optional<Fraction> sequence_fraction_impl(const SyllableSeq& raw,
                                               bool cross_caps) {
  if (raw.empty()) return Fraction{1, 0};
  Mat2 m;
  for (const Syllable& s : raw) m = mul(syllable_matrix(s), m);
  // The top caps carry the slope (0,1); the closure pairs the pushed-forward
  // slope v = M(0,1) = (b,d) against the bottom-cap slope.
  BigInt p, qraw;
  if (!cross_caps) {
    p = m.b;
    qraw = m.d;
  } else {
    p = m.d;
    qraw = m.b;
  }
  if (p < 0) {
    p = -p;
    qraw = -qraw;
  }
  if (p % 2 == 0) return std::nullopt;  // 2-component link (or unlink, p = 0)
  if (p == 1) return Fraction{1, 0};
  return Fraction{p, mod_positive(qraw, p)};
}

}  // namespace

Fraction canonical(const Fraction& f) {
  if (f.p <= 1) return Fraction{1, 0};
  BigInt q = mod_positive(f.q, f.p);
  BigInt qi = mod_inverse(q, f.p);
  return Fraction{f.p, q < qi ? q : qi};
}

bool is_canonical(const Fraction& f) { return canonical(f) == f; }

bool schubert_equivalent(const Fraction& a, const Fraction& b) {
  if (a.p != b.p) return false;
  if (a.p <= 1) return true;
  if (mod_positive(a.q - b.q, a.p) == 0) return true;
  return mod_positive(a.q * b.q, a.p) == 1;
}

Fraction mirror_class(const Fraction& f) {
  if (f.p <= 1) return Fraction{1, 0};
  return canonical(Fraction{f.p, mod_positive(-f.q, f.p)});
}

std::optional<Fraction> try_sequence_fraction(const SyllableSeq& raw,
                                              bool cross_caps) {
  auto f = sequence_fraction_impl(raw, cross_caps);
  if (!f) return std::nullopt;
  return canonical(*f);
}

std::optional<Fraction> try_sequence_fraction(const SyllableSeq& raw) {
  return try_sequence_fraction(raw, !raw.empty() && raw.back().gen == 2);
}

std::optional<Fraction> try_word_to_fraction(const BraidWord& w) {
  return try_sequence_fraction(w.syllables());
}

Fraction word_to_fraction(const BraidWord& w) {
  if (w.empty()) throw Error("fraction of the empty word");
  if (!w.starts_with_sigma1())
    throw Error("fraction requires the word to start with s1");
  auto f = try_word_to_fraction(w);
  if (!f) throw Error("closure of '" + format_braid_word(w) +
                      "' is a 2-component link, not a knot");
  return *f;
}

Fraction cf_to_fraction(const std::vector<long>& a) {
  if (a.empty()) throw Error("empty continued fraction");
  SyllableSeq seq;
  int gen = 1;
  long sign = 1;
  for (long entry : a) {
    if (entry == 0) throw Error("zero entry in continued fraction");
    seq.push_back({gen, gen == 1 ? entry : -entry});
    gen = 3 - gen;
    sign = -sign;
  }
  auto f = try_sequence_fraction(normalize_syllables(seq));
  if (!f) throw Error("continued fraction evaluates to a link class");
  return *f;
}

BraidWord fraction_to_canonical_word(const Fraction& fin) {
  Fraction f = canonical(fin);
  if (f.p % 2 == 0) throw Error("even p is a link class, not a knot");
  if (f.p == 1) return parse_braid_word("s1");

  // Positive continued fraction of p/q, padded to odd length with the
  // tail identities [..,x] = [..,x-1,1] and [..,y,1] = [..,y+1].
  std::vector<BigInt> cf;
  BigInt p = f.p, q = f.q;
  while (q != 0) {
    cf.push_back(p / q);
    BigInt r = p % q;
    p = q;
    q = r;
  }
  if (cf.size() % 2 == 0) {
    if (cf.back() == 1) {
      cf.pop_back();
      cf.back() += 1;
    } else {
      cf.back() -= 1;
      cf.push_back(1);
    }
  }
  SyllableSeq seq;
  int gen = 1;
  for (const BigInt& entry : cf) {
    long e = entry.convert_to<long>();
    seq.push_back({gen, gen == 1 ? e : -e});
    gen = 3 - gen;
  }
  BraidWord w(seq);
  Fraction got = word_to_fraction(w);
  if (got == f) return w;
  BraidWord m = mirror(w);
  if (word_to_fraction(m) == f) return m;
  throw Error("failed to realize fraction " + f.str());
}

BraidWord normalize_to_odd_length(const BraidWord& w) {
  if (w.empty()) throw Error("cannot normalize the empty word");
  if (!w.starts_with_sigma1())
    throw Error("odd-length normalization requires the word to start with s1");
  if (w.size() % 2 == 1) return w;
  auto f = try_word_to_fraction(w);
  if (!f)
    throw Error("word '" + format_braid_word(w) +
                "' closes to a link and has no odd knot form");
  return fraction_to_canonical_word(*f);
}

}  // namespace knotadj
