#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "knotadj/braid.hpp"
#include "knotadj/twobridge.hpp"

namespace knotadj::testutil {

// Property suites are reproducible: ADJ_TEST_SEED overrides the default,
// and the acceptance binary takes --seed.
inline unsigned long default_seed() {
  if (const char* env = std::getenv("ADJ_TEST_SEED")) return std::stoul(env);
  return 0x2b51d9eUL;
}

inline BraidWord random_word(std::mt19937_64& rng, int max_syllables, int emax,
                             long max_crossings = 0) {
  std::uniform_int_distribution<int> len_dist(1, max_syllables);
  std::uniform_int_distribution<int> exp_dist(1, emax);
  std::bernoulli_distribution neg(0.5);
  for (;;) {
    int len = len_dist(rng);
    SyllableSeq seq;
    int gen = 1;
    for (int i = 0; i < len; ++i) {
      long e = exp_dist(rng);
      if (neg(rng)) e = -e;
      seq.push_back({gen, e});
      gen = 3 - gen;
    }
    BraidWord w(std::move(seq));
    if (max_crossings > 0 && w.crossings() > max_crossings) continue;
    return w;
  }
}

inline BraidWord random_knot_word(std::mt19937_64& rng, int max_syllables,
                                  int emax, long max_crossings = 0) {
  for (;;) {
    BraidWord w = random_word(rng, max_syllables, emax, max_crossings);
    if (try_word_to_fraction(w)) return w;
  }
}

inline BraidWord random_odd_knot_word(std::mt19937_64& rng, int max_syllables,
                                      int emax, long max_crossings = 0) {
  for (;;) {
    BraidWord w = random_knot_word(rng, max_syllables, emax, max_crossings);
    if (w.size() % 2 == 1) return w;
  }
}

// Raw sequence freely equal to w with the same written final generator:
// syllables split in two and cancelling pairs inserted before the tail.
inline SyllableSeq stuttered(std::mt19937_64& rng, const BraidWord& w) {
  SyllableSeq out;
  std::bernoulli_distribution coin(0.4);
  std::uniform_int_distribution<long> small(1, 3);
  const SyllableSeq& syl = w.syllables();
  for (std::size_t i = 0; i < syl.size(); ++i) {
    const Syllable& s = syl[i];
    bool last = i + 1 == syl.size();
    if (!last && coin(rng)) {
      long k = small(rng);
      out.push_back({s.gen, k});
      out.push_back({s.gen, -k});
    }
    long e = s.exp;
    if ((e > 1 || e < -1) && coin(rng)) {
      long a = e > 0 ? 1 : -1;
      out.push_back({s.gen, a});
      out.push_back({s.gen, e - a});
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace knotadj::testutil
