#pragma once

#include <array>
#include <utility>

#include "knotadj/braid.hpp"
#include "knotadj/invariants.hpp"

namespace knotadj {

// Orders of the two generalized crossing changes. An order-d change twists
// the two strands through the crossing disk by d full twists, so the family
// word carries sigma_2 boxes with exponents 2m and 2n; deleting a box is
// exactly the order -m (resp. -n) change, and the closure stays a knot for
// every nonzero choice.
struct FamilyParams {
  long m = 1;
  long n = 1;
};

struct SurgerySite {
  SiteRef site;
  long order = 1;
};

enum class CosmeticFlag { trivializable, cosmetic, unknown };

// Audit record of one 2-adjacency check: the three nonempty-subset
// surgeries on the family word, fingerprinted against the base closure.
struct AdjacencyWitness {
  BraidWord base_word;
  BraidWord family_word;
  FamilyParams params;
  SiteRef site_m, site_n;
  Fingerprint base_fp;
  Fingerprint surgered_m, surgered_n, surgered_both;
  bool verdict = false;
  CosmeticFlag cosmetic = CosmeticFlag::trivializable;
};

// Family word beta sigma_2^{2m} beta^{-1} sigma_2^{2n} beta with the two
// surgery sites. beta must be odd-length, start with sigma_1, and close to
// a knot.
std::pair<BraidWord, std::array<SiteRef, 2>> k_beta_family(
    const BraidWord& beta, FamilyParams params);

// Remove the syllable at the site and renormalize (cascading cancellation).
BraidWord delete_syllable_surgery(const BraidWord& w, SiteRef s);

// Generic order-d generalized crossing change: shift the syllable exponent
// by 2d. The site must have algebraic intersection zero in the closure.
BraidWord generalized_crossing_change(const BraidWord& w, const SurgerySite& s);

AdjacencyWitness verify_two_adjacency(const BraidWord& beta, FamilyParams params,
                                      const FingerprintPolicy& policy = {});

// Next word of the recursive tower; always odd length.
BraidWord tower_extend(const BraidWord& beta_i, FamilyParams params);

enum class UnknotObstruction {
  obstructed_genus,
  obstructed_alexander,
  not_obstructed
};

// Obstructions to being n-adjacent to the unknot: the genus bound
// (n >= 3g - 1) and Alexander triviality (n >= 3 forces trivial Alexander).
// "not_obstructed" only means these tests are silent.
UnknotObstruction obstruct_unknot_adjacency(long genus, long order,
                                            const Laurent& delta);

// True when g(K) > g(K') rules the adjacency out via n <= 6 g(K) - 3.
bool obstruct_pair_adjacency(long genus_src, long genus_dst, long order);

// True when a fibered target forces either isotopy or a genus drop and
// neither holds.
bool obstruct_fibered_target(bool target_fibered, long genus_src,
                             long genus_dst, bool isotopic);

std::string to_string(CosmeticFlag f);
std::string to_string(UnknotObstruction o);

}  // namespace knotadj
