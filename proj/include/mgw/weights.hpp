#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgw/ladder.hpp"

namespace mgw {

using WeightVector = std::vector<int>;
/// sigma_1 < sigma_2 < ... < sigma_t with sigma_i in N_i.
using Chain = std::vector<SubsetMask>;

/// Lexicographic order: the first differing position decides.
bool lex_less(const WeightVector& a, const WeightVector& b);
/// Reverse lexicographic order: the last differing position decides, smaller wins.
bool revlex_less(const WeightVector& a, const WeightVector& b);

/// (|sigma_1|, ..., |sigma_t|)
WeightVector cardinalities(const Chain& chain);

/// d_r = min{|X| : X in N_r}. Empty when t = 0.
WeightVector hamming_weights(const CycleLadder& ladder);

struct GreedyResult {
  WeightVector weights;
  /// Lexicographically smallest (by mask, bottom level first) optimal chain.
  Chain witness;
  /// frontiers[l-1]: every member of N_l that computes the weight at level l on
  /// some optimal chain, sorted by mask.
  std::vector<std::vector<SubsetMask>> frontiers;
};

/// Bottom-up greedy weights e: the lex-minimum of e(S) over chains through the
/// ladder, found level by level over the frontier of optimal endpoints.
GreedyResult greedy_bottom_up(const CycleLadder& ladder);
/// Top-down greedy weights: the revlex-minimum, found from level t downward.
GreedyResult greedy_top_down(const CycleLadder& ladder);

struct CezWitness {
  /// tau in N_{r-1} computing d_{r-1} (empty for r = 1), mu in N_r, tau < mu.
  SubsetMask tau;
  SubsetMask mu;
};

struct CezResult {
  WeightVector weights;
  std::vector<CezWitness> witnesses;
};

/// CEZ greedy weights g: g_1 = d_1, and g_r is the least |mu| over mu in N_r
/// containing some tau in N_{r-1} with |tau| = d_{r-1}. Need not be monotone.
CezResult greedy_cez(const CycleLadder& ladder);

struct ChainedVerdict {
  bool chained;
  /// A chain computing every d_i, when chained.
  std::optional<Chain> witness;
};

/// True iff e = d. Cross-checks that e = d and e~ = d agree and that a chained
/// matroid has g = d; throws IdentityFailure otherwise. The converse fails:
/// g = d does not imply chained.
ChainedVerdict is_chained(const CycleLadder& ladder);

struct ChainOptima {
  WeightVector lex_min;
  WeightVector revlex_min;
  std::uint64_t chains_counted;
};

/// Oracle: exact lex and revlex minima of e(S) over every maximal chain through
/// the ladder. Uses memoised depth-first search on chain endpoints with the
/// inclusion relation between consecutive levels tested pairwise. Throws
/// CapExceeded if more than `max_pair_tests` inclusion tests would be needed.
ChainOptima chains_bruteforce(const CycleLadder& ladder,
                              std::uint64_t max_pair_tests = 50'000'000);

struct WeightReport {
  int t = 0;
  WeightVector d;
  WeightVector e;
  WeightVector e_tilde;
  WeightVector g;
  /// A set computing d_r at each level (smallest mask).
  std::vector<SubsetMask> hamming_witnesses;
  Chain bottom_up_chain;
  Chain top_down_chain;
  std::vector<CezWitness> cez_witnesses;
  bool chained = true;
};

WeightReport weight_report(const CycleLadder& ladder);

/// Throws IdentityFailure naming the first violated property: strict increase
/// of d, e and e~; e_1 = g_1 = d_1; g_2 = e_2; e~_t = d_t; d <= e, e~, g
/// pointwise; witness chains lie in the ladder and realise their vectors.
void check_weight_invariants(const WeightReport& report, const CycleLadder& ladder);

}  // namespace mgw
