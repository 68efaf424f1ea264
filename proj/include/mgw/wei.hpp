#pragma once

#include <vector>

#include "mgw/weights.hpp"

namespace mgw {

/// Cardinality profile of a chain together with the profile its complement
/// chain must have: {1..n} minus {n+1-c : c in cardinalities}.
struct ChainProfile {
  int n = 0;
  WeightVector cardinalities;
  std::vector<int> complement_profile;
};

/// Throws InputError unless `cardinalities` is strictly increasing inside 1..n.
ChainProfile chain_profile(int n, const WeightVector& cardinalities);

/// Complement chain for the dual matroid. The complements E - sigma_i are
/// completed to a maximal chain of subsets by adding missing elements in
/// ascending label order; the sets of cardinality n + 1 - |sigma_i| are then
/// removed. The result has n - t members with cardinalities
/// chain_profile(...).complement_profile. Throws InputError unless `chain` is
/// a chain sigma_1 < ... < sigma_t with sigma_i a cycle of nullity i.
Chain delta_chain(const Matroid& m, const Chain& chain);

struct WeiReport {
  bool identity_holds = false;
  /// Weights of M.
  WeightVector left;
  /// n + 1 - x for each weight x of the dual, ascending.
  std::vector<int> right_transformed;
  /// Sorted concatenation of left and right_transformed (duplicates kept).
  std::vector<int> union_values;
};

/// {e_i(M)} and {n+1 - e~_j(dual M)} partition {1..n}.
WeiReport check_wei_greedy(const Matroid& m);
WeiReport check_wei_greedy(const CycleLadder& ladder, const CycleLadder& dual_ladder);
/// {d_i(M)} and {n+1 - d_j(dual M)} partition {1..n}.
WeiReport check_wei_classical(const Matroid& m);
WeiReport check_wei_classical(const CycleLadder& ladder, const CycleLadder& dual_ladder);

/// Assembles the report for arbitrary weight vectors.
WeiReport wei_identity(int n, const WeightVector& left, const WeightVector& dual_weights);

}  // namespace mgw
