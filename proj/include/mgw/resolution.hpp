#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "mgw/weights.hpp"

namespace mgw {

/// Multigraded Betti data of the Stanley-Reisner ring of a matroid. Only
/// squarefree multidegrees occur, so each is a subset of E.
struct BettiDiagram {
  int n = 0;
  int t = 0;
  /// (i, X) with beta_{i,X} != 0, sorted by i then (|X|, mask). Includes (0, {}).
  std::vector<std::pair<int, SubsetMask>> support;
  /// beta_{i,X} for every support entry, when computed.
  std::optional<std::map<std::pair<int, SubsetMask>, std::uint64_t>> values;

  /// (i, j) such that some X in the support at index i has |X| = j.
  std::set<std::pair<int, int>> graded_support() const;
  /// beta_{i,j} = sum over |X| = j of beta_{i,X}; requires values.
  std::map<std::pair<int, int>, std::uint64_t> graded_table() const;
  /// Support members at homological index i.
  std::vector<SubsetMask> support_at(int i) const;
};

/// Support read off the ladder: beta_{i,X} != 0 exactly when X is in N_i.
BettiDiagram betti_support(const CycleLadder& ladder);

/// Default bound on 2^|X| for the homology computation (|X| <= 16).
inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 16;

/// beta_{i,X} = dim of reduced homology, in degree |X| - i - 1, of the
/// complex of independent subsets of X. Boundary ranks are computed over the
/// rationals. Throws CapExceeded when 2^|X| > subset_cap.
std::uint64_t betti_value(const Matroid& m, int i, SubsetMask x,
                          std::uint64_t subset_cap = kDefaultSubsetCap);

/// All reduced Betti numbers of the independence complex restricted to X;
/// entry q + 1 holds dim H~_q for q = -1 .. |X| - 1.
std::vector<std::uint64_t> reduced_homology(const Matroid& m, SubsetMask x,
                                            std::uint64_t subset_cap = kDefaultSubsetCap);

/// Support plus exact values for every support entry.
BettiDiagram betti_diagram_with_values(const CycleLadder& ladder,
                                       std::uint64_t subset_cap = kDefaultSubsetCap);

/// Component phi_{l,rho,mu} of the l-th differential of a minimal multigraded
/// resolution is nonzero iff rho in N_{l-1}, mu in N_l and rho < mu (N_0 = {{}}).
bool strand_nonzero(const CycleLadder& ladder, int l, SubsetMask rho, SubsetMask mu);
/// Same predicate decided with the rank oracle instead of a ladder.
bool strand_nonzero(const Matroid& m, int l, SubsetMask rho, SubsetMask mu);
/// N-graded component f_{l,p,q}: nonzero iff some nonzero phi_{l,rho,mu} has
/// |rho| = p and |mu| = q.
bool graded_strand_nonzero(const CycleLadder& ladder, int l, int p, int q);

/// Either a chain of multidegrees (sigma_1, ..., sigma_t) or an N-graded
/// degree vector (h_1, ..., h_t).
using StrandSpec = std::variant<Chain, WeightVector>;

/// True iff every map along the strand is nonzero. Throws InputError unless
/// the chain or degree vector has t entries; a degree vector must also be
/// strictly increasing.
bool strand_check(const CycleLadder& ladder, const StrandSpec& spec);

struct StrandWeights {
  WeightVector e;
  WeightVector e_tilde;
  WeightVector g;
};

/// The three greedy families recomputed from Betti support and the strand
/// predicates alone.
StrandWeights greedy_from_strands(const CycleLadder& ladder);

struct ResolutionShape {
  /// One cardinality per ladder level.
  bool pure = false;
  /// Pure with j_{i+1} = j_i + 1.
  bool linear = false;
  std::optional<WeightVector> degrees;
};

/// Throws IdentityFailure if the resolution is pure but the matroid is not chained.
ResolutionShape resolution_shape(const CycleLadder& ladder);

}  // namespace mgw
