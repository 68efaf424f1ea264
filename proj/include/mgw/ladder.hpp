#pragma once

#include <cstdint>
#include <vector>

#include "mgw/matroid.hpp"

namespace mgw {

/// Circuits sorted by (cardinality, mask). Circuit-defined matroids return
/// their stored list; others are searched by increasing cardinality, skipping
/// any set that already contains a known circuit.
std::vector<SubsetMask> circuits(const Matroid& m);

inline constexpr std::uint64_t kDefaultLadderCandidates = 8'000'000;

/// The levels N_1, ..., N_t: N_i is the family of inclusion-minimal sets of
/// nullity i (the cycles of nullity i). N_1 is the circuit family.
class CycleLadder {
 public:
  /// Throws CapExceeded once more than `max_candidates` unions rho | c have
  /// been formed.
  explicit CycleLadder(const Matroid& m, std::uint64_t max_candidates = kDefaultLadderCandidates);

  const Matroid& matroid() const { return matroid_; }
  int corank() const { return static_cast<int>(levels_.size()); }
  /// Level i in 1..t, sorted by (cardinality, mask).
  const std::vector<SubsetMask>& level(int i) const;
  const std::vector<std::vector<SubsetMask>>& levels() const { return levels_; }
  const std::vector<SubsetMask>& circuits() const { return level(1); }

  /// Binary search in level i.
  bool contains(int i, SubsetMask x) const;
  /// Level of X, or 0 if X is not a cycle.
  int level_of(SubsetMask x) const;

  /// Members of N_l that strictly contain rho, where rho is in N_{l-1}.
  /// Throws InputError when rho is not a cycle or sits on the top level.
  std::vector<SubsetMask> covers(SubsetMask rho) const;

 private:
  Matroid matroid_;
  std::vector<std::vector<SubsetMask>> levels_;
};

/// (X is a cycle, n(X)). The empty set and other nullity-0 sets are not cycles.
/// Decided by the rank oracle alone: X is a cycle iff deleting any single
/// element lowers the nullity.
struct CycleCheck {
  bool is_cycle;
  int nullity;
  friend bool operator==(const CycleCheck&, const CycleCheck&) = default;
};
CycleCheck is_cycle(const Matroid& m, SubsetMask x);

/// Inclusion-minimal members of `family`, sorted by (cardinality, mask).
std::vector<SubsetMask> minimal_elements(std::vector<SubsetMask> family);

}  // namespace mgw
