#include "mgw/ladder.hpp"

#include <algorithm>

#include "mgw/error.hpp"

namespace mgw {

std::vector<SubsetMask> circuits(const Matroid& m) {
  if (const auto* stored = m.stored_circuits()) return *stored;
  std::vector<SubsetMask> found;
  const int n = m.size();
  // A circuit has at most r(E) + 1 elements.
  const int max_size = std::min(n, m.rank() + 1);
  for (int k = 1; k <= max_size; ++k) {
    const std::size_t known = found.size();
    for_each_k_subset(n, k, [&](SubsetMask x) {
      for (std::size_t i = 0; i < known; ++i) {
        if (found[i].is_subset_of(x)) return;
      }
      // Every proper subset avoids the known smaller circuits, so it is
      // independent; a dependent x is therefore a circuit.
      if (m.nullity(x) > 0) found.push_back(x);
    });
  }
  std::sort(found.begin(), found.end(), by_size_then_mask);
  return found;
}

std::vector<SubsetMask> minimal_elements(std::vector<SubsetMask> family) {
  std::sort(family.begin(), family.end(), by_size_then_mask);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<SubsetMask> accepted;
  for (SubsetMask x : family) {
    const bool dominated = std::any_of(accepted.begin(), accepted.end(), [&](SubsetMask a) {
      return a.size() < x.size() && a.is_subset_of(x);
    });
    if (!dominated) accepted.push_back(x);
  }
  return accepted;
}

CycleLadder::CycleLadder(const Matroid& m, std::uint64_t max_candidates) : matroid_(m) {
  const int t = m.corank();
  if (t == 0) return;
  levels_.push_back(mgw::circuits(m));
  const std::vector<SubsetMask> base = levels_.front();
  std::uint64_t tested = 0;
  for (int l = 2; l <= t; ++l) {
    // Every member of N_l is rho | c for some rho in N_{l-1} and circuit c.
    std::vector<SubsetMask> candidates;
    for (SubsetMask rho : levels_.back()) {
      tested += base.size();
      if (tested > max_candidates) {
        throw CapExceeded("cycle ladder construction passed " + std::to_string(max_candidates) +
                          " candidate sets at level " + std::to_string(l) + " of " +
                          std::to_string(t));
      }
      for (SubsetMask c : base) {
        if (!c.is_subset_of(rho)) candidates.push_back(rho | c);
      }
    }
    std::sort(candidates.begin(), candidates.end(), by_size_then_mask);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<SubsetMask> level;
    for (SubsetMask x : candidates) {
      const CycleCheck c = is_cycle(m, x);
      if (c.is_cycle && c.nullity == l) level.push_back(x);
    }
    if (level.empty()) {
      throw IdentityFailure("ladder level " + std::to_string(l) +
                            " came out empty; the rank oracle is not a matroid rank function");
    }
    levels_.push_back(std::move(level));
  }
}

const std::vector<SubsetMask>& CycleLadder::level(int i) const {
  if (i < 1 || i > corank()) {
    throw InputError("ladder level " + std::to_string(i) + " outside 1.." +
                     std::to_string(corank()));
  }
  return levels_[static_cast<std::size_t>(i - 1)];
}

bool CycleLadder::contains(int i, SubsetMask x) const {
  if (i < 1 || i > corank()) return false;
  const auto& lv = levels_[static_cast<std::size_t>(i - 1)];
  return std::binary_search(lv.begin(), lv.end(), x, by_size_then_mask);
}

int CycleLadder::level_of(SubsetMask x) const {
  if (!x.fits(matroid_.size())) return 0;
  const int i = matroid_.nullity(x);
  return contains(i, x) ? i : 0;
}

std::vector<SubsetMask> CycleLadder::covers(SubsetMask rho) const {
  const int below = level_of(rho);
  if (below == 0) throw InputError(rho.to_string() + " is not a cycle of the matroid");
  if (below >= corank()) {
    throw InputError(rho.to_string() + " lies on the top level; it has no covers");
  }
  std::vector<SubsetMask> out;
  for (SubsetMask mu : level(below + 1)) {
    if (rho.is_proper_subset_of(mu)) out.push_back(mu);
  }
  return out;
}

CycleCheck is_cycle(const Matroid& m, SubsetMask x) {
  if (!x.fits(m.size())) {
    throw InputError(x.to_string() + " is not a subset of 1.." + std::to_string(m.size()));
  }
  const int k = m.nullity(x);
  if (k == 0) return {false, 0};
  for (int e : x.labels()) {
    if (m.nullity(x.without(e)) == k) return {false, k};
  }
  return {true, k};
}

}  // namespace mgw
