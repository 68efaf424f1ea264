#include "mgw/wei.hpp"

#include <algorithm>

#include "mgw/error.hpp"

namespace mgw {

ChainProfile chain_profile(int n, const WeightVector& cards) {
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (cards[i] < 1 || cards[i] > n || (i > 0 && cards[i] <= cards[i - 1])) {
      throw InputError("chain cardinalities must be strictly increasing within 1..n");
    }
  }
  ChainProfile p{n, cards, {}};
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  for (int c : cards) removed[static_cast<std::size_t>(n + 1 - c)] = true;
  for (int j = 1; j <= n; ++j) {
    if (!removed[static_cast<std::size_t>(j)]) p.complement_profile.push_back(j);
  }
  return p;
}

Chain delta_chain(const Matroid& m, const Chain& chain) {
  const int n = m.size();
  const int t = m.corank();
  if (static_cast<int>(chain.size()) != t) {
    throw InputError("chain has " + std::to_string(chain.size()) + " members, corank is " +
                     std::to_string(t));
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const CycleCheck c = is_cycle(m, chain[i]);
    if (!c.is_cycle || c.nullity != static_cast<int>(i + 1)) {
      throw InputError(chain[i].to_string() + " is not a cycle of nullity " +
                       std::to_string(i + 1));
    }
    if (i > 0 && !chain[i - 1].is_proper_subset_of(chain[i])) {
      throw InputError("chain members are not strictly nested");
    }
  }
  const SubsetMask ground = m.ground();
  // Targets in increasing order: E - sigma_t, ..., E - sigma_1, E.
  std::vector<SubsetMask> targets;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) targets.push_back(ground - *it);
  targets.push_back(ground);

  std::vector<SubsetMask> maximal;  // maximal[j] has cardinality j + 1
  SubsetMask current;
  for (SubsetMask target : targets) {
    for (int e : (target - current).labels()) {
      current = current.with(e);
      maximal.push_back(current);
    }
  }
  std::vector<bool> drop(static_cast<std::size_t>(n) + 1, false);
  for (SubsetMask s : chain) drop[static_cast<std::size_t>(n + 1 - s.size())] = true;
  Chain out;
  for (SubsetMask rho : maximal) {
    if (!drop[static_cast<std::size_t>(rho.size())]) out.push_back(rho);
  }
  return out;
}

WeiReport wei_identity(int n, const WeightVector& left, const WeightVector& dual_weights) {
  WeiReport r;
  r.left = left;
  for (int x : dual_weights) r.right_transformed.push_back(n + 1 - x);
  std::sort(r.right_transformed.begin(), r.right_transformed.end());
  r.union_values = r.left;
  r.union_values.insert(r.union_values.end(), r.right_transformed.begin(),
                        r.right_transformed.end());
  std::sort(r.union_values.begin(), r.union_values.end());
  r.identity_holds = static_cast<int>(r.union_values.size()) == n;
  for (int j = 0; r.identity_holds && j < n; ++j) {
    r.identity_holds = r.union_values[static_cast<std::size_t>(j)] == j + 1;
  }
  return r;
}

WeiReport check_wei_greedy(const CycleLadder& ladder, const CycleLadder& dual_ladder) {
  return wei_identity(ladder.matroid().size(), greedy_bottom_up(ladder).weights,
                      greedy_top_down(dual_ladder).weights);
}

WeiReport check_wei_greedy(const Matroid& m) {
  return check_wei_greedy(CycleLadder(m), CycleLadder(m.dual()));
}

WeiReport check_wei_classical(const CycleLadder& ladder, const CycleLadder& dual_ladder) {
  return wei_identity(ladder.matroid().size(), hamming_weights(ladder),
                      hamming_weights(dual_ladder));
}

WeiReport check_wei_classical(const Matroid& m) {
  return check_wei_classical(CycleLadder(m), CycleLadder(m.dual()));
}

}  // namespace mgw
