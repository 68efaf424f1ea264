#include "mgw/weights.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "mgw/error.hpp"

namespace mgw {

bool lex_less(const WeightVector& a, const WeightVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool revlex_less(const WeightVector& a, const WeightVector& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

WeightVector cardinalities(const Chain& chain) {
  WeightVector out;
  out.reserve(chain.size());
  for (SubsetMask s : chain) out.push_back(s.size());
  return out;
}

WeightVector hamming_weights(const CycleLadder& ladder) {
  WeightVector d;
  for (const auto& level : ladder.levels()) d.push_back(level.front().size());
  return d;
}

namespace {

// Keeps the members of `family` whose size is minimal, sorted by mask.
std::vector<SubsetMask> smallest(const std::vector<SubsetMask>& family) {
  if (family.empty()) return {};
  int best = std::numeric_limits<int>::max();
  for (SubsetMask s : family) best = std::min(best, s.size());
  std::vector<SubsetMask> out;
  for (SubsetMask s : family) {
    if (s.size() == best) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Smallest chain by mask (bottom level first) among the chains that take one
// frontier member per level with consecutive members nested.
Chain smallest_chain(const std::vector<std::vector<SubsetMask>>& frontiers) {
  const std::size_t t = frontiers.size();
  if (t == 0) return {};
  // alive[l][j]: frontier member j at level l extends upward to the top level.
  std::vector<std::vector<bool>> alive(t);
  alive[t - 1].assign(frontiers[t - 1].size(), true);
  for (std::size_t l = t - 1; l-- > 0;) {
    alive[l].assign(frontiers[l].size(), false);
    for (std::size_t j = 0; j < frontiers[l].size(); ++j) {
      for (std::size_t k = 0; k < frontiers[l + 1].size(); ++k) {
        if (alive[l + 1][k] && frontiers[l][j].is_proper_subset_of(frontiers[l + 1][k])) {
          alive[l][j] = true;
          break;
        }
      }
    }
  }
  Chain chain;
  for (std::size_t l = 0; l < t; ++l) {
    bool picked = false;
    for (std::size_t j = 0; j < frontiers[l].size(); ++j) {
      if (!alive[l][j]) continue;
      if (l > 0 && !chain.back().is_proper_subset_of(frontiers[l][j])) continue;
      chain.push_back(frontiers[l][j]);
      picked = true;
      break;
    }
    if (!picked) throw IdentityFailure("frontier does not contain a complete chain");
  }
  return chain;
}

}  // namespace

GreedyResult greedy_bottom_up(const CycleLadder& ladder) {
  GreedyResult out;
  const int t = ladder.corank();
  if (t == 0) return out;
  out.frontiers.push_back(smallest(ladder.level(1)));
  out.weights.push_back(out.frontiers.back().front().size());
  for (int l = 2; l <= t; ++l) {
    std::vector<SubsetMask> reach;
    for (SubsetMask sigma : out.frontiers.back()) {
      const auto up = ladder.covers(sigma);
      reach.insert(reach.end(), up.begin(), up.end());
    }
    if (reach.empty()) throw IdentityFailure("a ladder member below the top has no cover");
    out.frontiers.push_back(smallest(reach));
    out.weights.push_back(out.frontiers.back().front().size());
  }
  out.witness = smallest_chain(out.frontiers);
  return out;
}

GreedyResult greedy_top_down(const CycleLadder& ladder) {
  GreedyResult out;
  const int t = ladder.corank();
  if (t == 0) return out;
  std::vector<std::vector<SubsetMask>> down(static_cast<std::size_t>(t));
  down[static_cast<std::size_t>(t - 1)] = smallest(ladder.level(t));
  for (int l = t - 1; l >= 1; --l) {
    const auto& above = down[static_cast<std::size_t>(l)];
    std::vector<SubsetMask> reach;
    for (SubsetMask tau : ladder.level(l)) {
      const bool under = std::any_of(above.begin(), above.end(),
                                     [&](SubsetMask s) { return tau.is_proper_subset_of(s); });
      if (under) reach.push_back(tau);
    }
    if (reach.empty()) throw IdentityFailure("a ladder member above level 1 has no subcycle");
    down[static_cast<std::size_t>(l - 1)] = smallest(reach);
  }
  out.frontiers = std::move(down);
  for (const auto& f : out.frontiers) out.weights.push_back(f.front().size());
  out.witness = smallest_chain(out.frontiers);
  return out;
}

CezResult greedy_cez(const CycleLadder& ladder) {
  CezResult out;
  const int t = ladder.corank();
  if (t == 0) return out;
  const WeightVector d = hamming_weights(ladder);
  const auto first = smallest(ladder.level(1));
  out.weights.push_back(d[0]);
  out.witnesses.push_back({SubsetMask{}, first.front()});
  for (int r = 2; r <= t; ++r) {
    std::vector<SubsetMask> computing;
    for (SubsetMask tau : ladder.level(r - 1)) {
      if (tau.size() == d[static_cast<std::size_t>(r - 2)]) computing.push_back(tau);
    }
    std::optional<CezWitness> best;
    for (SubsetMask mu : ladder.level(r)) {
      for (SubsetMask tau : computing) {
        if (!tau.is_proper_subset_of(mu)) continue;
        const bool better = !best || mu.size() < best->mu.size() ||
                            (mu.size() == best->mu.size() &&
                             (mu < best->mu || (mu == best->mu && tau < best->tau)));
        if (better) best = CezWitness{tau, mu};
      }
    }
    if (!best) throw IdentityFailure("no cycle contains a set computing d_" + std::to_string(r - 1));
    out.weights.push_back(best->mu.size());
    out.witnesses.push_back(*best);
  }
  return out;
}

ChainedVerdict is_chained(const CycleLadder& ladder) {
  const WeightVector d = hamming_weights(ladder);
  const GreedyResult up = greedy_bottom_up(ladder);
  const GreedyResult down = greedy_top_down(ladder);
  const CezResult cez = greedy_cez(ladder);
  const bool by_e = up.weights == d;
  if (by_e != (down.weights == d) || (by_e && cez.weights != d)) {
    throw IdentityFailure("chainedness criteria e = d, e~ = d and g = d disagree");
  }
  if (!by_e) return {false, std::nullopt};
  return {true, up.witness};
}

ChainOptima chains_bruteforce(const CycleLadder& ladder, std::uint64_t max_pair_tests) {
  const int t = ladder.corank();
  ChainOptima out{{}, {}, 0};
  if (t == 0) {
    out.chains_counted = 1;
    return out;
  }
  std::uint64_t tests = 0;
  for (int l = 1; l < t; ++l) {
    tests += static_cast<std::uint64_t>(ladder.level(l).size()) * ladder.level(l + 1).size();
  }
  if (tests > max_pair_tests) {
    throw CapExceeded("chain enumeration needs " + std::to_string(tests) +
                      " inclusion tests, cap is " + std::to_string(max_pair_tests));
  }
  // up[l][j]: indices in level l+1 of the supersets of member j of level l.
  const auto& levels = ladder.levels();
  std::vector<std::vector<std::vector<std::uint32_t>>> up(static_cast<std::size_t>(t));
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    up[l].resize(levels[l].size());
    for (std::size_t j = 0; j < levels[l].size(); ++j) {
      for (std::size_t k = 0; k < levels[l + 1].size(); ++k) {
        if (levels[l][j].is_proper_subset_of(levels[l + 1][k])) {
          up[l][j].push_back(static_cast<std::uint32_t>(k));
        }
      }
    }
  }

  // Lex: best suffix from each endpoint, memoised top-down.
  std::vector<std::vector<std::optional<WeightVector>>> suffix(static_cast<std::size_t>(t));
  std::vector<std::vector<std::uint64_t>> count(static_cast<std::size_t>(t));
  for (std::size_t l = 0; l < levels.size(); ++l) {
    suffix[l].resize(levels[l].size());
    count[l].assign(levels[l].size(), 0);
  }
  auto best_suffix = [&](auto&& self, std::size_t l, std::size_t j) -> const WeightVector& {
    auto& memo = suffix[l][j];
    if (memo) return *memo;
    WeightVector best;
    std::uint64_t chains = 0;
    if (l + 1 == levels.size()) {
      best = {levels[l][j].size()};
      chains = 1;
    } else {
      bool have = false;
      for (std::uint32_t k : up[l][j]) {
        WeightVector cand{levels[l][j].size()};
        const WeightVector& rest = self(self, l + 1, k);
        cand.insert(cand.end(), rest.begin(), rest.end());
        chains += count[l + 1][k];
        if (!have || lex_less(cand, best)) {
          best = std::move(cand);
          have = true;
        }
      }
      if (!have) throw IdentityFailure("ladder member " + levels[l][j].to_string() + " has no cover");
    }
    count[l][j] = chains;
    memo = std::move(best);
    return *memo;
  };
  bool have_lex = false;
  for (std::size_t j = 0; j < levels[0].size(); ++j) {
    const WeightVector& cand = best_suffix(best_suffix, 0, j);
    out.chains_counted += count[0][j];
    if (!have_lex || lex_less(cand, out.lex_min)) {
      out.lex_min = cand;
      have_lex = true;
    }
  }

  // Revlex: best prefix ending at each endpoint, computed bottom-up.
  std::vector<std::vector<std::optional<WeightVector>>> prefix(static_cast<std::size_t>(t));
  for (std::size_t l = 0; l < levels.size(); ++l) prefix[l].resize(levels[l].size());
  for (std::size_t j = 0; j < levels[0].size(); ++j) prefix[0][j] = WeightVector{levels[0][j].size()};
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    for (std::size_t j = 0; j < levels[l].size(); ++j) {
      const auto& below = prefix[l][j];
      if (!below) continue;
      for (std::uint32_t k : up[l][j]) {
        WeightVector cand = *below;
        cand.push_back(levels[l + 1][k].size());
        auto& slot = prefix[l + 1][k];
        if (!slot || revlex_less(cand, *slot)) slot = std::move(cand);
      }
    }
  }
  bool have_revlex = false;
  for (const auto& p : prefix.back()) {
    if (p && (!have_revlex || revlex_less(*p, out.revlex_min))) {
      out.revlex_min = *p;
      have_revlex = true;
    }
  }
  return out;
}

WeightReport weight_report(const CycleLadder& ladder) {
  WeightReport r;
  r.t = ladder.corank();
  r.d = hamming_weights(ladder);
  for (const auto& level : ladder.levels()) {
    SubsetMask best = level.front();
    for (SubsetMask s : level) {
      if (s.size() == best.size() && s < best) best = s;
    }
    r.hamming_witnesses.push_back(best);
  }
  GreedyResult up = greedy_bottom_up(ladder);
  GreedyResult down = greedy_top_down(ladder);
  CezResult cez = greedy_cez(ladder);
  r.e = std::move(up.weights);
  r.bottom_up_chain = std::move(up.witness);
  r.e_tilde = std::move(down.weights);
  r.top_down_chain = std::move(down.witness);
  r.g = std::move(cez.weights);
  r.cez_witnesses = std::move(cez.witnesses);
  r.chained = r.e == r.d;
  return r;
}

namespace {

std::string show(const WeightVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw IdentityFailure(what);
}

bool strictly_increasing(const WeightVector& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

void check_chain(const Chain& chain, const WeightVector& weights, const CycleLadder& ladder,
                 const char* name) {
  require(chain.size() == weights.size(), std::string(name) + " witness has the wrong length");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    require(ladder.contains(static_cast<int>(i + 1), chain[i]),
            std::string(name) + " witness member " + chain[i].to_string() + " is not in N_" +
                std::to_string(i + 1));
    require(i == 0 || chain[i - 1].is_proper_subset_of(chain[i]),
            std::string(name) + " witness is not a chain");
  }
  require(cardinalities(chain) == weights, std::string(name) + " witness does not realise " +
                                               show(weights));
}

}  // namespace

void check_weight_invariants(const WeightReport& r, const CycleLadder& ladder) {
  const std::size_t t = static_cast<std::size_t>(r.t);
  require(r.d.size() == t && r.e.size() == t && r.e_tilde.size() == t && r.g.size() == t,
          "weight vectors must have length t");
  require(strictly_increasing(r.d), "d is not strictly increasing: " + show(r.d));
  require(strictly_increasing(r.e), "e is not strictly increasing: " + show(r.e));
  require(strictly_increasing(r.e_tilde), "e~ is not strictly increasing: " + show(r.e_tilde));
  if (t == 0) return;
  require(r.e[0] == r.d[0] && r.g[0] == r.d[0], "e_1 = g_1 = d_1 fails");
  if (t >= 2) require(r.g[1] == r.e[1], "g_2 = e_2 fails");
  require(r.e_tilde[t - 1] == r.d[t - 1], "e~_t = d_t fails");
  for (std::size_t i = 0; i < t; ++i) {
    require(r.d[i] <= r.e[i] && r.d[i] <= r.e_tilde[i] && r.d[i] <= r.g[i],
            "d is not a pointwise lower bound at level " + std::to_string(i + 1));
  }
  check_chain(r.bottom_up_chain, r.e, ladder, "bottom-up");
  check_chain(r.top_down_chain, r.e_tilde, ladder, "top-down");
  require(r.cez_witnesses.size() == t, "CEZ witness count");
  for (std::size_t i = 0; i < t; ++i) {
    const auto& w = r.cez_witnesses[i];
    require(ladder.contains(static_cast<int>(i + 1), w.mu) &&
                w.mu.size() == r.g[i],
            "CEZ witness at level " + std::to_string(i + 1));
    if (i > 0) {
      require(ladder.contains(static_cast<int>(i), w.tau) && w.tau.size() == r.d[i - 1] &&
                  w.tau.is_proper_subset_of(w.mu),
              "CEZ witness pair at level " + std::to_string(i + 1));
    }
  }
  require(r.chained == (r.e == r.d), "chained flag disagrees with e = d");
  require((r.e == r.d) == (r.e_tilde == r.d), "chainedness criteria e = d and e~ = d disagree");
  // g = d is necessary for chainedness but not sufficient.
  require(!r.chained || r.g == r.d, "chained but g != d");
}

}  // namespace mgw
