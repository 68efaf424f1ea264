#include "mgw/resolution.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <map>

#include "mgw/error.hpp"

namespace mgw {

std::set<std::pair<int, int>> BettiDiagram::graded_support() const {
  std::set<std::pair<int, int>> out;
  for (const auto& [i, x] : support) out.emplace(i, x.size());
  return out;
}

std::map<std::pair<int, int>, std::uint64_t> BettiDiagram::graded_table() const {
  if (!values) throw InputError("Betti values were not computed");
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [key, v] : *values) out[{key.first, key.second.size()}] += v;
  return out;
}

std::vector<SubsetMask> BettiDiagram::support_at(int i) const {
  std::vector<SubsetMask> out;
  for (const auto& [k, x] : support) {
    if (k == i) out.push_back(x);
  }
  return out;
}

BettiDiagram betti_support(const CycleLadder& ladder) {
  BettiDiagram d;
  d.n = ladder.matroid().size();
  d.t = ladder.corank();
  d.support.emplace_back(0, SubsetMask{});
  for (int i = 1; i <= d.t; ++i) {
    for (SubsetMask x : ladder.level(i)) d.support.emplace_back(i, x);
  }
  return d;
}

namespace {

using SparseColumn = std::map<std::uint32_t, mpq_class>;

// Rank over Q by column reduction: each incoming column is reduced against
// stored pivots keyed by their lowest row index.
std::size_t rational_rank(std::vector<SparseColumn> columns) {
  std::map<std::uint32_t, SparseColumn> pivots;
  for (auto& col : columns) {
    while (!col.empty()) {
      const auto [low, coeff] = *col.begin();
      auto it = pivots.find(low);
      if (it == pivots.end()) {
        pivots.emplace(low, std::move(col));
        break;
      }
      const mpq_class factor = coeff / it->second.begin()->second;
      for (const auto& [row, v] : it->second) {
        mpq_class& slot = col[row];
        slot -= factor * v;
        if (sgn(slot) == 0) col.erase(row);
      }
    }
  }
  return pivots.size();
}

// Independent subsets of x grouped by cardinality, each group in mask order.
std::vector<std::vector<SubsetMask>> independent_faces(const Matroid& m, SubsetMask x,
                                                       std::uint64_t subset_cap) {
  if (x.size() >= 63 || (std::uint64_t{1} << x.size()) > subset_cap) {
    throw CapExceeded("homology of a " + std::to_string(x.size()) +
                      "-element restriction exceeds the subset cap of " +
                      std::to_string(subset_cap));
  }
  std::vector<std::vector<SubsetMask>> faces(static_cast<std::size_t>(x.size()) + 1);
  const int r = m.rank(x);
  for_each_subset_of(x, [&](SubsetMask f) {
    if (f.size() <= r && m.is_independent(f)) faces[static_cast<std::size_t>(f.size())].push_back(f);
  });
  for (auto& group : faces) std::sort(group.begin(), group.end());
  return faces;
}

// Rank of the boundary map from faces of cardinality k to faces of cardinality k - 1.
std::size_t boundary_rank(const std::vector<std::vector<SubsetMask>>& faces, std::size_t k) {
  if (k == 0 || k >= faces.size() || faces[k].empty() || faces[k - 1].empty()) return 0;
  const auto& lower = faces[k - 1];
  std::vector<SparseColumn> columns;
  columns.reserve(faces[k].size());
  for (SubsetMask f : faces[k]) {
    SparseColumn col;
    int position = 0;
    for (int v : f.labels()) {
      const SubsetMask facet = f.without(v);
      const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      col.emplace(static_cast<std::uint32_t>(it - lower.begin()),
                  mpq_class(position % 2 == 0 ? 1 : -1));
      ++position;
    }
    columns.push_back(std::move(col));
  }
  return rational_rank(std::move(columns));
}

std::uint64_t homology_from_faces(const std::vector<std::vector<SubsetMask>>& faces, int q) {
  // C_q is spanned by faces of cardinality q + 1; C_{-1} by the empty face.
  const std::size_t k = static_cast<std::size_t>(q + 1);
  if (q < -1 || k >= faces.size() || faces[k].empty()) return 0;
  const std::size_t chains = faces[k].size();
  return chains - boundary_rank(faces, k) - boundary_rank(faces, k + 1);
}

}  // namespace

std::vector<std::uint64_t> reduced_homology(const Matroid& m, SubsetMask x,
                                            std::uint64_t subset_cap) {
  if (!x.fits(m.size())) throw InputError(x.to_string() + " is not a subset of the ground set");
  const auto faces = independent_faces(m, x, subset_cap);
  std::vector<std::uint64_t> out;
  for (int q = -1; q < x.size(); ++q) out.push_back(homology_from_faces(faces, q));
  return out;
}

std::uint64_t betti_value(const Matroid& m, int i, SubsetMask x, std::uint64_t subset_cap) {
  if (!x.fits(m.size())) throw InputError(x.to_string() + " is not a subset of the ground set");
  if (i < 0) throw InputError("homological index must be nonnegative");
  const int q = x.size() - i - 1;
  if (q < -1) return 0;
  const auto faces = independent_faces(m, x, subset_cap);
  return homology_from_faces(faces, q);
}

BettiDiagram betti_diagram_with_values(const CycleLadder& ladder, std::uint64_t subset_cap) {
  BettiDiagram d = betti_support(ladder);
  d.values.emplace();
  for (const auto& [i, x] : d.support) {
    const std::uint64_t v = betti_value(ladder.matroid(), i, x, subset_cap);
    if (v == 0) {
      throw IdentityFailure("beta_{" + std::to_string(i) + "," + x.to_string() +
                            "} vanishes although the set is a cycle");
    }
    (*d.values)[{i, x}] = v;
  }
  return d;
}

bool strand_nonzero(const CycleLadder& ladder, int l, SubsetMask rho, SubsetMask mu) {
  if (l < 1 || l > ladder.corank()) return false;
  if (l == 1) return rho.empty() && ladder.contains(1, mu);
  return ladder.contains(l - 1, rho) && ladder.contains(l, mu) && rho.is_proper_subset_of(mu);
}

bool strand_nonzero(const Matroid& m, int l, SubsetMask rho, SubsetMask mu) {
  if (l < 1 || l > m.corank()) return false;
  if (!rho.fits(m.size()) || !mu.fits(m.size())) return false;
  if (l == 1 && !rho.empty()) return false;
  if (l > 1 && is_cycle(m, rho) != CycleCheck{true, l - 1}) return false;
  return is_cycle(m, mu) == CycleCheck{true, l} && rho.is_proper_subset_of(mu);
}

bool graded_strand_nonzero(const CycleLadder& ladder, int l, int p, int q) {
  if (l < 1 || l > ladder.corank()) return false;
  if (l == 1) {
    if (p != 0) return false;
    const auto& lv = ladder.level(1);
    return std::any_of(lv.begin(), lv.end(), [&](SubsetMask s) { return s.size() == q; });
  }
  for (SubsetMask mu : ladder.level(l)) {
    if (mu.size() != q) continue;
    for (SubsetMask rho : ladder.level(l - 1)) {
      if (rho.size() == p && rho.is_proper_subset_of(mu)) return true;
    }
  }
  return false;
}

bool strand_check(const CycleLadder& ladder, const StrandSpec& spec) {
  const std::size_t t = static_cast<std::size_t>(ladder.corank());
  if (const auto* chain = std::get_if<Chain>(&spec)) {
    if (chain->size() != t) {
      throw InputError("strand has " + std::to_string(chain->size()) + " entries, expected " +
                       std::to_string(t));
    }
    // A non-nested chain simply has a zero component.
    SubsetMask previous;
    for (std::size_t l = 0; l < t; ++l) {
      if (!strand_nonzero(ladder, static_cast<int>(l + 1), previous, (*chain)[l])) return false;
      previous = (*chain)[l];
    }
    return true;
  }
  const auto& degrees = std::get<WeightVector>(spec);
  if (degrees.size() != t) {
    throw InputError("strand has " + std::to_string(degrees.size()) + " entries, expected " +
                     std::to_string(t));
  }
  for (std::size_t i = 1; i < t; ++i) {
    if (degrees[i - 1] >= degrees[i]) {
      throw InputError("strand degrees must be strictly increasing");
    }
  }
  int previous = 0;
  for (std::size_t l = 0; l < t; ++l) {
    if (!graded_strand_nonzero(ladder, static_cast<int>(l + 1), previous, degrees[l])) return false;
    previous = degrees[l];
  }
  return true;
}

namespace {

int min_degree(const std::vector<SubsetMask>& family) {
  int best = std::numeric_limits<int>::max();
  for (SubsetMask s : family) best = std::min(best, s.size());
  return best;
}

std::vector<SubsetMask> of_size(const std::vector<SubsetMask>& family, int size) {
  std::vector<SubsetMask> out;
  for (SubsetMask s : family) {
    if (s.size() == size) out.push_back(s);
  }
  return out;
}

}  // namespace

StrandWeights greedy_from_strands(const CycleLadder& ladder) {
  StrandWeights out;
  const int t = ladder.corank();
  if (t == 0) return out;
  const BettiDiagram betti = betti_support(ladder);
  std::vector<std::vector<SubsetMask>> by_level(static_cast<std::size_t>(t) + 1);
  for (int i = 1; i <= t; ++i) by_level[static_cast<std::size_t>(i)] = betti.support_at(i);
  auto level = [&](int i) -> const std::vector<SubsetMask>& {
    return by_level[static_cast<std::size_t>(i)];
  };

  // e: start from the lowest degree at index 1 and follow nonzero components up.
  std::vector<SubsetMask> frontier = of_size(level(1), min_degree(level(1)));
  out.e.push_back(frontier.front().size());
  for (int l = 2; l <= t; ++l) {
    std::vector<SubsetMask> reach;
    for (SubsetMask sigma : level(l)) {
      for (SubsetMask tau : frontier) {
        if (strand_nonzero(ladder, l, tau, sigma)) {
          reach.push_back(sigma);
          break;
        }
      }
    }
    frontier = of_size(reach, min_degree(reach));
    out.e.push_back(frontier.front().size());
  }

  // e~: start from the lowest degree at index t and follow nonzero components down.
  frontier = of_size(level(t), min_degree(level(t)));
  out.e_tilde.assign(static_cast<std::size_t>(t), 0);
  out.e_tilde[static_cast<std::size_t>(t - 1)] = frontier.front().size();
  for (int l = t - 1; l >= 1; --l) {
    std::vector<SubsetMask> reach;
    for (SubsetMask sigma : level(l)) {
      for (SubsetMask tau : frontier) {
        if (strand_nonzero(ladder, l + 1, sigma, tau)) {
          reach.push_back(sigma);
          break;
        }
      }
    }
    frontier = of_size(reach, min_degree(reach));
    out.e_tilde[static_cast<std::size_t>(l - 1)] = frontier.front().size();
  }

  // g: least j with f_{l, d_{l-1}, j} != 0, where d_i is the least degree at index i.
  out.g.push_back(min_degree(level(1)));
  const std::set<std::pair<int, int>> graded = betti.graded_support();
  for (int l = 2; l <= t; ++l) {
    const int d_prev = min_degree(level(l - 1));
    int best = std::numeric_limits<int>::max();
    for (const auto& [i, j] : graded) {
      if (i == l && j < best && graded_strand_nonzero(ladder, l, d_prev, j)) best = j;
    }
    if (best == std::numeric_limits<int>::max()) {
      throw IdentityFailure("no nonzero graded strand component at index " + std::to_string(l));
    }
    out.g.push_back(best);
  }
  return out;
}

ResolutionShape resolution_shape(const CycleLadder& ladder) {
  ResolutionShape shape;
  WeightVector degrees;
  shape.pure = true;
  for (const auto& level : ladder.levels()) {
    const int j = level.front().size();
    if (std::any_of(level.begin(), level.end(), [&](SubsetMask s) { return s.size() != j; })) {
      shape.pure = false;
      break;
    }
    degrees.push_back(j);
  }
  if (!shape.pure) return shape;
  shape.linear = true;
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    if (degrees[i] != degrees[i - 1] + 1) shape.linear = false;
  }
  shape.degrees = std::move(degrees);
  if (!is_chained(ladder).chained) {
    throw IdentityFailure("pure resolution but the matroid is not chained");
  }
  return shape;
}

}  // namespace mgw
