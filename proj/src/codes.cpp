#include "mgw/codes.hpp"

#include <algorithm>
#include <limits>

#include "mgw/error.hpp"

namespace mgw {

LinearCode LinearCode::from_generator(const FieldMatrix& g) {
  if (g.cols() == 0) throw InputError("a code needs length at least 1");
  std::size_t nonzero_rows = 0;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const auto row = g.row(r);
    if (std::any_of(row.begin(), row.end(), [](Residue x) { return x != 0; })) ++nonzero_rows;
  }
  FieldMatrix reduced = row_echelon(g);
  if (reduced.rows() != nonzero_rows) {
    throw InputError("generator rows are linearly dependent: rank " +
                     std::to_string(reduced.rows()) + " from " + std::to_string(nonzero_rows) +
                     " nonzero rows");
  }
  return LinearCode(std::move(reduced));
}

LinearCode LinearCode::from_parity_check(const FieldMatrix& h) {
  if (h.cols() == 0) throw InputError("a code needs length at least 1");
  return LinearCode(from_rows(h.field(), h.cols(), kernel_basis(h)));
}

FieldMatrix LinearCode::parity_check() const {
  return from_rows(field(), generator_.cols(), kernel_basis(generator_));
}

FieldVector LinearCode::encode(std::span<const Residue> message) const {
  return generator_.left_apply(message);
}

SubsetMask support(const std::vector<FieldVector>& words, int n) {
  SubsetMask s;
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) != n) {
      throw InputError("word of length " + std::to_string(w.size()) + " in a length-" +
                       std::to_string(n) + " code");
    }
    for (int i = 0; i < n; ++i) {
      if (w[static_cast<std::size_t>(i)] != 0) s = s.with(i + 1);
    }
  }
  return s;
}

std::vector<FieldVector> shortened_subcode(const LinearCode& code, SubsetMask x) {
  const SubsetMask ground = SubsetMask::full(code.length());
  if (!x.fits(code.length())) throw InputError(x.to_string() + " exceeds the code length");
  // Messages m with (m G)_j = 0 for every j outside X.
  const FieldMatrix outside = column_submatrix(code.generator(), ground - x).transpose();
  std::vector<FieldVector> messages;
  if (outside.rows() == 0) {
    for (int i = 0; i < code.dimension(); ++i) {
      FieldVector m(static_cast<std::size_t>(code.dimension()), 0);
      m[static_cast<std::size_t>(i)] = 1;
      messages.push_back(std::move(m));
    }
  } else {
    messages = kernel_basis(outside);
  }
  std::vector<FieldVector> basis;
  for (const auto& m : messages) basis.push_back(code.encode(m));
  return basis;
}

Matroid code_matroid(const LinearCode& code) { return Matroid::from_generator(code.generator()); }

std::uint64_t gaussian_binomial(std::uint32_t p, int k, int r) {
  if (r < 0 || r > k) return 0;
  // Product over i < r of (p^(k-i) - 1) / (p^(r-i) - 1), evaluated exactly in
  // 128-bit arithmetic through the recurrence [k,r] = [k-1,r-1] + p^r [k-1,r].
  constexpr unsigned __int128 kSat = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::vector<unsigned __int128>> table(
      static_cast<std::size_t>(k) + 1, std::vector<unsigned __int128>(static_cast<std::size_t>(k) + 1, 0));
  for (int a = 0; a <= k; ++a) {
    table[static_cast<std::size_t>(a)][0] = 1;
    for (int b = 1; b <= a; ++b) {
      unsigned __int128 pb = 1;
      for (int i = 0; i < b && pb <= kSat; ++i) pb *= p;
      const auto& prev = table[static_cast<std::size_t>(a - 1)];
      unsigned __int128 v = prev[static_cast<std::size_t>(b - 1)];
      const unsigned __int128 rest = prev[static_cast<std::size_t>(b)];
      if (rest > 0 && pb > kSat / rest) {
        v = kSat;
      } else {
        v += pb * rest;
      }
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(v, kSat);
    }
  }
  return static_cast<std::uint64_t>(table[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)]);
}

namespace {

// A subspace of the message space GF(p)^k in reduced row echelon form, and
// the support of the subcode it generates.
struct Subspace {
  std::vector<FieldVector> basis;
  SubsetMask support;
};

void check_caps(const LinearCode& code, const SubspaceCaps& caps) {
  const int k = code.dimension();
  std::uint64_t ambient = 1;
  for (int i = 0; i < k; ++i) {
    if (ambient > caps.max_ambient / code.modulus()) {
      throw CapExceeded("p^k exceeds the subspace cap of " + std::to_string(caps.max_ambient));
    }
    ambient *= code.modulus();
  }
  if (ambient > caps.max_ambient) {
    throw CapExceeded("p^k exceeds the subspace cap of " + std::to_string(caps.max_ambient));
  }
  std::uint64_t total = 0;
  for (int r = 0; r <= k; ++r) {
    const std::uint64_t c = gaussian_binomial(code.modulus(), k, r);
    if (c > caps.max_subspaces || total > caps.max_subspaces - c) {
      throw CapExceeded("the code has more than " + std::to_string(caps.max_subspaces) +
                        " subcodes");
    }
    total += c;
  }
}

// All r-dimensional subspaces of GF(p)^k as canonical echelon bases.
std::vector<Subspace> subspaces(const LinearCode& code, int r) {
  const int k = code.dimension();
  const std::uint32_t p = code.modulus();
  std::vector<Subspace> out;
  for_each_k_subset(k, r, [&](SubsetMask pivots) {
    const auto pivot_labels = pivots.labels();
    // Free slots: row i, column j > pivot_i, j not a pivot column.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i) {
      for (int j = pivot_labels[static_cast<std::size_t>(i)]; j < k; ++j) {
        if (!pivots.contains(j + 1)) slots.emplace_back(i, j);
      }
    }
    std::vector<Residue> digits(slots.size(), 0);
    while (true) {
      std::vector<FieldVector> basis(static_cast<std::size_t>(r),
                                     FieldVector(static_cast<std::size_t>(k), 0));
      for (int i = 0; i < r; ++i) {
        basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivot_labels[static_cast<std::size_t>(i)] - 1)] = 1;
      }
      for (std::size_t s = 0; s < slots.size(); ++s) {
        basis[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = digits[s];
      }
      std::vector<FieldVector> words;
      for (const auto& m : basis) words.push_back(code.encode(m));
      out.push_back({std::move(basis), support(words, code.length())});
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  });
  return out;
}

bool contains_subspace(const PrimeField& f, int k, const Subspace& big, const Subspace& small) {
  std::vector<FieldVector> rows = big.basis;
  rows.insert(rows.end(), small.basis.begin(), small.basis.end());
  return rank(from_rows(f, static_cast<std::size_t>(k), rows)) == big.basis.size();
}

// Indices into `level` of minimum support size among those passing `keep`.
template <class Keep>
std::vector<std::size_t> optimal(const std::vector<Subspace>& level, Keep&& keep) {
  int best = std::numeric_limits<int>::max();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (!keep(i)) continue;
    const int w = level[i].support.size();
    if (w < best) {
      best = w;
      out.clear();
    }
    if (w == best) out.push_back(i);
  }
  return out;
}

CodeGreedyFamily family_from(const std::vector<std::vector<Subspace>>& by_dim,
                             const std::vector<std::vector<std::size_t>>& chosen) {
  CodeGreedyFamily f;
  for (std::size_t r = 1; r < chosen.size(); ++r) {
    const auto& idx = chosen[r];
    if (idx.empty()) throw IdentityFailure("greedy recursion produced no subcode");
    f.weights.push_back(by_dim[r][idx.front()].support.size());
    std::vector<SubsetMask> sup;
    for (std::size_t i : idx) sup.push_back(by_dim[r][i].support);
    std::sort(sup.begin(), sup.end(), by_size_then_mask);
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
    f.supports.push_back(std::move(sup));
  }
  return f;
}

}  // namespace

int ghw_bruteforce(const LinearCode& code, int r, const SubspaceCaps& caps) {
  if (r < 1 || r > code.dimension()) {
    throw InputError("subcode dimension " + std::to_string(r) + " outside 1.." +
                     std::to_string(code.dimension()));
  }
  check_caps(code, caps);
  int best = std::numeric_limits<int>::max();
  for (const auto& s : subspaces(code, r)) best = std::min(best, s.support.size());
  return best;
}

CodeGreedyResult greedy_bruteforce(const LinearCode& code, const SubspaceCaps& caps) {
  check_caps(code, caps);
  const int k = code.dimension();
  if (k == 0) return {{}, {}, {}, {}, true};
  const PrimeField& f = code.field();
  std::vector<std::vector<Subspace>> by_dim(static_cast<std::size_t>(k) + 1);
  for (int r = 1; r <= k; ++r) by_dim[static_cast<std::size_t>(r)] = subspaces(code, r);

  // inside[r][i][j]: subspace j of dimension r - 1 lies in subspace i of dimension r.
  std::vector<std::vector<std::vector<bool>>> inside(static_cast<std::size_t>(k) + 1);
  for (std::size_t r = 2; r <= static_cast<std::size_t>(k); ++r) {
    inside[r].resize(by_dim[r].size());
    for (std::size_t i = 0; i < by_dim[r].size(); ++i) {
      inside[r][i].resize(by_dim[r - 1].size());
      for (std::size_t j = 0; j < by_dim[r - 1].size(); ++j) {
        inside[r][i][j] = contains_subspace(f, k, by_dim[r][i], by_dim[r - 1][j]);
      }
    }
  }

  CodeGreedyResult out;
  std::vector<std::vector<std::size_t>> computing_d(static_cast<std::size_t>(k) + 1);
  for (std::size_t r = 1; r <= static_cast<std::size_t>(k); ++r) {
    computing_d[r] = optimal(by_dim[r], [](std::size_t) { return true; });
    out.d.push_back(by_dim[r][computing_d[r].front()].support.size());
  }

  auto contains_one_of = [&](std::size_t r, std::size_t i, const std::vector<std::size_t>& below) {
    return std::any_of(below.begin(), below.end(), [&](std::size_t j) { return inside[r][i][j]; });
  };

  // Bottom-up: greedy r-subcodes contain a greedy (r-1)-subcode.
  std::vector<std::vector<std::size_t>> up(static_cast<std::size_t>(k) + 1);
  up[1] = computing_d[1];
  for (std::size_t r = 2; r <= static_cast<std::size_t>(k); ++r) {
    up[r] = optimal(by_dim[r], [&](std::size_t i) { return contains_one_of(r, i, up[r - 1]); });
  }
  out.bottom_up = family_from(by_dim, up);

  // Top-down: the k-subcode is C; greedy r-subcodes lie in a greedy (r+1)-subcode.
  std::vector<std::vector<std::size_t>> down(static_cast<std::size_t>(k) + 1);
  down[static_cast<std::size_t>(k)] = {0};
  for (std::size_t r = static_cast<std::size_t>(k) - 1; r >= 1; --r) {
    down[r] = optimal(by_dim[r], [&](std::size_t j) {
      return std::any_of(down[r + 1].begin(), down[r + 1].end(),
                         [&](std::size_t i) { return inside[r + 1][i][j]; });
    });
  }
  out.top_down = family_from(by_dim, down);

  // CEZ: r-subcodes containing a subcode that computes d_{r-1}.
  std::vector<std::vector<std::size_t>> cez(static_cast<std::size_t>(k) + 1);
  cez[1] = computing_d[1];
  for (std::size_t r = 2; r <= static_cast<std::size_t>(k); ++r) {
    cez[r] = optimal(by_dim[r], [&](std::size_t i) {
      return contains_one_of(r, i, computing_d[r - 1]);
    });
  }
  out.cez = family_from(by_dim, cez);

  // Chained: a nested chain of subcodes each computing d_r.
  std::vector<std::size_t> reachable = computing_d[1];
  for (std::size_t r = 2; r <= static_cast<std::size_t>(k) && !reachable.empty(); ++r) {
    std::vector<std::size_t> next;
    for (std::size_t i : computing_d[r]) {
      if (contains_one_of(r, i, reachable)) next.push_back(i);
    }
    reachable = std::move(next);
  }
  out.chained = !reachable.empty();
  return out;
}

WeightReport code_weights(const LinearCode& code) {
  const CycleLadder ladder(code_matroid(code));
  WeightReport r = weight_report(ladder);
  check_weight_invariants(r, ladder);
  return r;
}

}  // namespace mgw
