#pragma once

#include <cstdint>
#include <vector>

#include "mgw/field.hpp"
#include "mgw/weights.hpp"

namespace mgw {

/// An [n, k] linear code over a prime field, stored by a full-row-rank
/// generator matrix in reduced row echelon form.
class LinearCode {
 public:
  /// Zero rows are dropped; any other linear dependence among the rows is an
  /// InputError.
  static LinearCode from_generator(const FieldMatrix& g);
  /// The code is the kernel of h.
  static LinearCode from_parity_check(const FieldMatrix& h);

  const PrimeField& field() const { return generator_.field(); }
  std::uint32_t modulus() const { return generator_.modulus(); }
  int length() const { return static_cast<int>(generator_.cols()); }
  int dimension() const { return static_cast<int>(generator_.rows()); }
  const FieldMatrix& generator() const { return generator_; }
  /// A parity-check matrix (rows span the dual code).
  FieldMatrix parity_check() const;

  /// m * G for a message of length k.
  FieldVector encode(std::span<const Residue> message) const;

 private:
  explicit LinearCode(FieldMatrix g) : generator_(std::move(g)) {}
  FieldMatrix generator_;
};

/// Union of the nonzero positions of the given words (1-based). Throws
/// InputError when a word's length differs from n.
SubsetMask support(const std::vector<FieldVector>& words, int n);

/// Basis of C(X) = {w in C : Supp(w) in X}; its size equals the nullity of X
/// in the code's matroid.
std::vector<FieldVector> shortened_subcode(const LinearCode& code, SubsetMask x);

/// The matroid whose nullity function is X -> dim C(X).
Matroid code_matroid(const LinearCode& code);

struct SubspaceCaps {
  /// p^k must not exceed this.
  std::uint64_t max_ambient = std::uint64_t{1} << 14;
  /// Total number of subspaces enumerated across all dimensions.
  std::uint64_t max_subspaces = 200'000;
};

/// Number of r-dimensional subspaces of GF(p)^k, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint32_t p, int k, int r);

/// Oracle: min wt(D) over every r-dimensional subcode D, enumerated through
/// reduced row echelon representatives. Throws CapExceeded past the caps.
int ghw_bruteforce(const LinearCode& code, int r, const SubspaceCaps& caps = {});

struct CodeGreedyFamily {
  WeightVector weights;
  /// supports[r-1]: supports of every optimal subcode of dimension r.
  std::vector<std::vector<SubsetMask>> supports;
};

struct CodeGreedyResult {
  WeightVector d;
  CodeGreedyFamily bottom_up;
  CodeGreedyFamily top_down;
  CodeGreedyFamily cez;
  /// Some chain D_1 < ... < D_k has D_i computing d_i.
  bool chained = false;
};

/// Oracle: greedy subcodes enumerated literally from their recursive
/// definitions, carrying every optimal subcode forward at each dimension.
CodeGreedyResult greedy_bruteforce(const LinearCode& code, const SubspaceCaps& caps = {});

/// Weights of the code computed through its matroid.
WeightReport code_weights(const LinearCode& code);

}  // namespace mgw
