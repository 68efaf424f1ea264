#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mgw/subset.hpp"

namespace mgw {

using Residue = std::uint32_t;

/// GF(p) for a prime p < 2^16, so a product of two residues fits in 32 bits.
class PrimeField {
 public:
  /// Throws InputError unless p is prime and 2 <= p < 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  /// Multiplicative inverse of a nonzero residue.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

using FieldVector = std::vector<Residue>;

/// Dense row-major matrix over GF(p). All entries are reduced residues.
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Throws InputError on ragged rows or entries outside [0, p).
  FieldMatrix(PrimeField field, const std::vector<std::vector<Residue>>& rows);
  static FieldMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::uint32_t modulus() const { return field_.modulus(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores `value mod p`.
  void set(std::size_t r, std::size_t c, std::uint64_t value);
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  FieldMatrix transpose() const;
  /// this * v (v has cols() entries).
  FieldVector apply(std::span<const Residue> v) const;
  /// u * this (u has rows() entries).
  FieldVector left_apply(std::span<const Residue> u) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Rank over GF(p) by exact row reduction.
std::size_t rank(const FieldMatrix& m);

/// Rank of the columns selected by `columns` (1-based labels), without
/// materialising the submatrix.
std::size_t column_rank(const FieldMatrix& m, SubsetMask columns);

/// Reduced row echelon form; pivots are the first nonzero entry scanning
/// columns left to right. Zero rows are dropped.
FieldMatrix row_echelon(const FieldMatrix& m);

/// Basis of {v : m v = 0}, as the rows of a matrix in reduced row echelon form.
/// The basis has cols() - rank(m) vectors.
std::vector<FieldVector> kernel_basis(const FieldMatrix& m);

/// Columns indexed by X (1-based), in ascending order. Throws InputError if X
/// names a column beyond cols().
FieldMatrix column_submatrix(const FieldMatrix& m, SubsetMask columns);

/// Stacks vectors of equal length as the rows of a matrix.
FieldMatrix from_rows(PrimeField field, std::size_t cols,
                      const std::vector<FieldVector>& rows);

// Text format: "p rows cols" on the first line, then one line per row of
// space-separated residues.
FieldMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const FieldMatrix& m);
FieldMatrix parse_matrix(const std::string& text);
std::string format_matrix(const FieldMatrix& m);

}  // namespace mgw
