#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "mgw/error.hpp"
#include "mgw/field.hpp"

using mgw::FieldMatrix;
using mgw::PrimeField;
using mgw::SubsetMask;

namespace {

const std::vector<std::vector<mgw::Residue>> kG = {
    {1, 0, 1, 1, 0, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 1, 0},
    {0, 0, 0, 0, 1, 2, 0, 1},
};

// Rank by counting the vectors in the row space.
std::size_t rank_by_span(const FieldMatrix& m) {
  const std::uint32_t p = m.modulus();
  std::set<mgw::FieldVector> span;
  std::vector<mgw::Residue> coeff(m.rows(), 0);
  for (;;) {
    span.insert(m.left_apply(coeff));
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == p) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  std::size_t r = 0;
  for (std::size_t size = 1; size < span.size(); size *= p) ++r;
  return r;
}

FieldMatrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t rows, std::size_t cols) {
  FieldMatrix m(PrimeField(p), rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % p);
  }
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField f(7);
  for (mgw::Residue a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(3) == 4);
  CHECK_THROWS_AS(PrimeField(4), mgw::InputError);
  CHECK_THROWS_AS(PrimeField(1), mgw::InputError);
  CHECK_THROWS_AS(f.inv(0), mgw::InputError);
  CHECK(mgw::is_prime(65521));
  CHECK_FALSE(mgw::is_prime(65523));
}

TEST_CASE("rank of small matrices") {
  CHECK(mgw::rank(FieldMatrix(PrimeField(3), 3, 3)) == 0);
  CHECK(mgw::rank(FieldMatrix::identity(PrimeField(2), 4)) == 4);
  const FieldMatrix g(PrimeField(3), kG);
  CHECK(mgw::rank(g) == 4);
  CHECK(mgw::column_rank(g, SubsetMask(0xF0)) == 2);
  CHECK(mgw::column_rank(g, SubsetMask(0x3)) == 2);
  CHECK(mgw::column_rank(g, SubsetMask()) == 0);
}

TEST_CASE("kernel basis") {
  const auto k = mgw::kernel_basis(FieldMatrix(PrimeField(3), {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == mgw::FieldVector{1, 2});
  CHECK(mgw::kernel_basis(FieldMatrix::identity(PrimeField(5), 2)).empty());
}

TEST_CASE("column submatrix") {
  const FieldMatrix g(PrimeField(3), kG);
  CHECK(mgw::column_submatrix(g, SubsetMask()).cols() == 0);
  CHECK(mgw::column_submatrix(g, SubsetMask::full(8)) == g);
  const FieldMatrix block = mgw::column_submatrix(g, SubsetMask(0xF0));
  CHECK(block.cols() == 4);
  CHECK(block.at(0, 0) == 0);
  CHECK(block.at(3, 1) == 2);
  CHECK(mgw::rank(block) == 2);
  CHECK_THROWS_AS(mgw::column_submatrix(g, SubsetMask(0x100)), mgw::InputError);
}

TEST_CASE("rank and kernel agree with enumeration on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = trial % 3 == 0 ? 5 : (trial % 2 ? 3 : 2);
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 6;
    const FieldMatrix m = random_matrix(rng, p, rows, cols);
    const std::size_t r = mgw::rank(m);
    CHECK(r == rank_by_span(m));
    CHECK(r == mgw::rank(m.transpose()));
    CHECK(mgw::row_echelon(m).rows() == r);
    const auto ker = mgw::kernel_basis(m);
    CHECK(ker.size() + r == cols);
    for (const auto& v : ker) {
      for (mgw::Residue x : m.apply(v)) CHECK(x == 0);
    }
    if (!ker.empty()) CHECK(mgw::rank(mgw::from_rows(m.field(), cols, ker)) == ker.size());
  }
}

TEST_CASE("matrix text format") {
  const FieldMatrix g(PrimeField(3), kG);
  const std::string text = mgw::format_matrix(g);
  CHECK(text.rfind("3 4 8\n1 0 1 1 0 0 0 0\n", 0) == 0);
  CHECK(mgw::parse_matrix(text) == g);
  CHECK_THROWS_AS(mgw::parse_matrix("3 1 2\n1 3\n"), mgw::InputError);
  CHECK_THROWS_AS(mgw::parse_matrix("4 1 1\n1\n"), mgw::InputError);
  CHECK_THROWS_AS(mgw::parse_matrix("3 2 2\n1 0\n"), mgw::InputError);
  CHECK_THROWS_AS(FieldMatrix(PrimeField(3), {{1, 0}, {1}}), mgw::InputError);
}
