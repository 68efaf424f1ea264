#include <doctest.h>

#include <random>

#include "mgw/error.hpp"
#include "mgw/ladder.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using mgw::FieldMatrix;
using mgw::LinearCode;
using mgw::PrimeField;
using mgw::SubsetMask;
using mgw::WeightVector;

namespace {

SubsetMask set(std::initializer_list<int> labels) {
  std::uint64_t bits = 0;
  for (int x : labels) bits |= std::uint64_t{1} << (x - 1);
  return SubsetMask(bits);
}

LinearCode repetition() { return LinearCode::from_generator(FieldMatrix(PrimeField(2), {{1, 1, 1}})); }

}  // namespace

TEST_CASE("construction") {
  const LinearCode c = mgwtest::ternary8_code();
  CHECK(c.length() == 8);
  CHECK(c.dimension() == 4);
  CHECK(c.modulus() == 3);
  const FieldMatrix h = c.parity_check();
  CHECK(h.rows() == 4);
  for (std::size_t r = 0; r < c.generator().rows(); ++r) {
    const auto row = c.generator().row(r);
    for (mgw::Residue x : h.apply(row)) CHECK(x == 0);
  }
  const LinearCode back = LinearCode::from_parity_check(h);
  CHECK(back.generator() == c.generator());
  CHECK_THROWS_AS(LinearCode::from_generator(FieldMatrix(PrimeField(2), {{1, 1}, {1, 1}})), mgw::InputError);
  CHECK(LinearCode::from_generator(FieldMatrix(PrimeField(2), {{1, 1}, {0, 0}})).dimension() == 1);
}

TEST_CASE("supports") {
  CHECK(mgw::support({mgw::FieldVector(8, 0)}, 8).empty());
  const LinearCode c = mgwtest::ternary8_code();
  const mgw::FieldVector w = {1, 2, 0, 0, 0, 0, 0, 0};
  CHECK(mgw::support({w}, 8) == set({1, 2}));
  const FieldMatrix g(PrimeField(3), {{1, 0, 1, 1, 0, 0, 0, 0},
                                      {0, 1, 1, 1, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 1, 1, 1, 0},
                                      {0, 0, 0, 0, 1, 2, 0, 1}});
  const std::vector<mgw::FieldVector> lower = {
      mgw::FieldVector(g.row(2).begin(), g.row(2).end()),
      mgw::FieldVector(g.row(3).begin(), g.row(3).end())};
  CHECK(mgw::support(lower, 8) == set({5, 6, 7, 8}));
  CHECK_THROWS_AS(mgw::support({mgw::FieldVector(3, 1)}, 8), mgw::InputError);
}

TEST_CASE("shortened subcodes") {
  const LinearCode c = mgwtest::ternary8_code();
  CHECK(mgw::shortened_subcode(c, SubsetMask()).empty());
  const auto pair = mgw::shortened_subcode(c, set({1, 2}));
  REQUIRE(pair.size() == 1);
  CHECK(mgw::support(pair, 8) == set({1, 2}));
  CHECK(mgw::shortened_subcode(c, set({5, 6, 7, 8})).size() == 2);
  CHECK(mgw::shortened_subcode(c, SubsetMask::full(8)).size() == 4);

  const mgw::Matroid m = mgw::code_matroid(c);
  for (std::uint64_t x = 0; x < 256; ++x) {
    const int dim = static_cast<int>(mgw::shortened_subcode(c, SubsetMask(x)).size());
    CHECK(dim == m.nullity(SubsetMask(x)));
    CHECK(dim == mgwtest::shortened_dimension(c, SubsetMask(x)));
  }
}

TEST_CASE("code matroids") {
  CHECK(mgw::rank_table(mgw::code_matroid(mgwtest::ternary8_code())) == mgw::rank_table(mgwtest::ternary8()));
  const auto identity = mgw::code_matroid(LinearCode::from_generator(FieldMatrix::identity(PrimeField(2), 3)));
  CHECK(identity.corank() == 3);
  CHECK(mgw::circuits(mgw::code_matroid(repetition())) == std::vector<SubsetMask>{set({1, 2, 3})});
}

TEST_CASE("Gaussian binomials") {
  CHECK(mgw::gaussian_binomial(2, 3, 1) == 7);
  CHECK(mgw::gaussian_binomial(3, 4, 2) == 130);
  CHECK(mgw::gaussian_binomial(3, 4, 1) == 40);
  CHECK(mgw::gaussian_binomial(5, 0, 0) == 1);
  CHECK(mgw::gaussian_binomial(2, 3, 4) == 0);
  CHECK(mgw::gaussian_binomial(65521, 40, 20) == UINT64_MAX);
}

TEST_CASE("generalized Hamming weights by enumeration") {
  const LinearCode c = mgwtest::ternary8_code();
  CHECK(mgw::ghw_bruteforce(c, 1) == 2);
  CHECK(mgw::ghw_bruteforce(c, 4) == 8);
  CHECK(mgw::ghw_bruteforce(repetition(), 1) == 3);
  CHECK_THROWS_AS(mgw::ghw_bruteforce(c, 5), mgw::InputError);
  mgw::SubspaceCaps tiny;
  tiny.max_ambient = 27;
  CHECK_THROWS_AS(mgw::ghw_bruteforce(c, 1, tiny), mgw::CapExceeded);
  mgw::SubspaceCaps few;
  few.max_subspaces = 100;
  CHECK_THROWS_AS(mgw::greedy_bruteforce(c, few), mgw::CapExceeded);
}

TEST_CASE("greedy subcodes of the 8-element example") {
  const auto r = mgw::greedy_bruteforce(mgwtest::ternary8_code());
  CHECK(r.d == WeightVector{2, 4, 6, 8});
  CHECK(r.bottom_up.weights == WeightVector{2, 4, 7, 8});
  CHECK(r.top_down.weights == WeightVector{3, 4, 6, 8});
  CHECK(r.cez.weights == WeightVector{2, 4, 6, 8});
  CHECK_FALSE(r.chained);
  const auto brute = mgwtest::code_weights_bruteforce(mgwtest::ternary8_code());
  CHECK(brute.d == r.d);
  CHECK(brute.e == r.bottom_up.weights);
  CHECK(brute.e_tilde == r.top_down.weights);
  CHECK(brute.g == r.cez.weights);
  const auto m = mgw::code_weights(mgwtest::ternary8_code());
  CHECK(m.e == r.bottom_up.weights);
  CHECK(m.g == r.cez.weights);
}

TEST_CASE("small codes") {
  const auto rep = mgw::greedy_bruteforce(repetition());
  CHECK(rep.d == WeightVector{3});
  CHECK(rep.bottom_up.weights == WeightVector{3});
  CHECK(rep.top_down.weights == WeightVector{3});
  CHECK(rep.cez.weights == WeightVector{3});
  CHECK(rep.chained);

  const auto mds = mgw::greedy_bruteforce(
      LinearCode::from_generator(FieldMatrix(PrimeField(3), {{1, 0, 1, 1}, {0, 1, 1, 2}})));
  for (const auto& w : {mds.d, mds.bottom_up.weights, mds.top_down.weights, mds.cez.weights}) {
    CHECK(w == WeightVector{3, 4});
  }
  const auto empty = mgw::greedy_bruteforce(LinearCode::from_parity_check(FieldMatrix::identity(PrimeField(2), 3)));
  CHECK(empty.d.empty());
  CHECK(empty.chained);
}

TEST_CASE("code and matroid weights agree on random codes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    const int n = 4 + trial % 5;
    const int k = 1 + trial % 3;
    const LinearCode code = mgwtest::random_code(rng, p, n, k);
    CAPTURE(mgw::format_matrix(code.generator()));
    const auto brute = mgw::greedy_bruteforce(code);
    const auto oracle = mgwtest::code_weights_bruteforce(code);
    const auto m = mgw::code_weights(code);
    CHECK(brute.d == oracle.d);
    CHECK(brute.bottom_up.weights == oracle.e);
    CHECK(brute.top_down.weights == oracle.e_tilde);
    CHECK(brute.cez.weights == oracle.g);
    CHECK(m.d == brute.d);
    CHECK(m.e == brute.bottom_up.weights);
    CHECK(m.e_tilde == brute.top_down.weights);
    CHECK(m.g == brute.cez.weights);
    CHECK(m.chained == brute.chained);
    for (int r = 1; r <= k; ++r) CHECK(mgw::ghw_bruteforce(code, r) == brute.d[r - 1]);
  }
}
