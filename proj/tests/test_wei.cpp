#include <doctest.h>

#include "mgw/error.hpp"
#include "mgw/wei.hpp"
#include "support/corpus.hpp"

using mgw::CycleLadder;
using mgw::Matroid;
using mgw::SubsetMask;
using mgw::WeightVector;

namespace {

SubsetMask set(std::initializer_list<int> labels) {
  std::uint64_t bits = 0;
  for (int x : labels) bits |= std::uint64_t{1} << (x - 1);
  return SubsetMask(bits);
}

}  // namespace

TEST_CASE("complement profile") {
  CHECK(mgw::chain_profile(8, {2, 4, 7, 8}).complement_profile == std::vector<int>{3, 4, 6, 8});
  CHECK(mgw::chain_profile(4, {3, 4}).complement_profile == std::vector<int>{3, 4});
  CHECK(mgw::chain_profile(5, {}).complement_profile == std::vector<int>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(mgw::chain_profile(4, {3, 3}), mgw::InputError);
  CHECK_THROWS_AS(mgw::chain_profile(4, {0, 3}), mgw::InputError);
  CHECK_THROWS_AS(mgw::chain_profile(4, {3, 5}), mgw::InputError);
}

TEST_CASE("complement chain of the bottom-up chain") {
  const Matroid m = mgwtest::ternary8();
  const mgw::Chain s = {set({1, 2}), set({1, 2, 3, 4}), set({1, 2, 3, 4, 5, 6, 7}), SubsetMask::full(8)};
  const mgw::Chain delta = mgw::delta_chain(m, s);
  CHECK(delta == mgw::Chain{set({5, 6, 8}), set({5, 6, 7, 8}), set({3, 4, 5, 6, 7, 8}), SubsetMask::full(8)});
  const Matroid dual = m.dual();
  for (std::size_t i = 0; i < delta.size(); ++i) CHECK(dual.nullity(delta[i]) == static_cast<int>(i + 1));

  const mgw::Chain bad = {set({1, 2, 3}), set({1, 2, 3, 4}), set({1, 2, 3, 4, 5, 6, 7}), SubsetMask::full(8)};
  CHECK_THROWS_AS(mgw::delta_chain(m, bad), mgw::InputError);
  CHECK_THROWS_AS(mgw::delta_chain(m, mgw::Chain{set({1, 2})}), mgw::InputError);
}

TEST_CASE("complement chains land in the dual on every chain") {
  for (const auto& [name, m] : mgwtest::small_corpus(7)) {
    CAPTURE(name);
    const CycleLadder ladder(m);
    if (ladder.corank() == 0) continue;
    const Matroid dual = m.dual();
    const int n = m.size();
    // Walk every chain through the ladder.
    std::vector<mgw::Chain> chains;
    for (SubsetMask c : ladder.level(1)) chains.push_back({c});
    for (int l = 2; l <= ladder.corank(); ++l) {
      std::vector<mgw::Chain> next;
      for (const auto& c : chains) {
        for (SubsetMask mu : ladder.covers(c.back())) {
          next.push_back(c);
          next.back().push_back(mu);
        }
      }
      chains = std::move(next);
    }
    for (const auto& c : chains) {
      const mgw::Chain delta = mgw::delta_chain(m, c);
      REQUIRE(static_cast<int>(delta.size()) == n - ladder.corank());
      CHECK(mgw::cardinalities(delta) ==
            WeightVector(mgw::chain_profile(n, mgw::cardinalities(c)).complement_profile));
      for (std::size_t i = 0; i < delta.size(); ++i) {
        CHECK(dual.nullity(delta[i]) == static_cast<int>(i + 1));
        if (i > 0) CHECK(delta[i - 1].is_proper_subset_of(delta[i]));
      }
    }
  }
}

TEST_CASE("duality reports") {
  const auto g = mgw::check_wei_greedy(mgwtest::ternary8());
  CHECK(g.identity_holds);
  CHECK(g.left == WeightVector{2, 4, 7, 8});
  CHECK(g.right_transformed == std::vector<int>{1, 3, 5, 6});
  CHECK(g.union_values == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  const auto c = mgw::check_wei_classical(mgwtest::ternary8());
  CHECK(c.identity_holds);
  CHECK(c.right_transformed == std::vector<int>{1, 3, 5, 7});

  const auto broken = mgw::wei_identity(4, {3, 4}, {3, 4});
  CHECK(broken.identity_holds);
  CHECK_FALSE(mgw::wei_identity(4, {2, 4}, {3, 4}).identity_holds);
  CHECK_FALSE(mgw::wei_identity(4, {3, 4}, {3}).identity_holds);
}

TEST_CASE("Wei duality across the corpus") {
  auto check = [](const std::string& name, const Matroid& m) {
    CAPTURE(name);
    CHECK(mgw::check_wei_greedy(m).identity_holds);
    CHECK(mgw::check_wei_classical(m).identity_holds);
  };
  for (const auto& [name, m] : mgwtest::small_corpus(8)) check(name, m);
  for (const auto& [name, m] : mgwtest::random_corpus(11, 60, 6, 10)) check(name, m);
}
