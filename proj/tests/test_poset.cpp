#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "orbital/poset.hpp"

using fixtures::group;
using fixtures::perm;
using orbital::antichain;
using orbital::chain;
using orbital::Permutation;
using orbital::PermGroup;
using orbital::Poset;
using orbital::poset_from_relations;
using orbital::Rational;

TEST(PosetFromRelations, ClosesTransitively) {
  auto P = poset_from_relations(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(P.less(0, 2));
  EXPECT_EQ(P, chain(3));
  EXPECT_TRUE(poset_from_relations(3, {}).is_antichain());
}

TEST(PosetFromRelations, RejectsCycles) {
  EXPECT_THROW(poset_from_relations(2, {{0, 1}, {1, 0}}), orbital::InputError);
  EXPECT_THROW(poset_from_relations(1, {{0, 0}}), orbital::InputError);
  EXPECT_THROW(poset_from_relations(2, {{0, 5}}), orbital::InputError);
}

TEST(ChainAntichain, Examples) {
  EXPECT_EQ(chain(1), antichain(1));
  EXPECT_EQ(chain(3).relations().size(), 3u);
  EXPECT_EQ(antichain(4).relations().size(), 0u);
}

TEST(IsOrderAction, Examples) {
  EXPECT_TRUE(orbital::is_order_action(chain(4), PermGroup(4)));
  auto bad = orbital::is_order_action(chain(2), group(2, {{{0, 1}}}));
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.witness->p, 0u);
  EXPECT_EQ(bad.witness->q, 1u);
  EXPECT_EQ(bad.witness->element, perm(2, {{0, 1}}));
  auto two_chains = poset_from_relations(4, {{0, 2}, {1, 3}});
  EXPECT_TRUE(orbital::is_order_action(two_chains, group(4, {{{0, 1}, {2, 3}}})));
}

TEST(QuotientPoset, Examples) {
  auto P = poset_from_relations(4, {{0, 2}, {1, 3}, {0, 3}});
  EXPECT_EQ(orbital::quotient_poset(P, Permutation::identity(4)).poset, P);
  EXPECT_EQ(orbital::quotient_poset(antichain(4), perm(4, {{0, 1}, {2, 3}})).poset, antichain(2));
  auto two_chains = poset_from_relations(4, {{0, 2}, {1, 3}});
  auto Q = orbital::quotient_poset(two_chains, perm(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(Q.poset, chain(2));
  EXPECT_EQ(Q.block_of, (std::vector<std::size_t>{0, 0, 1, 1}));
}

TEST(QuotientPoset, NonAutomorphismIsPreconditionError) {
  EXPECT_THROW(orbital::quotient_poset(chain(2), perm(2, {{0, 1}})), orbital::PreconditionError);
}

TEST(EnumerateHoms, Examples) {
  auto weak = orbital::enumerate_homs(chain(2), 2, false);
  ASSERT_EQ(weak.size(), 3u);
  EXPECT_EQ(weak[0].values, (std::vector<int>{1, 1}));
  EXPECT_EQ(weak[1].values, (std::vector<int>{1, 2}));
  EXPECT_EQ(weak[2].values, (std::vector<int>{2, 2}));
  auto strict = orbital::enumerate_homs(chain(2), 2, true);
  ASSERT_EQ(strict.size(), 1u);
  EXPECT_EQ(strict[0].values, (std::vector<int>{1, 2}));
  EXPECT_EQ(orbital::enumerate_homs(antichain(3), 2, false).size(), 8u);
  EXPECT_EQ(orbital::enumerate_homs(chain(2), 0, false).size(), 0u);
  EXPECT_EQ(orbital::enumerate_homs(antichain(0), 0, false).size(), 1u);
}

TEST(OrderPolynomial, Examples) {
  auto c2 = orbital::order_polynomial(chain(2), false);
  EXPECT_EQ(c2(3), 6);
  EXPECT_EQ(c2(3), Rational(oracle::binomial(3 + 2 - 1, 2)));
  EXPECT_EQ(orbital::order_polynomial(antichain(3), false), orbital::RationalPolynomial::monomial(3));
  EXPECT_EQ(orbital::order_polynomial(antichain(3), false)(2), 8);
  EXPECT_EQ(orbital::order_polynomial(chain(2), true)(3), Rational(oracle::homs(chain(2), 3, true).size()));
  EXPECT_EQ(orbital::order_polynomial(chain(2), true)(3), 3);
}

TEST(OrderPolynomial, EmptyPosetIsConstantOne) {
  EXPECT_EQ(orbital::order_polynomial(antichain(0), false), orbital::RationalPolynomial::constant(1));
  EXPECT_EQ(orbital::order_polynomial(antichain(0), true), orbital::RationalPolynomial::constant(1));
}

TEST(OrderPolynomial, ChainIsBinomial) {
  for (std::size_t k = 1; k <= 6; ++k) {
    auto p = orbital::order_polynomial(chain(k), false);
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(p(n), Rational(oracle::binomial(n + k - 1, k)));
  }
}

// Observed value, recorded rather than assumed: the polynomial vanishes at 0
// for every nonempty poset in the sample.
TEST(OrderPolynomial, ObservedValueAtZero) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto P = fixtures::random_poset(1 + rng() % 5, rng);
    EXPECT_EQ(orbital::order_polynomial(P, false)(0), 0);
    EXPECT_EQ(orbital::order_polynomial(P, true)(0), 0);
  }
}

// ---- properties ----

TEST(PosetProperties, EnumerationMatchesBruteForce) {
  std::mt19937 rng(12);
  for (int t = 0; t < 60; ++t) {
    auto P = fixtures::random_poset(rng() % 6, rng);
    int n = static_cast<int>(rng() % 5);
    for (bool strict : {false, true}) {
      auto got = orbital::enumerate_homs(P, n, strict);
      auto want = oracle::homs(P, n, strict);
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].values, want[i]);
      EXPECT_EQ(orbital::count_homs(P, n, strict), want.size());
    }
  }
}

TEST(PosetProperties, StanleyReciprocity) {
  std::mt19937 rng(13);
  for (int t = 0; t < 60; ++t) {
    auto P = fixtures::random_poset(rng() % 7, rng);
    auto weak = orbital::order_polynomial(P, false);
    auto strict = orbital::order_polynomial(P, true);
    Rational s = P.size() % 2 == 0 ? 1 : -1;
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(strict(n), s * weak(-n));
  }
}

TEST(PosetProperties, InterpolationIsStableUnderExtraNodes) {
  std::mt19937 rng(14);
  for (int t = 0; t < 40; ++t) {
    auto P = fixtures::random_poset(rng() % 6, rng);
    for (bool strict : {false, true}) {
      EXPECT_EQ(orbital::order_polynomial(P, strict), orbital::order_polynomial(P, strict, P.size() + 3));
    }
  }
}

TEST(PosetProperties, StrictCountAtMostWeakEqualIffAntichain) {
  std::mt19937 rng(15);
  for (int t = 0; t < 80; ++t) {
    auto P = fixtures::random_poset(1 + rng() % 5, rng, 0.3);
    for (int n = 1; n <= 4; ++n) {
      auto s = orbital::count_homs(P, n, true), w = orbital::count_homs(P, n, false);
      EXPECT_LE(s, w);
      EXPECT_EQ(s == w, P.is_antichain()) << "n=" << n;
    }
  }
}

TEST(PosetProperties, QuotientSizeIsCycleCountAndCyclesAreAntichains) {
  std::mt19937 rng(16);
  int checked = 0;
  for (const auto& fc : fixtures::poset_cases()) {
    for (const auto& g : fc.group) {
      auto Q = orbital::quotient_poset(fc.poset, g);
      EXPECT_EQ(Q.poset.size(), orbital::cycle_count(g));
      for (const auto& block : Q.blocks.blocks)
        for (std::size_t a : block)
          for (std::size_t b : block) EXPECT_FALSE(fc.poset.less(a, b));
      ++checked;
    }
  }
  // random automorphisms found by filtering random permutations
  for (int t = 0; t < 400; ++t) {
    auto P = fixtures::random_poset(1 + rng() % 5, rng, 0.25);
    auto g = fixtures::random_perm(P.size(), rng);
    if (!orbital::is_order_automorphism(P, g)) continue;
    EXPECT_EQ(orbital::quotient_poset(P, g).poset.size(), orbital::cycle_count(g));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(PosetProperties, IdentityQuotientIsOriginal) {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    auto P = fixtures::random_poset(rng() % 6, rng);
    auto Q = orbital::quotient_poset(P, Permutation::identity(P.size()));
    EXPECT_EQ(Q.poset, P);
  }
}
