#include <gtest/gtest.h>

#include "subshift/oracles.hpp"
#include "test_support.hpp"

using namespace subshift;
using namespace subshift::testing;

TEST(RestrictedBezout, Examples) {
  EXPECT_EQ(restricted_bezout(1, 1), (BezoutPair{1, 1, 0, 1}));
  EXPECT_EQ(restricted_bezout(2, 5), (BezoutPair{2, 5, 1, 3}));
  EXPECT_EQ(restricted_bezout(3, 5), (BezoutPair{3, 5, 1, 2}));
  // Frozen from the exhaustive oracle.
  EXPECT_EQ(oracle::bezout_solutions(2, 5), (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 3}}));
  EXPECT_EQ(oracle::bezout_solutions(3, 5), (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}}));
}

TEST(RestrictedBezout, Errors) {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalMismatch;
  };
  EXPECT_EQ(kind_of([] { restricted_bezout(2, 4); }), ErrorKind::NotCoprime);
  EXPECT_EQ(kind_of([] { restricted_bezout(0, 3); }), ErrorKind::NonPositive);
  EXPECT_EQ(kind_of([] { restricted_bezout(3, -1); }), ErrorKind::NonPositive);
  EXPECT_EQ(kind_of([] { restricted_bezout(1, kMaxPeriodSum); }), ErrorKind::Overflow);
}

TEST(RestrictedBezout, LargeInputsStayExact) {
  auto bp = restricted_bezout(999'983, 16);  // largest prime below 10^6
  EXPECT_TRUE(bp.valid());
  EXPECT_EQ(std::gcd(bp.a + bp.b, bp.p + bp.q), 1);
}

TEST(SwappedPair, Examples) {
  EXPECT_EQ(swapped_pair({2, 5, 1, 3}), (BezoutPair{5, 2, 2, 1}));
  EXPECT_EQ(swapped_pair({1, 1, 0, 1}), (BezoutPair{1, 1, 0, 1}));
  EXPECT_EQ(swapped_pair({3, 5, 1, 2}), (BezoutPair{5, 3, 3, 2}));
}

TEST(RestrictedBezout, MatchesExhaustiveOracle) {
  for (auto [q, p] : coprime_pairs(200)) {
    const auto sols = oracle::bezout_solutions(q, p);
    ASSERT_EQ(sols.size(), 1u) << q << "/" << p;
    const auto bp = restricted_bezout(q, p);
    ASSERT_EQ(std::make_pair(bp.a, bp.b), sols.front());
    ASSERT_EQ(std::gcd(bp.a + bp.b, p + q), 1);
    ASSERT_TRUE(swapped_pair(bp).valid());
    ASSERT_EQ(swapped_pair(swapped_pair(bp)), bp);
    ASSERT_EQ(swapped_pair(bp), restricted_bezout(p, q));
  }
}
