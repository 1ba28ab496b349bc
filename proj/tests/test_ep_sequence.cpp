#include <gtest/gtest.h>

#include <algorithm>

#include "subshift/oracles.hpp"
#include "test_support.hpp"

using namespace subshift;
using namespace subshift::testing;

namespace {

const std::vector<EPSeq>& small_family() {
  static const auto family = exhaustive_family(4, 6);
  return family;
}

std::vector<EPSeq> random_family(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EPSeq> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ep(rng));
  return out;
}

bool contains(const std::vector<AnomalyWindow>& ws, AnomalyWindow w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

}  // namespace

TEST(MakeEp, NormalizesAndRejectsPeriodicInput) {
  auto x = make_ep(W("0"), W("11"));
  EXPECT_EQ(x.period_word(), W("0"));
  EXPECT_EQ(x.anomaly(), W("11"));
  EXPECT_EQ(make_ep(W("0101"), W("1")).period_word(), W("01"));
  try {
    make_ep(W("0"), W("00"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegeneratePeriodic);
  }
  EXPECT_THROW(make_ep(W("0101"), W("0101")), Error);
  EXPECT_THROW(make_ep(W("01"), Word::parse("ab", Alphabet::make({"a", "b"}))), Error);
}

TEST(SymbolAt, FollowsAnchoring) {
  auto x = ep("110", "1");
  EXPECT_EQ(x.symbol_at(-1), Symbol{0});
  EXPECT_EQ(x.symbol_at(0), Symbol{1});
  EXPECT_EQ(x.symbol_at(1), Symbol{1});
  EXPECT_EQ(x.symbol_at(-3), Symbol{1});
  EXPECT_EQ(x.symbol_at(3), Symbol{0});
}

TEST(Window, Examples) {
  EXPECT_EQ(window(ep("0", "11"), -2, 3), W("001100"));
  EXPECT_EQ(window(ep("10", "1"), 0, 0), W("1"));
  EXPECT_EQ(window(ep("110", "1"), -3, 0), W("1101"));
  EXPECT_THROW(window(ep("0", "1"), 2, 1), Error);
}

TEST(Shift, ActsAsTheShiftMap) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = random_ep(rng);
    EXPECT_EQ(shift(x, 0), x);
    for (Index k = -9; k <= 9; ++k) {
      auto y = shift(x, k);
      for (Index i = -20; i <= 20; ++i) ASSERT_EQ(y.symbol_at(i), x.symbol_at(i + k));
    }
    EXPECT_EQ(shift(shift(x, 3), -3), x);
  }
}

TEST(RemoveWindow, Examples) {
  auto r1 = remove_window(ep("0", "01"), {1, 1});
  ASSERT_TRUE(is_periodic(r1));
  EXPECT_EQ(std::get<PeriodicSeq>(r1), PeriodicSeq(W("0"), 0));

  auto r2 = remove_window(ep("0", "11"), {0, 1});
  ASSERT_FALSE(is_periodic(r2));
  EXPECT_EQ(std::get<EPSeq>(r2), ep("0", "1"));

  auto r3 = remove_window(ep("110", "1"), {0, 1});
  ASSERT_TRUE(is_periodic(r3));
  const auto& p = std::get<PeriodicSeq>(r3);
  EXPECT_EQ(p.period_word(), W("110"));
  for (Index k = -6; k < 0; ++k) EXPECT_EQ(p.symbol_at(k), ep("110", "1").symbol_at(k));
}

TEST(RemoveWindow, ResultMatchesPointwiseDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_ep(rng);
    std::uniform_int_distribution<Index> start(-10, 15), len(1, 9);
    AnomalyWindow w{start(rng), len(rng)};
    auto r = remove_window(x, w);
    for (Index k = -40; k <= 40; ++k) {
      const Symbol expected = k < w.start ? x.symbol_at(k) : x.symbol_at(k + w.length);
      const Symbol got = std::visit([&](const auto& s) { return s.symbol_at(k); }, r);
      ASSERT_EQ(got, expected);
    }
  }
}

TEST(AnomalyWindows, Examples) {
  auto w1 = anomaly_windows(ep("0", "01"));
  EXPECT_TRUE(contains(w1, {1, 1}));
  EXPECT_TRUE(contains(w1, {0, 2}));
  EXPECT_EQ(anomaly_windows(ep("0", "11")), (std::vector<AnomalyWindow>{{0, 2}}));
  EXPECT_TRUE(contains(anomaly_windows(ep("10", "1")), {0, 1}));
}

TEST(AnomalySize, Examples) {
  EXPECT_EQ(anomaly_size(ep("0", "11")), 2);
  EXPECT_EQ(anomaly_size(ep("0", "01")), 1);
  EXPECT_EQ(anomaly_size(ep("110", "1")), 1);
  EXPECT_EQ(oracle::anomaly_size(ep("0", "11")), 2);
  EXPECT_EQ(oracle::anomaly_size(ep("0", "01")), 1);
}

TEST(LeastPeriod, Examples) {
  EXPECT_EQ(least_period(ep("110", "1")), 3);
  EXPECT_EQ(least_period(ep("01", "1")), 2);
  EXPECT_EQ(least_period(make_ep(W("0101"), W("1"))), 2);
}

TEST(RemoveAnomaly, Examples) {
  EXPECT_EQ(remove_anomaly(ep("0", "11")), PeriodicSeq(W("0"), 0));
  auto p = remove_anomaly(ep("110", "1"));
  EXPECT_EQ(p.least_period(), 3);
  for (Index k = -9; k < 0; ++k) EXPECT_EQ(p.symbol_at(k), ep("110", "1").symbol_at(k));
  auto x = ep("0", "01");
  EXPECT_EQ(std::get<PeriodicSeq>(remove_window(x, {1, 1})), std::get<PeriodicSeq>(remove_window(x, {0, 2})));
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical(ep("0", "01")), ep("0", "1"));
  auto c = canonical(ep("110", "1"));
  EXPECT_EQ(canonical(c), c);
}

TEST(Canonical, ShiftInvariantAndIdempotent) {
  for (const auto& x : random_family(200, 3)) {
    const auto c = canonical(x);
    ASSERT_EQ(canonical(c), c);
    ASSERT_EQ(c.anomaly().length(), anomaly_size(x));
    for (Index k = -5; k <= 5; ++k) ASSERT_EQ(canonical(shift(x, k)), c);
  }
}

TEST(Similar, Examples) {
  std::mt19937_64 rng(5);
  auto x = random_ep(rng);
  EXPECT_TRUE(similar(x, shift(x, 7)));
  EXPECT_FALSE(similar(ep("0", "1"), ep("1", "0")));
  const bool s = similar(ep("10", "1"), ep("01", "1"));
  EXPECT_EQ(s, oracle::similar_by_windows(ep("10", "1"), ep("01", "1")));
  EXPECT_THROW(similar(ep("0", "1"), make_ep(Word::parse("a", Alphabet::make({"a", "b"})),
                                             Word::parse("b", Alphabet::make({"a", "b"})))),
               Error);
}

TEST(Similar, AgreesWithWindowComparison) {
  const auto family = exhaustive_family(2, 4);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i; j < family.size(); ++j)
      ASSERT_EQ(similar(family[i], family[j]), oracle::similar_by_windows(family[i], family[j]))
          << io_string(family[i]) << " vs " << io_string(family[j]);
}

TEST(EnumerateBlocks, Examples) {
  EXPECT_EQ(enumerate_blocks(ep("0", "1"), 1), (std::set<Word>{W("0"), W("1")}));
  EXPECT_EQ(enumerate_blocks(ep("0", "1"), 2), (std::set<Word>{W("00"), W("01"), W("10")}));
  EXPECT_EQ(enumerate_blocks(ep("10", "1"), 2), (std::set<Word>{W("10"), W("01"), W("11")}));
}

TEST(EnumerateBlocks, MatchesLongWindowScan) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_ep(rng);
    for (Index n = 1; n <= 6; ++n) {
      std::set<Word> scan;
      for (Index s = -60; s <= 60; ++s) scan.insert(window(x, s, s + n - 1));
      ASSERT_EQ(enumerate_blocks(x, n), scan);
    }
  }
}

// Removing any two anomaly windows gives the same periodic sequence, and all
// anomaly lengths agree modulo the least period.
TEST(AnomalyProperties, RemovalsAgreeAndLengthsAreCongruent) {
  auto check = [](const EPSeq& x) {
    const auto wins = anomaly_windows(x);
    ASSERT_FALSE(wins.empty());
    ASSERT_TRUE(contains(wins, {x.offset(), x.anomaly().length()}));
    const auto first = remove_window(x, wins.front());
    for (const auto& w : wins) {
      const auto r = remove_window(x, w);
      ASSERT_TRUE(is_periodic(r));
      ASSERT_EQ(std::get<PeriodicSeq>(r), std::get<PeriodicSeq>(first));
      ASSERT_EQ(floor_mod(w.length - x.anomaly().length(), x.least_period()), 0);
    }
    const auto p = std::get<PeriodicSeq>(remove_window(x, {x.offset(), x.anomaly().length()}));
    ASSERT_EQ(p.period_word(), x.period_word());
  };
  for (const auto& x : small_family()) check(x);
  for (const auto& x : random_family(200, 0)) check(x);
}

// The library's window list equals the brute-force oracle restricted to the
// same candidate set, and widening the oracle's search never finds a shorter
// anomaly.
TEST(AnomalyProperties, AgreesWithBruteForceOracle) {
  auto check = [](const EPSeq& x) {
    const Index n = x.least_period(), v = x.anomaly().length();
    const auto lib = anomaly_windows(x);
    std::vector<AnomalyWindow> restricted;
    for (const auto& w : oracle::anomaly_windows(x, v, 2 * n))
      if (floor_mod(w.length - v, n) == 0) restricted.push_back(w);
    ASSERT_EQ(lib, restricted);
    const auto wide = oracle::anomaly_windows(x, v + 2 * n, 4 * n);
    Index best = v + 2 * n + 1;
    for (const auto& w : wide) best = std::min(best, w.length);
    ASSERT_EQ(best, anomaly_size(x));
  };
  const auto& fam = small_family();
  for (const auto& x : fam) check(x);
  for (const auto& x : random_family(100, 1)) check(x);
}

TEST(AnomalyProperties, InvariantUnderShift) {
  const auto& fam = small_family();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& x = fam[i];
    const Index n = x.least_period(), a = anomaly_size(x);
    const Index bound = 2 * n + x.anomaly().length();
    for (Index k = -bound; k <= bound; ++k) {
      ASSERT_EQ(anomaly_size(shift(x, k)), a);
      ASSERT_EQ(least_period(shift(x, k)), n);
    }
  }
}
