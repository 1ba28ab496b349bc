#include <gtest/gtest.h>

#include "subshift/oracles.hpp"
#include "test_support.hpp"

using namespace subshift;
using namespace subshift::testing;

namespace {

constexpr auto S = SturmianType::S;
constexpr auto SP = SturmianType::SPrime;

std::vector<std::string> labels(const CellSeries& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs.cells) out.push_back(c.to_string());
  return out;
}

/// Offset of `needle` inside `hay`, if any.
std::optional<std::size_t> find_word(const Word& hay, const Word& needle) {
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i)
    if (hay.subword(i, needle.size()) == needle) return i;
  return std::nullopt;
}

}  // namespace

TEST(Frequency, ParseAndValidate) {
  EXPECT_EQ(Frequency::parse("2/5"), Frequency::rational(2, 5));
  EXPECT_EQ(Frequency::parse("0"), Frequency::zero());
  EXPECT_EQ(Frequency::parse("inf"), Frequency::infinity());
  EXPECT_THROW(Frequency::parse("2/x"), Error);
  EXPECT_THROW((SturmianSpec{Frequency::zero(), S, 0}).validate(), Error);
  EXPECT_THROW((SturmianSpec{Frequency::infinity(), SP, 0}).validate(), Error);
  EXPECT_THROW(spec(2, 4, S).validate(), Error);
  EXPECT_NO_THROW((SturmianSpec{Frequency::zero(), SP, 0}).validate());
}

TEST(CellZeros, TypeSExamples) {
  EXPECT_EQ(cell_zeros_S(spec(1, 1, S), 0), 0);
  EXPECT_EQ(cell_zeros_S(spec(1, 1, S), -1), 1);
  EXPECT_EQ(cell_zeros_S(spec(1, 2, S), -2), 0);
  EXPECT_THROW(cell_zeros_S(spec(1, 1, SP), 0), Error);
}

TEST(CellZeros, TypeSPrimeExamples) {
  EXPECT_EQ(cell_zeros_Sprime(spec(1, 1, SP), 0), 2);
  EXPECT_EQ(cell_zeros_Sprime(spec(1, 1, SP), -1), 1);
  EXPECT_EQ(cell_zeros_Sprime(spec(1, 1, SP), 1), 1);
}

TEST(CellZeros, MatchEnumerationOracle) {
  for (auto [q, p] : coprime_pairs(25))
    for (auto t : {S, SP})
      for (Index m : {-1, 0, 2}) {
        auto sp = spec(q, p, t, m);
        for (Index n = m - 2 * p - 3; n <= m + 2 * p + 3; ++n) ASSERT_EQ(cell_zeros(sp, n), oracle::cell_zeros(sp, n));
      }
}

TEST(CellSeries, Examples) {
  EXPECT_EQ(labels(cell_series(spec(1, 1, S), -2, 2)), (std::vector<std::string>{"10", "10", "1", "10", "10"}));
  EXPECT_EQ(labels(cell_series(spec(1, 2, S), -4, 2)),
            (std::vector<std::string>{"1", "10", "1", "10", "1", "1", "10"}));
  EXPECT_EQ(labels(cell_series(spec(1, 1, SP), -1, 1)), (std::vector<std::string>{"10", "100", "10"}));
  EXPECT_THROW(cell_series(spec(1, 1, S), 2, 1), Error);
}

TEST(ExpandCells, Examples) {
  EXPECT_EQ(expand_cells({0, {W("10"), W("1"), W("10")}}), W("10110"));
  EXPECT_EQ(expand_cells({0, {}}), Word(Alphabet::binary()));
  EXPECT_EQ(expand_cells({0, {W("100")}}), W("100"));
}

TEST(ChainZeroCounts, Examples) {
  auto cs = cell_series(spec(1, 1, S), -3, 3);
  EXPECT_EQ(chain_zero_counts(cs, 1), (std::vector<std::size_t>{1, 1, 1, 0, 1, 1, 1}));
  EXPECT_EQ(chain_zero_counts(cs, 7).size(), 1u);
  EXPECT_THROW(chain_zero_counts(cs, 8), Error);

  auto cs23 = cell_series(spec(2, 3, S), -9, 9);
  auto counts = chain_zero_counts(cs23, 3);
  EXPECT_EQ(std::count(counts.begin(), counts.end(), 1u), 1);
  EXPECT_EQ(std::count(counts.begin(), counts.end(), 2u), static_cast<long>(counts.size()) - 1);
}

TEST(CuttingSequence, UnitSlopeJunction) {
  // Below/at height 0 lattice points read "01", above "10".
  EXPECT_EQ(cutting_sequence(spec(1, 1, S), -2, 3), W("0101" "01" "1010"));
  const Word cells = expand_cells(cell_series(spec(1, 1, S), -3, 3));
  EXPECT_TRUE(find_word(cells, cutting_sequence(spec(1, 1, S), -2, 3)).has_value());
}

TEST(CuttingSequence, SPrimeContainsDoubleZeroCell) {
  const Word cut = cutting_sequence(spec(1, 1, SP), -3, 3);
  EXPECT_TRUE(find_word(cut, W("100")).has_value());
  EXPECT_TRUE(find_word(expand_cells(cell_series(spec(1, 1, SP), -4, 3)), cut).has_value());
}

TEST(CuttingSequence, FrequencyOverWholePeriods) {
  for (auto [q, p] : coprime_pairs(15)) {
    const Word cut = cutting_sequence(spec(q, p, S), 5, 5 + 4 * p);
    ASSERT_EQ(count_symbol(cut, Symbol{0}), static_cast<std::size_t>(4 * q));
    ASSERT_EQ(count_symbol(cut, Symbol{1}), static_cast<std::size_t>(4 * p));
  }
}

TEST(CuttingSequence, AgreesWithCellExpansion) {
  for (auto [q, p] : coprime_pairs(25))
    for (auto t : {S, SP})
      for (Index m : {-1, 0, 2}) {
        auto sp = spec(q, p, t, m);
        const Index lo = m - 3 * p - 2, hi = m + 3 * p + 2;
        const Word cut = cutting_sequence(sp, lo, hi);
        const Word cells = expand_cells(cell_series(sp, lo - 1, hi));
        ASSERT_TRUE(find_word(cells, cut).has_value()) << sp.to_string();
      }
}

TEST(SkewSturmian, Examples) {
  auto x11 = skew_sturmian(spec(1, 1, S));
  EXPECT_EQ(x11.least_period(), 2);
  EXPECT_EQ(x11.anomaly(), W("1"));
  EXPECT_EQ(anomaly_size(x11), 1);

  auto x12 = skew_sturmian(spec(1, 2, S));
  EXPECT_EQ(x12.least_period(), 3);
  EXPECT_EQ(canonical(EPSeq(W("110"), W("1"))).period_word().length(), 3);
  EXPECT_EQ(x12.anomaly(), W("1"));
  bool rotation = false;
  for (Index t = 0; t < 3; ++t) rotation |= rotate(W("110"), t) == x12.period_word();
  EXPECT_TRUE(rotation);

  EXPECT_EQ(skew_sturmian({Frequency::infinity(), S, 4}), ep("0", "1"));
  EXPECT_EQ(skew_sturmian({Frequency::zero(), SP, 0}), ep("1", "0"));
  EXPECT_THROW(skew_sturmian({Frequency::zero(), S, 0}), Error);
}

TEST(SkewSturmian, SpotValues) {
  struct Row {
    std::int64_t q, p, period, size;
  };
  for (auto r : {Row{1, 1, 2, 1}, Row{1, 2, 3, 1}, Row{2, 5, 7, 4}, Row{3, 5, 8, 3}}) {
    auto x = skew_sturmian(spec(r.q, r.p, S));
    EXPECT_EQ(x.least_period(), r.period);
    EXPECT_EQ(oracle::anomaly_size(x), r.size);
  }
}

TEST(SkewSturmian, PeriodCountsAndAnomalySizes) {
  for (auto [q, p] : coprime_pairs(25)) {
    const auto bp = restricted_bezout(q, p);
    for (Index m : {-1, 0, 2}) {
      auto xs = skew_sturmian(spec(q, p, S, m));
      auto xp = skew_sturmian(spec(q, p, SP, m));
      for (const auto& x : {xs, xp}) {
        ASSERT_EQ(x.least_period(), p + q);
        ASSERT_EQ(count_symbol(x.period_word(), Symbol{0}), static_cast<std::size_t>(q));
        ASSERT_EQ(count_symbol(x.period_word(), Symbol{1}), static_cast<std::size_t>(p));
      }
      ASSERT_EQ(oracle::anomaly_size(xs), bp.a + bp.b) << q << "/" << p;
      ASSERT_EQ(oracle::anomaly_size(xp), p + q - (bp.a + bp.b)) << q << "/" << p;
    }
  }
}

TEST(SkewSturmian, SimilarAcrossOffsets) {
  for (auto [q, p] : coprime_pairs(14))
    for (auto t : {S, SP}) {
      auto base = skew_sturmian(spec(q, p, t, 0));
      for (Index m : {-3, -1, 2, 5}) ASSERT_TRUE(similar(base, skew_sturmian(spec(q, p, t, m))));
    }
}

TEST(SkewSturmian, ChainsAreBalanced) {
  for (auto [q, p] : coprime_pairs(25))
    for (auto t : {S, SP})
      for (Index m : {-1, 0, 2}) {
        const Index k = 3 * (p + 1);
        auto cs = cell_series(spec(q, p, t, m), m - k, m + k - 1);
        ASSERT_TRUE(is_balanced_chains(cs.cells)) << spec(q, p, t, m).to_string();
      }
}

TEST(SkewSturmian, UniqueDeficientPChain) {
  for (auto [q, p] : coprime_pairs(25)) {
    auto cs = cell_series(spec(q, p, S), -2 * p, 2 * p);
    auto counts = chain_zero_counts(cs, static_cast<std::size_t>(p));
    const auto low = std::count(counts.begin(), counts.end(), static_cast<std::size_t>(q - 1));
    const auto full = std::count(counts.begin(), counts.end(), static_cast<std::size_t>(q));
    ASSERT_EQ(low, 1);
    ASSERT_EQ(full, static_cast<long>(counts.size()) - 1);
    // The deficient chain is B_0 ... B_{p-1}.
    ASSERT_EQ(counts[static_cast<std::size_t>(2 * p)], static_cast<std::size_t>(q - 1));
  }
}

TEST(SymbolReverse, Examples) {
  EXPECT_EQ(symbol_reverse(ep("0", "1")), ep("1", "0"));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    auto x = make_ep(random_word(rng, Alphabet::binary(), 5), random_word(rng, Alphabet::binary(), 6) + W("1"));
    EXPECT_EQ(symbol_reverse(symbol_reverse(x)), x);
  }
  auto abc = Alphabet::make({"0", "1", "2"});
  EXPECT_THROW(symbol_reverse(make_ep(Word::parse("0", abc), Word::parse("2", abc))), Error);
}

TEST(SymbolReverse, ReciprocalFrequencyOppositeType) {
  for (auto [q, p] : coprime_pairs(20)) {
    auto x = symbol_reverse(skew_sturmian(spec(q, p, S)));
    auto y = skew_sturmian(spec(p, q, SP));
    ASSERT_TRUE(similar(x, y)) << q << "/" << p;
    ASSERT_TRUE(oracle::similar_by_windows(canonical(x), canonical(y)));
  }
}
