#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace subshift;
using namespace subshift::testing;

namespace {

AlphabetPtr digits() {
  static const auto a = Alphabet::make({"1", "2", "3"});
  return a;
}

AlphabetPtr letters() {
  static const auto a = Alphabet::make({"a", "b"});
  return a;
}

}  // namespace

TEST(Alphabet, RejectsEmptyAndDuplicateLabels) {
  EXPECT_THROW(Alphabet({}), Error);
  EXPECT_THROW(Alphabet({"a", "a"}), Error);
  EXPECT_THROW(Alphabet({"a,b"}), Error);
}

TEST(Alphabet, FreshLabelsAreDeterministicAndSkipExisting) {
  auto a = Alphabet::binary();
  EXPECT_EQ(a->next_fresh_label(), "x0′");
  auto [b, s] = a->extended(a->next_fresh_label());
  EXPECT_EQ(s.id, 2u);
  EXPECT_EQ(b->next_fresh_label(), "x1′");
  EXPECT_THROW(b->extended("x0′"), Error);
}

TEST(Word, LiteralSyntax) {
  EXPECT_EQ(W("110").to_string(), "110");
  auto [a, f] = Alphabet::binary()->extended("x0′");
  Word w(a, {Symbol{1}, f, Symbol{0}});
  EXPECT_EQ(w.to_string(), "[1,x0′,0]");
  EXPECT_EQ(Word::parse("[1,x0′,0]", a), w);
  EXPECT_THROW(Word::parse("102", Alphabet::binary()), Error);
  EXPECT_THROW(Word::parse("[1,2", Alphabet::binary()), Error);
}

TEST(Word, MixingAlphabetsIsAnError) {
  EXPECT_THROW(W("01") + Word::parse("ab", letters()), Error);
}

TEST(Rotate, Examples) {
  EXPECT_EQ(rotate(Word::parse("123", digits()), 1), Word::parse("231", digits()));
  EXPECT_EQ(rotate(Word::parse("ab", letters()), 0), Word::parse("ab", letters()));
  EXPECT_EQ(rotate(W("110"), 2), W("011"));
  EXPECT_EQ(rotate(W("110"), -1), W("011"));
  EXPECT_THROW(rotate(Word(Alphabet::binary()), 1), Error);
}

TEST(Rotate, ComposesAdditively) {
  for (const auto& w : all_words(Alphabet::binary(), 6))
    for (Index i = -7; i <= 7; ++i)
      for (Index j = -7; j <= 7; ++j)
        ASSERT_EQ(rotate(rotate(w, i), j), rotate(w, floor_mod(i + j, w.length())));
}

TEST(Primitive, Examples) {
  EXPECT_FALSE(is_primitive(W("0101")));
  EXPECT_TRUE(is_primitive(W("110")));
  EXPECT_TRUE(is_primitive(W("0")));
  EXPECT_THROW(is_primitive(Word(Alphabet::binary())), Error);

  EXPECT_EQ(primitive_root(W("0101")), std::make_pair(W("01"), std::size_t{2}));
  EXPECT_EQ(primitive_root(W("110")), std::make_pair(W("110"), std::size_t{1}));
  auto aaa = Word::parse("aaa", letters());
  EXPECT_EQ(primitive_root(aaa), std::make_pair(Word::parse("a", letters()), std::size_t{3}));
}

// w is primitive iff it occurs exactly twice in ww.
TEST(Primitive, AgreesWithSquareOccurrenceCount) {
  for (const auto& w : all_words(Alphabet::binary(), 10)) {
    const Word ww = w + w;
    int occurrences = 0;
    for (std::size_t i = 0; i + w.size() <= ww.size(); ++i)
      if (ww.subword(i, w.size()) == w) ++occurrences;
    ASSERT_EQ(occurrences == 2, is_primitive(w)) << w.to_string();
    ASSERT_EQ(is_primitive(w), primitive_root(w) == std::make_pair(w, std::size_t{1}));
  }
}

TEST(CountSymbol, Examples) {
  const Symbol zero{0}, one{1};
  EXPECT_EQ(count_symbol(W("10100"), zero), 3u);
  EXPECT_EQ(count_symbol(Word(Alphabet::binary()), zero), 0u);
  EXPECT_EQ(count_symbol(W("110"), one), 2u);
}

TEST(BalancedChains, Examples) {
  EXPECT_TRUE(is_balanced_chains(std::vector{W("10"), W("1"), W("10")}));
  EXPECT_FALSE(is_balanced_chains(std::vector{W("100"), W("1")}));
  EXPECT_TRUE(is_balanced_chains(std::vector{W("1")}));
}

TEST(BalancedChains, RejectsMalformedCells) {
  try {
    is_balanced_chains(std::vector{W("01")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedCell);
  }
  EXPECT_THROW(is_balanced_chains(std::vector{W("101")}), Error);
}

TEST(BalancedChains, LongerChainsCanUnbalance) {
  // 1-chains differ by one, but 2-chains "10 10" and "1 1" differ by two.
  EXPECT_FALSE(is_balanced_chains(std::vector{W("10"), W("10"), W("1"), W("1")}));
}
