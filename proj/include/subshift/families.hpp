#pragma once

// Instance families shared by the property tests and the `verify` command.

#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "subshift/ep_sequence.hpp"

namespace subshift::families {

/// Every word of length 1..max_len over the alphabet.
inline std::vector<Word> all_words(const AlphabetPtr& a, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word(a)};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::uint32_t s = 0; s < a->size(); ++s) {
        Word e = w;
        e.push_back(Symbol{s});
        next.push_back(e);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// make_ep(w, v) for every non-degenerate pair with |w| <= wmax, |v| <= vmax.
inline std::vector<EPSeq> exhaustive_family(std::size_t wmax, std::size_t vmax) {
  std::vector<EPSeq> out;
  const auto words_w = all_words(Alphabet::binary(), wmax);
  const auto words_v = all_words(Alphabet::binary(), vmax);
  for (const auto& w : words_w)
    for (const auto& v : words_v) {
      try {
        out.push_back(make_ep(w, v));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegeneratePeriodic) throw;
      }
    }
  return out;
}

inline Word random_word(std::mt19937_64& rng, const AlphabetPtr& a, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(a->size() - 1));
  std::vector<Symbol> s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(Symbol{pick(rng)});
  return Word(a, std::move(s));
}

/// Random non-degenerate EPSeq with |w| <= 7, |v| <= 12 over 2 or 3 symbols.
inline EPSeq random_ep(std::mt19937_64& rng) {
  static const AlphabetPtr ternary = Alphabet::make({"0", "1", "2"});
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> wl(1, 7), vl(1, 12);
  const auto& a = coin(rng) ? Alphabet::binary() : ternary;
  for (;;) {
    try {
      return make_ep(random_word(rng, a, wl(rng)), random_word(rng, a, vl(rng)));
    } catch (const Error&) {
    }
  }
}

/// Coprime (q, p), both positive, with q + p <= max_sum.
inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max_sum) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t s = 2; s <= max_sum; ++s)
    for (std::int64_t q = 1; q < s; ++q)
      if (std::gcd(q, s - q) == 1) out.emplace_back(q, s - q);
  return out;
}

}  // namespace subshift::families
