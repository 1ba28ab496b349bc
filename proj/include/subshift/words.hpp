#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subshift/error.hpp"

namespace subshift {

using Index = std::int64_t;

/// Floor modulus: result always lies in [0, n).
inline Index floor_mod(Index k, Index n) {
  Index r = k % n;
  return r < 0 ? r + n : r;
}

struct Symbol {
  std::uint32_t id = 0;
  auto operator<=>(const Symbol&) const = default;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Ordered set of labelled symbols. Symbol ids are dense indices into the
/// label list. Labels must be non-empty and may not contain the characters
/// used by the bracketed word syntax.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorKind::InvalidSymbol, "alphabet must be non-empty");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const auto& l = labels_[i];
      if (l.empty() || l.find_first_of("[], \t\n") != std::string::npos)
        throw Error(ErrorKind::InvalidSymbol, "bad symbol label '" + l + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[j] == l) throw Error(ErrorKind::InvalidSymbol, "duplicate label '" + l + "'");
    }
  }

  static AlphabetPtr make(std::vector<std::string> labels) {
    return std::make_shared<const Alphabet>(std::move(labels));
  }

  /// The two-letter alphabet {0,1} used by the Sturmian generators.
  static AlphabetPtr binary() {
    static const AlphabetPtr instance = make({"0", "1"});
    return instance;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const std::string& label(Symbol s) const {
    if (s.id >= labels_.size()) throw Error(ErrorKind::InvalidSymbol, "symbol id out of range");
    return labels_[s.id];
  }

  bool contains(Symbol s) const noexcept { return s.id < labels_.size(); }

  std::optional<Symbol> find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return Symbol{static_cast<std::uint32_t>(i)};
    return std::nullopt;
  }

  Symbol symbol(std::string_view label) const {
    if (auto s = find(label)) return *s;
    throw Error(ErrorKind::InvalidSymbol, "label '" + std::string(label) + "' not in alphabet");
  }

  /// True when every label is a single byte, so words print as bare strings.
  bool single_char_labels() const {
    return std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
  }

  /// Next deterministic fresh label: x0′, x1′, ... skipping labels in use.
  std::string next_fresh_label() const {
    for (std::size_t k = 0;; ++k) {
      std::string candidate = "x" + std::to_string(k) + "′";
      if (!find(candidate)) return candidate;
    }
  }

  /// Returns the alphabet extended by one new symbol with the given label.
  std::pair<AlphabetPtr, Symbol> extended(std::string label) const {
    if (find(label)) throw Error(ErrorKind::InvalidSymbol, "label '" + label + "' already present");
    auto labels = labels_;
    labels.push_back(std::move(label));
    Symbol fresh{static_cast<std::uint32_t>(labels.size() - 1)};
    return {make(std::move(labels)), fresh};
  }

  bool operator==(const Alphabet& other) const noexcept { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

inline bool compatible(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_compatible(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!compatible(a, b)) throw Error(ErrorKind::IncompatibleAlphabets, "operands use different alphabets");
}

/// Finite word over an alphabet.
class Word {
 public:
  Word() : alphabet_(Alphabet::binary()) {}
  explicit Word(AlphabetPtr alphabet, std::vector<Symbol> symbols = {})
      : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    if (!alphabet_) throw Error(ErrorKind::InvalidSymbol, "word without alphabet");
    for (auto s : symbols_)
      if (!alphabet_->contains(s)) throw Error(ErrorKind::InvalidSymbol, "symbol id outside alphabet");
  }

  /// Parses a bare string (single-character labels) or a bracketed list "[a,b,c]".
  static Word parse(std::string_view text, AlphabetPtr alphabet) {
    std::vector<Symbol> symbols;
    if (!text.empty() && text.front() == '[') {
      if (text.back() != ']') throw Error(ErrorKind::ParseError, "unterminated word literal");
      std::string_view body = text.substr(1, text.size() - 2);
      while (!body.empty()) {
        auto comma = body.find(',');
        auto item = body.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        auto s = alphabet->find(item);
        if (!s) throw Error(ErrorKind::ParseError, "unknown symbol '" + std::string(item) + "'");
        symbols.push_back(*s);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
    } else {
      for (char c : text) {
        auto s = alphabet->find(std::string_view(&c, 1));
        if (!s) throw Error(ErrorKind::ParseError, std::string("unknown symbol '") + c + "'");
        symbols.push_back(*s);
      }
    }
    return Word(std::move(alphabet), std::move(symbols));
  }

  /// Literal form accepted by parse().
  std::string to_string() const {
    std::string out;
    if (alphabet_->single_char_labels()) {
      for (auto s : symbols_) out += alphabet_->label(s);
      return out;
    }
    out = "[";
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i) out += ",";
      out += alphabet_->label(symbols_[i]);
    }
    return out + "]";
  }

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  Index length() const noexcept { return static_cast<Index>(symbols_.size()); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol back() const { return symbols_.back(); }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  Word subword(std::size_t pos, std::size_t len) const {
    if (pos + len > symbols_.size()) throw Error(ErrorKind::InvalidRange, "subword out of range");
    return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
  }

  Word& operator+=(const Word& other) {
    require_compatible(alphabet_, other.alphabet_);
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
  }

  void push_back(Symbol s) {
    if (!alphabet_->contains(s)) throw Error(ErrorKind::InvalidSymbol, "symbol id outside alphabet");
    symbols_.push_back(s);
  }

  /// Same symbols over a (compatible or larger) alphabet.
  Word rebased(AlphabetPtr alphabet) const { return Word(std::move(alphabet), symbols_); }

  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.symbols_ == b.symbols_ && compatible(a.alphabet_, b.alphabet_);
  }

  /// Orders by symbols first; only meaningful within one alphabet.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.symbols_ != b.symbols_) return a.symbols_ < b.symbols_;
    return a.alphabet_->labels() < b.alphabet_->labels();
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Symbol> symbols_;
};

inline Word power(const Word& w, std::size_t k) {
  Word out(w.alphabet());
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

/// Left cyclic shift by k (mod |w|).
inline Word rotate(const Word& w, Index k) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "rotate of empty word");
  const Index n = w.length();
  const Index shift = floor_mod(k, n);
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Index i = 0; i < n; ++i) out.push_back(w[static_cast<std::size_t>((i + shift) % n)]);
  return Word(w.alphabet(), std::move(out));
}

/// (u, k) with w = u^k, u primitive.
inline std::pair<Word, std::size_t> primitive_root(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "primitive_root of empty word");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return {w.subword(0, d), n / d};
  }
  return {w, 1};  // unreachable: d = n always matches
}

inline bool is_primitive(const Word& w) { return primitive_root(w).second == 1; }

inline std::size_t count_symbol(const Word& w, Symbol s) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), s));
}

namespace detail {

/// Zero count of a cell "10...0"; throws MalformedCell otherwise.
inline std::size_t cell_zero_count(const Word& cell) {
  const auto& a = *cell.alphabet();
  auto zero = a.find("0");
  auto one = a.find("1");
  if (!zero || !one) throw Error(ErrorKind::MalformedCell, "cell alphabet lacks 0/1");
  if (cell.empty() || cell[0] != *one) throw Error(ErrorKind::MalformedCell, "cell must start with 1");
  for (std::size_t i = 1; i < cell.size(); ++i)
    if (cell[i] != *zero) throw Error(ErrorKind::MalformedCell, "cell tail must be all 0");
  return cell.size() - 1;
}

}  // namespace detail

/// Zero counts of every contiguous run of n cells, in order.
inline std::vector<std::size_t> chain_zero_counts(std::span<const Word> cells, std::size_t n) {
  if (n == 0 || n > cells.size()) throw Error(ErrorKind::InvalidRange, "chain length out of range");
  std::vector<std::size_t> zeros;
  zeros.reserve(cells.size());
  for (const auto& c : cells) zeros.push_back(detail::cell_zero_count(c));
  std::vector<std::size_t> out;
  std::size_t sum = 0;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    sum += zeros[i];
    if (i >= n) sum -= zeros[i - n];
    if (i + 1 >= n) out.push_back(sum);
  }
  return out;
}

/// For every m, zero counts of all m-chains differ by at most one.
inline bool is_balanced_chains(std::span<const Word> cells) {
  for (const auto& c : cells) detail::cell_zero_count(c);
  for (std::size_t m = 1; m <= cells.size(); ++m) {
    auto counts = chain_zero_counts(cells, m);
    auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    if (*hi - *lo > 1) return false;
  }
  return true;
}

}  // namespace subshift
