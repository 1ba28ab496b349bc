#pragma once

#include <charconv>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/bezout.hpp"
#include "subshift/ep_sequence.hpp"

namespace subshift {

/// Zeros per cell: q/p, or one of the two degenerate limits.
struct Frequency {
  enum class Kind { Rational, Zero, Infinity };

  Kind kind = Kind::Rational;
  std::int64_t q = 1;
  std::int64_t p = 1;

  static Frequency rational(std::int64_t q, std::int64_t p) { return {Kind::Rational, q, p}; }
  static Frequency zero() { return {Kind::Zero, 0, 1}; }
  static Frequency infinity() { return {Kind::Infinity, 1, 0}; }

  bool is_rational() const { return kind == Kind::Rational; }

  Frequency inverse() const {
    switch (kind) {
      case Kind::Zero: return infinity();
      case Kind::Infinity: return zero();
      default: return rational(p, q);
    }
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Zero: return "0";
      case Kind::Infinity: return "inf";
      default: return std::to_string(q) + "/" + std::to_string(p);
    }
  }

  /// Accepts "q/p", "0" and "inf".
  static Frequency parse(std::string_view text) {
    if (text == "0") return zero();
    if (text == "inf" || text == "∞") return infinity();
    auto slash = text.find('/');
    auto read = [&](std::string_view s) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorKind::ParseError, "bad frequency '" + std::string(text) + "'");
      return v;
    };
    if (slash == std::string_view::npos) return rational(read(text), 1);
    return rational(read(text.substr(0, slash)), read(text.substr(slash + 1)));
  }

  auto operator<=>(const Frequency&) const = default;
};

enum class SturmianType { S, SPrime };

inline SturmianType opposite(SturmianType t) { return t == SturmianType::S ? SturmianType::SPrime : SturmianType::S; }

inline std::string to_string(SturmianType t) { return t == SturmianType::S ? "S" : "Sprime"; }

inline SturmianType parse_sturmian_type(std::string_view text) {
  if (text == "S") return SturmianType::S;
  if (text == "Sprime" || text == "S'" || text == "S′") return SturmianType::SPrime;
  throw Error(ErrorKind::ParseError, "unknown type '" + std::string(text) + "'");
}

struct SturmianSpec {
  Frequency freq;
  SturmianType type = SturmianType::S;
  Index m = 0;

  void validate() const {
    switch (freq.kind) {
      case Frequency::Kind::Zero:
        if (type != SturmianType::SPrime) throw Error(ErrorKind::InvalidSpec, "frequency 0 requires type Sprime");
        return;
      case Frequency::Kind::Infinity:
        if (type != SturmianType::S) throw Error(ErrorKind::InvalidSpec, "frequency inf requires type S");
        return;
      case Frequency::Kind::Rational:
        try {
          detail::check_frequency_pair(freq.q, freq.p);
        } catch (const Error& e) {
          throw Error(ErrorKind::InvalidSpec, e.what());
        }
        return;
    }
  }

  std::string to_string() const {
    return subshift::to_string(type) + "(" + std::to_string(m) + ", " + freq.to_string() + ")";
  }

  auto operator<=>(const SturmianSpec&) const = default;
};

/// Cells B_first ... B_{first + size - 1}, each "1" followed by zeros.
struct CellSeries {
  Index first = 0;
  std::vector<Word> cells;

  const Word& at(Index n) const { return cells.at(static_cast<std::size_t>(n - first)); }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? d - 1 : d;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Lattice scaled by q: G*q = {m*q + k*p}. Counts k with the multiple k*p
/// inside an interval [lo, hi] of the shifted line, with the given closedness.
inline std::int64_t count_multiples(std::int64_t lo, bool lo_closed, std::int64_t hi, bool hi_closed,
                                    std::int64_t p) {
  const std::int64_t upper = hi_closed ? floor_div(hi, p) : floor_div(hi - 1, p);
  const std::int64_t lower = lo_closed ? floor_div(lo - 1, p) : floor_div(lo, p);
  return std::max<std::int64_t>(0, upper - lower);
}

inline void require_rational(const SturmianSpec& spec, SturmianType expected) {
  spec.validate();
  if (!spec.freq.is_rational()) throw Error(ErrorKind::InvalidSpec, "cell counts need a rational frequency");
  if (spec.type != expected) throw Error(ErrorKind::InvalidSpec, "wrong Sturmian type for this rule");
}

}  // namespace detail

/// Zeros in cell n of S(m, q/p): points of G in (n, n+1], (m, m+1) or [n, n+1)
/// as n < m, n = m or n > m.
inline std::int64_t cell_zeros_S(const SturmianSpec& spec, Index n) {
  detail::require_rational(spec, SturmianType::S);
  const auto q = spec.freq.q, p = spec.freq.p;
  const std::int64_t lo = (n - spec.m) * q, hi = (n + 1 - spec.m) * q;
  if (n < spec.m) return detail::count_multiples(lo, false, hi, true, p);
  if (n == spec.m) return detail::count_multiples(lo, false, hi, false, p);
  return detail::count_multiples(lo, true, hi, false, p);
}

/// Zeros in cell n of S'(m, q/p): points of G in [n, n+1), [m, m+1] or (n, n+1].
inline std::int64_t cell_zeros_Sprime(const SturmianSpec& spec, Index n) {
  detail::require_rational(spec, SturmianType::SPrime);
  const auto q = spec.freq.q, p = spec.freq.p;
  const std::int64_t lo = (n - spec.m) * q, hi = (n + 1 - spec.m) * q;
  if (n < spec.m) return detail::count_multiples(lo, true, hi, false, p);
  if (n == spec.m) return detail::count_multiples(lo, true, hi, true, p);
  return detail::count_multiples(lo, false, hi, true, p);
}

inline std::int64_t cell_zeros(const SturmianSpec& spec, Index n) {
  return spec.type == SturmianType::S ? cell_zeros_S(spec, n) : cell_zeros_Sprime(spec, n);
}

inline Word make_cell(std::int64_t zeros) {
  const auto& a = *Alphabet::binary();
  std::vector<Symbol> s(static_cast<std::size_t>(zeros + 1), a.symbol("0"));
  s[0] = a.symbol("1");
  return Word(Alphabet::binary(), std::move(s));
}

inline CellSeries cell_series(const SturmianSpec& spec, Index n_lo, Index n_hi) {
  if (n_lo > n_hi) throw Error(ErrorKind::InvalidRange, "n_lo > n_hi");
  CellSeries out{n_lo, {}};
  out.cells.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (Index n = n_lo; n <= n_hi; ++n) out.cells.push_back(make_cell(cell_zeros(spec, n)));
  return out;
}

inline Word expand_cells(const CellSeries& cs) {
  Word out(Alphabet::binary());
  for (const auto& c : cs.cells) out += c;
  return out;
}

inline std::vector<std::size_t> chain_zero_counts(const CellSeries& cs, std::size_t n) {
  return chain_zero_counts(std::span<const Word>(cs.cells), n);
}

/// Cutting sequence of the line y = (p/q)x + m read between heights n_lo and
/// n_hi: '1' at each horizontal lattice line, '0' at each vertical one. At an
/// integer lattice point type S emits "01" at heights <= m and "10" above;
/// type S' the reverse.
inline Word cutting_sequence(const SturmianSpec& spec, Index n_lo, Index n_hi) {
  spec.validate();
  if (!spec.freq.is_rational()) throw Error(ErrorKind::InvalidSpec, "cutting sequence needs a rational frequency");
  if (n_lo > n_hi) throw Error(ErrorKind::InvalidRange, "n_lo > n_hi");
  const auto q = spec.freq.q, p = spec.freq.p;
  const Symbol zero{0}, one{1};

  struct Event {
    std::int64_t height;  // y * q
    int order;
    Symbol symbol;
  };
  std::vector<Event> events;
  for (Index n = n_lo; n < n_hi; ++n) events.push_back({n * q, 0, one});
  // Vertical crossings happen at heights m*q + k*p.
  for (std::int64_t k = detail::ceil_div((n_lo - spec.m) * q, p); spec.m * q + k * p < n_hi * q; ++k) {
    const std::int64_t h = spec.m * q + k * p;
    int order = 1;
    if (h % q == 0) {
      const bool at_or_below = h / q <= spec.m;
      const bool zero_first = (spec.type == SturmianType::S) == at_or_below;
      order = zero_first ? -1 : 1;
    }
    events.push_back({h, order, zero});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.height != b.height ? a.height < b.height : a.order < b.order;
  });
  std::vector<Symbol> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.symbol);
  return Word(Alphabet::binary(), std::move(out));
}

/// Swaps 0 and 1. Requires the alphabet {0, 1}.
inline EPSeq symbol_reverse(const EPSeq& x) {
  const auto& a = *x.alphabet();
  auto zero = a.find("0"), one = a.find("1");
  if (a.size() != 2 || !zero || !one) throw Error(ErrorKind::WrongAlphabet, "symbol reversal needs alphabet {0,1}");
  auto swap = [&](const Word& w) {
    std::vector<Symbol> s;
    for (auto c : w) s.push_back(c == *zero ? *one : *zero);
    return Word(x.alphabet(), std::move(s));
  };
  return EPSeq(swap(x.period_word()), swap(x.anomaly()), x.offset());
}

namespace detail {

/// Symbols of a generated cell window, indexed relative to the start of B_m.
struct GeneratedWindow {
  std::vector<Symbol> symbols;
  Index first = 0;  // index of symbols[0]

  bool covers(Index k) const { return k >= first && k < first + static_cast<Index>(symbols.size()); }
  Symbol at(Index k) const { return symbols[static_cast<std::size_t>(k - first)]; }
  Index end() const { return first + static_cast<Index>(symbols.size()); }
};

inline GeneratedWindow generate_around_origin(const SturmianSpec& spec, Index cells_before, Index cells_after) {
  auto cs = cell_series(spec, spec.m - cells_before, spec.m + cells_after);
  GeneratedWindow g;
  for (Index n = cs.first; n < spec.m; ++n) g.first -= cs.at(n).length();
  for (const auto& c : cs.cells) g.symbols.insert(g.symbols.end(), c.begin(), c.end());
  return g;
}

}  // namespace detail

/// EPSeq of the skew Sturmian sequence with the given parameters; index 0 is the
/// first symbol of B_m. Type S uses the closed-form anomaly B_m ... B_{m+b-1};
/// type S' locates its anomaly by window search.
inline EPSeq skew_sturmian(const SturmianSpec& spec) {
  spec.validate();
  const auto& bin = Alphabet::binary();
  if (spec.freq.kind == Frequency::Kind::Infinity) return EPSeq(Word::parse("0", bin), Word::parse("1", bin));
  if (spec.freq.kind == Frequency::Kind::Zero) return EPSeq(Word::parse("1", bin), Word::parse("0", bin));

  const auto q = spec.freq.q, p = spec.freq.p;
  const auto bp = restricted_bezout(q, p);
  const Index margin = 2 * (p + 1) + bp.b;
  const auto gen = detail::generate_around_origin(spec, margin, bp.b + margin);
  const Index n = p + q;

  // Period word: the p cells just before B_m.
  std::vector<Symbol> left(gen.symbols.begin() + (-gen.first - n), gen.symbols.begin() + (-gen.first));
  const Word period(bin, left);

  auto mismatch = [&](const char* what) {
    return Error(ErrorKind::InternalMismatch, spec.to_string() + ": " + what);
  };

  EPSeq result = [&] {
    if (spec.type == SturmianType::S) {
      Index len = 0;
      for (Index c = spec.m; c < spec.m + bp.b; ++c) len += cell_zeros_S(spec, c) + 1;
      std::vector<Symbol> v(gen.symbols.begin() - gen.first, gen.symbols.begin() - gen.first + len);
      return EPSeq(period, Word(bin, std::move(v)), 0);
    }
    // Right tail: the last n generated symbols, matched to a rotation of the period.
    const Index tail_start = gen.end() - n;
    Word tail(bin, std::vector<Symbol>(gen.symbols.end() - n, gen.symbols.end()));
    std::optional<Index> rot;
    for (Index t = 0; t < n && !rot; ++t)
      if (rotate(period, t) == tail) rot = t;
    if (!rot) throw mismatch("right tail is not a rotation of the left period");
    const Index right_ref = tail_start - *rot;
    auto tail_value = [&](Index k) { return period[static_cast<std::size_t>(floor_mod(k - right_ref, n))]; };
    Index hi = gen.end();
    while (hi > 0 && gen.at(hi - 1) == tail_value(hi - 1)) --hi;
    auto at = [&](Index k) {
      if (k < 0) return period[static_cast<std::size_t>(floor_mod(k, n))];
      if (k >= hi) return tail_value(k);
      return gen.at(k);
    };
    auto r = detail::classify_tails(period, 0, hi, 0, right_ref, at);
    if (is_periodic(r)) throw mismatch("generated sequence is periodic");
    return normalize(std::get<EPSeq>(r));
  }();

  if (result.least_period() != n) throw mismatch("least period differs from p+q");
  for (Index k = gen.first; k < gen.end(); ++k)
    if (result.symbol_at(k) != gen.at(k)) throw mismatch("representation disagrees with generated cells");
  if (spec.type == SturmianType::SPrime && anomaly_size(result) != n - (bp.a + bp.b))
    throw mismatch("anomaly size differs from p+q-(a+b)");
  return result;
}

}  // namespace subshift
