#pragma once

#include <algorithm>
#include <set>
#include <variant>
#include <vector>

#include "subshift/words.hpp"

namespace subshift {

/// Periodic bi-infinite sequence: value at k is period[(k + phase) mod N].
class PeriodicSeq {
 public:
  PeriodicSeq(Word period, Index phase) : period_(std::move(period)) {
    auto [root, k] = primitive_root(period_);
    if (k != 1) {
      period_ = std::move(root);
    }
    phase_ = floor_mod(phase, period_.length());
  }

  const Word& period_word() const noexcept { return period_; }
  Index phase() const noexcept { return phase_; }
  Index least_period() const noexcept { return period_.length(); }
  const AlphabetPtr& alphabet() const noexcept { return period_.alphabet(); }

  Symbol symbol_at(Index k) const {
    return period_[static_cast<std::size_t>(floor_mod(k + phase_, period_.length()))];
  }

  /// The repeating word starting at index 0.
  Word aligned_word() const { return rotate(period_, phase_); }

  /// Pointwise equality of the represented sequences.
  friend bool operator==(const PeriodicSeq& a, const PeriodicSeq& b) {
    return compatible(a.alphabet(), b.alphabet()) && a.aligned_word() == b.aligned_word();
  }

 private:
  Word period_;
  Index phase_ = 0;
};

/// True iff a and b are shifts of one another.
inline bool similar(const PeriodicSeq& a, const PeriodicSeq& b) {
  require_compatible(a.alphabet(), b.alphabet());
  if (a.least_period() != b.least_period()) return false;
  for (Index t = 0; t < a.least_period(); ++t)
    if (rotate(a.period_word(), t) == b.period_word()) return true;
  return false;
}

struct AnomalyWindow {
  Index start = 0;
  Index length = 0;
  auto operator<=>(const AnomalyWindow&) const = default;
};

/// Eventually periodic bi-infinite sequence, anchored at `offset`:
///   x_k = period[(k - o) mod N]          for k < o
///   x_k = anomaly[k - o]                 for o <= k < o + |v|
///   x_k = period[(k - o - |v|) mod N]    for k >= o + |v|
/// The period word is primitive and the sequence is never periodic.
class EPSeq {
 public:
  EPSeq(Word period, Word anomaly, Index offset = 0)
      : period_(std::move(period)), anomaly_(std::move(anomaly)), offset_(offset) {
    if (period_.empty() || anomaly_.empty())
      throw Error(ErrorKind::EmptyWord, "period word and anomaly must be non-empty");
    require_compatible(period_.alphabet(), anomaly_.alphabet());
    period_ = primitive_root(period_).first;
    const std::size_t n = period_.size();
    if (anomaly_.size() % n == 0 && anomaly_ == power(period_, anomaly_.size() / n))
      throw Error(ErrorKind::DegeneratePeriodic, "anomaly is a power of the period word");
  }

  const Word& period_word() const noexcept { return period_; }
  const Word& anomaly() const noexcept { return anomaly_; }
  Index offset() const noexcept { return offset_; }
  const AlphabetPtr& alphabet() const noexcept { return period_.alphabet(); }
  Index least_period() const noexcept { return period_.length(); }

  Symbol symbol_at(Index k) const {
    const Index n = period_.length();
    const Index rel = k - offset_;
    if (rel < 0) return period_[static_cast<std::size_t>(floor_mod(rel, n))];
    if (rel < anomaly_.length()) return anomaly_[static_cast<std::size_t>(rel)];
    return period_[static_cast<std::size_t>(floor_mod(rel - anomaly_.length(), n))];
  }

  /// Structural equality of representations.
  friend bool operator==(const EPSeq& a, const EPSeq& b) {
    return a.offset_ == b.offset_ && a.period_ == b.period_ && a.anomaly_ == b.anomaly_;
  }

 private:
  Word period_;
  Word anomaly_;
  Index offset_ = 0;
};

using Removal = std::variant<PeriodicSeq, EPSeq>;

inline EPSeq make_ep(const Word& w, const Word& v) { return EPSeq(w, v, 0); }

/// The word x_i ... x_j.
template <class Seq>
Word window(const Seq& x, Index i, Index j) {
  if (i > j) throw Error(ErrorKind::InvalidRange, "window start after end");
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(j - i + 1));
  for (Index k = i; k <= j; ++k) out.push_back(x.symbol_at(k));
  return Word(x.alphabet(), std::move(out));
}

/// sigma^k(x).
inline EPSeq shift(const EPSeq& x, Index k) {
  return EPSeq(x.period_word(), x.anomaly(), x.offset() - k);
}

namespace detail {

/// A sequence described by a symbol function `at` that agrees with
/// period[(k - left_ref) mod N] for k < lo and with period[(k - right_ref) mod N]
/// for k >= hi. Returns its exact classification.
template <class Fn>
Removal classify_tails(const Word& period, Index lo, Index hi, Index left_ref, Index right_ref, Fn&& at) {
  const Index n = period.length();
  hi = std::max(hi, lo);
  auto left_ext = [&](Index k) { return period[static_cast<std::size_t>(floor_mod(k - left_ref, n))]; };
  bool periodic = true;
  for (Index k = lo - n; k < hi + 2 * n && periodic; ++k) periodic = at(k) == left_ext(k);
  if (periodic) return PeriodicSeq(period, -left_ref);

  const Index residue = floor_mod(right_ref - left_ref, n);
  Index len = std::max<Index>(hi - lo, 1);
  len += floor_mod(residue - len, n);
  std::vector<Symbol> anomaly;
  anomaly.reserve(static_cast<std::size_t>(len));
  for (Index k = lo; k < lo + len; ++k) anomaly.push_back(at(k));
  return EPSeq(rotate(period, lo - left_ref), Word(period.alphabet(), std::move(anomaly)), lo);
}

}  // namespace detail

/// Deletes x_start ... x_{start+length-1} and closes the gap.
inline Removal remove_window(const EPSeq& x, AnomalyWindow win) {
  if (win.length < 1) throw Error(ErrorKind::InvalidRange, "window length must be positive");
  const Index o = x.offset();
  const Index v = x.anomaly().length();
  auto at = [&](Index k) { return k < win.start ? x.symbol_at(k) : x.symbol_at(k + win.length); };
  const Index lo = std::min(win.start, o);
  const Index hi = std::max(win.start, o + v - win.length);
  return detail::classify_tails(x.period_word(), lo, hi, o, o + v - win.length, at);
}

inline bool is_periodic(const Removal& r) { return std::holds_alternative<PeriodicSeq>(r); }

/// Every window of length L <= |v|, L = |v| (mod N), whose removal leaves a
/// periodic sequence. Starts range over [o - L - 2N, o + |v| + 2N].
inline std::vector<AnomalyWindow> anomaly_windows(const EPSeq& x) {
  const Index n = x.least_period();
  const Index v = x.anomaly().length();
  const Index o = x.offset();
  std::vector<AnomalyWindow> out;
  for (Index len = floor_mod(v - 1, n) + 1; len <= v; len += n) {
    for (Index s = o - len - 2 * n; s <= o + v + 2 * n; ++s) {
      AnomalyWindow w{s, len};
      if (is_periodic(remove_window(x, w))) out.push_back(w);
    }
  }
  return out;
}

inline Index least_period(const EPSeq& x) { return x.least_period(); }

namespace detail {

/// A window [s, s+L) with L = |v| (mod N) is an anomaly window iff every
/// disagreement with the left-tail extension lies at or after s and every
/// disagreement with the right-tail extension lies before s+L.
inline AnomalyWindow leftmost_minimal_window(const EPSeq& x) {
  const Index n = x.least_period();
  const Index v = x.anomaly().length();
  const Index o = x.offset();
  const Word& w = x.period_word();
  auto left_ext = [&](Index k) { return w[static_cast<std::size_t>(floor_mod(k - o, n))]; };
  auto right_ext = [&](Index k) { return w[static_cast<std::size_t>(floor_mod(k - o - v, n))]; };
  Index first_left = o + v + n;
  for (Index k = o; k < o + v + n; ++k)
    if (x.symbol_at(k) != left_ext(k)) {
      first_left = k;
      break;
    }
  Index last_right = o - n - 1;
  for (Index k = o + v - 1; k >= o - n; --k)
    if (x.symbol_at(k) != right_ext(k)) {
      last_right = k;
      break;
    }
  if (first_left == o + v + n || last_right == o - n - 1)
    throw Error(ErrorKind::InternalMismatch, "stored anomaly is not an anomaly window");
  Index len = std::max<Index>(last_right - first_left + 1, 1);
  len += floor_mod(v - len, n);
  return {last_right - len + 1, len};
}

}  // namespace detail

/// a(x): the minimum anomaly length.
inline Index anomaly_size(const EPSeq& x) { return detail::leftmost_minimal_window(x).length; }

/// p_v(x) for any anomaly window v.
inline PeriodicSeq remove_anomaly(const EPSeq& x) {
  return std::get<PeriodicSeq>(remove_window(x, {x.offset(), x.anomaly().length()}));
}

/// Exact representation re-anchored at the leftmost minimal anomaly window.
/// Two representations denote the same sequence iff their normal forms agree.
inline EPSeq normalize(const EPSeq& x) {
  auto w = detail::leftmost_minimal_window(x);
  const Index n = x.least_period();
  return EPSeq(rotate(x.period_word(), floor_mod(w.start - x.offset(), n)),
               window(x, w.start, w.start + w.length - 1), w.start);
}

/// Representative of the similarity class, anchored at offset 0.
inline EPSeq canonical(const EPSeq& x) {
  auto nx = normalize(x);
  return EPSeq(nx.period_word(), nx.anomaly(), 0);
}

inline bool same_sequence(const EPSeq& x, const EPSeq& y) {
  require_compatible(x.alphabet(), y.alphabet());
  return normalize(x) == normalize(y);
}

inline bool similar(const EPSeq& x, const EPSeq& y) {
  require_compatible(x.alphabet(), y.alphabet());
  return canonical(x) == canonical(y);
}

/// B_n of the subshift generated by x.
inline std::set<Word> enumerate_blocks(const EPSeq& x, Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidRange, "block length must be positive");
  std::set<Word> out;
  const Index o = x.offset();
  const Index per = x.least_period();
  for (Index s = o - n - per; s <= o + x.anomaly().length() + per; ++s) out.insert(window(x, s, s + n - 1));
  return out;
}

}  // namespace subshift
