#pragma once

// Brute-force reference computations. Everything here works from raw symbol
// reads and exhaustive enumeration only, so it can check the library's
// algorithms without sharing their code paths.

#include <optional>
#include <utility>
#include <vector>

#include "subshift/bezout.hpp"
#include "subshift/ep_sequence.hpp"
#include "subshift/sturmian.hpp"

namespace subshift::oracle {

/// Every (a, b) with 0 <= a < q, 0 < b <= p and b*q - a*p = 1.
inline std::vector<std::pair<std::int64_t, std::int64_t>> bezout_solutions(std::int64_t q, std::int64_t p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 0; a < q; ++a)
    for (std::int64_t b = 1; b <= p; ++b)
      if (b * q - a * p == 1) out.emplace_back(a, b);
  return out;
}

/// Finite materialisation of an eventually periodic sequence.
struct Materialized {
  std::vector<Symbol> symbols;
  Index first = 0;
  Symbol at(Index k) const { return symbols[static_cast<std::size_t>(k - first)]; }
  Index last() const { return first + static_cast<Index>(symbols.size()) - 1; }
};

inline Materialized materialize(const EPSeq& x, Index first, Index last) {
  Materialized m{{}, first};
  for (Index k = first; k <= last; ++k) m.symbols.push_back(x.symbol_at(k));
  return m;
}

/// Smallest d with s[i] = s[i+d] over the first `span` symbols.
inline Index tail_period(const Materialized& m, Index span) {
  for (Index d = 1;; ++d) {
    bool ok = true;
    for (Index i = 0; i + d < span && ok; ++i) ok = m.symbols[static_cast<std::size_t>(i)] == m.symbols[static_cast<std::size_t>(i + d)];
    if (ok) return d;
  }
}

/// All windows [s, s+L) with 1 <= L <= max_len and s in [lo_s, hi_s] whose
/// removal leaves a sequence that is periodic over a wide materialised range.
/// No congruence or placement assumptions are made.
inline std::vector<AnomalyWindow> anomaly_windows(const EPSeq& x, Index max_len, Index margin) {
  const Index n_guess = x.least_period();
  const Index v = x.anomaly().length();
  const Index o = x.offset();
  const Index reach = max_len + v + 8 * n_guess + 2 * margin + 8;
  const auto m = materialize(x, o - reach, o + v + reach);
  const Index d = tail_period(m, 4 * n_guess + 4);
  std::vector<AnomalyWindow> out;
  for (Index len = 1; len <= max_len; ++len) {
    for (Index s = o - len - margin; s <= o + v + margin; ++s) {
      // y_k = x_k for k < s, x_{k+len} otherwise; check y_k = y_{k-d}.
      auto y = [&](Index k) { return k < s ? m.at(k) : m.at(k + len); };
      bool periodic = true;
      for (Index k = m.first + d; k + len <= m.last() && periodic; ++k) periodic = y(k) == y(k - d);
      if (periodic) out.push_back({s, len});
    }
  }
  return out;
}

/// a(x) by exhaustive search over lengths 1..|v| and a wide start range.
inline Index anomaly_size(const EPSeq& x) {
  const Index v = x.anomaly().length();
  auto wins = anomaly_windows(x, v, v + 4 * x.least_period());
  Index best = v + 1;
  for (const auto& w : wins) best = std::min(best, w.length);
  return best;
}

/// Shift k with sigma^k(x) = y on the comparison window, found by trying
/// every |k| <= shift_bound; nullopt when none agrees.
inline std::optional<Index> matching_shift(const EPSeq& x, const EPSeq& y, Index shift_bound, Index half_width) {
  for (Index k = -shift_bound; k <= shift_bound; ++k) {
    bool ok = true;
    for (Index i = -half_width; i <= half_width && ok; ++i) ok = x.symbol_at(i + k) == y.symbol_at(i);
    if (ok) return k;
  }
  return std::nullopt;
}

/// Direct window comparison over [-4N-|v|, 4N+|v|] for all shifts |k| <= 2N+|v|
/// (both sequences anchored at offset 0).
inline bool similar_by_windows(const EPSeq& x, const EPSeq& y) {
  const Index n = std::max(x.least_period(), y.least_period());
  const Index v = std::max(x.anomaly().length(), y.anomaly().length()) +
                  std::max(std::abs(x.offset()), std::abs(y.offset()));
  return matching_shift(x, y, 2 * n + v, 4 * n + v).has_value();
}

/// Zeros of cell n counted by enumerating lattice points m + k p/q with an
/// explicit k loop and fraction comparisons.
inline std::int64_t cell_zeros(const SturmianSpec& spec, Index n) {
  const auto q = spec.freq.q, p = spec.freq.p;
  const bool prime = spec.type == SturmianType::SPrime;
  std::int64_t count = 0;
  // x = m + k p / q lies in [n - 1, n + 2] only for |k| bounded by this.
  const std::int64_t kmax = (std::abs(n - spec.m) + 3) * q / p + 3;
  for (std::int64_t k = -kmax; k <= kmax; ++k) {
    const std::int64_t xq = spec.m * q + k * p;  // x scaled by q
    const std::int64_t lo = n * q, hi = (n + 1) * q;
    bool in;
    if (n < spec.m) in = prime ? (lo <= xq && xq < hi) : (lo < xq && xq <= hi);
    else if (n == spec.m) in = prime ? (lo <= xq && xq <= hi) : (lo < xq && xq < hi);
    else in = prime ? (lo < xq && xq <= hi) : (lo <= xq && xq < hi);
    if (in) ++count;
  }
  return count;
}

}  // namespace subshift::oracle
