#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "subshift/ep_sequence.hpp"
#include "subshift/sturmian.hpp"

namespace subshift {

/// Block map Phi on (memory + anticipation + 1)-blocks: phi(x)_i = Phi(x[i-m, i+n]).
class SlidingBlockCode {
 public:
  using Block = std::vector<Symbol>;
  using Table = std::map<Block, Symbol>;

  SlidingBlockCode(AlphabetPtr source, AlphabetPtr target, Index memory, Index anticipation, Table table)
      : source_(std::move(source)),
        target_(std::move(target)),
        memory_(memory),
        anticipation_(anticipation),
        table_(std::move(table)) {
    if (memory_ < 0 || anticipation_ < 0) throw Error(ErrorKind::InvalidRange, "negative memory or anticipation");
    for (const auto& [block, out] : table_) {
      if (static_cast<Index>(block.size()) != window_length())
        throw Error(ErrorKind::InvalidRange, "table block has wrong length");
      for (auto s : block)
        if (!source_->contains(s)) throw Error(ErrorKind::InvalidSymbol, "block symbol outside source alphabet");
      if (!target_->contains(out)) throw Error(ErrorKind::InvalidSymbol, "image symbol outside target alphabet");
    }
  }

  /// 1-block code from a symbol map given by labels.
  static SlidingBlockCode one_block(AlphabetPtr source, AlphabetPtr target,
                                   const std::map<std::string, std::string>& labels) {
    Table t;
    for (const auto& [from, to] : labels) t[{source->symbol(from)}] = target->symbol(to);
    return SlidingBlockCode(std::move(source), std::move(target), 0, 0, std::move(t));
  }

  static SlidingBlockCode identity(const AlphabetPtr& a) {
    Table t;
    for (std::uint32_t i = 0; i < a->size(); ++i) t[{Symbol{i}}] = Symbol{i};
    return SlidingBlockCode(a, a, 0, 0, std::move(t));
  }

  const AlphabetPtr& source() const noexcept { return source_; }
  const AlphabetPtr& target() const noexcept { return target_; }
  Index memory() const noexcept { return memory_; }
  Index anticipation() const noexcept { return anticipation_; }
  Index window_length() const noexcept { return memory_ + anticipation_ + 1; }
  const Table& table() const noexcept { return table_; }

  /// Phi applied to the block of x centred (with memory/anticipation) at i.
  template <class Seq>
  Symbol image_at(const Seq& x, Index i) const {
    Block block;
    block.reserve(static_cast<std::size_t>(window_length()));
    for (Index k = i - memory_; k <= i + anticipation_; ++k) block.push_back(x.symbol_at(k));
    auto it = table_.find(block);
    if (it == table_.end())
      throw Error(ErrorKind::MissingBlock, "block " + Word(source_, block).to_string() + " not in table");
    return it->second;
  }

  bool operator==(const SlidingBlockCode& o) const {
    return compatible(source_, o.source_) && compatible(target_, o.target_) && memory_ == o.memory_ &&
           anticipation_ == o.anticipation_ && table_ == o.table_;
  }

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  Index memory_;
  Index anticipation_;
  Table table_;
};

/// Forward code X -> Y and a code Y -> X inverting it up to a shift.
struct ConjugacyWitness {
  SlidingBlockCode forward;
  SlidingBlockCode inverse;
  bool operator==(const ConjugacyWitness&) const = default;
};

/// Outcome of replaying a certificate; `trail` records every failed check.
struct Verification {
  bool ok = true;
  std::vector<std::string> trail;

  void fail(std::string message) {
    ok = false;
    trail.push_back(std::move(message));
  }
  explicit operator bool() const { return ok; }
};

inline PeriodicSeq apply_code(const SlidingBlockCode& code, const PeriodicSeq& x) {
  require_compatible(code.source(), x.alphabet());
  std::vector<Symbol> w;
  for (Index i = 0; i < x.least_period(); ++i) w.push_back(code.image_at(x, i));
  return PeriodicSeq(Word(code.target(), std::move(w)), 0);
}

/// Image of x, reconstructed exactly. Throws DegenerateImage if it is periodic.
inline EPSeq apply_code(const SlidingBlockCode& code, const EPSeq& x) {
  require_compatible(code.source(), x.alphabet());
  const Index n = x.least_period();
  const Index o = x.offset();
  const Index v = x.anomaly().length();
  const Index mem = code.memory(), ant = code.anticipation();
  auto at = [&](Index i) { return code.image_at(x, i); };
  // One period of the image's left tail, aligned so base = o (mod n).
  const Index base = o - n * (ant / n + 2);
  std::vector<Symbol> w;
  for (Index j = 0; j < n; ++j) w.push_back(at(base + j));
  const Word root = primitive_root(Word(code.target(), std::move(w))).first;
  auto r = detail::classify_tails(root, o - ant, o + v + mem, o, o + v, at);
  if (is_periodic(r)) throw Error(ErrorKind::DegenerateImage, "image is periodic; not a conjugacy");
  return std::get<EPSeq>(r);
}

/// Invariant test: same least period N and anomaly sizes congruent mod N.
inline bool conjugate_ep(const EPSeq& x, const EPSeq& y) {
  const Index n = x.least_period();
  if (n != y.least_period()) return false;
  return floor_mod(anomaly_size(x) - anomaly_size(y), n) == 0;
}

namespace detail {

/// Code with memory = anticipation = radius sending src to dst, both anchored
/// with their anomalies at index 0. Returns nullopt on a table conflict.
inline std::optional<SlidingBlockCode> aligned_code(const EPSeq& src, const EPSeq& dst, Index radius) {
  const Index n = src.least_period();
  const Index len = src.anomaly().length();
  SlidingBlockCode::Table table;
  for (Index l = -radius - n; l < len + radius + n; ++l) {
    SlidingBlockCode::Block block;
    for (Index k = l - radius; k <= l + radius; ++k) block.push_back(src.symbol_at(k));
    const Symbol out = dst.symbol_at(l);
    auto [it, inserted] = table.emplace(std::move(block), out);
    if (!inserted && it->second != out) return std::nullopt;
  }
  return SlidingBlockCode(src.alphabet(), dst.alphabet(), radius, radius, std::move(table));
}

inline SlidingBlockCode grow_aligned_code(const EPSeq& src, const EPSeq& dst) {
  const Index n = src.least_period();
  const Index lu = src.anomaly().length(), lv = dst.anomaly().length();
  for (Index radius = std::max(lu, lv); radius <= lu + lv + 4 * n; radius += n)
    if (auto code = aligned_code(src, dst, radius)) return *code;
  throw Error(ErrorKind::WindowExhausted, "no consistent block table within radius |u|+|v|+4N");
}

}  // namespace detail

/// Forward and inverse sliding block codes between the subshifts of x and y.
/// The anomalies of the canonical forms are aligned and each block of the
/// source reads off the aligned target symbol.
inline ConjugacyWitness conjugacy_witness(const EPSeq& x, const EPSeq& y) {
  if (!conjugate_ep(x, y)) throw Error(ErrorKind::NotConjugate, "least periods or anomaly sizes differ");
  if (compatible(x.alphabet(), y.alphabet()) && similar(x, y))
    return {SlidingBlockCode::identity(x.alphabet()), SlidingBlockCode::identity(y.alphabet())};
  const EPSeq cx = canonical(x), cy = canonical(y);
  return {detail::grow_aligned_code(cx, cy), detail::grow_aligned_code(cy, cx)};
}

namespace detail {

/// Checks inverse(forward(s)) = sigma^t(s) symbol by symbol on
/// [centre - 3N - span, centre + 3N + span) for the shift t implied by the
/// exact images.
inline bool composition_is_shift(const SlidingBlockCode& first, const SlidingBlockCode& second, const EPSeq& s,
                          Index span, Index t) {
  const Index n = s.least_period();
  const Index centre = normalize(s).offset();
  const Index lo = centre - 3 * n - span, hi = centre + 3 * n + span;
  const Index from = lo - second.memory();
  std::vector<Symbol> mid;
  for (Index i = from; i < hi + second.anticipation(); ++i) mid.push_back(first.image_at(s, i));
  struct Image {
    const std::vector<Symbol>& cache;
    Index from;
    Symbol symbol_at(Index i) const { return cache[static_cast<std::size_t>(i - from)]; }
  } view{mid, from};
  for (Index i = lo; i < hi; ++i)
    if (second.image_at(view, i) != s.symbol_at(i + t)) return false;
  return true;
}

inline void check_round_trip(const SlidingBlockCode& first, const SlidingBlockCode& second, const EPSeq& s,
                             Index span, const std::string& name, Verification& out) {
  try {
    auto back = apply_code(second, apply_code(first, s));
    if (!compatible(back.alphabet(), s.alphabet()) || !similar(back, s)) {
      out.fail(name + ": composition does not return to the orbit");
      return;
    }
    const Index t = normalize(s).offset() - normalize(back).offset();
    if (!composition_is_shift(first, second, s, span, t))
      out.fail(name + ": composition is not a shift on the test window");
  } catch (const Error& e) {
    out.fail(name + ": " + e.what());
  }
}

}  // namespace detail

/// Replays a conjugacy certificate between the subshifts of x and y.
inline Verification verify_conjugacy(const EPSeq& x, const EPSeq& y, const ConjugacyWitness& w) {
  Verification out;
  const auto& f = w.forward;
  const auto& g = w.inverse;
  if (!compatible(f.source(), x.alphabet()) || !compatible(f.target(), y.alphabet()) ||
      !compatible(g.source(), y.alphabet()) || !compatible(g.target(), x.alphabet())) {
    out.fail("code alphabets do not match the sequences");
    return out;
  }
  auto image_check = [&](const SlidingBlockCode& code, const EPSeq& from, const EPSeq& to, const char* name) {
    try {
      auto img = apply_code(code, from);
      if (!similar(img, to)) out.fail(std::string(name) + " image is not similar to the target");
      auto per = apply_code(code, remove_anomaly(from));
      const auto expected = remove_anomaly(to);
      if (per.least_period() != expected.least_period() || !similar(per, expected))
        out.fail(std::string(name) + " does not map the periodic orbit onto the periodic orbit");
    } catch (const Error& e) {
      out.fail(std::string(name) + ": " + e.what());
    }
  };
  image_check(f, x, y, "forward");
  image_check(g, y, x, "inverse");
  if (!out.ok) return out;
  const Index span = std::max(x.anomaly().length(), y.anomaly().length());
  detail::check_round_trip(f, g, x, span, "inverse∘forward", out);
  detail::check_round_trip(g, f, y, span, "forward∘inverse", out);
  return out;
}

/// The two members of a skew Sturmian conjugacy class: the input parameters and
/// the one with inverse frequency and opposite type.
inline std::set<SturmianSpec> skew_conjugacy_class(const SturmianSpec& spec) {
  spec.validate();
  SturmianSpec partner{spec.freq.inverse(), opposite(spec.type), spec.m};
  return {spec, partner};
}

}  // namespace subshift
