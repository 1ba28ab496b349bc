#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "subshift/classify.hpp"

namespace subshift {

/// Conjugacy step: `codes.forward` maps the current sequence's subshift onto
/// that of `result`.
struct ConjugacyMove {
  ConjugacyWitness codes;
  EPSeq result;
};

/// Symbol expansion step: every `symbol` becomes `symbol fresh`.
struct ExpandMove {
  std::string symbol;
  std::string fresh;
  EPSeq result;
};

using FlowMove = std::variant<ConjugacyMove, ExpandMove>;

inline const EPSeq& move_result(const FlowMove& m) {
  return std::visit([](const auto& mv) -> const EPSeq& { return mv.result; }, m);
}

/// Two chains of moves whose endpoints are linked by a conjugacy.
struct FlowWitness {
  std::vector<FlowMove> chain_x;
  std::vector<FlowMove> chain_y;
  ConjugacyWitness final_conjugacy;
};

namespace detail {

inline Word substitute(const Word& w, const AlphabetPtr& alphabet, Symbol s, Symbol fresh) {
  std::vector<Symbol> out;
  for (auto c : w) {
    out.push_back(c);
    if (c == s) out.push_back(fresh);
  }
  return Word(alphabet, std::move(out));
}

inline Word replace_last(const Word& w, const AlphabetPtr& alphabet, Symbol s) {
  std::vector<Symbol> out(w.begin(), w.end());
  out.back() = s;
  return Word(alphabet, std::move(out));
}

inline void require_postcondition(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::PostconditionFailed, what);
}

}  // namespace detail

/// Expansion with an explicit label for the new symbol.
inline EPSeq expand_symbol_as(const EPSeq& x, Symbol s, const std::string& fresh_label) {
  if (!x.alphabet()->contains(s)) throw Error(ErrorKind::SymbolAbsent, "symbol not in alphabet");
  if (!count_symbol(x.period_word(), s) && !count_symbol(x.anomaly(), s))
    throw Error(ErrorKind::SymbolAbsent, "symbol '" + x.alphabet()->label(s) + "' does not occur");
  auto [alphabet, fresh] = x.alphabet()->extended(fresh_label);
  return EPSeq(detail::substitute(x.period_word(), alphabet, s, fresh),
               detail::substitute(x.anomaly(), alphabet, s, fresh), x.offset());
}

/// Replaces s by s·f for a freshly minted f; returns the new sequence and f.
inline std::pair<EPSeq, Symbol> expand_symbol(const EPSeq& x, Symbol s) {
  auto result = expand_symbol_as(x, s, x.alphabet()->next_fresh_label());
  return {result, Symbol{static_cast<std::uint32_t>(result.alphabet()->size() - 1)}};
}

/// Deletes every occurrence of `fresh` and drops it from the alphabet.
inline EPSeq contract_symbol(const EPSeq& x, Symbol fresh) {
  const auto& a = *x.alphabet();
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < a.size(); ++i)
    if (i != fresh.id) labels.push_back(a.label(Symbol{i}));
  auto alphabet = Alphabet::make(std::move(labels));
  auto strip = [&](const Word& w) {
    std::vector<Symbol> out;
    for (auto c : w)
      if (c != fresh) out.push_back(Symbol{c.id > fresh.id ? c.id - 1 : c.id});
    return Word(alphabet, std::move(out));
  };
  return EPSeq(strip(x.period_word()), strip(x.anomaly()), x.offset());
}

/// Moves taking x to a flow equivalent sequence with least period N+1 and the
/// same anomaly size: the last letter of the period word following the
/// minimal anomaly is renamed to a fresh b′ (a conjugacy), then b′ is expanded.
inline std::vector<FlowMove> raise_period_moves(const EPSeq& x) {
  const EPSeq cx = canonical(x);
  const Index n = cx.least_period();
  const Index size = cx.anomaly().length();
  auto [a1, renamed] = x.alphabet()->extended(x.alphabet()->next_fresh_label());
  const EPSeq conj(detail::replace_last(cx.period_word(), a1, renamed), cx.anomaly().rebased(a1));
  std::vector<FlowMove> moves;
  moves.push_back(ConjugacyMove{conjugacy_witness(x, conj), conj});
  const std::string fresh = a1->next_fresh_label();
  EPSeq expanded = expand_symbol_as(conj, renamed, fresh);
  detail::require_postcondition(expanded.least_period() == n + 1, "raise_period: least period is not N+1");
  detail::require_postcondition(anomaly_size(expanded) == size, "raise_period: anomaly size changed");
  moves.push_back(ExpandMove{a1->label(renamed), fresh, std::move(expanded)});
  return moves;
}

/// Moves taking x to a flow equivalent sequence with the same least period and
/// anomaly size a(x)+1: the last letter of the minimal anomaly is renamed to a
/// fresh a′, then a′ is expanded.
inline std::vector<FlowMove> raise_anomaly_moves(const EPSeq& x) {
  const EPSeq cx = canonical(x);
  const Index n = cx.least_period();
  const Index size = cx.anomaly().length();
  auto [a1, renamed] = x.alphabet()->extended(x.alphabet()->next_fresh_label());
  const EPSeq conj(cx.period_word().rebased(a1), detail::replace_last(cx.anomaly(), a1, renamed));
  std::vector<FlowMove> moves;
  moves.push_back(ConjugacyMove{conjugacy_witness(x, conj), conj});
  const std::string fresh = a1->next_fresh_label();
  EPSeq expanded = expand_symbol_as(conj, renamed, fresh);
  detail::require_postcondition(expanded.least_period() == n, "raise_anomaly: least period changed");
  detail::require_postcondition(anomaly_size(expanded) == size + 1, "raise_anomaly: anomaly size is not a(x)+1");
  moves.push_back(ExpandMove{a1->label(renamed), fresh, std::move(expanded)});
  return moves;
}

inline EPSeq raise_period(const EPSeq& x) { return move_result(raise_period_moves(x).back()); }
inline EPSeq raise_anomaly(const EPSeq& x) { return move_result(raise_anomaly_moves(x).back()); }

/// Raises least periods to max(M, M′), then anomaly sizes to the larger of
/// the two, and links the endpoints by a conjugacy.
inline FlowWitness flow_witness(const EPSeq& x, const EPSeq& y) {
  FlowWitness w{{}, {}, {SlidingBlockCode::identity(x.alphabet()), SlidingBlockCode::identity(x.alphabet())}};
  EPSeq ex = x, ey = y;
  auto extend = [](std::vector<FlowMove>& chain, EPSeq& end, std::vector<FlowMove> moves) {
    end = move_result(moves.back());
    for (auto& m : moves) chain.push_back(std::move(m));
  };
  const Index n = std::max(x.least_period(), y.least_period());
  while (ex.least_period() < n) extend(w.chain_x, ex, raise_period_moves(ex));
  while (ey.least_period() < n) extend(w.chain_y, ey, raise_period_moves(ey));
  const Index a = std::max(anomaly_size(ex), anomaly_size(ey));
  while (anomaly_size(ex) < a) extend(w.chain_x, ex, raise_anomaly_moves(ex));
  while (anomaly_size(ey) < a) extend(w.chain_y, ey, raise_anomaly_moves(ey));
  w.final_conjugacy = conjugacy_witness(ex, ey);
  return w;
}

namespace detail {

inline EPSeq replay_chain(const EPSeq& start, const std::vector<FlowMove>& chain, const std::string& name,
                          Verification& out) {
  EPSeq cur = start;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const std::string where = name + "[" + std::to_string(i) + "]";
    if (const auto* c = std::get_if<ConjugacyMove>(&chain[i])) {
      if (!conjugate_ep(cur, c->result)) out.fail(where + ": endpoints have different conjugacy invariants");
      auto v = verify_conjugacy(cur, c->result, c->codes);
      for (auto& t : v.trail) out.fail(where + ": " + t);
    } else {
      const auto& e = std::get<ExpandMove>(chain[i]);
      const auto& a = *cur.alphabet();
      if (a.find(e.fresh)) {
        out.fail(where + ": fresh symbol '" + e.fresh + "' already in the alphabet");
      } else if (auto s = a.find(e.symbol); !s) {
        out.fail(where + ": expanded symbol '" + e.symbol + "' not in the alphabet");
      } else {
        try {
          auto expected = expand_symbol_as(cur, *s, e.fresh);
          if (!compatible(expected.alphabet(), e.result.alphabet()) || !similar(expected, e.result))
            out.fail(where + ": result is not the symbol expansion");
        } catch (const Error& err) {
          out.fail(where + ": " + err.what());
        }
      }
    }
    cur = move_result(chain[i]);
  }
  return cur;
}

}  // namespace detail

/// Independent replay of every move and of the final conjugacy.
inline Verification verify_flow_witness(const EPSeq& x, const EPSeq& y, const FlowWitness& w) {
  Verification out;
  const EPSeq ex = detail::replay_chain(x, w.chain_x, "chain_x", out);
  const EPSeq ey = detail::replay_chain(y, w.chain_y, "chain_y", out);
  if (!conjugate_ep(ex, ey)) out.fail("final: endpoints have different conjugacy invariants");
  auto v = verify_conjugacy(ex, ey, w.final_conjugacy);
  for (auto& t : v.trail) out.fail("final: " + t);
  return out;
}

}  // namespace subshift
