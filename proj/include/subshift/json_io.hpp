#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subshift/bezout.hpp"
#include "subshift/classify.hpp"
#include "subshift/flow.hpp"
#include "subshift/sturmian.hpp"

namespace subshift::io {

using nlohmann::json;

inline constexpr const char* kEpseqFormat = "epseq/1";
inline constexpr const char* kPerseqFormat = "perseq/1";
inline constexpr const char* kConjugacyFormat = "conjugacy-witness/1";
inline constexpr const char* kFlowFormat = "flow-witness/1";

namespace detail {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

inline void expect_format(const json& j, const char* format) {
  auto f = field<std::string>(j, "format");
  if (f != format) throw Error(ErrorKind::ParseError, "expected format " + std::string(format) + ", got " + f);
}

inline AlphabetPtr alphabet_or_binary(const json& j) {
  if (!j.contains("alphabet")) return Alphabet::binary();
  auto labels = field<std::vector<std::string>>(j, "alphabet");
  if (labels == Alphabet::binary()->labels()) return Alphabet::binary();
  return Alphabet::make(std::move(labels));
}

}  // namespace detail

inline json to_json(const EPSeq& x) {
  json j{{"format", kEpseqFormat},
         {"alphabet", x.alphabet()->labels()},
         {"period", x.period_word().to_string()},
         {"anomaly", x.anomaly().to_string()}};
  if (x.offset() != 0) j["offset"] = x.offset();
  return j;
}

/// Parses an epseq/1 object. A missing alphabet defaults to {0,1}; a missing
/// offset defaults to 0.
inline EPSeq epseq_from_json(const json& j) {
  detail::expect_format(j, kEpseqFormat);
  auto alphabet = detail::alphabet_or_binary(j);
  const Index offset = j.contains("offset") ? detail::field<Index>(j, "offset") : 0;
  return EPSeq(Word::parse(detail::field<std::string>(j, "period"), alphabet),
               Word::parse(detail::field<std::string>(j, "anomaly"), alphabet), offset);
}

inline json to_json(const PeriodicSeq& x) {
  return {{"format", kPerseqFormat},
          {"alphabet", x.alphabet()->labels()},
          {"period", x.period_word().to_string()},
          {"phase", x.phase()}};
}

inline PeriodicSeq perseq_from_json(const json& j) {
  detail::expect_format(j, kPerseqFormat);
  auto alphabet = detail::alphabet_or_binary(j);
  return PeriodicSeq(Word::parse(detail::field<std::string>(j, "period"), alphabet), detail::field<Index>(j, "phase"));
}

inline json to_json(const Removal& r) {
  return std::visit([](const auto& v) { return to_json(v); }, r);
}

inline json to_json(const SlidingBlockCode& code) {
  json table = json::array();
  for (const auto& [block, out] : code.table())
    table.push_back({Word(code.source(), block).to_string(), code.target()->label(out)});
  return {{"memory", code.memory()},
          {"anticipation", code.anticipation()},
          {"source", code.source()->labels()},
          {"target", code.target()->labels()},
          {"table", std::move(table)}};
}

inline SlidingBlockCode code_from_json(const json& j) {
  auto source = Alphabet::make(detail::field<std::vector<std::string>>(j, "source"));
  auto target = Alphabet::make(detail::field<std::vector<std::string>>(j, "target"));
  SlidingBlockCode::Table table;
  for (const auto& entry : detail::field<json>(j, "table")) {
    if (!entry.is_array() || entry.size() != 2) throw Error(ErrorKind::ParseError, "table entries are [block, symbol]");
    auto block = Word::parse(entry[0].get<std::string>(), source);
    table[{block.begin(), block.end()}] = target->symbol(entry[1].get<std::string>());
  }
  return SlidingBlockCode(source, target, detail::field<Index>(j, "memory"), detail::field<Index>(j, "anticipation"),
                          std::move(table));
}

inline json to_json(const ConjugacyWitness& w) {
  return {{"format", kConjugacyFormat}, {"forward", to_json(w.forward)}, {"inverse", to_json(w.inverse)}};
}

inline ConjugacyWitness conjugacy_witness_from_json(const json& j) {
  detail::expect_format(j, kConjugacyFormat);
  return {code_from_json(detail::field<json>(j, "forward")), code_from_json(detail::field<json>(j, "inverse"))};
}

inline json to_json(const FlowMove& m) {
  if (const auto* c = std::get_if<ConjugacyMove>(&m))
    return {{"kind", "conjugacy"},
            {"forward", to_json(c->codes.forward)},
            {"inverse", to_json(c->codes.inverse)},
            {"result", to_json(c->result)}};
  const auto& e = std::get<ExpandMove>(m);
  return {{"kind", "expand"}, {"symbol", e.symbol}, {"fresh", e.fresh}, {"result", to_json(e.result)}};
}

inline FlowMove flow_move_from_json(const json& j) {
  const auto kind = detail::field<std::string>(j, "kind");
  auto result = epseq_from_json(detail::field<json>(j, "result"));
  if (kind == "conjugacy")
    return ConjugacyMove{{code_from_json(detail::field<json>(j, "forward")), code_from_json(detail::field<json>(j, "inverse"))},
                         std::move(result)};
  if (kind == "expand")
    return ExpandMove{detail::field<std::string>(j, "symbol"), detail::field<std::string>(j, "fresh"), std::move(result)};
  throw Error(ErrorKind::ParseError, "unknown move kind '" + kind + "'");
}

inline json to_json(const FlowWitness& w) {
  json cx = json::array(), cy = json::array();
  for (const auto& m : w.chain_x) cx.push_back(to_json(m));
  for (const auto& m : w.chain_y) cy.push_back(to_json(m));
  return {{"format", kFlowFormat},
          {"chain_x", std::move(cx)},
          {"chain_y", std::move(cy)},
          {"final_conjugacy", {{"forward", to_json(w.final_conjugacy.forward)}, {"inverse", to_json(w.final_conjugacy.inverse)}}}};
}

inline FlowWitness flow_witness_from_json(const json& j) {
  detail::expect_format(j, kFlowFormat);
  FlowWitness w{{}, {}, {SlidingBlockCode::identity(Alphabet::binary()), SlidingBlockCode::identity(Alphabet::binary())}};
  for (const auto& m : detail::field<json>(j, "chain_x")) w.chain_x.push_back(flow_move_from_json(m));
  for (const auto& m : detail::field<json>(j, "chain_y")) w.chain_y.push_back(flow_move_from_json(m));
  const auto fin = detail::field<json>(j, "final_conjugacy");
  w.final_conjugacy = {code_from_json(detail::field<json>(fin, "forward")), code_from_json(detail::field<json>(fin, "inverse"))};
  return w;
}

inline json to_json(const SturmianSpec& s) {
  return {{"freq", s.freq.to_string()}, {"type", to_string(s.type)}, {"m", s.m}};
}

inline SturmianSpec sturmian_spec_from_json(const json& j) {
  SturmianSpec s{Frequency::parse(detail::field<std::string>(j, "freq")),
                 parse_sturmian_type(detail::field<std::string>(j, "type")),
                 j.contains("m") ? detail::field<Index>(j, "m") : 0};
  s.validate();
  return s;
}

inline json to_json(const BezoutPair& bp) {
  return {{"q", bp.q}, {"p", bp.p}, {"a", bp.a}, {"b", bp.b}, {"check", "b*q-a*p=1"}};
}

/// Presentation only: "…110 110 [1] 110 110…".
inline std::string pretty_window(const EPSeq& x, int repeats = 2) {
  auto block = [&](Index from, Index len) { return window(x, from, from + len - 1).to_string(); };
  const Index n = x.least_period(), o = x.offset(), v = x.anomaly().length();
  std::string out = "…";
  for (int r = repeats; r >= 1; --r) out += block(o - r * n, n) + " ";
  out += "[" + block(o, v) + "]";
  for (int r = 0; r < repeats; ++r) out += " " + block(o + v + r * n, n);
  return out + "…";
}

}  // namespace subshift::io
