#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "subshift/families.hpp"
#include "subshift/json_io.hpp"
#include "subshift/oracles.hpp"

namespace subshift::verify {

using nlohmann::json;

inline constexpr const char* kReportFormat = "verify-report/1";

/// Quantification bounds. Defaults reproduce the acceptance suite.
struct Bounds {
  std::int64_t bezout = 200;
  std::int64_t sturmian = 25;
  std::int64_t corollary = 20;
  std::int64_t reciprocals = 20;
  std::int64_t generator = 25;
  std::int64_t flow = 12;
  std::int64_t word_max = 4;
  std::int64_t anomaly_max = 6;
  std::int64_t random_instances = 200;
  std::int64_t random_flow_pairs = 50;
  std::uint64_t seed = 0;

  /// Seed from SUBSHIFT_SEED when set.
  static Bounds defaults() {
    Bounds b;
    if (const char* s = std::getenv("SUBSHIFT_SEED")) b.seed = std::strtoull(s, nullptr, 10);
    return b;
  }

  void set_max_period_sum(std::int64_t k) { bezout = sturmian = corollary = reciprocals = generator = flow = k; }

  void validate() const {
    for (auto v : {bezout, sturmian, corollary, reciprocals, generator, flow, word_max, anomaly_max})
      if (v < 1) throw Error(ErrorKind::NonPositive, "verification bounds must be positive");
    if (random_instances < 0 || random_flow_pairs < 0) throw Error(ErrorKind::NonPositive, "negative instance count");
    if (bezout >= kMaxPeriodSum) throw Error(ErrorKind::Overflow, "bezout bound too large");
  }

  json to_json() const {
    return {{"bezout", bezout},         {"sturmian", sturmian},
            {"corollary", corollary},   {"reciprocals", reciprocals},
            {"generator", generator},   {"flow", flow},
            {"word_max", word_max},     {"anomaly_max", anomaly_max},
            {"random_instances", random_instances}, {"random_flow_pairs", random_flow_pairs},
            {"seed", seed}};
  }

  static Bounds from_json(const json& j) {
    Bounds b;
    auto get = [&](const char* k, auto& out) {
      if (j.contains(k)) out = j.at(k).get<std::decay_t<decltype(out)>>();
    };
    get("bezout", b.bezout);
    get("sturmian", b.sturmian);
    get("corollary", b.corollary);
    get("reciprocals", b.reciprocals);
    get("generator", b.generator);
    get("flow", b.flow);
    get("word_max", b.word_max);
    get("anomaly_max", b.anomaly_max);
    get("random_instances", b.random_instances);
    get("random_flow_pairs", b.random_flow_pairs);
    get("seed", b.seed);
    return b;
  }
};

struct Failure {
  json input;
  std::string message;
  bool operator==(const Failure&) const = default;
};

struct TheoremResult {
  std::string tag;
  json bounds;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  double wall_seconds = 0;

  bool pass() const { return failures.empty(); }
  void fail(json input, std::string message) { failures.push_back({std::move(input), std::move(message)}); }
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<TheoremResult> theorems;

  bool pass() const {
    for (const auto& t : theorems)
      if (!t.pass()) return false;
    return true;
  }
};

inline json to_json(const TheoremResult& t) {
  json failures = json::array();
  for (const auto& f : t.failures) failures.push_back({{"input", f.input}, {"message", f.message}});
  return {{"theorem", t.tag},
          {"status", t.pass() ? "pass" : "fail"},
          {"bounds", t.bounds},
          {"instances", t.instances},
          {"failures", std::move(failures)},
          {"wall_seconds", t.wall_seconds}};
}

inline json to_json(const Report& r) {
  json ts = json::array();
  for (const auto& t : r.theorems) ts.push_back(to_json(t));
  return {{"format", kReportFormat}, {"status", r.pass() ? "pass" : "fail"}, {"seed", r.seed}, {"theorems", std::move(ts)}};
}

inline Report report_from_json(const json& j) {
  io::detail::expect_format(j, kReportFormat);
  Report r;
  r.seed = io::detail::field<std::uint64_t>(j, "seed");
  for (const auto& t : io::detail::field<json>(j, "theorems")) {
    TheoremResult res;
    res.tag = io::detail::field<std::string>(t, "theorem");
    res.bounds = io::detail::field<json>(t, "bounds");
    res.instances = io::detail::field<std::size_t>(t, "instances");
    res.wall_seconds = io::detail::field<double>(t, "wall_seconds");
    for (const auto& f : io::detail::field<json>(t, "failures"))
      res.failures.push_back({io::detail::field<json>(f, "input"), io::detail::field<std::string>(f, "message")});
    if ((io::detail::field<std::string>(t, "status") == "pass") != res.pass())
      throw Error(ErrorKind::ParseError, "status disagrees with failure list for " + res.tag);
    r.theorems.push_back(std::move(res));
  }
  if ((io::detail::field<std::string>(j, "status") == "pass") != r.pass())
    throw Error(ErrorKind::ParseError, "report status disagrees with theorem results");
  return r;
}

namespace detail {

using families::coprime_pairs;

inline TheoremResult timed(std::string tag, json bounds, const std::function<void(TheoremResult&)>& body) {
  TheoremResult r;
  r.tag = std::move(tag);
  r.bounds = std::move(bounds);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Runs one instance; any library error is recorded as a failure.
template <class Fn>
void instance(TheoremResult& r, const json& input, Fn&& fn) {
  ++r.instances;
  try {
    if (auto msg = fn(); msg) r.fail(input, *msg);
  } catch (const std::exception& e) {
    r.fail(input, std::string("exception: ") + e.what());
  }
}

inline json pair_json(std::int64_t q, std::int64_t p) { return {{"q", q}, {"p", p}}; }

inline std::vector<SturmianSpec> rational_specs(std::int64_t max_sum, std::initializer_list<Index> ms = {0}) {
  std::vector<SturmianSpec> out;
  for (auto [q, p] : coprime_pairs(max_sum))
    for (auto t : {SturmianType::S, SturmianType::SPrime})
      for (Index m : ms) out.push_back({Frequency::rational(q, p), t, m});
  return out;
}

inline std::vector<SturmianSpec> all_specs(std::int64_t max_sum) {
  auto out = rational_specs(max_sum);
  out.push_back({Frequency::infinity(), SturmianType::S, 0});
  out.push_back({Frequency::zero(), SturmianType::SPrime, 0});
  return out;
}

inline std::vector<EPSeq> window_family(const Bounds& b) {
  auto fam = families::exhaustive_family(static_cast<std::size_t>(b.word_max), static_cast<std::size_t>(b.anomaly_max));
  std::mt19937_64 rng(b.seed);
  for (std::int64_t i = 0; i < b.random_instances; ++i) fam.push_back(families::random_ep(rng));
  return fam;
}

inline std::optional<std::size_t> find_word(const Word& hay, const Word& needle) {
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i)
    if (hay.subword(i, needle.size()) == needle) return i;
  return std::nullopt;
}

/// Least period of the left tail by direct comparison of a materialised window.
inline Index oracle_least_period(const EPSeq& x) {
  const Index span = 3 * x.period_word().length() + 2;
  return oracle::tail_period(oracle::materialize(x, x.offset() - span, x.offset() - 1), span);
}

inline std::string key(const EPSeq& x) {
  std::string k;
  for (const auto& l : x.alphabet()->labels()) k += l + ",";
  return k + "|" + x.period_word().to_string() + "|" + x.anomaly().to_string() + "|" + std::to_string(x.offset());
}

}  // namespace detail

/// Restricted Bezout coefficients against exhaustive search.
inline TheoremResult check_bezout(const Bounds& b) {
  return detail::timed("restricted-bezout", {{"max_period_sum", b.bezout}}, [&](TheoremResult& r) {
    for (auto [q, p] : detail::coprime_pairs(b.bezout))
      detail::instance(r, detail::pair_json(q, p), [&]() -> std::optional<std::string> {
        const auto sols = oracle::bezout_solutions(q, p);
        if (sols.size() != 1) return "oracle found " + std::to_string(sols.size()) + " solutions";
        const auto bp = restricted_bezout(q, p);
        if (std::make_pair(bp.a, bp.b) != sols.front()) return "differs from exhaustive search";
        if (std::gcd(bp.a + bp.b, p + q) != 1) return "a+b and p+q share a factor";
        return std::nullopt;
      });
  });
}

/// Brute-force anomaly size of generated skew Sturmian sequences.
inline TheoremResult check_anomaly_size(const Bounds& b) {
  return detail::timed("anomaly-size-formula", {{"max_period_sum", b.sturmian}}, [&](TheoremResult& r) {
    for (const auto& s : detail::rational_specs(b.sturmian))
      detail::instance(r, io::to_json(s), [&]() -> std::optional<std::string> {
        const auto bp = restricted_bezout(s.freq.q, s.freq.p);
        const auto x = skew_sturmian(s);
        const Index expected = s.type == SturmianType::S ? bp.a + bp.b : bp.p + bp.q - (bp.a + bp.b);
        const Index got = oracle::anomaly_size(x);
        if (x.least_period() != s.freq.p + s.freq.q) return "least period is not p+q";
        if (got != expected)
          return "anomaly size " + std::to_string(got) + ", expected " + std::to_string(expected);
        return std::nullopt;
      });
  });
}

inline TheoremResult check_spot_values(const Bounds&) {
  struct Row {
    std::int64_t q, p;
    Index period, size;
  };
  return detail::timed("spot-values", json::object(), [&](TheoremResult& r) {
    for (auto row : {Row{1, 1, 2, 1}, Row{1, 2, 3, 1}, Row{2, 5, 7, 4}, Row{3, 5, 8, 3}}) {
      const SturmianSpec s{Frequency::rational(row.q, row.p), SturmianType::S, 0};
      detail::instance(r, io::to_json(s), [&]() -> std::optional<std::string> {
        const auto x = skew_sturmian(s);
        if (x.least_period() != row.period) return "least period " + std::to_string(x.least_period());
        if (oracle::anomaly_size(x) != row.size) return "anomaly size " + std::to_string(oracle::anomaly_size(x));
        return std::nullopt;
      });
    }
  });
}

/// Every anomaly removal yields the same periodic sequence; window lengths
/// agree modulo the least period.
inline TheoremResult check_window_properties(const Bounds& b) {
  json bounds{{"word_max", b.word_max}, {"anomaly_max", b.anomaly_max}, {"random", b.random_instances}, {"seed", b.seed}};
  return detail::timed("anomaly-window-removal", bounds, [&](TheoremResult& r) {
    for (const auto& x : detail::window_family(b))
      detail::instance(r, io::to_json(x), [&]() -> std::optional<std::string> {
        const auto wins = anomaly_windows(x);
        if (wins.empty()) return "no anomaly window found";
        const auto first = remove_window(x, wins.front());
        if (!is_periodic(first)) return "removal is not periodic";
        const auto& p0 = std::get<PeriodicSeq>(first);
        for (const auto& w : wins) {
          const auto rw = remove_window(x, w);
          if (!is_periodic(rw) || !(std::get<PeriodicSeq>(rw) == p0))
            return "removals differ at window " + std::to_string(w.start) + "+" + std::to_string(w.length);
          if (floor_mod(w.length - wins.front().length, x.least_period()) != 0) return "window lengths not congruent";
        }
        return std::nullopt;
      });
  });
}

/// Witness construction and independent replay for every pair the invariant
/// test declares conjugate. Inputs are grouped by canonical form; each input is
/// also checked against its own canonical representative.
inline TheoremResult check_conjugacy_witnesses(const Bounds& b) {
  json bounds{{"word_max", b.word_max}, {"anomaly_max", b.anomaly_max}, {"random", b.random_instances}, {"seed", b.seed}};
  return detail::timed("anomaly-conjugacy", bounds, [&](TheoremResult& r) {
    auto check = [&](const EPSeq& x, const EPSeq& y) {
      detail::instance(r, {{"x", io::to_json(x)}, {"y", io::to_json(y)}}, [&]() -> std::optional<std::string> {
        if (!conjugate_ep(x, y)) return "invariant test rejects the pair";
        auto v = verify_conjugacy(x, y, conjugacy_witness(x, y));
        if (!v) return v.trail.front();
        return std::nullopt;
      });
    };
    std::map<std::string, EPSeq> reps;
    for (const auto& x : detail::window_family(b)) {
      const auto c = canonical(x);
      auto [it, inserted] = reps.emplace(detail::key(c), c);
      check(x, it->second);
    }
    std::map<std::pair<Index, Index>, std::vector<EPSeq>> classes;
    for (const auto& [k, c] : reps) classes[{c.least_period(), floor_mod(anomaly_size(c), c.least_period())}].push_back(c);
    for (const auto& [inv, members] : classes)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) check(members[i], members[j]);
  });
}

/// Conjugacy classes of skew Sturmian specs read off from invariants are the
/// reciprocal/opposite-type pairs.
inline TheoremResult check_corollary(const Bounds& b) {
  return detail::timed("skew-conjugacy-classes", {{"max_period_sum", b.corollary}}, [&](TheoremResult& r) {
    const auto specs = detail::all_specs(b.corollary);
    std::vector<std::pair<Index, Index>> inv;
    for (const auto& s : specs) {
      const auto x = skew_sturmian(s);
      inv.emplace_back(x.least_period(), floor_mod(anomaly_size(x), x.least_period()));
    }
    for (std::size_t i = 0; i < specs.size(); ++i)
      detail::instance(r, io::to_json(specs[i]), [&]() -> std::optional<std::string> {
        std::set<SturmianSpec> cls;
        for (std::size_t j = 0; j < specs.size(); ++j)
          if (inv[i] == inv[j]) cls.insert(specs[j]);
        const auto expected = skew_conjugacy_class(specs[i]);
        if (cls != expected || cls.size() != 2) {
          std::string got;
          for (const auto& s : cls) got += " " + s.to_string();
          return "class from invariants:" + got;
        }
        return std::nullopt;
      });
  });
}

/// Flow witnesses between skew Sturmian sequences and random pairs, with each
/// raising step re-checked by the brute-force anomaly oracle.
inline TheoremResult check_flow(const Bounds& b) {
  json bounds{{"max_period_sum", b.flow}, {"random_pairs", b.random_flow_pairs}, {"seed", b.seed}};
  return detail::timed("flow-equivalence", bounds, [&](TheoremResult& r) {
    std::map<std::string, std::pair<Index, Index>> cache;
    auto oracle_inv = [&](const EPSeq& x) {
      auto [it, inserted] = cache.try_emplace(detail::key(x));
      if (inserted) it->second = {detail::oracle_least_period(x), oracle::anomaly_size(x)};
      return it->second;
    };
    auto check_chain = [&](const EPSeq& start, const std::vector<FlowMove>& chain) -> std::optional<std::string> {
      EPSeq before = start;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!std::holds_alternative<ExpandMove>(chain[i])) continue;
        const auto [n0, a0] = oracle_inv(before);
        const auto [n1, a1] = oracle_inv(move_result(chain[i]));
        const bool raised_period = n1 == n0 + 1 && a1 == a0;
        const bool raised_anomaly = n1 == n0 && a1 == a0 + 1;
        if (!raised_period && !raised_anomaly) return "step " + std::to_string(i) + " breaks its postcondition";
        before = move_result(chain[i]);
      }
      return std::nullopt;
    };
    auto check = [&](const EPSeq& x, const EPSeq& y) {
      detail::instance(r, {{"x", io::to_json(x)}, {"y", io::to_json(y)}}, [&]() -> std::optional<std::string> {
        const auto w = flow_witness(x, y);
        if (auto v = verify_flow_witness(x, y, w); !v) return v.trail.front();
        if (auto m = check_chain(x, w.chain_x)) return "chain_x " + *m;
        if (auto m = check_chain(y, w.chain_y)) return "chain_y " + *m;
        return std::nullopt;
      });
    };
    std::vector<EPSeq> xs;
    for (const auto& s : detail::all_specs(b.flow)) xs.push_back(skew_sturmian(s));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i; j < xs.size(); ++j) check(xs[i], xs[j]);
    std::mt19937_64 rng(b.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::int64_t k = 0; k < b.random_flow_pairs; ++k) {
      auto x = families::random_ep(rng);
      auto y = families::random_ep(rng);
      check(x, y);
    }
  });
}

/// Cutting sequence against cell expansion, chain balance and the single
/// deficient p-chain.
inline TheoremResult check_generators(const Bounds& b) {
  return detail::timed("generator-cross-validation", {{"max_period_sum", b.generator}, {"m", {-1, 0, 2}}},
                       [&](TheoremResult& r) {
    for (const auto& s : detail::rational_specs(b.generator, {-1, 0, 2}))
      detail::instance(r, io::to_json(s), [&]() -> std::optional<std::string> {
        const Index p = s.freq.p, q = s.freq.q, m = s.m;
        const Index lo = m - 3 * p - 2, hi = m + 3 * p + 2;
        const Word cut = cutting_sequence(s, lo, hi);
        if (!detail::find_word(expand_cells(cell_series(s, lo - 1, hi)), cut))
          return "cutting sequence does not align with the cell expansion";
        if (!is_balanced_chains(cell_series(s, m - 3 * (p + 1), m + 3 * (p + 1) - 1).cells)) return "chains unbalanced";
        if (s.type == SturmianType::S) {
          const auto counts = chain_zero_counts(cell_series(s, m - 2 * p, m + 2 * p), static_cast<std::size_t>(p));
          const auto low = std::count(counts.begin(), counts.end(), static_cast<std::size_t>(q - 1));
          const auto full = std::count(counts.begin(), counts.end(), static_cast<std::size_t>(q));
          if (low != 1 || full + 1 != static_cast<long>(counts.size())) return "p-chain zero counts are not q except once q-1";
        }
        return std::nullopt;
      });
  });
}

/// Symbol reversal of a type S sequence is similar to the opposite type at the
/// reciprocal frequency.
inline TheoremResult check_reciprocals(const Bounds& b) {
  return detail::timed("reciprocal-reversal", {{"max_period_sum", b.reciprocals}}, [&](TheoremResult& r) {
    for (auto [q, p] : detail::coprime_pairs(b.reciprocals))
      detail::instance(r, detail::pair_json(q, p), [&]() -> std::optional<std::string> {
        const auto x = symbol_reverse(skew_sturmian({Frequency::rational(q, p), SturmianType::S, 0}));
        const auto y = skew_sturmian({Frequency::rational(p, q), SturmianType::SPrime, 0});
        if (!similar(x, y)) return "not similar";
        if (!oracle::similar_by_windows(canonical(x), canonical(y))) return "window comparison disagrees";
        return std::nullopt;
      });
  });
}

/// The suites in acceptance order.
inline const std::vector<std::function<TheoremResult(const Bounds&)>>& suites() {
  static const std::vector<std::function<TheoremResult(const Bounds&)>> all{
      check_bezout,      check_anomaly_size, check_spot_values, check_window_properties, check_conjugacy_witnesses,
      check_corollary,   check_flow,         check_generators,  check_reciprocals};
  return all;
}

inline Report run_all(const Bounds& b) {
  b.validate();
  Report r{b.seed, {}};
  for (const auto& suite : suites()) r.theorems.push_back(suite(b));
  return r;
}

}  // namespace subshift::verify
