#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subshift/json_io.hpp"
#include "subshift/verify.hpp"

using namespace subshift;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

int report_error(const std::string& kind, const std::string& message) {
  emit({{"error", kind}, {"message", message}});
  std::cerr << kind << ": " << message << "\n";
  return kUsage;
}

json invariants(const EPSeq& x) { return {{"least_period", x.least_period()}, {"anomaly_size", anomaly_size(x)}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eventually periodic sequences, skew Sturmian generation and conjugacy/flow classification"};
  app.require_subcommand(1);
  int status = kOk;

  // bezout
  auto* bez = app.add_subcommand("bezout", "restricted Bezout coefficients for (q, p)");
  std::int64_t bq = 0, bp = 0;
  bez->add_option("q", bq)->required();
  bez->add_option("p", bp)->required();
  bez->callback([&] { emit(io::to_json(restricted_bezout(bq, bp))); });

  // sturmian gen
  auto* stu = app.add_subcommand("sturmian", "skew Sturmian generation");
  stu->require_subcommand(1);
  auto* gen = stu->add_subcommand("gen", "generate a skew Sturmian sequence");
  std::string freq, type, emit_kind = "epseq";
  Index m = 0;
  std::optional<Index> cells;
  bool pretty = false;
  gen->add_option("--freq", freq, "q/p, 0 or inf")->required();
  gen->add_option("--type", type, "S or Sprime")->required();
  gen->add_option("--m", m, "cell index of the anomaly");
  gen->add_option("--cells", cells, "cells on each side of B_m");
  gen->add_option("--emit", emit_kind)->check(CLI::IsMember({"cells", "symbols", "epseq"}));
  gen->add_flag("--pretty", pretty, "add a human-readable window");
  gen->callback([&] {
    SturmianSpec s{Frequency::parse(freq), parse_sturmian_type(type), m};
    s.validate();
    if (emit_kind == "epseq") {
      auto x = skew_sturmian(s);
      json j = io::to_json(x);
      if (pretty) j["pretty"] = io::pretty_window(x);
      emit(j);
      return;
    }
    if (s.freq.kind != Frequency::Kind::Rational)
      throw Error(ErrorKind::InvalidSpec, "cell output needs a rational frequency");
    const Index k = cells.value_or(s.freq.p + 1);
    if (k < 0) throw Error(ErrorKind::InvalidRange, "--cells must be non-negative");
    const auto cs = cell_series(s, m - k, m + k);
    if (emit_kind == "cells") {
      json out = json::array();
      for (const auto& c : cs.cells) out.push_back(c.to_string());
      emit(out);
    } else {
      emit(expand_cells(cs).to_string());
    }
  });

  // ep
  auto* epc = app.add_subcommand("ep", "analysis of one or two sequences");
  epc->require_subcommand(1);
  std::string fa, fb;
  auto* ep_size = epc->add_subcommand("anomaly-size", "least period and anomaly size");
  ep_size->add_option("file", fa)->required();
  ep_size->callback([&] { emit(invariants(io::epseq_from_json(read_json(fa)))); });
  auto* ep_per = epc->add_subcommand("least-period", "least period of the tails");
  ep_per->add_option("file", fa)->required();
  ep_per->callback([&] { emit({{"least_period", io::epseq_from_json(read_json(fa)).least_period()}}); });
  auto* ep_can = epc->add_subcommand("canonical", "similarity representative");
  ep_can->add_option("file", fa)->required();
  ep_can->add_flag("--pretty", pretty);
  ep_can->callback([&] {
    auto c = canonical(io::epseq_from_json(read_json(fa)));
    json j = io::to_json(c);
    if (pretty) j["pretty"] = io::pretty_window(c);
    emit(j);
  });
  auto* ep_sim = epc->add_subcommand("similar", "shift equality");
  ep_sim->add_option("a", fa)->required();
  ep_sim->add_option("b", fb)->required();
  ep_sim->callback([&] {
    emit({{"similar", similar(io::epseq_from_json(read_json(fa)), io::epseq_from_json(read_json(fb)))}});
  });
  auto* ep_rem = epc->add_subcommand("remove-anomaly", "periodic sequence left after removing the anomaly");
  ep_rem->add_option("file", fa)->required();
  ep_rem->callback([&] { emit(io::to_json(remove_anomaly(io::epseq_from_json(read_json(fa))))); });

  // classify
  auto* cls = app.add_subcommand("classify", "conjugacy and flow equivalence");
  cls->require_subcommand(1);
  std::string witness_path;
  auto* conj = cls->add_subcommand("conjugate", "decide conjugacy, optionally writing a witness");
  conj->add_option("a", fa)->required();
  conj->add_option("b", fb)->required();
  conj->add_option("--witness", witness_path);
  conj->callback([&] {
    auto x = io::epseq_from_json(read_json(fa)), y = io::epseq_from_json(read_json(fb));
    const bool c = conjugate_ep(x, y);
    json out{{"conjugate", c}, {"a", invariants(x)}, {"b", invariants(y)}};
    if (c && !witness_path.empty()) {
      write_json(witness_path, io::to_json(conjugacy_witness(x, y)));
      out["witness"] = witness_path;
    }
    emit(out);
  });
  auto* flow = cls->add_subcommand("flow", "flow equivalence witness");
  flow->add_option("a", fa)->required();
  flow->add_option("b", fb)->required();
  flow->add_option("--witness", witness_path)->required();
  flow->callback([&] {
    auto x = io::epseq_from_json(read_json(fa)), y = io::epseq_from_json(read_json(fb));
    auto w = flow_witness(x, y);
    write_json(witness_path, io::to_json(w));
    emit({{"flow_equivalent", true},
          {"moves_a", w.chain_x.size()},
          {"moves_b", w.chain_y.size()},
          {"witness", witness_path}});
  });
  std::string fw;
  auto* check = cls->add_subcommand("check-witness", "replay a conjugacy or flow witness");
  check->add_option("a", fa)->required();
  check->add_option("b", fb)->required();
  check->add_option("witness", fw)->required();
  check->callback([&] {
    auto x = io::epseq_from_json(read_json(fa)), y = io::epseq_from_json(read_json(fb));
    const json wj = read_json(fw);
    const auto format = io::detail::field<std::string>(wj, "format");
    Verification v;
    if (format == io::kConjugacyFormat)
      v = verify_conjugacy(x, y, io::conjugacy_witness_from_json(wj));
    else if (format == io::kFlowFormat)
      v = verify_flow_witness(x, y, io::flow_witness_from_json(wj));
    else
      throw Error(ErrorKind::ParseError, "unknown witness format " + format);
    emit({{"valid", v.ok}, {"format", format}, {"trail", v.trail}});
    for (const auto& t : v.trail) std::cerr << "witness: " << t << "\n";
    if (!v) status = kPropertyFailure;
  });

  // verify
  auto* ver = app.add_subcommand("verify", "run the property suites");
  auto bounds = verify::Bounds::defaults();
  std::optional<std::int64_t> max_sum;
  ver->add_option("--max-period-sum", max_sum, "sets every p+q bound");
  ver->add_option("--bezout-bound", bounds.bezout);
  ver->add_option("--sturmian-bound", bounds.sturmian);
  ver->add_option("--corollary-bound", bounds.corollary);
  ver->add_option("--reciprocals-bound", bounds.reciprocals);
  ver->add_option("--generator-bound", bounds.generator);
  ver->add_option("--flow-bound", bounds.flow);
  ver->add_option("--word-max", bounds.word_max);
  ver->add_option("--anomaly-max", bounds.anomaly_max);
  ver->add_option("--random", bounds.random_instances);
  ver->add_option("--random-flow-pairs", bounds.random_flow_pairs);
  ver->add_option("--seed", bounds.seed, "overrides SUBSHIFT_SEED");
  ver->callback([&] {
    if (max_sum) {
      // Explicit per-suite bounds still win.
      auto explicit_bounds = bounds;
      bounds.set_max_period_sum(*max_sum);
      for (auto [flag, field] : {std::pair{"--bezout-bound", &verify::Bounds::bezout},
                                 {"--sturmian-bound", &verify::Bounds::sturmian},
                                 {"--corollary-bound", &verify::Bounds::corollary},
                                 {"--reciprocals-bound", &verify::Bounds::reciprocals},
                                 {"--generator-bound", &verify::Bounds::generator},
                                 {"--flow-bound", &verify::Bounds::flow}})
        if (ver->count(flag)) bounds.*field = explicit_bounds.*field;
    }
    bounds.validate();
    verify::Report report{bounds.seed, {}};
    for (const auto& suite : verify::suites()) {
      report.theorems.push_back(suite(bounds));
      const auto& t = report.theorems.back();
      std::cerr << t.tag << ": " << (t.pass() ? "pass" : "FAIL") << " (" << t.instances << " instances, "
                << t.wall_seconds << " s)\n";
    }
    emit(verify::to_json(report));
    if (!report.pass()) status = kPropertyFailure;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what());
  } catch (const Error& e) {
    return report_error(std::string(to_string(e.kind())), e.detail());
  }
  return status;
}
