#include "leapfrog/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "leapfrog/analysis.hpp"
#include "leapfrog/engine.hpp"
#include "leapfrog/oracle.hpp"
#include "leapfrog/workbench.hpp"

namespace leapfrog {

namespace {

using ordered_json = nlohmann::ordered_json;

Poset load_poset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

ordered_json names_json(const Poset& poset, const Arrangement& arr) {
  ordered_json out = ordered_json::array();
  for (ElementIndex e : arr.order) out.push_back(poset.element(e).token);
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::LimitExceeded:
    case ErrorCode::UnsupportedSize:
      return kExitResourceLimit;
    case ErrorCode::InternalInconsistency:
      return kExitVerificationFailed;
    default:
      return kExitInvalidInput;
  }
}

struct Options {
  std::string poset_path;
  std::string perm;
  std::string strategy = "leftmost";
  std::uint64_t seed = 0;
  bool trace = false;
  bool verbose = false;
  std::size_t max_n = 8;
  std::size_t node_limit = kDefaultNodeLimit;
  std::string kind;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double edge_prob = 0.3;
};

int cmd_run(const Options& o, CLI::App& sub, std::ostream& out, std::ostream& err) {
  const Poset poset = load_poset(o.poset_path);
  const Arrangement arr = parse_arrangement(poset, o.perm);
  Strategy strategy = Leftmost{};
  if (o.strategy == "rightmost") {
    strategy = Rightmost{};
  } else if (o.strategy == "random") {
    if (sub.count("--seed") == 0) {
      err << "error: --strategy random requires --seed\n";
      return kExitUsage;
    }
    strategy = RandomChoice{o.seed};
  }
  const SwapTrace trace = run_to_terminal(poset, arr, strategy);
  out << format_arrangement(poset, trace.final) << "\n" << trace.swap_count() << "\n";
  if (o.trace || o.verbose) out << write_trace(poset, trace, o.verbose);
  return kExitOk;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const Poset poset = load_poset(o.poset_path);
  const Arrangement arr = parse_arrangement(poset, o.perm);
  out << format_arrangement(poset, predict_terminal(poset, arr)) << "\n" << predict_swap_count(poset, arr) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Poset poset = load_poset(o.poset_path);
  const Arrangement arr = parse_arrangement(poset, o.perm);
  if (poset.size() > o.max_n) {
    err << "error: poset has " << poset.size() << " elements; exhaustive search is capped at --max-n " << o.max_n
        << "\n";
    return kExitResourceLimit;
  }
  const ConfluenceReport report = check_confluence(poset, arr, o.node_limit);
  ordered_json doc;
  doc["reachable"] = report.reachable_count;
  doc["terminals"] = ordered_json::array();
  for (const auto& t : report.terminals) doc["terminals"].push_back(names_json(poset, t));
  doc["swap_counts"] = report.swap_count_set;
  doc["predicted_terminal"] = names_json(poset, report.predicted_terminal);
  doc["predicted_count"] = report.predicted_count;
  doc["confluent"] = report.confluent;
  doc["agrees"] = report.agrees;
  out << doc.dump() << "\n";
  if (!report.confluent || !report.agrees) {
    err << "error: verification failed\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_fences(const Options& o, std::ostream& out) {
  const Poset poset = load_poset(o.poset_path);
  const Arrangement arr = parse_arrangement(poset, o.perm);
  for (std::size_t p = 0; p < arr.size(); ++p) {
    for (std::size_t q = p + 1; q < arr.size(); ++q) {
      ordered_json rec;
      rec["x"] = poset.element(arr[p]).token;
      rec["y"] = poset.element(arr[q]).token;
      const PairOutcome outcome = classify_pair(poset, arr, arr[p], arr[q]);
      if (std::holds_alternative<PreservedByOrder>(outcome)) {
        rec["outcome"] = "order";
      } else if (const auto* f = std::get_if<PreservedByFence>(&outcome)) {
        rec["outcome"] = "fence";
        ordered_json chain = ordered_json::array();
        for (ElementIndex e : f->certificate.chain) chain.push_back(poset.element(e).token);
        rec["certificate"] = chain;
      } else {
        rec["outcome"] = "reversed";
      }
      out << rec.dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_gen(const Options& o, CLI::App& sub, std::ostream& out, std::ostream& err) {
  GeneratorSpec spec;
  if (o.kind == "chain") {
    spec = ChainSpec{o.n};
  } else if (o.kind == "antichain") {
    spec = AntichainSpec{o.n};
  } else if (o.kind == "boolean") {
    spec = BooleanSpec{o.k};
  } else if (o.kind == "grid") {
    spec = GridSpec{o.rows, o.cols};
  } else {
    if (sub.count("--seed") == 0) {
      err << "error: --kind random requires --seed\n";
      return kExitUsage;
    }
    spec = RandomSpec{o.n, o.edge_prob, o.seed};
  }
  out << write_poset(generate_poset(spec));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leapfrog rewriting on finite posets: run, predict, verify, inspect fences"};
  app.require_subcommand(1);
  Options o;

  auto add_instance = [&o](CLI::App* sub) {
    sub->add_option("--poset", o.poset_path, "Poset document (JSON)")->required();
    sub->add_option("--perm", o.perm, "Comma-separated initial arrangement")->required();
  };

  auto* run = app.add_subcommand("run", "Swap until terminal and print the terminal arrangement and swap count");
  add_instance(run);
  run->add_option("--strategy", o.strategy, "Swap selection")
      ->check(CLI::IsMember({"leftmost", "rightmost", "random"}))
      ->capture_default_str();
  run->add_option("--seed", o.seed, "Seed for the random strategy");
  run->add_flag("--trace", o.trace, "Emit the swap trace");
  run->add_flag("--verbose", o.verbose, "Include the arrangement after each swap (implies --trace)");

  auto* predict = app.add_subcommand("predict", "Predict terminal arrangement and swap count without simulation");
  add_instance(predict);

  auto* verify = app.add_subcommand("verify", "Exhaustively check confluence and agreement with the prediction");
  add_instance(verify);
  verify->add_option("--max-n", o.max_n, "Largest poset size accepted for exhaustive search")->capture_default_str();
  verify->add_option("--node-limit", o.node_limit, "Cap on explored arrangements")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* fences = app.add_subcommand("fences", "Classify every ordered pair of the arrangement");
  add_instance(fences);

  auto* gen = app.add_subcommand("gen", "Emit a generated poset document");
  gen->add_option("--kind", o.kind, "Family")
      ->required()
      ->check(CLI::IsMember({"chain", "antichain", "boolean", "grid", "random"}));
  gen->add_option("--n", o.n, "Size for chain, antichain, random");
  gen->add_option("--k", o.k, "Rank for boolean");
  gen->add_option("--rows", o.rows, "Rows for grid");
  gen->add_option("--cols", o.cols, "Columns for grid");
  gen->add_option("--edge-prob", o.edge_prob, "Edge probability for random")->capture_default_str();
  gen->add_option("--seed", o.seed, "Seed for random");

  auto* hasse = app.add_subcommand("hasse", "Emit the Hasse diagram as DOT");
  hasse->add_option("--poset", o.poset_path, "Poset document (JSON)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(o, *run, out, err);
    if (*predict) return cmd_predict(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*fences) return cmd_fences(o, out);
    if (*gen) return cmd_gen(o, *gen, out, err);
    if (*hasse) {
      out << export_dot(load_poset(o.poset_path));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace leapfrog
