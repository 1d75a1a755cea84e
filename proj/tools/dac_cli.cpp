// dac: generate instances, run prompting strategies over datasets, check the
// BSI reference and inspect transcripts.
//
// Exit codes: 0 success, 2 configuration error, 3 backend failure,
// 4 verification mismatch.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "dac/backends/http_backend.hpp"
#include "dac/backends/mock_backend.hpp"
#include "dac/backends/transcript.hpp"
#include "dac/bsi/bsi.hpp"
#include "dac/error.hpp"
#include "dac/eval/dataset.hpp"
#include "dac/eval/experiment.hpp"
#include "dac/eval/report.hpp"

namespace {

using namespace dac;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBackend = 3;
constexpr int kExitMismatch = 4;

struct GenArgs {
  std::string task = "multiplication";
  std::size_t count = 200;
  std::size_t digits = 5;
  std::size_t nodes = 5;
  std::uint64_t seed = 0;
  std::string out;
};

struct RunArgs {
  std::string task = "multiplication";
  std::string strategy = "dac-multi";
  std::string backend = "mock";
  std::string model;
  std::string base_url = "https://api.openai.com";
  std::string dataset;
  std::string out;
  std::string transcript;
  bool record = false;
  bool no_dp = false;
  bool exclude_failures = false;
  std::size_t w = 2;
  std::size_t parallelism = 4;
  std::size_t jobs = 1;
  std::size_t max_depth = 10;
  std::string separator = "[SEP]";
  std::uint64_t seed = 0;
  std::string timestamp;
  std::size_t timeout_s = 60;
};

struct BsiArgs {
  std::string pattern;
  std::string base;
  bool verify = false;
};

struct TranscriptArgs {
  std::string path;
};

class Mismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path + " is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ConfigError("cannot write " + path);
}

int cmd_gen(const GenArgs& args) {
  const auto kind = core::task_kind_from_string(args.task);
  if (kind == core::TaskKind::multiplication) {
    if (args.digits < 1) throw ConfigError("--digits must be at least 1");
    if (args.count < 1) throw ConfigError("--count must be at least 1");
    eval::MultiplicationDataset ds{tasks::gen_instances(args.count, args.digits, args.seed)};
    eval::write_dataset(ds, args.out);
    std::printf("wrote %zu multiplication instances to %s\n", args.count, args.out.c_str());
    return kExitOk;
  }
  if (kind == core::TaskKind::bsi) {
    if (args.nodes < 1) throw ConfigError("--nodes must be at least 1");
    write_text(args.out, bsi::random_tree(args.nodes, args.seed).to_json().dump(2) + "\n");
    std::printf("wrote %zu-node tree to %s\n", args.nodes, args.out.c_str());
    return kExitOk;
  }
  throw ConfigError("gen supports --task multiplication or bsi; verification data is loaded "
                    "from existing benchmark files");
}

std::shared_ptr<backends::Backend> make_backend(const RunArgs& args,
                                                const eval::Dataset& dataset) {
  if (args.record && args.backend == "replay") {
    throw ConfigError("--record cannot be combined with --backend replay");
  }
  if ((args.record || args.backend == "replay") && args.transcript.empty()) {
    throw ConfigError("--transcript is required for --record and --backend replay");
  }

  std::shared_ptr<backends::Backend> backend;
  if (args.backend == "mock") {
    backends::MockBackend::GoldVerdicts gold;
    if (const auto* ver = std::get_if<eval::VerificationDataset>(&dataset)) {
      gold = eval::mock_gold_from(*ver);
    }
    backend = std::make_shared<backends::MockBackend>(
        args.model.empty() ? "mock-exact" : args.model, std::move(gold));
  } else if (args.backend == "http") {
    if (args.model.empty()) throw ConfigError("--model is required with --backend http");
    backends::HttpBackendOptions options;
    options.base_url = args.base_url;
    options.model_id = args.model;
    options.timeout = std::chrono::seconds(static_cast<long long>(args.timeout_s));
    backend = std::make_shared<backends::HttpBackend>(options);
  } else if (args.backend == "replay") {
    auto store =
        backends::TranscriptStore::open(args.transcript, backends::TranscriptStore::Mode::replay);
    return std::make_shared<backends::ReplayBackend>(
        store, args.model.empty() ? "mock-exact" : args.model);
  } else {
    throw ConfigError("--backend must be http, mock or replay");
  }

  if (args.record) {
    auto store =
        backends::TranscriptStore::open(args.transcript, backends::TranscriptStore::Mode::record);
    backend = std::make_shared<backends::RecordingBackend>(backend, store);
  }
  return backend;
}

std::string summary_line(const eval::MetricReport& r) {
  char buf[256];
  if (r.classification) {
    const auto& c = *r.classification;
    std::snprintf(buf, sizeof buf,
                  "%s %s n=%zu failed=%zu F1=%.2f Acc=%.2f Prec=%.2f Recall=%.2f G-Mean=%.2f",
                  r.task_kind.c_str(), r.strategy.c_str(), r.n_instances, r.n_failed,
                  100 * c.f1, 100 * c.accuracy, 100 * c.precision, 100 * c.recall,
                  100 * c.g_mean);
  } else {
    std::snprintf(buf, sizeof buf, "%s %s n=%zu failed=%zu accuracy=%.4f edit_distance=%.4f",
                  r.task_kind.c_str(), r.strategy.c_str(), r.n_instances, r.n_failed,
                  r.exact_match_rate, r.mean_edit_distance.value_or(0.0));
  }
  return buf;
}

bool is_backend_failure(const std::string& kind) {
  return kind == "TransportError" || kind == "AuthError" || kind == "ReplayMiss" ||
         kind == "UnrecognizedPrompt" || kind == "BackendError" || kind == "StoreIOError";
}

int cmd_run(const RunArgs& args) {
  if (args.dataset.empty()) throw ConfigError("--dataset is required");
  const auto kind = core::task_kind_from_string(args.task);
  if (kind == core::TaskKind::bsi) {
    throw ConfigError("use the bsi subcommand for tree instances; run needs a prompted task");
  }
  core::SolverConfig config;
  config.strategy = core::strategy_from_string(args.strategy);
  config.w = args.w;
  config.parallelism = args.parallelism;
  config.max_depth = args.max_depth;
  config.separator = args.separator;
  config.disentangled = !args.no_dp;
  config.validate();

  const auto dataset = eval::load_dataset(args.dataset, kind);
  const auto backend = make_backend(args, dataset);

  eval::ExperimentOptions options;
  options.exclude_failures = args.exclude_failures;
  options.instance_parallelism = args.jobs;
  options.seed = args.seed;
  options.timestamp = args.timestamp;
  const auto report = eval::run_experiment(dataset, config.strategy, *backend, config, options);
  if (!args.out.empty()) eval::write_report(report, args.out);
  std::printf("%s\n", summary_line(report).c_str());

  for (const auto& rec : report.instances) {
    if (is_backend_failure(rec.error_kind)) {
      std::fprintf(stderr, "instance %s: %s: %s\n", rec.id.c_str(), rec.error_kind.c_str(),
                   rec.error_message.c_str());
      return kExitBackend;
    }
  }
  return kExitOk;
}

std::string format_vector(const bsi::IndicatorVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(static_cast<int>(v[i]));
  }
  return out + "]";
}

int cmd_bsi(const BsiArgs& args) {
  const auto pattern = bsi::ColoredTree::from_json(read_json(args.pattern));
  const auto base = bsi::ColoredTree::from_json(read_json(args.base));
  const auto v = bsi::bsi_solve(pattern, base);
  std::printf("v = %s\n%s\n", format_vector(v).c_str(),
              bsi::any_match(v) ? "MATCH" : "NO MATCH");
  if (args.verify) {
    const auto oracle = bsi::brute_force_embeds(pattern, base);
    if (oracle != v) {
      throw Mismatch("brute force disagrees: " + format_vector(oracle));
    }
    std::printf("verified against brute force\n");
  }
  return kExitOk;
}

// Streams the transcript lines; `visit` sees each parsed entry.
template <typename Visit>
void for_each_entry(const std::string& path, Visit visit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StoreIOError("cannot read transcript: " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      visit(line_no, nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(line_no, e.what());
    }
  }
}

int cmd_transcript_stats(const TranscriptArgs& args) {
  std::size_t entries = 0;
  std::map<std::string, std::size_t> per_model;
  for_each_entry(args.path, [&](std::size_t, const nlohmann::json& entry) {
    ++entries;
    ++per_model[entry.at("request").value("model", std::string("?"))];
  });
  std::printf("entries=%zu\n", entries);
  for (const auto& [model, n] : per_model) std::printf("  %s: %zu\n", model.c_str(), n);
  return kExitOk;
}

int cmd_transcript_verify(const TranscriptArgs& args) {
  std::size_t checked = 0;
  for_each_entry(args.path, [&](std::size_t line_no, const nlohmann::json& entry) {
    const auto& req = entry.at("request");
    backends::BackendRequest request;
    request.model_id = req.at("model").get<std::string>();
    request.temperature = req.at("temperature").get<double>();
    for (const auto& m : req.at("messages")) {
      request.messages.push_back({backends::role_from_string(m.at("role").get<std::string>()),
                                  m.at("content").get<std::string>()});
    }
    if (request.key() != entry.at("key").get<std::string>()) {
      throw Mismatch("line " + std::to_string(line_no) + ": stored key does not match request");
    }
    ++checked;
  });
  std::printf("verified %zu entries\n", checked);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divide-and-conquer prompting harness"};
  app.set_config("--config", "", "TOML file supplying option defaults");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->add_option("--task", gen.task, "multiplication or bsi")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Number of instances")->capture_default_str();
  gen_cmd->add_option("--digits", gen.digits, "Digits per operand")->capture_default_str();
  gen_cmd->add_option("--nodes", gen.nodes, "Tree size for --task bsi")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a strategy over a dataset");
  run_cmd->add_option("--task", run.task, "multiplication, hallucination or factcheck")
      ->capture_default_str();
  run_cmd->add_option("--strategy", run.strategy, "io, cot, ltm, dac-single or dac-multi")
      ->capture_default_str();
  run_cmd->add_option("--backend", run.backend, "http, mock or replay")->capture_default_str();
  run_cmd->add_option("--model", run.model, "Model id (default mock-exact for mock/replay)");
  run_cmd->add_option("--base-url", run.base_url, "Chat-completion endpoint base URL")
      ->capture_default_str();
  run_cmd->add_option("--timeout", run.timeout_s, "HTTP timeout in seconds")
      ->capture_default_str();
  run_cmd->add_option("--dataset", run.dataset, "Line-delimited JSON dataset");
  run_cmd->add_option("--out", run.out, "Report path (JSON)");
  run_cmd->add_option("--transcript", run.transcript, "Transcript JSONL for record/replay");
  run_cmd->add_flag("--record", run.record, "Append every backend exchange to --transcript");
  run_cmd->add_flag("--no-dp", run.no_dp, "Forward full sub-task exchanges to merge");
  run_cmd->add_flag("--exclude-failures", run.exclude_failures,
                    "Drop failed instances from metric denominators");
  run_cmd->add_option("--w", run.w, "Recursion threshold")->capture_default_str();
  run_cmd->add_option("--parallelism", run.parallelism, "Concurrent tackle calls")
      ->capture_default_str();
  run_cmd->add_option("--jobs", run.jobs, "Instances evaluated concurrently")
      ->capture_default_str();
  run_cmd->add_option("--max-depth", run.max_depth, "Recursion depth guard")
      ->capture_default_str();
  run_cmd->add_option("--separator", run.separator, "Sub-answer separator")
      ->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "Seed echoed into the report")->capture_default_str();
  run_cmd->add_option("--timestamp", run.timestamp, "Timestamp echoed into the report");

  BsiArgs bsi_args;
  auto* bsi_cmd = app.add_subcommand("bsi", "Solve 2-color subtree isomorphism");
  bsi_cmd->add_option("--pattern", bsi_args.pattern, "Pattern tree JSON")->required();
  bsi_cmd->add_option("--base", bsi_args.base, "Base tree JSON")->required();
  bsi_cmd->add_flag("--verify", bsi_args.verify, "Cross-check against brute force");

  TranscriptArgs tr;
  auto* tr_cmd = app.add_subcommand("transcript", "Inspect a transcript file");
  tr_cmd->require_subcommand(1);
  auto* tr_stats = tr_cmd->add_subcommand("stats", "Count entries per model");
  auto* tr_verify = tr_cmd->add_subcommand("verify", "Recompute every request key");
  for (auto* sub : {tr_stats, tr_verify}) {
    sub->add_option("--transcript", tr.path, "Transcript JSONL")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) return cmd_run(run);
    if (*bsi_cmd) return cmd_bsi(bsi_args);
    if (*tr_stats) return cmd_transcript_stats(tr);
    if (*tr_verify) return cmd_transcript_verify(tr);
  } catch (const Mismatch& e) {
    std::fprintf(stderr, "mismatch: %s\n", e.what());
    return kExitMismatch;
  } catch (const BackendError& e) {
    std::fprintf(stderr, "%s: %s\n", e.kind().c_str(), e.what());
    return kExitBackend;
  } catch (const StoreIOError& e) {
    std::fprintf(stderr, "%s: %s\n", e.kind().c_str(), e.what());
    return kExitBackend;
  } catch (const Error& e) {
    std::fprintf(stderr, "%s: %s\n", e.kind().c_str(), e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
