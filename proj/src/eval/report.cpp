#include "dac/eval/report.hpp"

#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "dac/error.hpp"

namespace dac::eval {

namespace {

using nlohmann::json;

json to_json(const InstanceRecord& r) {
  json doc = {{"id", r.id},
              {"prediction", r.prediction},
              {"truth", r.truth},
              {"correct", r.correct},
              {"backend_calls", r.backend_calls},
              {"edit_distance", nullptr},
              {"error_kind", r.error_kind},
              {"error_message", r.error_message}};
  if (r.edit_distance) doc["edit_distance"] = *r.edit_distance;
  return doc;
}

InstanceRecord instance_from_json(const json& doc) {
  InstanceRecord r;
  r.id = doc.at("id").get<std::string>();
  r.prediction = doc.at("prediction").get<std::string>();
  r.truth = doc.at("truth").get<std::string>();
  r.correct = doc.at("correct").get<bool>();
  r.backend_calls = doc.at("backend_calls").get<std::size_t>();
  if (!doc.at("edit_distance").is_null()) r.edit_distance = doc["edit_distance"].get<std::size_t>();
  r.error_kind = doc.at("error_kind").get<std::string>();
  r.error_message = doc.at("error_message").get<std::string>();
  return r;
}

json to_json(const MetricReport& r) {
  json instances = json::array();
  for (const auto& inst : r.instances) instances.push_back(to_json(inst));
  json doc = {
      {"task_kind", r.task_kind},
      {"strategy", r.strategy},
      {"n_instances", r.n_instances},
      {"n_failed", r.n_failed},
      {"n_scored", r.n_scored},
      {"exact_match_rate", r.exact_match_rate},
      {"mean_edit_distance", nullptr},
      {"confusion", nullptr},
      {"classification", nullptr},
      {"run_metadata",
       {{"backend", r.run_metadata.backend},
        {"seed", r.run_metadata.seed},
        {"timestamp", r.run_metadata.timestamp}}},
      {"w", r.w},
      {"disentangled", r.disentangled},
      {"instances", std::move(instances)},
  };
  if (r.mean_edit_distance) doc["mean_edit_distance"] = *r.mean_edit_distance;
  if (r.confusion) {
    doc["confusion"] = {{"tp", r.confusion->tp},
                        {"fp", r.confusion->fp},
                        {"fn", r.confusion->fn},
                        {"tn", r.confusion->tn}};
  }
  if (r.classification) {
    const auto& c = *r.classification;
    doc["classification"] = {{"precision", c.precision}, {"recall", c.recall},
                             {"f1", c.f1},               {"accuracy", c.accuracy},
                             {"g_mean", c.g_mean},       {"degenerate", c.degenerate}};
  }
  return doc;
}

MetricReport report_from_json(const json& doc) {
  MetricReport r;
  r.task_kind = doc.at("task_kind").get<std::string>();
  r.strategy = doc.at("strategy").get<std::string>();
  r.n_instances = doc.at("n_instances").get<std::size_t>();
  r.n_failed = doc.at("n_failed").get<std::size_t>();
  r.n_scored = doc.at("n_scored").get<std::size_t>();
  r.exact_match_rate = doc.at("exact_match_rate").get<double>();
  if (!doc.at("mean_edit_distance").is_null()) {
    r.mean_edit_distance = doc["mean_edit_distance"].get<double>();
  }
  if (const auto& c = doc.at("confusion"); !c.is_null()) {
    r.confusion = Confusion{c.at("tp").get<std::size_t>(), c.at("fp").get<std::size_t>(),
                            c.at("fn").get<std::size_t>(), c.at("tn").get<std::size_t>()};
  }
  if (const auto& c = doc.at("classification"); !c.is_null()) {
    r.classification = ClassificationMetrics{
        c.at("precision").get<double>(), c.at("recall").get<double>(), c.at("f1").get<double>(),
        c.at("accuracy").get<double>(),  c.at("g_mean").get<double>(), c.at("degenerate").get<bool>()};
  }
  const auto& meta = doc.at("run_metadata");
  r.run_metadata = {meta.at("backend").get<std::string>(), meta.at("seed").get<std::uint64_t>(),
                    meta.at("timestamp").get<std::string>()};
  r.w = doc.at("w").get<std::size_t>();
  r.disentangled = doc.at("disentangled").get<bool>();
  for (const auto& inst : doc.at("instances")) r.instances.push_back(instance_from_json(inst));
  return r;
}

}  // namespace

bool operator==(const MetricReport& a, const MetricReport& b) {
  return report_to_string(a) == report_to_string(b);
}

std::string report_to_string(const MetricReport& report) {
  return to_json(report).dump(2) + "\n";
}

MetricReport report_from_string(const std::string& text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw SchemaError(1, std::string("malformed report: ") + e.what());
  }
}

void write_report(const MetricReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DatasetError("cannot write report: " + path.string());
  out << report_to_string(report);
  if (!out) throw DatasetError("write failed: " + path.string());
}

MetricReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot read report: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return report_from_string(buffer.str());
}

std::string csv_summary(const MetricReport& report, bool header) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  if (report.classification) {
    if (header) out << "task,strategy,n,F1,Acc,Prec,Recall,G-Mean\n";
    const auto& c = *report.classification;
    out << report.task_kind << ',' << report.strategy << ',' << report.n_instances << ','
        << 100.0 * c.f1 << ',' << 100.0 * c.accuracy << ',' << 100.0 * c.precision << ','
        << 100.0 * c.recall << ',' << 100.0 * c.g_mean << '\n';
  } else {
    if (header) out << "task,strategy,n,Accuracy,EditDistance\n";
    out << report.task_kind << ',' << report.strategy << ',' << report.n_instances << ','
        << 100.0 * report.exact_match_rate << ',' << report.mean_edit_distance.value_or(0.0)
        << '\n';
  }
  return out.str();
}

}  // namespace dac::eval
