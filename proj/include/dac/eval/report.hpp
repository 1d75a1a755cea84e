#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dac/eval/metrics.hpp"

namespace dac::eval {

/// Outcome of one dataset instance, kept in dataset order.
struct InstanceRecord {
  std::string id;
  std::string prediction;  // empty when the instance failed
  std::string truth;
  bool correct = false;
  /// Multiplication only: distance between canonical prediction and truth.
  std::optional<std::size_t> edit_distance;
  std::size_t backend_calls = 0;
  std::string error_kind;  // empty on success
  std::string error_message;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

struct RunMetadata {
  std::string backend;
  std::uint64_t seed = 0;
  /// Caller-supplied; left empty so replayed runs stay byte-identical.
  std::string timestamp;

  friend bool operator==(const RunMetadata&, const RunMetadata&) = default;
};

struct MetricReport {
  std::string task_kind;
  std::string strategy;
  std::size_t n_instances = 0;
  std::size_t n_failed = 0;
  /// Instances used as metric denominators.
  std::size_t n_scored = 0;
  double exact_match_rate = 0.0;
  /// Multiplication only.
  std::optional<double> mean_edit_distance;
  /// Classification tasks only.
  std::optional<Confusion> confusion;
  std::optional<ClassificationMetrics> classification;
  RunMetadata run_metadata;
  // Solver knobs echoed for reproducibility.
  std::size_t w = 0;
  bool disentangled = true;
  std::vector<InstanceRecord> instances;

  friend bool operator==(const MetricReport& a, const MetricReport& b);
};

/// Deterministic JSON text (sorted keys, two-space indent, trailing newline).
std::string report_to_string(const MetricReport& report);
MetricReport report_from_string(const std::string& text);

/// Throws DatasetError on I/O failure, SchemaError on malformed content.
void write_report(const MetricReport& report, const std::filesystem::path& path);
MetricReport load_report(const std::filesystem::path& path);

/// One-row CSV table. Classification columns follow "F1, Acc, Prec, Recall,
/// G-Mean"; multiplication reports "Accuracy, EditDistance".
std::string csv_summary(const MetricReport& report, bool header = true);

}  // namespace dac::eval
