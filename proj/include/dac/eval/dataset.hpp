#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dac/core/types.hpp"
#include "dac/tasks/multiplication.hpp"
#include "dac/tasks/verification.hpp"

namespace dac::eval {

struct VerificationInstance {
  std::string id;
  std::string document;
  std::string candidate;
  std::optional<tasks::Label> label;
  /// Optional sentences known to contradict the document. Only the mock
  /// backend reads these.
  std::vector<std::string> contradicting;
};

struct MultiplicationDataset {
  std::vector<tasks::MultiplicationInstance> instances;
};

struct VerificationDataset {
  core::TaskKind kind = core::TaskKind::hallucination;
  std::vector<VerificationInstance> instances;
};

using Dataset = std::variant<MultiplicationDataset, VerificationDataset>;

core::TaskKind task_kind(const Dataset& dataset);
std::size_t size(const Dataset& dataset);

/// Line-delimited JSON. Multiplication lines are {a, b, ground_truth};
/// verification lines are {id, document, candidate, label} with label
/// "positive" or "negative", required when `require_labels`. Blank lines
/// are skipped. Throws SchemaError(line) or DatasetError.
Dataset load_dataset(const std::filesystem::path& path, core::TaskKind kind,
                     bool require_labels = true);

/// Writes the same line-delimited JSON shape `load_dataset` reads.
void write_dataset(const Dataset& dataset, const std::filesystem::path& path);

}  // namespace dac::eval
