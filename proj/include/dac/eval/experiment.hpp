#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "dac/backends/backend.hpp"
#include "dac/backends/mock_backend.hpp"
#include "dac/core/types.hpp"
#include "dac/eval/dataset.hpp"
#include "dac/eval/report.hpp"

namespace dac::eval {

struct ExperimentOptions {
  /// Failed instances are dropped from metric denominators instead of being
  /// scored as wrong.
  bool exclude_failures = false;
  /// Instances evaluated concurrently.
  std::size_t instance_parallelism = 1;
  std::uint64_t seed = 0;
  std::string timestamp;
};

/// Runs `strategy` on every instance and aggregates the metrics. Instance
/// errors are recorded, not thrown; an empty dataset throws DatasetError.
///
/// A failed multiplication instance has an empty prediction (edit distance =
/// |truth|); a failed classification instance counts as the wrong label.
MetricReport run_experiment(const Dataset& dataset, core::Strategy strategy,
                            backends::Backend& backend, const core::SolverConfig& config,
                            const ExperimentOptions& options = {});

/// Gold verdicts for the mock backend: each instance's `contradicting`
/// sentences, or the last sentence of a positive candidate when none are
/// listed.
backends::MockBackend::GoldVerdicts mock_gold_from(const VerificationDataset& dataset);

}  // namespace dac::eval
