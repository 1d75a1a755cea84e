#include "dac/eval/experiment.hpp"

#include <exception>
#include <memory>
#include <vector>

#include "dac/core/solver.hpp"
#include "dac/error.hpp"
#include "dac/tasks/multiplication.hpp"
#include "dac/tasks/verification.hpp"

namespace dac::eval {

namespace {

struct Job {
  std::string id;
  core::TaskInput input;
  std::string truth;
};

std::vector<Job> jobs_for(const Dataset& dataset) {
  std::vector<Job> jobs;
  if (const auto* mul = std::get_if<MultiplicationDataset>(&dataset)) {
    for (std::size_t i = 0; i < mul->instances.size(); ++i) {
      const auto& inst = mul->instances[i];
      jobs.push_back({std::to_string(i + 1),
                      tasks::MultiplicationAdapter::make_input(inst.a.str(), inst.b.str()),
                      inst.ground_truth.canonical().str()});
    }
    return jobs;
  }
  const auto& ver = std::get<VerificationDataset>(dataset);
  for (const auto& inst : ver.instances) {
    if (!inst.label) throw DatasetError("instance " + inst.id + " has no label");
    jobs.push_back({inst.id,
                    {ver.kind, core::VerificationPair{inst.document, inst.candidate}},
                    std::string(tasks::to_string(*inst.label))});
  }
  return jobs;
}

std::unique_ptr<core::TaskAdapter> adapter_for(core::TaskKind kind) {
  if (kind == core::TaskKind::multiplication) {
    return std::make_unique<tasks::MultiplicationAdapter>();
  }
  return std::make_unique<tasks::VerificationAdapter>(kind);
}

}  // namespace

MetricReport run_experiment(const Dataset& dataset, core::Strategy strategy,
                            backends::Backend& backend, const core::SolverConfig& config,
                            const ExperimentOptions& options) {
  config.validate();
  if (size(dataset) == 0) throw DatasetError("dataset is empty");
  const core::TaskKind kind = task_kind(dataset);
  const bool classification = kind != core::TaskKind::multiplication;
  const auto adapter = adapter_for(kind);
  const auto jobs = jobs_for(dataset);

  std::vector<InstanceRecord> records(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
  const int threads = static_cast<int>(std::max<std::size_t>(1, options.instance_parallelism));

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1) if (threads > 1)
  for (std::int64_t n = 0; n < count; ++n) {
    const Job& job = jobs[static_cast<std::size_t>(n)];
    InstanceRecord& rec = records[static_cast<std::size_t>(n)];
    rec.id = job.id;
    rec.truth = job.truth;
    try {
      const core::Resolution res = core::run_strategy(strategy, job.input, *adapter, backend, config);
      rec.prediction = res.answer;
      rec.backend_calls = res.trace.size();
    } catch (const Error& e) {
      rec.error_kind = e.kind();
      rec.error_message = e.what();
    } catch (const std::exception& e) {
      rec.error_kind = "InternalError";
      rec.error_message = e.what();
    }
    rec.correct = rec.error_kind.empty() &&
                  (classification ? rec.prediction == rec.truth
                                  : tasks::canonical_digits(rec.prediction) == rec.truth);
    if (!classification) {
      rec.edit_distance = levenshtein(tasks::canonical_digits(rec.prediction), rec.truth);
    }
  }

  MetricReport report;
  report.task_kind = std::string(core::to_string(kind));
  report.strategy = std::string(core::to_string(strategy));
  report.n_instances = jobs.size();
  report.run_metadata = {backend.describe(), options.seed, options.timestamp};
  report.w = config.w;
  report.disentangled = config.disentangled;

  std::size_t correct = 0;
  std::size_t distance_sum = 0;
  Confusion confusion;
  for (const auto& rec : records) {
    const bool failed = !rec.error_kind.empty();
    if (failed) ++report.n_failed;
    if (failed && options.exclude_failures) continue;
    ++report.n_scored;
    if (rec.correct) ++correct;
    if (rec.edit_distance) distance_sum += *rec.edit_distance;
    if (classification) {
      const bool truth_positive = rec.truth == tasks::to_string(tasks::Label::positive);
      // A failure is scored as the wrong label.
      const bool predicted_positive =
          failed ? !truth_positive : rec.prediction == tasks::to_string(tasks::Label::positive);
      if (truth_positive) {
        (predicted_positive ? confusion.tp : confusion.fn)++;
      } else {
        (predicted_positive ? confusion.fp : confusion.tn)++;
      }
    }
  }
  if (report.n_scored > 0) {
    report.exact_match_rate =
        static_cast<double>(correct) / static_cast<double>(report.n_scored);
  }
  if (classification) {
    report.confusion = confusion;
    report.classification = classification_report(confusion);
  } else {
    report.mean_edit_distance =
        report.n_scored == 0
            ? 0.0
            : static_cast<double>(distance_sum) / static_cast<double>(report.n_scored);
  }
  report.instances = std::move(records);
  return report;
}

backends::MockBackend::GoldVerdicts mock_gold_from(const VerificationDataset& dataset) {
  backends::MockBackend::GoldVerdicts gold;
  for (const auto& inst : dataset.instances) {
    if (!inst.contradicting.empty()) {
      for (const auto& s : inst.contradicting) gold[s] = tasks::Choice::B;
    } else if (inst.label == tasks::Label::positive) {
      const auto sentences = tasks::split_sentences(inst.candidate);
      if (!sentences.empty()) gold[sentences.back()] = tasks::Choice::B;
    }
  }
  return gold;
}

}  // namespace dac::eval
