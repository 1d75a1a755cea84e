#pragma once

#include <map>
#include <string>

#include "dac/backends/backend.hpp"
#include "dac/tasks/verification.hpp"

namespace dac::backends {

/// Deterministic stand-in for a language model that answers every prompt
/// grammar of the bundled task adapters exactly:
///
///  - multiplication: splits, products and shift/add merges are computed
///    with exact integer arithmetic;
///  - segmentation: splits on sentence terminators and emits
///    "#Statement i#: ..." lines;
///  - statement checks: looks the statement up in the gold verdicts given at
///    construction (unknown statements are aligned) and appends a rationale;
///  - merge and whole-text questions: "Yes" iff a contradiction verdict is
///    present.
///
/// Responses are a pure function of the request.
class MockBackend final : public Backend {
 public:
  using GoldVerdicts = std::map<std::string, tasks::Choice, std::less<>>;

  explicit MockBackend(std::string model_id = "mock-exact", GoldVerdicts gold = {});

  BackendResponse complete(const BackendRequest& request) override;
  std::string model_id() const override { return model_id_; }
  std::string describe() const override { return "mock:" + model_id_; }

  /// Answer text only; throws UnrecognizedPrompt.
  std::string answer(const std::string& prompt) const;

  const GoldVerdicts& gold() const noexcept { return gold_; }

 private:
  tasks::Choice lookup(std::string_view statement) const;

  std::string model_id_;
  GoldVerdicts gold_;
};

}  // namespace dac::backends
