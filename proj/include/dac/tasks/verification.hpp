#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dac/backends/backend.hpp"
#include "dac/core/adapter.hpp"

namespace dac::tasks {

/// positive = the candidate contradicts the document (hallucination or
/// misinformation present).
enum class Label { positive, negative };

std::string_view to_string(Label label);
/// Accepts "positive" / "negative"; throws PreconditionViolation.
Label label_from_string(std::string_view name);

struct Statement {
  std::size_t index = 0;  // 1-based
  std::string text;
  friend bool operator==(const Statement&, const Statement&) = default;
};

/// A = aligned with the document, B = contradicts it.
enum class Choice { A, B };

struct Verdict {
  std::size_t statement_index = 0;
  Choice choice = Choice::A;
  std::string rationale;
};

/// The option line an answer resolves to; used as the canonical sub-answer.
std::string_view option_text(Choice choice);

/// Parses "#Statement i#: ..." markers. Indices must run 1..k in order.
/// Throws DecomposeParseError.
std::vector<Statement> parse_statements(std::string_view response);

/// Splits after '.', '!' or '?' when followed by whitespace or the end,
/// keeping terminators. Trailing text without a terminator is a sentence.
std::vector<std::string> split_sentences(std::string_view text);

/// Throws PreconditionViolation on empty input, DecomposeParseError when the
/// backend output has no statement markers.
std::vector<Statement> segment_candidate(std::string_view candidate, backends::Backend& backend);

/// Option phrases take precedence over bare option letters; an answer that
/// names both options or neither throws VerdictParseError.
Choice parse_verdict(std::string_view raw);

/// Leading or standalone yes/no; throws VerdictParseError otherwise.
bool parse_yes_no(std::string_view raw);

/// Asks the backend about exactly one statement.
Verdict verify_statement(const Statement& statement, std::string_view document,
                         backends::Backend& backend);

/// positive iff any verdict is B. Throws EmptyInput.
Label or_merge(const std::vector<Verdict>& verdicts);

/// Asks the backend the merge question and checks the answer against
/// `or_merge`; throws MergeInconsistency on disagreement.
Label merge_verdicts(const std::vector<Verdict>& verdicts, core::TaskKind kind,
                     backends::Backend& backend);

/// Extends a claim into an article using the evidence. Not used by any
/// evaluation path.
std::string generate_article(std::string_view claim, std::string_view evidence,
                             backends::Backend& backend);

/// Adapter shared by hallucination detection and fact verification; they
/// differ only in the merge question.
class VerificationAdapter final : public core::TaskAdapter {
 public:
  /// `kind` must be hallucination or factcheck.
  explicit VerificationAdapter(core::TaskKind kind);

  core::TaskKind kind() const override { return kind_; }
  const core::PromptTriple& prompts() const override { return prompts_; }
  /// Number of sentences; verification never recurses below one sentence.
  std::size_t problem_size(const core::TaskInput& input) const override;

  std::string decompose_prompt(const core::TaskInput& input) const override;
  core::SubTaskList parse_decomposition(const core::TaskInput& input,
                                        std::string_view response) const override;
  std::string tackle_prompt(const core::TaskInput& input) const override;
  std::string parse_tackle(const core::TaskInput& input,
                           std::string_view response) const override;
  std::string merge_prompt(const core::TaskInput& parent, const core::SubTaskList& subtasks,
                           std::span<const std::string> answers,
                           std::string_view merged_context) const override;
  std::string parse_merge(const core::TaskInput& parent, std::span<const std::string> answers,
                          std::string_view response) const override;

  std::string io_prompt(const core::TaskInput& input) const override;
  std::string cot_prompt(const core::TaskInput& input) const override;
  std::string parse_final(const core::TaskInput& input,
                          std::string_view response) const override;
  std::string ltm_final_prompt(const core::TaskInput& input) const override;

  core::TaskInput make_input(std::string document, std::string candidate) const;

 private:
  core::TaskKind kind_;
  core::PromptTriple prompts_;
};

}  // namespace dac::tasks
