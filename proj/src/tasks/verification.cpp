#include "dac/tasks/verification.hpp"

#include <algorithm>
#include <cctype>

#include "dac/core/solver.hpp"
#include "dac/error.hpp"
#include "dac/tasks/prompts.hpp"

namespace dac::tasks {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_terminator(char c) {
  return c == '.' || c == '!' || c == '?';
}

const core::VerificationPair& pair_of(const core::TaskInput& input) {
  const auto* pair = std::get_if<core::VerificationPair>(&input.payload);
  if (pair == nullptr) throw PreconditionViolation("input is not a verification task");
  return *pair;
}

std::string call(backends::Backend& backend, std::string prompt) {
  return backend.complete(backends::BackendRequest::user(std::move(prompt), backend.model_id()))
      .text;
}

// Positions where `letter` appears as a standalone token.
bool has_standalone_letter(std::string_view text, char letter) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != letter) continue;
    const bool left_ok = i == 0 || !is_alnum(text[i - 1]);
    const bool right_ok = i + 1 == text.size() || !is_alnum(text[i + 1]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

bool has_word(std::string_view lowered, std::string_view word) {
  for (std::size_t pos = lowered.find(word); pos != std::string_view::npos;
       pos = lowered.find(word, pos + 1)) {
    const bool left_ok = pos == 0 || !is_alnum(lowered[pos - 1]);
    const std::size_t end = pos + word.size();
    const bool right_ok = end == lowered.size() || !is_alnum(lowered[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

std::string_view merge_template(core::TaskKind kind) {
  return kind == core::TaskKind::factcheck ? prompts::kFactMerge : prompts::kHaluMerge;
}

}  // namespace

std::string_view to_string(Label label) {
  return label == Label::positive ? "positive" : "negative";
}

Label label_from_string(std::string_view name) {
  if (name == "positive") return Label::positive;
  if (name == "negative") return Label::negative;
  throw PreconditionViolation("label must be \"positive\" or \"negative\", got '" +
                              std::string(name) + "'");
}

std::string_view option_text(Choice choice) {
  return choice == Choice::A ? prompts::kOptionA : prompts::kOptionB;
}

std::vector<Statement> parse_statements(std::string_view response) {
  struct Marker {
    std::size_t begin;
    std::size_t end;
    std::size_t index;
  };
  std::vector<Marker> markers;
  static constexpr std::string_view kOpen = "#Statement ";
  for (std::size_t pos = response.find(kOpen); pos != std::string_view::npos;
       pos = response.find(kOpen, pos + 1)) {
    std::size_t i = pos + kOpen.size();
    std::size_t j = i;
    while (j < response.size() && std::isdigit(static_cast<unsigned char>(response[j]))) ++j;
    if (j == i || j >= response.size() || response[j] != '#') continue;
    std::size_t end = j + 1;
    if (end < response.size() && response[end] == ':') ++end;
    markers.push_back({pos, end, std::stoul(std::string(response.substr(i, j - i)))});
  }
  if (markers.empty()) throw DecomposeParseError("no #Statement i#: markers in response");

  std::vector<Statement> out;
  for (std::size_t m = 0; m < markers.size(); ++m) {
    if (markers[m].index != m + 1) {
      throw DecomposeParseError("statement markers are not numbered 1..k in order");
    }
    const std::size_t stop = m + 1 < markers.size() ? markers[m + 1].begin : response.size();
    auto text = trim(response.substr(markers[m].end, stop - markers[m].end));
    if (text.empty()) {
      throw DecomposeParseError("statement " + std::to_string(m + 1) + " is empty");
    }
    out.push_back({m + 1, std::string(text)});
  }
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_terminator(text[i])) continue;
    std::size_t j = i;
    while (j + 1 < text.size() && is_terminator(text[j + 1])) ++j;
    if (j + 1 == text.size() || is_space(text[j + 1])) {
      auto sentence = trim(text.substr(start, j + 1 - start));
      if (!sentence.empty()) out.emplace_back(sentence);
      start = j + 1;
    }
    i = j;
  }
  auto rest = trim(text.substr(start));
  if (!rest.empty()) out.emplace_back(rest);
  return out;
}

std::vector<Statement> segment_candidate(std::string_view candidate, backends::Backend& backend) {
  if (trim(candidate).empty()) throw PreconditionViolation("candidate is empty");
  const std::string prompt =
      core::render(prompts::kVerDecompose, {{"candidate", std::string(candidate)}});
  return parse_statements(call(backend, prompt));
}

Choice parse_verdict(std::string_view raw) {
  const std::string text = lower(raw);
  const bool phrase_a = text.find("totally aligned") != std::string::npos;
  const bool phrase_b = text.find("contradicts with the document") != std::string::npos;
  if (phrase_a != phrase_b) return phrase_a ? Choice::A : Choice::B;
  if (phrase_a && phrase_b) {
    throw VerdictParseError("response quotes both options: '" + std::string(raw) + "'");
  }
  const bool letter_a = has_standalone_letter(raw, 'A');
  const bool letter_b = has_standalone_letter(raw, 'B');
  if (letter_a != letter_b) return letter_a ? Choice::A : Choice::B;
  throw VerdictParseError(std::string(letter_a ? "response names both options: '"
                                               : "response names neither option: '") +
                          std::string(raw) + "'");
}

bool parse_yes_no(std::string_view raw) {
  const std::string text = lower(trim(raw));
  if (text.rfind("yes", 0) == 0 && (text.size() == 3 || !is_alnum(text[3]))) return true;
  if (text.rfind("no", 0) == 0 && (text.size() == 2 || !is_alnum(text[2]))) return false;
  const bool yes = has_word(text, "yes");
  const bool no = has_word(text, "no");
  if (yes != no) return yes;
  throw VerdictParseError("cannot read a yes/no answer from '" + std::string(raw) + "'");
}

Verdict verify_statement(const Statement& statement, std::string_view document,
                         backends::Backend& backend) {
  if (trim(statement.text).empty() || trim(document).empty()) {
    throw PreconditionViolation("statement and document must be non-empty");
  }
  const std::string prompt = core::render(
      prompts::kVerTackle, {{"document", std::string(document)}, {"statement", statement.text}});
  const std::string response = call(backend, prompt);
  return {statement.index, parse_verdict(response), response};
}

Label or_merge(const std::vector<Verdict>& verdicts) {
  if (verdicts.empty()) throw EmptyInput("no verdicts to merge");
  const bool any_b = std::any_of(verdicts.begin(), verdicts.end(),
                                 [](const Verdict& v) { return v.choice == Choice::B; });
  return any_b ? Label::positive : Label::negative;
}

Label merge_verdicts(const std::vector<Verdict>& verdicts, core::TaskKind kind,
                     backends::Backend& backend) {
  const Label expected = or_merge(verdicts);
  std::vector<std::string> answers;
  answers.reserve(verdicts.size());
  for (const auto& v : verdicts) answers.emplace_back(option_text(v.choice));
  const std::string prompt = core::render(
      merge_template(kind), {{"results", core::assemble_subresults(answers, "[SEP]")}});
  const Label got = parse_yes_no(call(backend, prompt)) ? Label::positive : Label::negative;
  if (got != expected) {
    throw MergeInconsistency("merge answered " + std::string(to_string(got)) +
                             " but the verdicts imply " + std::string(to_string(expected)));
  }
  return got;
}

std::string generate_article(std::string_view claim, std::string_view evidence,
                             backends::Backend& backend) {
  if (trim(claim).empty() || trim(evidence).empty()) {
    throw PreconditionViolation("claim and evidence must be non-empty");
  }
  return call(backend, core::render(prompts::kArticle, {{"claim", std::string(claim)},
                                                        {"evidence", std::string(evidence)}}));
}

VerificationAdapter::VerificationAdapter(core::TaskKind kind)
    : kind_(kind),
      prompts_{std::string(prompts::kVerDecompose), std::string(prompts::kVerTackle),
               std::string(merge_template(kind))} {
  if (kind != core::TaskKind::hallucination && kind != core::TaskKind::factcheck) {
    throw PreconditionViolation("verification adapter needs hallucination or factcheck");
  }
  prompts_.validate({"candidate"}, {"document", "statement"}, {"results"});
}

core::TaskInput VerificationAdapter::make_input(std::string document,
                                                std::string candidate) const {
  return {kind_, core::VerificationPair{std::move(document), std::move(candidate)}};
}

std::size_t VerificationAdapter::problem_size(const core::TaskInput& input) const {
  return split_sentences(pair_of(input).candidate).size();
}

std::string VerificationAdapter::decompose_prompt(const core::TaskInput& input) const {
  return core::render(prompts_.decompose, {{"candidate", pair_of(input).candidate}});
}

core::SubTaskList VerificationAdapter::parse_decomposition(const core::TaskInput& input,
                                                           std::string_view response) const {
  const auto& pair = pair_of(input);
  core::SubTaskList list;
  for (auto& statement : parse_statements(response)) {
    list.items.push_back(make_input(pair.document, std::move(statement.text)));
  }
  return list;
}

std::string VerificationAdapter::tackle_prompt(const core::TaskInput& input) const {
  const auto& pair = pair_of(input);
  return core::render(prompts_.tackle,
                      {{"document", pair.document}, {"statement", pair.candidate}});
}

std::string VerificationAdapter::parse_tackle(const core::TaskInput&,
                                              std::string_view response) const {
  return std::string(option_text(parse_verdict(response)));
}

std::string VerificationAdapter::merge_prompt(const core::TaskInput&, const core::SubTaskList&,
                                              std::span<const std::string>,
                                              std::string_view merged_context) const {
  return core::render(prompts_.merge, {{"results", std::string(merged_context)}});
}

std::string VerificationAdapter::parse_merge(const core::TaskInput&,
                                             std::span<const std::string> answers,
                                             std::string_view response) const {
  std::vector<Verdict> verdicts;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    verdicts.push_back({i + 1, answers[i] == option_text(Choice::B) ? Choice::B : Choice::A, {}});
  }
  const Label expected = or_merge(verdicts);
  const Label got = parse_yes_no(response) ? Label::positive : Label::negative;
  if (got != expected) {
    throw MergeInconsistency("merge answered " + std::string(to_string(got)) +
                             " but the verdicts imply " + std::string(to_string(expected)));
  }
  return std::string(to_string(got));
}

std::string VerificationAdapter::io_prompt(const core::TaskInput& input) const {
  const auto& pair = pair_of(input);
  return core::render(prompts::kVerIo,
                      {{"document", pair.document}, {"candidate", pair.candidate}});
}

std::string VerificationAdapter::cot_prompt(const core::TaskInput& input) const {
  const auto& pair = pair_of(input);
  return core::render(prompts::kVerCot,
                      {{"document", pair.document}, {"candidate", pair.candidate}});
}

std::string VerificationAdapter::parse_final(const core::TaskInput&,
                                             std::string_view response) const {
  return std::string(to_string(parse_yes_no(response) ? Label::positive : Label::negative));
}

std::string VerificationAdapter::ltm_final_prompt(const core::TaskInput&) const {
  return std::string(kind_ == core::TaskKind::factcheck ? prompts::kFactQuestion
                                                        : prompts::kHaluQuestion);
}

}  // namespace dac::tasks
