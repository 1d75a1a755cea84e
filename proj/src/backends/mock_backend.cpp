#include "dac/backends/mock_backend.hpp"

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <regex>

#include "dac/error.hpp"
#include "dac/tasks/multiplication.hpp"
#include "dac/tasks/prompts.hpp"

namespace dac::backends {

namespace {

namespace prompts = tasks::prompts;

bool contains(std::string_view text, std::string_view needle) {
  return text.find(needle) != std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Text after the last occurrence of `field`, or nullopt.
std::optional<std::string_view> after_last(std::string_view text, std::string_view field) {
  const auto pos = text.rfind(field);
  if (pos == std::string_view::npos) return std::nullopt;
  return text.substr(pos + field.size());
}

std::string_view first_line(std::string_view text) {
  return text.substr(0, text.find('\n'));
}

// A contradiction verdict counts unless it is one of the bulleted options
// quoted inside a forwarded checker prompt.
bool mentions_contradiction_verdict(std::string_view prompt) {
  for (auto pos = prompt.find(prompts::kOptionB); pos != std::string_view::npos;
       pos = prompt.find(prompts::kOptionB, pos + 1)) {
    if (pos >= 2 && prompt.substr(pos - 2, 2) == "- ") continue;
    return true;
  }
  return false;
}

mpz_class evaluate_sum(const std::string& expr) {
  static const std::regex kTerm(R"((\d+)(?:\*10\^(\d+))?)");
  mpz_class total = 0;
  for (std::sregex_iterator it(expr.begin(), expr.end(), kTerm), end; it != end; ++it) {
    mpz_class value((*it)[1].str(), 10);
    if ((*it)[2].matched) {
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, std::stoul((*it)[2].str()));
      value *= scale;
    }
    total += value;
  }
  return total;
}

template <typename Fn>
bool last_match(const std::string& text, const std::regex& re, Fn&& fn) {
  std::smatch last;
  bool found = false;
  for (std::sregex_iterator it(text.begin(), text.end(), re), end; it != end; ++it) {
    last = *it;
    found = true;
  }
  if (found) fn(last);
  return found;
}

}  // namespace

MockBackend::MockBackend(std::string model_id, GoldVerdicts gold)
    : model_id_(std::move(model_id)), gold_(std::move(gold)) {}

tasks::Choice MockBackend::lookup(std::string_view statement) const {
  auto it = gold_.find(trim(statement));
  return it == gold_.end() ? tasks::Choice::A : it->second;
}

std::string MockBackend::answer(const std::string& prompt) const {
  if (contains(prompt, prompts::kHaluMergeMarker) || contains(prompt, prompts::kFactMergeMarker)) {
    return mentions_contradiction_verdict(prompt) ? "Yes" : "No";
  }

  if (contains(prompt, prompts::kSegmentMarker)) {
    const auto pos = prompt.find(prompts::kParagraphField);
    if (pos == std::string::npos) throw UnrecognizedPrompt("segmentation prompt has no paragraph");
    const auto sentences =
        tasks::split_sentences(std::string_view(prompt).substr(pos + prompts::kParagraphField.size()));
    std::string out;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      out += "#Statement " + std::to_string(i + 1) + "#: " + sentences[i] + "\n";
    }
    return out;
  }

  if (contains(prompt, prompts::kCheckerMarker)) {
    auto statement = after_last(prompt, prompts::kStatementField);
    if (!statement) throw UnrecognizedPrompt("checker prompt has no statement");
    const std::string_view text = trim(*statement);
    return std::string(tasks::option_text(lookup(text))) + "\nRationale: compared \"" +
           std::string(text) + "\" against the document line by line.";
  }

  if (contains(prompt, prompts::kWholeMarker)) {
    auto candidate = after_last(prompt, prompts::kCandidateField);
    if (!candidate) throw UnrecognizedPrompt("whole-text prompt has no text field");
    for (const auto& sentence : tasks::split_sentences(*candidate)) {
      if (lookup(sentence) == tasks::Choice::B) return "Yes";
    }
    return "No";
  }

  if (contains(prompt, prompts::kArticleMarker)) {
    auto claim = after_last(prompt, prompts::kClaimField);
    if (!claim) throw UnrecognizedPrompt("article prompt has no claim");
    std::string sentence(trim(*claim));
    if (sentence.empty() || (sentence.back() != '.' && sentence.back() != '!' &&
                             sentence.back() != '?')) {
      sentence += '.';
    }
    return sentence + " This account draws on the cited evidence. Further reporting is expected.";
  }

  static const std::regex kMerge(R"(compute x=([0-9*^+]+) and y=([0-9*^+]+))");
  std::string merged;
  if (last_match(prompt, kMerge, [&](const std::smatch& m) {
        merged = mpz_class(evaluate_sum(m[1].str()) + evaluate_sum(m[2].str())).get_str(10);
      })) {
    return merged;
  }

  if (contains(prompt, prompts::kSplitMarker)) {
    auto a = after_last(prompt, "\na = ");
    auto b = after_last(prompt, "\nb = ");
    if (!a || !b) throw UnrecognizedPrompt("split prompt has no operands");
    const auto sa = tasks::split_integer(tasks::DigitString(std::string(trim(first_line(*a)))));
    const auto sb = tasks::split_integer(tasks::DigitString(std::string(trim(first_line(*b)))));
    return sa.high.str() + "," + sa.low.str() + "," + sb.high.str() + "," + sb.low.str();
  }

  static const std::regex kProduct(R"(compute (\d+)\s*\*\s*(\d+))");
  std::string product;
  if (last_match(prompt, kProduct, [&](const std::smatch& m) {
        product = tasks::exact_multiply(tasks::DigitString(m[1].str()),
                                        tasks::DigitString(m[2].str()))
                      .str();
      })) {
    return product;
  }

  throw UnrecognizedPrompt("mock backend does not recognize prompt: '" + prompt.substr(0, 80) +
                           "'");
}

BackendResponse MockBackend::complete(const BackendRequest& request) {
  request.validate();
  return {answer(request.prompt()), 0, ResponseSource::mock};
}

}  // namespace dac::backends
