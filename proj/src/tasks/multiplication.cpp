#include "dac/tasks/multiplication.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "dac/error.hpp"
#include "dac/tasks/prompts.hpp"

namespace dac::tasks {

namespace {

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

const core::MultiplyOperands& operands(const core::TaskInput& input) {
  const auto* ops = std::get_if<core::MultiplyOperands>(&input.payload);
  if (ops == nullptr) throw PreconditionViolation("input is not a multiplication task");
  return *ops;
}

// Sum of non-negative decimal strings, schoolbook carry.
std::string add_decimal(std::string_view x, std::string_view y) {
  std::string out;
  out.reserve(std::max(x.size(), y.size()) + 1);
  int carry = 0;
  auto i = static_cast<std::ptrdiff_t>(x.size()) - 1;
  auto j = static_cast<std::ptrdiff_t>(y.size()) - 1;
  while (i >= 0 || j >= 0 || carry != 0) {
    int sum = carry;
    if (i >= 0) sum += x[static_cast<std::size_t>(i--)] - '0';
    if (j >= 0) sum += y[static_cast<std::size_t>(j--)] - '0';
    out.push_back(static_cast<char>('0' + sum % 10));
    carry = sum / 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string shifted(const DigitString& value, std::size_t exponent) {
  return value.str() + std::string(exponent, '0');
}

std::string term(const std::string& value, std::size_t exponent) {
  if (exponent == 0) return value;
  return value + "*10^" + std::to_string(exponent);
}

std::vector<std::string> digit_runs(std::string_view text) {
  std::vector<std::string> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] >= '0' && text[i] <= '9') {
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      runs.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return runs;
}

}  // namespace

DigitString::DigitString(std::string digits) : digits_(std::move(digits)) {
  if (digits_.empty() || !all_digits(digits_)) {
    throw NonDigitInput("not a digit string: '" + digits_ + "'");
  }
}

DigitString DigitString::canonical() const {
  return DigitString(canonical_digits(digits_));
}

std::string canonical_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return digits.empty() ? std::string() : "0";
  return std::string(digits.substr(first));
}

SplitPair split_integer(const DigitString& s) {
  if (s.size() < 2) {
    throw TooShort("cannot split '" + s.str() + "': need at least 2 digits");
  }
  const std::size_t high_len = (s.size() + 1) / 2;
  return {DigitString(s.str().substr(0, high_len)), DigitString(s.str().substr(high_len))};
}

std::vector<PartialProduct> build_subtasks(const DigitString& a, const DigitString& b) {
  const SplitPair sa = split_integer(a);
  const SplitPair sb = split_integer(b);
  const std::size_t lb = sa.low_len();
  const std::size_t ld = sb.low_len();
  return {
      {sa.high, sb.high, lb + ld},
      {sa.high, sb.low, lb},
      {sa.low, sb.high, ld},
      {sa.low, sb.low, 0},
  };
}

DigitString merge_products(const DigitString& ac, const DigitString& ad,
                           const DigitString& bc, const DigitString& bd, std::size_t lb,
                           std::size_t ld) {
  const std::string x = add_decimal(shifted(ac, lb + ld), shifted(ad, lb));
  const std::string y = add_decimal(shifted(bc, ld), bd.str());
  return DigitString(canonical_digits(add_decimal(x, y)));
}

std::size_t problem_size(const DigitString& a, const DigitString& b) {
  return std::min(a.size(), b.size());
}

DigitString exact_multiply(const DigitString& a, const DigitString& b) {
  const mpz_class product = mpz_class(a.str(), 10) * mpz_class(b.str(), 10);
  return DigitString(product.get_str(10));
}

std::vector<MultiplicationInstance> gen_instances(std::size_t count, std::size_t digits,
                                                  std::uint64_t seed) {
  if (count < 1) throw PreconditionViolation("count must be at least 1");
  if (digits < 1) throw PreconditionViolation("digits must be at least 1");
  // mt19937_64's output sequence is fixed by the standard; the modulo
  // mapping keeps instances identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto operand = [&] {
    std::string s(digits, '0');
    s[0] = static_cast<char>('1' + rng() % 9);
    for (std::size_t i = 1; i < digits; ++i) s[i] = static_cast<char>('0' + rng() % 10);
    return DigitString(std::move(s));
  };
  std::vector<MultiplicationInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    DigitString a = operand();
    DigitString b = operand();
    DigitString truth = exact_multiply(a, b);
    out.push_back({std::move(a), std::move(b), std::move(truth)});
  }
  return out;
}

std::string extract_final_number(std::string_view text) {
  auto runs = digit_runs(text);
  if (runs.empty()) {
    throw AnswerParseError("no number in response: '" + std::string(text.substr(0, 80)) + "'");
  }
  return canonical_digits(runs.back());
}

MultiplicationAdapter::MultiplicationAdapter()
    : prompts_{std::string(prompts::kMulDecompose), std::string(prompts::kMulTackle),
               std::string(prompts::kMulMerge)} {
  prompts_.validate({"a", "b"}, {"a", "b"}, {"results", "x", "y"});
}

core::TaskInput MultiplicationAdapter::make_input(std::string a, std::string b) {
  return {core::TaskKind::multiplication, core::MultiplyOperands{std::move(a), std::move(b)}};
}

std::size_t MultiplicationAdapter::problem_size(const core::TaskInput& input) const {
  const auto& ops = operands(input);
  return std::min(ops.a.size(), ops.b.size());
}

std::string MultiplicationAdapter::decompose_prompt(const core::TaskInput& input) const {
  const auto& ops = operands(input);
  return core::render(prompts_.decompose, {{"a", ops.a}, {"b", ops.b}});
}

core::SubTaskList MultiplicationAdapter::parse_decomposition(const core::TaskInput& input,
                                                             std::string_view response) const {
  const auto& ops = operands(input);
  const auto runs = digit_runs(response);
  if (runs.size() != 4) {
    throw DecomposeParseError("expected four digit strings in split response, got " +
                              std::to_string(runs.size()));
  }
  if (runs[0] + runs[1] != ops.a || runs[2] + runs[3] != ops.b) {
    throw DecomposeParseError("split halves do not reassemble the operands " + ops.a + ", " +
                              ops.b);
  }
  core::SubTaskList list;
  list.items = {make_input(runs[0], runs[2]), make_input(runs[0], runs[3]),
                make_input(runs[1], runs[2]), make_input(runs[1], runs[3])};
  return list;
}

std::string MultiplicationAdapter::tackle_prompt(const core::TaskInput& input) const {
  const auto& ops = operands(input);
  return core::render(prompts_.tackle, {{"a", ops.a}, {"b", ops.b}});
}

std::string MultiplicationAdapter::parse_tackle(const core::TaskInput&,
                                                std::string_view response) const {
  return extract_final_number(response);
}

std::string MultiplicationAdapter::merge_prompt(const core::TaskInput&,
                                                const core::SubTaskList& subtasks,
                                                std::span<const std::string> answers,
                                                std::string_view merged_context) const {
  if (subtasks.items.size() != 4 || answers.size() != 4) {
    throw PreconditionViolation("multiplication merge needs exactly four partial products");
  }
  // Items are (A,C), (A,D), (B,C), (B,D): |D| from item 1, |B| from item 2.
  const std::size_t ld = operands(subtasks.items[1]).b.size();
  const std::size_t lb = operands(subtasks.items[2]).a.size();
  const std::string x = term(answers[0], lb + ld) + "+" + term(answers[1], lb);
  const std::string y = term(answers[2], ld) + "+" + term(answers[3], 0);
  return core::render(prompts_.merge,
                      {{"results", std::string(merged_context)}, {"x", x}, {"y", y}});
}

std::string MultiplicationAdapter::parse_merge(const core::TaskInput&,
                                               std::span<const std::string>,
                                               std::string_view response) const {
  return extract_final_number(response);
}

std::string MultiplicationAdapter::io_prompt(const core::TaskInput& input) const {
  const auto& ops = operands(input);
  return core::render(prompts::kMulIo, {{"a", ops.a}, {"b", ops.b}});
}

std::string MultiplicationAdapter::cot_prompt(const core::TaskInput& input) const {
  const auto& ops = operands(input);
  return core::render(prompts::kMulCot, {{"a", ops.a}, {"b", ops.b}});
}

std::string MultiplicationAdapter::parse_final(const core::TaskInput&,
                                               std::string_view response) const {
  return extract_final_number(response);
}

std::string MultiplicationAdapter::ltm_final_prompt(const core::TaskInput& input) const {
  return io_prompt(input);
}

}  // namespace dac::tasks
