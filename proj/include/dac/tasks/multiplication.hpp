#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dac/core/adapter.hpp"

namespace dac::tasks {

/// Non-empty string of decimal digits. Leading zeros are kept (split halves
/// such as "05" need their length); `canonical()` strips them.
class DigitString {
 public:
  /// Throws NonDigitInput.
  explicit DigitString(std::string digits);

  const std::string& str() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  DigitString canonical() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::string digits_;
};

/// Strips leading zeros, keeping a lone "0". Input must be all digits.
std::string canonical_digits(std::string_view digits);

struct SplitPair {
  DigitString high;
  DigitString low;
  std::size_t low_len() const noexcept { return low.size(); }
};

/// Splits down the middle with the extra digit of odd lengths going to the
/// high part. Throws TooShort when |s| < 2.
SplitPair split_integer(const DigitString& s);

/// One of the four partial products of (A·10^lb + B)(C·10^ld + D).
struct PartialProduct {
  DigitString left;
  DigitString right;
  /// Power of ten the product is shifted by in the merge.
  std::size_t shift = 0;
};

/// The pair products A·C, A·D, B·C, B·D in that order. Throws TooShort.
std::vector<PartialProduct> build_subtasks(const DigitString& a, const DigitString& b);

/// ac·10^(lb+ld) + ad·10^lb + bc·10^ld + bd in canonical form.
DigitString merge_products(const DigitString& ac, const DigitString& ad,
                           const DigitString& bc, const DigitString& bd,
                           std::size_t lb, std::size_t ld);

/// min(|a|, |b|).
std::size_t problem_size(const DigitString& a, const DigitString& b);

/// Exact product in canonical form.
DigitString exact_multiply(const DigitString& a, const DigitString& b);

struct MultiplicationInstance {
  DigitString a;
  DigitString b;
  DigitString ground_truth;
};

/// `count` pairs of `digits`-digit operands with nonzero leading digits,
/// reproducible for a fixed seed on every platform.
std::vector<MultiplicationInstance> gen_instances(std::size_t count, std::size_t digits,
                                                  std::uint64_t seed);

/// Last maximal run of digits in `text`, canonicalized. Throws
/// AnswerParseError when the text has no digits.
std::string extract_final_number(std::string_view text);

class MultiplicationAdapter final : public core::TaskAdapter {
 public:
  MultiplicationAdapter();

  core::TaskKind kind() const override { return core::TaskKind::multiplication; }
  const core::PromptTriple& prompts() const override { return prompts_; }
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

  static core::TaskInput make_input(std::string a, std::string b);

 private:
  core::PromptTriple prompts_;
};

}  // namespace dac::tasks
