#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace dac::eval {

/// Unit-cost insert/delete/substitute distance, O(|a|·|b|) time and
/// O(min(|a|,|b|)) memory.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Fraction of pairs equal after leading zeros are stripped. Throws
/// LengthMismatch or EmptyInput.
double exact_match_accuracy(std::span<const std::string> predictions,
                            std::span<const std::string> truths);

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct ClassificationMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  double g_mean = 0.0;
  /// Set when a ratio had a zero denominator and was reported as 0.
  bool degenerate = false;
};

/// Harmonic mean; 0 when both are 0.
double f1_score(double precision, double recall);
/// Geometric mean of precision and recall.
double g_mean(double precision, double recall);

ClassificationMetrics classification_report(const Confusion& confusion);

}  // namespace dac::eval
