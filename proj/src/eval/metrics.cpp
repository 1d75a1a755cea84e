#include "dac/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dac/error.hpp"
#include "dac/tasks/multiplication.hpp"

namespace dac::eval {

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t above = row[j + 1];
      row[j + 1] = std::min({above + 1, row[j] + 1, diagonal + (a[i] == b[j] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row.back();
}

double exact_match_accuracy(std::span<const std::string> predictions,
                            std::span<const std::string> truths) {
  if (predictions.size() != truths.size()) {
    throw LengthMismatch("predictions and truths differ in length");
  }
  if (truths.empty()) throw EmptyInput("no predictions to score");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    if (tasks::canonical_digits(predictions[i]) == tasks::canonical_digits(truths[i])) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(truths.size());
}

double f1_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

double g_mean(double precision, double recall) {
  return std::sqrt(precision * recall);
}

ClassificationMetrics classification_report(const Confusion& c) {
  ClassificationMetrics m;
  auto ratio = [&](std::size_t num, std::size_t den) {
    if (den == 0) {
      m.degenerate = true;
      return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
  };
  m.precision = ratio(c.tp, c.tp + c.fp);
  m.recall = ratio(c.tp, c.tp + c.fn);
  m.accuracy = ratio(c.tp + c.tn, c.total());
  if (m.precision + m.recall == 0.0) m.degenerate = true;
  m.f1 = f1_score(m.precision, m.recall);
  m.g_mean = g_mean(m.precision, m.recall);
  return m;
}

}  // namespace dac::eval
