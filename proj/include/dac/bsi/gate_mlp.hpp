#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dac::bsi {

enum class GateKind { AND, OR, NOT };

/// A boolean gate realized as one rectifier unit:
///   y = relu(w . x + bias)         (complement = false)
///   y = 1 - relu(w . x + bias)     (complement = true)
///
/// AND uses w = 1, bias = 1 - h. NOT uses w = -1, bias = 1. OR uses the
/// complemented unit with w = -1, bias = 1, i.e. 1 - relu(1 - sum(x)); the
/// variant with bias h + 1 yields -h on the all-zero input and is not a
/// valid OR.
struct GateMLP {
  GateKind kind = GateKind::AND;
  std::size_t fan_in = 1;
  std::vector<double> weights;
  double bias = 0.0;
  bool complement = false;

  static GateMLP make_and(std::size_t fan_in);
  static GateMLP make_or(std::size_t fan_in);
  static GateMLP make_not();
};

/// Raw unit output; throws BadInput on a size mismatch.
double gate_mlp_forward(const GateMLP& gate, std::span<const double> x);

/// Evaluates on a 0-1 input. Throws BadInput on non-binary entries or a
/// size mismatch.
int gate_mlp_eval(const GateMLP& gate, std::span<const int> x);

/// Reference boolean semantics of `kind` on a 0-1 input.
int gate_truth(GateKind kind, std::span<const int> x);

}  // namespace dac::bsi
