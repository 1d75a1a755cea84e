#include "dac/bsi/gate_mlp.hpp"

#include <algorithm>

#include "dac/error.hpp"

namespace dac::bsi {

GateMLP GateMLP::make_and(std::size_t fan_in) {
  if (fan_in < 1) throw BadInput("AND gate needs fan-in >= 1");
  return {GateKind::AND, fan_in, std::vector<double>(fan_in, 1.0),
          1.0 - static_cast<double>(fan_in), false};
}

GateMLP GateMLP::make_or(std::size_t fan_in) {
  if (fan_in < 1) throw BadInput("OR gate needs fan-in >= 1");
  return {GateKind::OR, fan_in, std::vector<double>(fan_in, -1.0), 1.0, true};
}

GateMLP GateMLP::make_not() {
  return {GateKind::NOT, 1, {-1.0}, 1.0, false};
}

double gate_mlp_forward(const GateMLP& gate, std::span<const double> x) {
  if (x.size() != gate.fan_in || gate.weights.size() != gate.fan_in) {
    throw BadInput("gate expects " + std::to_string(gate.fan_in) + " inputs, got " +
                   std::to_string(x.size()));
  }
  double pre = gate.bias;
  for (std::size_t i = 0; i < x.size(); ++i) pre += gate.weights[i] * x[i];
  const double relu = std::max(0.0, pre);
  return gate.complement ? 1.0 - relu : relu;
}

int gate_mlp_eval(const GateMLP& gate, std::span<const int> x) {
  std::vector<double> real;
  real.reserve(x.size());
  for (int bit : x) {
    if (bit != 0 && bit != 1) throw BadInput("gate input must be 0 or 1");
    real.push_back(static_cast<double>(bit));
  }
  const double y = gate_mlp_forward(gate, real);
  if (y != 0.0 && y != 1.0) {
    throw PreconditionViolation("gate unit produced non-binary output " + std::to_string(y));
  }
  return static_cast<int>(y);
}

int gate_truth(GateKind kind, std::span<const int> x) {
  switch (kind) {
    case GateKind::AND:
      return std::all_of(x.begin(), x.end(), [](int b) { return b == 1; }) ? 1 : 0;
    case GateKind::OR:
      return std::any_of(x.begin(), x.end(), [](int b) { return b == 1; }) ? 1 : 0;
    case GateKind::NOT:
      if (x.size() != 1) throw BadInput("NOT takes exactly one input");
      return x[0] == 1 ? 0 : 1;
  }
  return 0;
}

}  // namespace dac::bsi
