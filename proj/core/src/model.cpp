#include "wzeta/model.hpp"

#include <cmath>

namespace wzeta {

void ModelParams::validate() const {
  for (double v : {gamma, eta, alpha, g_a, g_b, g_c, temperature}) {
    if (!std::isfinite(v)) throw ConfigError("model parameters must be finite");
  }
  if (chain_length < 3) throw ConfigError("chain length must be at least 3");
  if (chain_length % 2 == 0) throw ConfigError("chain length must be odd");
  if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
}

void StatePrep::validate() const {
  if (!std::isfinite(zeta) || !std::isfinite(delta) || !std::isfinite(phi)) {
    throw ConfigError("state parameters must be finite");
  }
  if (zeta < 0.0) throw ConfigError("zeta must be non-negative");
}

char subsystem_tag(Subsystem s) {
  switch (s) {
    case Subsystem::A: return 'A';
    case Subsystem::B: return 'B';
    case Subsystem::C: return 'C';
  }
  return '?';
}

Subsystem parse_subsystem(const std::string& tag) {
  if (tag == "A" || tag == "a") return Subsystem::A;
  if (tag == "B" || tag == "b") return Subsystem::B;
  if (tag == "C" || tag == "c") return Subsystem::C;
  throw ConfigError("unknown partition '" + tag + "'");
}

}  // namespace wzeta
