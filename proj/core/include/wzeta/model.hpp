#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace wzeta {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Environment chain and qubit-chain coupling. Natural units: hbar = k_B = 1.
struct ModelParams {
  double gamma = 1.0;
  double eta = 1.0;
  double alpha = 1.0;
  double g_a = 0.1;
  double g_b = 0.2;
  double g_c = 0.3;
  int chain_length = 51;
  double temperature = 0.5;

  // Throws ConfigError describing the first violated invariant.
  void validate() const;

  int mode_count() const { return (chain_length - 1) / 2; }
  double beta() const { return 1.0 / temperature; }
};

// Preparation of |W_zeta> = (|100> + e^{i phi} sqrt(zeta)|010> + e^{i delta} sqrt(zeta+1)|001>) / sqrt(2 zeta + 2).
struct StatePrep {
  double zeta = 1.0;
  double delta = 0.0;
  double phi = 0.0;

  void validate() const;
};

/// Computational basis label mu in 1..8; mu - 1 = 4 b_A + 2 b_B + b_C.
class BasisIndex {
 public:
  constexpr explicit BasisIndex(int mu) : mu_(mu) {
    if (mu < 1 || mu > 8) throw std::out_of_range("basis index must be in 1..8");
  }
  constexpr int value() const { return mu_; }
  constexpr int offset() const { return mu_ - 1; }
  friend constexpr bool operator==(BasisIndex, BasisIndex) = default;

 private:
  int mu_;
};

/// Positive momentum mode k in 1..M, M = (N - 1) / 2.
class ModeIndex {
 public:
  ModeIndex(int k, const ModelParams& params) : k_(k) {
    if (k < 1 || k > params.mode_count()) throw std::out_of_range("mode index must be in 1..M");
  }
  int value() const { return k_; }

 private:
  int k_;
};

enum class Subsystem { A = 0, B = 1, C = 2 };

inline constexpr std::array<Subsystem, 3> kAllSubsystems{Subsystem::A, Subsystem::B, Subsystem::C};

// Bit mask of the subsystem's qubit inside a 0-based basis offset (A is the most significant bit).
constexpr int subsystem_mask(Subsystem s) { return 4 >> static_cast<int>(s); }

char subsystem_tag(Subsystem s);
Subsystem parse_subsystem(const std::string& tag);

}  // namespace wzeta
