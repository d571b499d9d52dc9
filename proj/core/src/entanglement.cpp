#include "wzeta/entanglement.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace wzeta {

double NegativityTriple::operator[](Subsystem s) const {
  switch (s) {
    case Subsystem::A: return n_a_bc;
    case Subsystem::B: return n_b_ca;
    case Subsystem::C: return n_c_ab;
  }
  return 0.0;
}

double& NegativityTriple::operator[](Subsystem s) {
  switch (s) {
    case Subsystem::B: return n_b_ca;
    case Subsystem::C: return n_c_ab;
    default: return n_a_bc;
  }
}

Matrix8 partial_transpose(const Matrix8& rho, Subsystem s) {
  const std::size_t mask = static_cast<std::size_t>(subsystem_mask(s));
  Matrix8 out;
  for (std::size_t r = 0; r < Matrix8::kDim; ++r) {
    for (std::size_t c = 0; c < Matrix8::kDim; ++c) {
      const std::size_t src_r = (r & ~mask) | (c & mask);
      const std::size_t src_c = (c & ~mask) | (r & mask);
      out(r, c) = rho(src_r, src_c);
    }
  }
  return out;
}

double trace_norm(const Matrix8& h) {
  double sum = 0.0;
  for (double v : hermitian_eigenvalues(h)) sum += std::abs(v);
  return sum;
}

double negativity(const DensityMatrix& rho, Subsystem s) {
  return 0.5 * (trace_norm(partial_transpose(rho, s)) - 1.0);
}

NegativityTriple negativities(const DensityMatrix& rho) {
  NegativityTriple n;
  for (Subsystem s : kAllSubsystems) n[s] = negativity(rho, s);
  return n;
}

namespace {

using C = std::complex<double>;

// e^{-i(delta+phi)} sqrt(e^{2i(delta+phi)} * radicand), principal branch.
C phased_root(double phase_sum, double radicand) {
  return std::polar(1.0, -phase_sum) * std::sqrt(std::polar(1.0, 2.0 * phase_sum) * radicand);
}

double abs_root(double radicand) { return std::abs(std::sqrt(C(radicand, 0.0))); }

C negativity_a_bc(double z, double ph, double f23, double f25, double f35) {
  const double q = std::sqrt(z * (z + 1.0));
  const double p32 = std::pow(z + 1.0, 1.5);
  const double lead = q * (2.0 * z + 1.0);
  const C root = phased_root(ph, z * (z + 1.0) * (z + 1.0) * (4.0 * z * (z + 1.0) * f23 + 1.0));
  const C bracket = -z * std::abs(lead - root) - std::abs(lead - root) - z * std::abs(lead + root) -
                    std::abs(lead + root) - 4.0 * q * p32 * abs_root((z + 1.0) * f25 + z * f35) +
                    4.0 * z * q * p32 + 2.0 * q * p32;
  return -bracket / (8.0 * std::pow(z + 1.0, 2.5) * q);
}

C negativity_b_ca(double z, double ph, double f23, double f25, double f35) {
  const double q = std::sqrt(z * (z + 1.0));
  const double p32 = std::pow(z + 1.0, 1.5);
  const double lead = std::sqrt(z) * (z + 1.0) * (z + 2.0);
  const C root = phased_root(ph, z * (z + 1.0) * (z + 1.0) * (z * z + 4.0 * (z + 1.0) * f25));
  const C bracket = -z * std::abs(lead - root) - std::abs(lead - root) - z * std::abs(lead + root) -
                    std::abs(lead + root) -
                    4.0 * std::sqrt(z) * q * p32 * abs_root((z + 1.0) * f23 + f35) +
                    2.0 * z * q * p32 + 4.0 * q * p32;
  return -bracket / (8.0 * std::pow(z + 1.0, 2.5) * q);
}

C negativity_c_ab(double z, double ph, double f23, double f25, double f35) {
  const double q = std::sqrt(z * (z + 1.0));
  const double p32 = std::pow(z + 1.0, 1.5);
  const double lead = std::sqrt(z) * (z + 1.0) * (z + 1.0);
  const C root = phased_root(ph, z * (z + 1.0) * (z + 1.0) * (4.0 * z * f35 + (z - 2.0) * z + 1.0));
  const double tail = abs_root(z * f23 + f25);
  const C bracket = -std::abs(lead - root) - std::abs(lead + root) - 4.0 * z * q * tail -
                    4.0 * q * tail + 2.0 * q * p32;
  return -bracket / (8.0 * p32 * q);
}

}  // namespace

double closed_form_negativity(const StatePrep& prep, const FactorTriple& factors, Subsystem s) {
  const double z = prep.zeta;
  if (!(z > 0.0)) throw std::domain_error("closed-form negativity is singular at zeta = 0");
  const double ph = prep.delta + prep.phi;
  const double f23 = std::norm(factors.f23);
  const double f25 = std::norm(factors.f25);
  const double f35 = std::norm(factors.f35);

  C value;
  switch (s) {
    case Subsystem::A: value = negativity_a_bc(z, ph, f23, f25, f35); break;
    case Subsystem::B: value = negativity_b_ca(z, ph, f23, f25, f35); break;
    case Subsystem::C: value = negativity_c_ab(z, ph, f23, f25, f35); break;
  }
  if (!(std::abs(value.imag()) < kImaginaryResidueTolerance)) {
    std::ostringstream msg;
    msg << "closed-form negativity " << subsystem_tag(s) << " has imaginary residue " << value.imag();
    throw BranchError(msg.str());
  }
  return value.real();
}

}  // namespace wzeta
