#pragma once

#include <string>

// Ginzburg-Landau normal-metal / superconductor interface in normalized
// variables: lengths in nm, temperatures in K, u = Psi / Psi0.

namespace glinfo {

struct CoherenceInput {
  double xi0 = 0.0;  // nm
  double T = 0.0;    // K
  double Tc = 0.0;   // K
};

/// xi(T) = xi0 / sqrt(1 - T/Tc). Throws DivergenceError for T >= Tc.
double coherence_length(const CoherenceInput& inp);

/// u(x) = tanh(x / (sqrt2 xi)).
double order_parameter(double x, double xi);

class DistributionKind {
 public:
  enum class Family { SemiInfinite, Truncated };

  static DistributionKind semi_infinite() { return DistributionKind(); }
  /// P ~ tanh^2 normalized on [0, n xi].
  static DistributionKind truncated(double n = 5.0);

  Family family() const { return family_; }
  /// Cutoff multiple n; only meaningful for Truncated.
  double cutoff_multiple() const { return n_; }
  bool is_truncated() const { return family_ == Family::Truncated; }
  std::string name() const;

  friend bool operator==(const DistributionKind&, const DistributionKind&) = default;

 private:
  DistributionKind() = default;
  Family family_ = Family::SemiInfinite;
  double n_ = 0.0;
};

class DistributionSpec {
 public:
  DistributionSpec(DistributionKind kind, double xi);

  static DistributionSpec semi_infinite(double xi) {
    return {DistributionKind::semi_infinite(), xi};
  }
  static DistributionSpec truncated(double xi, double n = 5.0) {
    return {DistributionKind::truncated(n), xi};
  }

  const DistributionKind& kind() const { return kind_; }
  double xi() const { return xi_; }
  /// Upper end of the support; +inf for the semi-infinite density.
  double support_end() const;

 private:
  DistributionKind kind_;
  double xi_;
};

/// Normalization of the truncated density: [sqrt2 xi (n/sqrt2 - tanh(n/sqrt2))]^-1.
double truncation_norm(double xi, double n);

/// Probability density in nm^-1. Throws DomainError outside the support.
double pdf(const DistributionSpec& spec, double x);
/// ln P(x), evaluated without forming P so it stays finite deep in the tail.
/// -inf at x = 0 for the truncated density.
double log_pdf(const DistributionSpec& spec, double x);
/// d ln P / dx, finite wherever P is positive.
double log_pdf_derivative(const DistributionSpec& spec, double x);
/// dP/dx.
double pdf_derivative(const DistributionSpec& spec, double x);
/// d^2P/dx^2.
double pdf_second_derivative(const DistributionSpec& spec, double x);

/// F_surf / F_bulk = (4 sqrt2 / 3) xi, in nm.
double surface_to_bulk_ratio(double xi);
/// I_F = (4/3)^3 r^-2 for the surface/bulk ratio r.
double fisher_from_energy_ratio(double r);

}  // namespace glinfo
