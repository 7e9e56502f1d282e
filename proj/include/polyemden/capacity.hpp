#pragma once

// Test-function capacities for the polyharmonic Liouville estimates:
//
//   Delta^s h(rho/R) = sum_{i=1}^{2s} c_i h^(i)(rho/R) / (R^i rho^(2s-i)),
//   cap_s(phi, r)    = int |Delta^s phi|^r / phi^(r-1),   phi = psi^gamma(rho/R).

#include <functional>
#include <utility>
#include <vector>

#include "polyemden/classify.hpp"
#include "polyemden/params.hpp"
#include "polyemden/rational.hpp"

namespace polyemden {

struct CoeffTable {
  int s = 1;
  int N = 3;
  std::vector<Rational> coeffs;  ///< coeffs[i - 1] = c_i, i = 1..2s

  const Rational& c(int i) const { return coeffs.at(static_cast<std::size_t>(i - 1)); }
};

/// Exact table for Delta^s by repeated application of Delta f = f'' + (N-1) f'/t.
CoeffTable coeff_recursion(int s, int N);

/// Smooth bump: psi = 1 on [0, 1], psi = 0 on [2, inf),
/// psi(x) = g(2-x) / (g(2-x) + g(x-1)), g(y) = exp(-1/y) for y > 0.
double bump(double x);
/// psi, psi', ..., psi^(order) at x.
std::vector<double> bump_derivatives(double x, int order);

struct CutoffSpec {
  double gamma = 5.0;
  int budget = 8;  ///< highest derivative order available
};

/// ceil(max(2 alpha p', 2 beta q')) + 1; needs p, q > 1.
double default_gamma(const ProblemParams& params);

enum class DerivativePath { Composition, Direct };

/// h = psi^gamma and h', ..., h^(order) at x.  Composition expands
/// h^(i) = sum_K c_K psi^(k_1) ... psi^(k_i) psi^(gamma - i) over multisets K;
/// Direct differentiates psi^gamma as a truncated Taylor series.
std::vector<double> cutoff_derivatives(const CutoffSpec& spec, int order, double x,
                                       DerivativePath path = DerivativePath::Composition);

/// Delta^s phi at rho for phi = psi^gamma(rho/R).
double laplacian_power_cutoff(const CutoffSpec& spec, int s, double rho, double R, int N);

/// omega_{N-1} = 2 pi^(N/2) / Gamma(N/2).
double sphere_area(int N);

struct QuadratureSpec {
  int panels = 64;
  int points = 8;
};

/// omega_{N-1} int_R^{2R} |Delta^s phi|^r phi^(1-r) rho^(N-1) d rho; requires gamma > 2 s r.
double capacity_integral(const CutoffSpec& spec, int s, double r_exp, double R, int N, const QuadratureSpec& quad = {});

struct CapacityReport {
  std::vector<double> R_values;
  std::vector<double> cap_values;
  double fitted_slope = 0.0;
  double intercept = 0.0;  ///< log-space
  double theoretical_slope = 0.0;
  double max_relative_fit_residual = 0.0;
};

/// Least-squares slope of log cap against log R; >= 4 radii spanning >= 2 decades.
CapacityReport decay_slope(const std::vector<double>& R_values, const std::vector<double>& cap_values,
                           double theoretical_slope);

/// cap_s(phi, r) over the given radii with theoretical slope N - 2 s r.
CapacityReport capacity_sweep(const CutoffSpec& spec, int s, double r_exp, int N, const std::vector<double>& R_values,
                              const QuadratureSpec& quad = {});

/// ((2 beta q + N + 2 alpha p q - N p q)/(pq-1), (2 alpha p + N + 2 beta p q - N p q)/(pq-1)).
std::pair<double, double> nonexistence_exponent(const ProblemParams& params);
std::pair<Rational, Rational> nonexistence_exponent(const ClassifyInput& in);

using RadialFunction = std::function<double(double)>;

/// The five members of the Hoelder chain
///   A = int v^q phi <= B = int u (-Delta)^alpha phi
///     <= C = (int u^p phi)^(1/p) cap_alpha(phi, p')^(1/p')
///     <= D = (int v (-Delta)^beta phi)^(1/p) cap_alpha^(1/p')
///     <= E = (int v^q phi)^(1/pq) cap_beta(phi, q')^(1/pq') cap_alpha^(1/p').
struct HolderChainReport {
  double A = 0.0, B = 0.0, C = 0.0, D = 0.0, E = 0.0;
  double cap_alpha = 0.0;
  double cap_beta = 0.0;
  bool holds[4] = {false, false, false, false};
  bool ok = false;
  double rel_tol = 1e-9;
};

HolderChainReport holder_chain_check(const RadialFunction& u, const RadialFunction& v, const ProblemParams& params,
                                     double R, const CutoffSpec& spec, const QuadratureSpec& quad = {});

}  // namespace polyemden
