#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace polyemden {

/// Solves A x = b in place by Gaussian elimination with partial pivoting.
/// Returns false when a pivot falls below `rel_pivot` times the largest entry.
bool solve_dense(std::vector<std::vector<double>> A, std::vector<double>& b, double rel_pivot = 1e-14);

/// Residual map; nullopt signals that the evaluation failed (e.g. IVP blow-up).
using ResidualMap = std::function<std::optional<std::vector<double>>(const std::vector<double>&)>;

struct DampedNewtonOptions {
  double tol = 1e-8;           ///< max-norm residual acceptance
  double target = 1e-10;       ///< keep iterating below tol until this or stagnation
  int max_iter = 60;
  double fd_rel = 1e-6;        ///< forward-difference step is fd_rel * (1 + |x_i|)
  int max_backtracks = 20;     ///< step halvings per iteration
};

enum class NewtonFailure { None, InitialEvaluation, SingularJacobian, LineSearch, IterationCap };

std::string to_string(NewtonFailure f);

struct DampedNewtonResult {
  bool converged = false;
  NewtonFailure failure = NewtonFailure::None;
  std::vector<double> x;
  std::vector<double> residual;
  double residual_norm = 0.0;
  int iterations = 0;
};

/// Damped Newton with a forward-difference Jacobian and backtracking by halving.
DampedNewtonResult damped_newton(const ResidualMap& F, std::vector<double> x0, const DampedNewtonOptions& opts = {});

double max_norm(const std::vector<double>& v);

}  // namespace polyemden
