#include "polyemden/newton.hpp"

#include <algorithm>
#include <cmath>

namespace polyemden {

bool solve_dense(std::vector<std::vector<double>> A, std::vector<double>& b, double rel_pivot) {
  const std::size_t n = b.size();
  double scale = 0.0;
  for (const auto& row : A)
    for (double a : row) scale = std::max(scale, std::abs(a));
  if (scale == 0.0 || !std::isfinite(scale)) return false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    }
    if (std::abs(A[piv][col]) <= rel_pivot * scale) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = A[r][col] / A[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= A[i][c] * b[c];
    b[i] = s / A[i][i];
  }
  return true;
}

double max_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string to_string(NewtonFailure f) {
  switch (f) {
    case NewtonFailure::None: return "none";
    case NewtonFailure::InitialEvaluation: return "divergence at the initial point";
    case NewtonFailure::SingularJacobian: return "singular Jacobian";
    case NewtonFailure::LineSearch: return "divergence (line search exhausted)";
    case NewtonFailure::IterationCap: return "iteration cap reached";
  }
  return "unknown";
}

DampedNewtonResult damped_newton(const ResidualMap& F, std::vector<double> x0, const DampedNewtonOptions& opts) {
  DampedNewtonResult res;
  res.x = std::move(x0);
  auto g = F(res.x);
  if (!g) {
    res.failure = NewtonFailure::InitialEvaluation;
    return res;
  }
  res.residual = *g;
  res.residual_norm = max_norm(res.residual);
  const std::size_t n = res.x.size();

  for (res.iterations = 0; res.iterations <= opts.max_iter; ++res.iterations) {
    if (res.residual_norm <= std::min(opts.target, opts.tol)) {
      res.converged = true;
      return res;
    }
    if (res.iterations == opts.max_iter) break;

    std::vector<std::vector<double>> J(res.residual.size(), std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
      double h = opts.fd_rel * (1.0 + std::abs(res.x[j]));
      auto xp = res.x;
      xp[j] += h;
      auto gp = F(xp);
      if (!gp) {
        h = -h;
        xp[j] = res.x[j] + h;
        gp = F(xp);
      }
      if (!gp) {
        res.failure = NewtonFailure::SingularJacobian;
        return res;
      }
      for (std::size_t i = 0; i < J.size(); ++i) J[i][j] = ((*gp)[i] - res.residual[i]) / h;
    }
    std::vector<double> step = res.residual;
    for (double& s : step) s = -s;
    if (!solve_dense(J, step)) {
      res.converged = res.residual_norm <= opts.tol;
      if (!res.converged) res.failure = NewtonFailure::SingularJacobian;
      return res;
    }

    double lambda = 1.0;
    bool accepted = false;
    for (int bt = 0; bt <= opts.max_backtracks; ++bt, lambda *= 0.5) {
      auto xt = res.x;
      for (std::size_t i = 0; i < n; ++i) xt[i] += lambda * step[i];
      auto gt = F(xt);
      if (!gt) continue;
      const double nt = max_norm(*gt);
      if (!std::isfinite(nt)) continue;
      if (nt < res.residual_norm) {
        res.x = std::move(xt);
        res.residual = std::move(*gt);
        res.residual_norm = nt;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // stagnation at the evaluation noise floor is success once below tol
      res.converged = res.residual_norm <= opts.tol;
      if (!res.converged) res.failure = NewtonFailure::LineSearch;
      return res;
    }
  }
  res.converged = res.residual_norm <= opts.tol;
  if (!res.converged) res.failure = NewtonFailure::IterationCap;
  return res;
}

}  // namespace polyemden
