#pragma once

// Homotopy branch in t of the shifted system, its norm growth, and the
// blow-up rescaling u_hat(y) = u(y / C) / A, v_hat(y) = v(y / C) / B.

#include <string>
#include <vector>

#include "polyemden/shooting.hpp"

namespace polyemden {

struct BranchPoint {
  double t = 0.0;
  SolutionRecord record;
  double arclength = 0.0;
};

enum class BranchStop { TMax, NormCeiling, ReturnedToZero, StepCollapse, PointBudget, SolverFailure };

std::string to_string(BranchStop s);

struct BranchOptions {
  double ds_initial = 0.05;
  double ds_min = 1e-7;
  double ds_max = 5.0;
  double ds_max_rel = 0.05;  ///< cap also allows ds_max_rel * |(t, c)|
  double norm_ceiling = 1e6;
  int max_points = 2000;
  NewtonOptions newton{};
};

struct Branch {
  std::vector<BranchPoint> points;
  BranchStop stop = BranchStop::TMax;
  std::string message;
};

/// Pseudo-arclength continuation in (t, shooting vector) from (0, 0, 0) with a
/// secant predictor.  Stops at t_max, at the norm ceiling, when the branch
/// comes back to t = 0 (the endpoint is then solved at t = 0 exactly), or when
/// the step collapses below ds_min.
Branch trace_branch(const ProblemParams& params0, double t_max, const BranchOptions& opts = {});

/// sup of K_alpha(1) on the unit ball: 1 / (2^alpha alpha! prod_{j<alpha} (N + 2j)).
double kalpha_constant(int alpha, int N);

/// (C1 C2^q)^(-1/(pq-1)): sup-norm floor of nontrivial solutions for u.
double norm_lower_bound(const ProblemParams& params);
/// (C2 C1^p)^(-1/(pq-1)): the same floor for v.
double norm_lower_bound_v(const ProblemParams& params);

struct BlowupScaling {
  double tau = 0.0;
  double sigma = 0.0;
  double C = 0.0;  ///< C_n = sup_u^(1/tau) + sup_v^(1/sigma)
  double A = 0.0;  ///< C^tau
  double B = 0.0;  ///< C^sigma
  double shift_u = 0.0;  ///< t / B in the rescaled u-equation
  double shift_v = 0.0;  ///< t^theta / A in the rescaled v-equation
  RadialProfile rescaled;  ///< on [0, C]

  double u_hat0_root() const;  ///< u_hat(0)^(1/tau)
  double v_hat0_root() const;  ///< v_hat(0)^(1/sigma)
};

BlowupScaling rescale_blowup(const SolutionRecord& rec, const ProblemParams& params);

/// Relative sup difference between the rescaled profile and a fresh
/// integration of the rescaled system from its center values.
double rescaled_residual(const BlowupScaling& scaling, const ProblemParams& params, const IvpOptions& opts = {});

struct LimitOptions {
  int tail = 6;
  double growth_factor = 1e3;
  std::size_t samples = 256;
};

struct TailPoint {
  double t = 0.0;
  double C = 0.0;
  double u_hat0_root = 0.0;
  double v_hat0_root = 0.0;
  double t_over_B = 0.0;
  double ttheta_over_A = 0.0;
};

struct LimitReport {
  RadialProfile profile;               ///< last rescaled profile (limit candidate)
  std::vector<TailPoint> tail;
  std::vector<double> cauchy_defects;  ///< sup |u_hat_k - u_hat_{k-1}| + sup |v_hat_k - v_hat_{k-1}| on [0, window]
  double window = 0.0;                 ///< effective window (clipped to the smallest C)
  double growth = 0.0;
};

/// Rescales the last `tail` branch points; throws NumericalError("insufficient growth")
/// when the sup-norm has not grown by growth_factor along the branch.
LimitReport limit_profile(const std::vector<BranchPoint>& branch, double window, const LimitOptions& opts = {});

}  // namespace polyemden
