#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace polyemden {

using OdeRhs = std::function<void(double r, std::span<const double> y, std::span<double> dydr)>;

struct OdeOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double initial_step = 1e-4;
  double max_step = 0.05;
  long max_steps = 200000;
  /// States with any entry above this magnitude are treated as blow-up.
  double blowup_threshold = 1e150;
};

enum class OdeStatus { Ok, Diverged, StepCollapse, StepBudget };

struct OdeSolution {
  OdeStatus status = OdeStatus::Ok;
  double reached = 0.0;                  ///< last radius the stepper accepted
  std::vector<std::vector<double>> out;  ///< state at each requested radius (filled up to failure)
  long steps = 0;
  long rejected = 0;

  bool ok() const { return status == OdeStatus::Ok; }
};

std::string to_string(OdeStatus s);

/// Dormand-Prince 5(4) with the standard fourth-order continuous extension.
///
/// Integrates from (r0, y0) and reports the state at every radius in
/// `outputs`, which must be non-decreasing and >= r0.  The final output is
/// hit exactly (no dense-output error at the end point).
OdeSolution integrate_dopri45(const OdeRhs& rhs, double r0, std::span<const double> y0,
                              std::span<const double> outputs, const OdeOptions& opts = {});

}  // namespace polyemden
