#include "polyemden/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyemden {
namespace {

// Butcher tableau (Dormand & Prince 1980)
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense output coefficients (Hairer, Norsett & Wanner, DOPRI5 contd5)
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace

std::string to_string(OdeStatus s) {
  switch (s) {
    case OdeStatus::Ok: return "ok";
    case OdeStatus::Diverged: return "diverged";
    case OdeStatus::StepCollapse: return "step collapse";
    case OdeStatus::StepBudget: return "step budget exhausted";
  }
  return "unknown";
}

OdeSolution integrate_dopri45(const OdeRhs& rhs, double r0, std::span<const double> y0,
                              std::span<const double> outputs, const OdeOptions& opts) {
  const std::size_t n = y0.size();
  OdeSolution sol;
  sol.reached = r0;
  sol.out.reserve(outputs.size());
  if (outputs.empty()) return sol;
  if (outputs.front() < r0) throw std::invalid_argument("integrate_dopri45: output before start");
  for (std::size_t i = 1; i < outputs.size(); ++i) {
    if (outputs[i] < outputs[i - 1]) throw std::invalid_argument("integrate_dopri45: outputs not sorted");
  }

  std::vector<double> y(y0.begin(), y0.end()), ynew(n), yerr(n);
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n);
  std::vector<double> rc1(n), rc2(n), rc3(n), rc4(n), rc5(n);

  std::size_t next = 0;
  while (next < outputs.size() && outputs[next] == r0) sol.out.push_back(y), ++next;
  if (next == outputs.size()) return sol;

  const double r_end = outputs.back();
  double r = r0;
  double h = std::min(opts.initial_step, r_end - r0);
  rhs(r, y, k1);
  double err_prev = 1e-4;

  while (next < outputs.size()) {
    if (sol.steps + sol.rejected > opts.max_steps) {
      sol.status = OdeStatus::StepBudget;
      return sol;
    }
    if (h < 1e-13 * std::max(1.0, std::abs(r))) {
      sol.status = OdeStatus::StepCollapse;
      return sol;
    }
    bool last = false;
    if (r + h >= r_end) {
      h = r_end - r;
      last = true;
    }

    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    rhs(r + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(r + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(r + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(r + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const double rnew = last ? r_end : r + h;
    rhs(rnew, tmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(rnew, ynew, k7);

    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      yerr[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double q = yerr[i] / sc;
      err += q * q;
      if (!std::isfinite(ynew[i]) || !std::isfinite(k7[i])) finite = false;
    }
    err = std::sqrt(err / static_cast<double>(n));

    if (!finite || !std::isfinite(err)) {
      h *= 0.25;
      ++sol.rejected;
      continue;
    }

    if (err <= 1.0) {
      // dense output polynomial for this step
      for (std::size_t i = 0; i < n; ++i) {
        const double dy = ynew[i] - y[i];
        const double bspl = h * k1[i] - dy;
        rc1[i] = y[i];
        rc2[i] = dy;
        rc3[i] = bspl;
        rc4[i] = dy - h * k7[i] - bspl;
        rc5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
      }
      while (next < outputs.size() && (outputs[next] < rnew || (last && outputs[next] <= r_end))) {
        if (outputs[next] == rnew) {
          sol.out.push_back(ynew);
        } else {
          const double th = (outputs[next] - r) / h;
          const double th1 = 1.0 - th;
          std::vector<double> yo(n);
          for (std::size_t i = 0; i < n; ++i) {
            yo[i] = rc1[i] + th * (rc2[i] + th1 * (rc3[i] + th * (rc4[i] + th1 * rc5[i])));
          }
          sol.out.push_back(std::move(yo));
        }
        ++next;
      }
      r = rnew;
      y.swap(ynew);
      k1.swap(k7);
      ++sol.steps;
      sol.reached = r;

      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(y[i]) > opts.blowup_threshold) {
          sol.status = OdeStatus::Diverged;
          return sol;
        }
      }
      if (last) break;

      // PI step-size controller
      const double e = std::max(err, 1e-10);
      double fac = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      fac = std::clamp(fac, 0.2, 5.0);
      err_prev = e;
      h = std::min(h * fac, opts.max_step);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      ++sol.rejected;
    }
  }
  return sol;
}

}  // namespace polyemden
