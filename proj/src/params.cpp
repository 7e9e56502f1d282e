#include "polyemden/params.hpp"

#include <cmath>
#include <sstream>

namespace polyemden {

void ProblemParams::validate() const {
  if (alpha < 1 || beta < 1) throw ValidationError("alpha and beta must be integers >= 1");
  if (N <= 2 * alpha) {
    throw ValidationError("N > 2*alpha is required (N=" + std::to_string(N) + ", alpha=" + std::to_string(alpha) + ")");
  }
  if (N <= 2 * beta) {
    throw ValidationError("N > 2*beta is required (N=" + std::to_string(N) + ", beta=" + std::to_string(beta) + ")");
  }
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw ValidationError("exponents p and q must be positive and finite");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("homotopy parameter t must be >= 0");
  if (!std::isfinite(theta)) throw ValidationError("theta must be finite");
}

void ProblemParams::validate_homotopy() const {
  validate();
  if (!(p * q > 1.0)) throw ValidationError("p*q > 1 is required for the homotopy");
  if (t > 0.0 && !(theta > 1.0 / p && theta < q)) {
    throw ValidationError("theta must lie strictly inside (1/p, q)");
  }
}

Closure Closure::lane_emden(const ProblemParams& params) {
  const double b = params.t > 0.0 ? std::pow(params.t, params.theta) : 0.0;
  return shifted(params.t, b, params.p, params.q);
}

Closure Closure::shifted(double a, double b, double p, double q) {
  Closure c;
  c.kind = Kind::LaneEmden;
  c.shift_u = a;
  c.shift_v = b;
  c.p = p;
  c.q = q;
  return c;
}

Closure Closure::constant(double fu, double fv) {
  Closure c;
  c.kind = Kind::Constant;
  c.const_u = fu;
  c.const_v = fv;
  return c;
}

double Closure::top_u(double, double v0) const {
  if (kind == Kind::Constant) return const_u;
  return std::pow(shift_u + std::abs(v0), q);
}

double Closure::top_v(double u0, double) const {
  if (kind == Kind::Constant) return const_v;
  return std::pow(shift_v + std::abs(u0), p);
}

std::string describe(const ProblemParams& params) {
  std::ostringstream os;
  os << "N=" << params.N << " alpha=" << params.alpha << " beta=" << params.beta << " p=" << params.p
     << " q=" << params.q << " t=" << params.t << " theta=" << params.theta;
  return os.str();
}

}  // namespace polyemden
