#pragma once

#include <stdexcept>
#include <string>

namespace polyemden {

/// Raised when inputs violate a documented precondition (bad N, alpha, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure fails to produce a usable answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One instance of the shifted polyharmonic Lane-Emden system
///
///   (-Delta)^alpha u = (t + |v|)^q,   (-Delta)^beta v = (t^theta + |u|)^p
///
/// on the unit ball with Dirichlet data; t = 0 is the unshifted system.
struct ProblemParams {
  int N = 5;
  int alpha = 1;
  int beta = 1;
  double p = 2.0;
  double q = 2.0;
  double t = 0.0;
  double theta = 1.25;

  /// Midpoint of (1/p, q).
  static double default_theta(double p, double q) { return 0.5 * (1.0 / p + q); }

  /// Throws ValidationError unless N > 2 alpha, N > 2 beta, p, q > 0, t >= 0.
  void validate() const;

  /// validate() plus p q > 1 and, for t > 0, theta in (1/p, q).
  void validate_homotopy() const;

  int chain_size() const { return alpha + beta; }
};

/// Top-of-chain closures u_alpha = (a + |v_0|)^q and v_beta = (b + |u_0|)^p.
///
/// A constant closure replaces both nonlinearities with fixed forcing values,
/// which is how manufactured polyharmonic solutions are driven.
struct Closure {
  enum class Kind { LaneEmden, Constant };
  Kind kind = Kind::LaneEmden;
  double shift_u = 0.0;  ///< a
  double shift_v = 0.0;  ///< b
  double p = 2.0;
  double q = 2.0;
  double const_u = 0.0;
  double const_v = 0.0;

  static Closure lane_emden(const ProblemParams& params);
  static Closure shifted(double a, double b, double p, double q);
  static Closure constant(double fu, double fv);

  double top_u(double u0, double v0) const;
  double top_v(double u0, double v0) const;
};

std::string describe(const ProblemParams& params);

}  // namespace polyemden
