#pragma once

// Radial calculus for polyharmonic chains.
//
// A radial solution of (-Delta)^alpha u = f is carried as the chain
// u_0 = u, u_k = (-Delta)^k u, each entry obeying the second-order identity
//
//   u_k'' = -u_{k+1} - (N-1)/r * u_k',
//
// with the top entry supplied by the closure.  The state vector interleaves
// values and first derivatives: [u_0, u_0', ..., u_{a-1}, u_{a-1}', v_0, v_0', ...].

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polyemden/params.hpp"

namespace polyemden {

class RadialGrid {
 public:
  /// Validates r_0 == 0, strict increase and at least 17 nodes (M >= 16).
  explicit RadialGrid(std::vector<double> nodes);

  /// `count` equally spaced nodes on [0, r_max].
  static RadialGrid uniform(std::size_t count = 512, double r_max = 1.0);

  const std::vector<double>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  double back() const { return nodes_.back(); }

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;

 private:
  std::vector<double> nodes_;
};

/// Chain structure plus closure: everything the radial ODE needs.
struct ChainSystem {
  int N = 5;
  int alpha = 1;
  int beta = 1;
  Closure closure;

  static ChainSystem from(const ProblemParams& params);
  std::size_t state_size() const { return 2 * static_cast<std::size_t>(alpha + beta); }
};

struct ChainState {
  double radius = 0.0;
  int alpha = 1;
  int beta = 1;
  std::vector<double> y;

  ChainState() = default;
  ChainState(double r, int a, int b) : radius(r), alpha(a), beta(b), y(2 * static_cast<std::size_t>(a + b), 0.0) {}

  double& u(int k) { return y[2 * k]; }
  double& du(int k) { return y[2 * k + 1]; }
  double& v(int k) { return y[2 * (alpha + k)]; }
  double& dv(int k) { return y[2 * (alpha + k) + 1]; }
  double u(int k) const { return y[2 * k]; }
  double du(int k) const { return y[2 * k + 1]; }
  double v(int k) const { return y[2 * (alpha + k)]; }
  double dv(int k) const { return y[2 * (alpha + k) + 1]; }
};

/// Discretized chain u_0..u_{alpha-1}, v_0..v_{beta-1} and first derivatives.
struct RadialProfile {
  RadialGrid grid = RadialGrid::uniform(17);
  int alpha = 1;
  int beta = 1;
  std::vector<std::vector<double>> u, du, v, dv;  ///< [chain index][node]

  RadialProfile() = default;
  RadialProfile(RadialGrid g, int a, int b);

  ChainState state(std::size_t node) const;
  void set_state(std::size_t node, const ChainState& s);

  double sup_u() const;
  double sup_v() const;
};

/// d/dr of every slot.  Requires state.radius > 0.
ChainState chain_rhs(const ChainState& state, const ChainSystem& system);
ChainState chain_rhs(const ChainState& state, const ProblemParams& params);

/// Raw form used by the integrator (no allocation).
void chain_rhs_raw(double r, std::span<const double> y, std::span<double> dydr, const ChainSystem& system);

/// Second-order even series start at r0 from the center values
/// (u_0(0), ..., u_{alpha-1}(0), v_0(0), ..., v_{beta-1}(0)).
ChainState taylor_origin(std::span<const double> center, double r0, const ChainSystem& system);

/// Radial Green kernel of -Delta with prescribed center value:
/// K(r, s) = s / (N - 2) * (1 - (s / r)^(N - 2)), for 0 <= s <= r.
double kernel_eval(double r, double s, int N);

/// u(r) = u_center - int_0^r K(r, s) f(s) ds at every requested radius.
std::vector<double> inverse_laplacian_ivp(const std::function<double(double)>& f, double u_center, int N,
                                          std::span<const double> radii);

/// Same, for a component sampled on a grid (piecewise cubic interpolation of f).
std::vector<double> inverse_laplacian_ivp(const RadialGrid& grid, std::span<const double> f, double u_center, int N);

/// r^(1-N) int_0^r s^(N-1) f(s) ds; this is the radial derivative of any w with Delta w = f.
double volterra_derivative(const std::function<double(double)>& f, double r, int N);
double volterra_derivative(const RadialGrid& grid, std::span<const double> f, double r, int N);

/// Local cubic Lagrange interpolation of grid samples.
double interpolate_cubic(const RadialGrid& grid, std::span<const double> f, double r);

/// Cubic Hermite interpolation using values and first derivatives on the grid.
double interpolate_hermite(const RadialGrid& grid, std::span<const double> f, std::span<const double> df, double r);

/// Pure radial derivatives d^j/dr^j of chain entry 0 for j = 0..max_order,
/// computed exactly from chain values/derivatives by differentiating
/// u_k'' = -u_{k+1} - (N-1) u_k' / r.  `values`/`slopes` hold u_k and u_k'
/// for k = 0..len-1; orders that would need entries beyond len throw.
std::vector<double> radial_derivatives(std::span<const double> values, std::span<const double> slopes, double r,
                                       int N, int max_order);

/// Profile CSV: header r,u0,du0,...,v0,dv0,... with 17 significant digits.
void write_profile_csv(std::ostream& os, const RadialProfile& profile);
RadialProfile read_profile_csv(std::istream& is, int alpha, int beta);

}  // namespace polyemden
