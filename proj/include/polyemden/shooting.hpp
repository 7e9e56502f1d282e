#pragma once

// Dirichlet boundary value problem on the unit ball by shooting on the
// alpha + beta center values, with the whole chain integrated jointly.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyemden/newton.hpp"
#include "polyemden/ode.hpp"
#include "polyemden/params.hpp"
#include "polyemden/radial.hpp"

namespace polyemden {

/// (u_0(0), ..., u_{alpha-1}(0), v_0(0), ..., v_{beta-1}(0)).
struct ShootingVector {
  std::vector<double> values;

  friend bool operator==(const ShootingVector&, const ShootingVector&) = default;
};

/// (u(R), u'(R), ..., u^{(alpha-1)}(R), v(R), ..., v^{(beta-1)}(R)) at the outer node R.
struct BoundaryResidual {
  std::vector<double> u;
  std::vector<double> v;

  double max_norm() const;
  std::vector<double> flat() const;
};

struct IvpOptions {
  double r_start = 1e-4;  ///< series start radius
  OdeOptions ode{};
};

struct IvpResult {
  RadialProfile profile;
  OdeStatus status = OdeStatus::Ok;
  double reached = 0.0;  ///< radius reached before failure (grid end on success)

  bool ok() const { return status == OdeStatus::Ok; }
};

/// Integrates the chain IVP from the center values out to grid.back().
IvpResult integrate_chain(std::span<const double> center, const ChainSystem& system, const RadialGrid& grid,
                          const IvpOptions& opts = {});

IvpResult integrate_ivp(const ShootingVector& c, const ProblemParams& params, const RadialGrid& grid,
                        const IvpOptions& opts = {});

/// Chain state at radius R only; nullopt if the stepper failed first.
std::optional<ChainState> integrate_to(std::span<const double> center, const ChainSystem& system, double R,
                                       const IvpOptions& opts = {});

BoundaryResidual boundary_residual(const ChainState& state, int N);
BoundaryResidual boundary_residual(const RadialProfile& profile, const ProblemParams& params);

struct SolutionRecord {
  ProblemParams params;
  ShootingVector shooting;
  RadialProfile profile;
  double residual_norm = 0.0;
  double sup_u = 0.0;
  double sup_v = 0.0;
  int iterations = 0;

  bool nontrivial(double eps = 1e-8) const { return sup_u > eps || sup_v > eps; }
};

struct NewtonOptions {
  DampedNewtonOptions newton{};
  IvpOptions ivp{};
  std::size_t grid_nodes = 512;
};

struct NewtonResult {
  bool converged = false;
  NewtonFailure failure = NewtonFailure::None;
  std::string message;
  SolutionRecord record;  ///< filled on success
};

/// Builds the record (profile on the report grid, sup-norms, residual) for a shooting vector.
SolutionRecord make_record(const ShootingVector& c, const ProblemParams& params, const NewtonOptions& opts = {});

/// Damped Newton on c -> boundary_residual(integrate_ivp(c)).
NewtonResult newton_solve(const ShootingVector& c0, const ProblemParams& params, const NewtonOptions& opts = {});

/// Newton for an arbitrary closure (manufactured forcing, rescaled systems).
NewtonResult newton_solve(const ShootingVector& c0, const ChainSystem& system, const NewtonOptions& opts = {});

using Box = std::vector<std::pair<double, double>>;

struct MultistartOptions {
  std::uint64_t seed = 20240611;
  unsigned threads = 0;        ///< 0 picks hardware concurrency
  double dedup_rel = 1e-5;
  NewtonOptions newton{};
};

/// Log-uniform start sampling; reproducible for a given seed.  A box with an
/// empty interval yields no starts.
std::vector<ShootingVector> sample_starts(const Box& box, int n_starts, std::uint64_t seed);

/// Distinct converged nontrivial solutions, sorted by shooting vector.
///
/// At t = 0 each start is first mapped through the scaling symmetry of the
/// unshifted system: the center is normalized to u_0(0) = 1 and the ball
/// radius becomes an unknown, which keeps Newton away from the trivial
/// solution.  Every hit is then polished by newton_solve on the unit ball.
std::vector<SolutionRecord> multistart_search(const ProblemParams& params, const Box& box, int n_starts,
                                              const MultistartOptions& opts = {});

/// Every converged nontrivial hit before deduplication, sorted by shooting vector.
std::vector<SolutionRecord> multistart_hits(const ProblemParams& params, const Box& box, int n_starts,
                                            const MultistartOptions& opts = {});

/// Keeps the first record of each cluster of relatively close shooting vectors.
std::vector<SolutionRecord> deduplicate(std::vector<SolutionRecord> hits, double rel);

/// Scaling exponents of the unshifted system: u -> l^tau u(l r), v -> l^sigma v(l r).
std::pair<double, double> scaling_exponents(const ProblemParams& params);

/// Center values of the rescaled pair l^tau u(l r), l^sigma v(l r).
ShootingVector scale_center(const ShootingVector& c, const ProblemParams& params, double lambda);

bool same_solution(const ShootingVector& a, const ShootingVector& b, double rel);

struct ShapeReport {
  bool ok = true;
  std::vector<std::string> violations;
  double u_inward_derivative = 0.0;  ///< (-1)^alpha d^alpha u / dr^alpha at r = 1
  double v_inward_derivative = 0.0;
  int u_inward_sign = 0;
  int v_inward_sign = 0;
};

/// Positivity, strict radial decrease, maxima at the origin, boundary sign of the
/// alpha-th inward derivative.
ShapeReport check_solution_shape(const SolutionRecord& rec);

}  // namespace polyemden
