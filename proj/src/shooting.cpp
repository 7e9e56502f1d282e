#include "polyemden/shooting.hpp"

#include <algorithm>
#include <cmath>

namespace polyemden {

double BoundaryResidual::max_norm() const {
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(x));
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> BoundaryResidual::flat() const {
  std::vector<double> out(u);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

// Exact even-series value at r < r_start: u_k(r) = u_k(0) - u_{k+1}(0) r^2 / (2N).
ChainState series_state(std::span<const double> center, double r, const ChainSystem& sys) {
  if (r == 0.0) {
    ChainState s(0.0, sys.alpha, sys.beta);
    for (int k = 0; k < sys.alpha; ++k) s.u(k) = center[k];
    for (int k = 0; k < sys.beta; ++k) s.v(k) = center[sys.alpha + k];
    return s;
  }
  return taylor_origin(center, r, sys);
}

}  // namespace

IvpResult integrate_chain(std::span<const double> center, const ChainSystem& system, const RadialGrid& grid,
                          const IvpOptions& opts) {
  if (center.size() != static_cast<std::size_t>(system.alpha + system.beta)) {
    throw ValidationError("integrate_chain: shooting vector has wrong size");
  }
  IvpResult res{RadialProfile(grid, system.alpha, system.beta), OdeStatus::Ok, grid.back()};
  const double r0 = opts.r_start;

  std::vector<double> outputs;
  std::size_t first_ode = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= r0) {
      res.profile.set_state(i, series_state(center, grid[i], system));
    } else {
      if (first_ode == grid.size()) first_ode = i;
      outputs.push_back(grid[i]);
    }
  }
  if (outputs.empty()) return res;

  const ChainState start = taylor_origin(center, r0, system);
  auto rhs = [&system](double r, std::span<const double> y, std::span<double> dy) {
    chain_rhs_raw(r, y, dy, system);
  };
  OdeSolution sol = integrate_dopri45(rhs, r0, start.y, outputs, opts.ode);
  for (std::size_t j = 0; j < sol.out.size(); ++j) {
    ChainState s(outputs[j], system.alpha, system.beta);
    s.y = sol.out[j];
    res.profile.set_state(first_ode + j, s);
  }
  res.status = sol.status;
  res.reached = sol.ok() ? grid.back() : sol.reached;
  return res;
}

IvpResult integrate_ivp(const ShootingVector& c, const ProblemParams& params, const RadialGrid& grid,
                        const IvpOptions& opts) {
  params.validate();
  return integrate_chain(c.values, ChainSystem::from(params), grid, opts);
}

std::optional<ChainState> integrate_to(std::span<const double> center, const ChainSystem& system, double R,
                                       const IvpOptions& opts) {
  if (R <= opts.r_start) return series_state(center, R, system);
  const ChainState start = taylor_origin(center, opts.r_start, system);
  auto rhs = [&system](double r, std::span<const double> y, std::span<double> dy) {
    chain_rhs_raw(r, y, dy, system);
  };
  const double out[] = {R};
  OdeSolution sol = integrate_dopri45(rhs, opts.r_start, start.y, out, opts.ode);
  if (!sol.ok()) return std::nullopt;
  ChainState s(R, system.alpha, system.beta);
  s.y = sol.out.front();
  return s;
}

BoundaryResidual boundary_residual(const ChainState& s, int N) {
  BoundaryResidual res;
  std::vector<double> uv(s.alpha), ud(s.alpha), vv(s.beta), vd(s.beta);
  for (int k = 0; k < s.alpha; ++k) uv[k] = s.u(k), ud[k] = s.du(k);
  for (int k = 0; k < s.beta; ++k) vv[k] = s.v(k), vd[k] = s.dv(k);
  res.u = radial_derivatives(uv, ud, s.radius, N, s.alpha - 1);
  res.v = radial_derivatives(vv, vd, s.radius, N, s.beta - 1);
  return res;
}

BoundaryResidual boundary_residual(const RadialProfile& profile, const ProblemParams& params) {
  return boundary_residual(profile.state(profile.grid.size() - 1), params.N);
}

SolutionRecord make_record(const ShootingVector& c, const ProblemParams& params, const NewtonOptions& opts) {
  SolutionRecord rec;
  rec.params = params;
  rec.shooting = c;
  IvpResult ivp = integrate_ivp(c, params, RadialGrid::uniform(opts.grid_nodes), opts.ivp);
  if (!ivp.ok()) {
    throw NumericalError("integrate_ivp diverged at r=" + std::to_string(ivp.reached) + " (" +
                         to_string(ivp.status) + ")");
  }
  rec.profile = std::move(ivp.profile);
  rec.residual_norm = boundary_residual(rec.profile, params).max_norm();
  rec.sup_u = rec.profile.sup_u();
  rec.sup_v = rec.profile.sup_v();
  return rec;
}

NewtonResult newton_solve(const ShootingVector& c0, const ChainSystem& system, const NewtonOptions& opts) {
  for (double x : c0.values) {
    if (!std::isfinite(x)) throw ValidationError("newton_solve: start must be finite");
  }
  ResidualMap F = [&](const std::vector<double>& c) -> std::optional<std::vector<double>> {
    auto s = integrate_to(c, system, 1.0, opts.ivp);
    if (!s) return std::nullopt;
    auto r = boundary_residual(*s, system.N).flat();
    for (double x : r) {
      if (!std::isfinite(x)) return std::nullopt;
    }
    return r;
  };
  DampedNewtonResult dn = damped_newton(F, c0.values, opts.newton);
  NewtonResult out;
  out.converged = dn.converged;
  out.failure = dn.failure;
  out.message = dn.converged ? "converged" : to_string(dn.failure);
  out.record.shooting.values = dn.x;
  out.record.residual_norm = dn.residual_norm;
  out.record.iterations = dn.iterations;
  return out;
}

NewtonResult newton_solve(const ShootingVector& c0, const ProblemParams& params, const NewtonOptions& opts) {
  params.validate();
  NewtonResult out = newton_solve(c0, ChainSystem::from(params), opts);
  if (out.converged) {
    const int iters = out.record.iterations;
    out.record = make_record(out.record.shooting, params, opts);
    out.record.iterations = iters;
  }
  return out;
}

ShapeReport check_solution_shape(const SolutionRecord& rec) {
  ShapeReport rep;
  auto fail = [&rep](std::string what) {
    rep.ok = false;
    rep.violations.push_back(std::move(what));
  };
  if (!rec.nontrivial()) {
    fail("not nontrivial");
    return rep;
  }
  const auto& prof = rec.profile;
  const std::size_t last = prof.grid.size() - 1;
  const auto& u = prof.u[0];
  const auto& v = prof.v[0];
  const auto& du = prof.du[0];
  const auto& dv = prof.dv[0];

  bool u_pos = true, v_pos = true, u_dec = true, v_dec = true;
  for (std::size_t i = 0; i < last; ++i) {
    if (!(u[i] > 0.0)) u_pos = false;
    if (!(v[i] > 0.0)) v_pos = false;
    if (i > 0) {
      if (!(du[i] < 0.0)) u_dec = false;
      if (!(dv[i] < 0.0)) v_dec = false;
    }
  }
  if (!u_pos) fail("u positivity on [0,1)");
  if (!v_pos) fail("v positivity on [0,1)");
  if (!u_dec) fail("u strictly decreasing on (0,1)");
  if (!v_dec) fail("v strictly decreasing on (0,1)");

  auto argmax = [](const std::vector<double>& f) {
    return static_cast<std::size_t>(std::distance(f.begin(), std::max_element(f.begin(), f.end())));
  };
  if (argmax(u) != 0) fail("u maximum at the origin");
  if (argmax(v) != 0) fail("v maximum at the origin");

  const ChainState edge = prof.state(last);
  std::vector<double> uv(prof.alpha), ud(prof.alpha), vv(prof.beta), vd(prof.beta);
  for (int k = 0; k < prof.alpha; ++k) uv[k] = edge.u(k), ud[k] = edge.du(k);
  for (int k = 0; k < prof.beta; ++k) vv[k] = edge.v(k), vd[k] = edge.dv(k);
  const double su = (prof.alpha % 2) ? -1.0 : 1.0;
  const double sv = (prof.beta % 2) ? -1.0 : 1.0;
  rep.u_inward_derivative = su * radial_derivatives(uv, ud, edge.radius, rec.params.N, prof.alpha)[prof.alpha];
  rep.v_inward_derivative = sv * radial_derivatives(vv, vd, edge.radius, rec.params.N, prof.beta)[prof.beta];
  rep.u_inward_sign = (rep.u_inward_derivative > 0) - (rep.u_inward_derivative < 0);
  rep.v_inward_sign = (rep.v_inward_derivative > 0) - (rep.v_inward_derivative < 0);
  if (rep.u_inward_sign <= 0) fail("u inward boundary derivative of order alpha positive");
  if (rep.v_inward_sign <= 0) fail("v inward boundary derivative of order beta positive");
  return rep;
}

}  // namespace polyemden
