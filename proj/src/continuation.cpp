#include "polyemden/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <tuple>

namespace polyemden {

std::string to_string(BranchStop s) {
  switch (s) {
    case BranchStop::TMax: return "t_max reached";
    case BranchStop::NormCeiling: return "norm ceiling reached";
    case BranchStop::ReturnedToZero: return "returned to t=0";
    case BranchStop::StepCollapse: return "step collapse";
    case BranchStop::PointBudget: return "point budget exhausted";
    case BranchStop::SolverFailure: return "solver failure";
  }
  return "unknown";
}

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::optional<std::vector<double>> bc_residual(double t, std::span<const double> c, const ProblemParams& base,
                                                const NewtonOptions& opts) {
  if (!(t >= 0.0) || !std::isfinite(t)) return std::nullopt;
  ProblemParams pr = base;
  pr.t = t;
  const ChainSystem sys = ChainSystem::from(pr);
  auto s = integrate_to(c, sys, 1.0, opts.ivp);
  if (!s) return std::nullopt;
  auto r = boundary_residual(*s, sys.N).flat();
  for (double x : r) {
    if (!std::isfinite(x)) return std::nullopt;
  }
  return r;
}

std::vector<double> pack(double t, const ShootingVector& c) {
  std::vector<double> z{t};
  z.insert(z.end(), c.values.begin(), c.values.end());
  return z;
}

}  // namespace

Branch trace_branch(const ProblemParams& params0, double t_max, const BranchOptions& opts) {
  ProblemParams base = params0;
  base.t = 0.0;
  base.validate_homotopy();
  if (!(t_max >= 0.0)) throw ValidationError("t_max must be >= 0");
  if (!(opts.ds_initial > 0.0) || !(opts.ds_min > 0.0)) throw ValidationError("arclength steps must be positive");

  const std::size_t n = static_cast<std::size_t>(base.chain_size());
  Branch br;
  auto push = [&](double t, const ShootingVector& c, double arc) {
    ProblemParams pr = base;
    pr.t = t;
    BranchPoint bp;
    bp.t = t;
    bp.record = make_record(c, pr, opts.newton);
    bp.arclength = arc;
    br.points.push_back(std::move(bp));
  };

  push(0.0, ShootingVector{std::vector<double>(n, 0.0)}, 0.0);
  if (t_max == 0.0) {
    br.stop = BranchStop::TMax;
    br.message = to_string(br.stop);
    return br;
  }

  // first step along t with the trivial center as predictor
  double ds = opts.ds_initial;
  for (;;) {
    const double t1 = std::min(ds, t_max);
    ProblemParams pr = base;
    pr.t = t1;
    NewtonResult nr = newton_solve(ShootingVector{std::vector<double>(n, 0.0)}, pr, opts.newton);
    if (nr.converged) {
      push(t1, nr.record.shooting, norm2(pack(t1, nr.record.shooting)));
      break;
    }
    ds *= 0.5;
    if (ds < opts.ds_min) {
      br.stop = BranchStop::StepCollapse;
      br.message = "first step: " + nr.message;
      return br;
    }
  }

  auto finish = [&](BranchStop s, std::string msg = {}) {
    br.stop = s;
    br.message = msg.empty() ? to_string(s) : std::move(msg);
    return br;
  };

  for (;;) {
    const BranchPoint& last = br.points.back();
    if (last.t >= t_max) return finish(BranchStop::TMax);
    if (std::max(last.record.sup_u, last.record.sup_v) >= opts.norm_ceiling) return finish(BranchStop::NormCeiling);
    if (static_cast<int>(br.points.size()) >= opts.max_points) return finish(BranchStop::PointBudget);

    const std::vector<double> z1 = pack(last.t, last.record.shooting);
    const BranchPoint& prev = br.points[br.points.size() - 2];
    const std::vector<double> z0 = pack(prev.t, prev.record.shooting);
    std::vector<double> tan(z1.size());
    for (std::size_t i = 0; i < tan.size(); ++i) tan[i] = z1[i] - z0[i];
    const double tn = norm2(tan);
    for (double& x : tan) x /= tn;

    // the predictor crosses t = 0: land on t = 0 exactly
    if (tan[0] < 0.0 && z1[0] + ds * tan[0] <= 0.0) {
      const double s0 = z1[0] / -tan[0];
      ShootingVector c0;
      for (std::size_t i = 1; i < z1.size(); ++i) c0.values.push_back(z1[i] + s0 * tan[i]);
      NewtonResult nr = newton_solve(c0, base, opts.newton);
      if (nr.converged && nr.record.nontrivial()) {
        std::vector<double> d = pack(0.0, nr.record.shooting);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= z1[i];
        const double step = norm2(d);
        push(0.0, nr.record.shooting, last.arclength + step);
        return finish(BranchStop::ReturnedToZero);
      }
      ds *= 0.5;
      if (ds < opts.ds_min) return finish(BranchStop::StepCollapse, "step collapse near t=0");
      continue;
    }

    std::vector<double> zp(z1.size());
    for (std::size_t i = 0; i < zp.size(); ++i) zp[i] = z1[i] + ds * tan[i];
    const double ds_now = ds;
    ResidualMap F = [&](const std::vector<double>& z) -> std::optional<std::vector<double>> {
      auto r = bc_residual(z[0], std::span<const double>(z).subspan(1), base, opts.newton);
      if (!r) return std::nullopt;
      double arc = -ds_now;
      for (std::size_t i = 0; i < z.size(); ++i) arc += tan[i] * (z[i] - z1[i]);
      r->push_back(arc);
      return r;
    };
    DampedNewtonResult dn = damped_newton(F, zp, opts.newton.newton);
    bool ok = dn.converged;
    double step = 0.0;
    if (ok) {
      std::vector<double> d(z1.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = dn.x[i] - z1[i];
      step = norm2(d);
      ok = step <= 3.0 * ds_now && dn.x[0] >= 0.0;
    }
    if (!ok) {
      ds *= 0.5;
      if (ds < opts.ds_min) return finish(BranchStop::StepCollapse);
      continue;
    }
    ShootingVector c;
    c.values.assign(dn.x.begin() + 1, dn.x.end());
    try {
      push(dn.x[0], c, last.arclength + step);
    } catch (const NumericalError& e) {
      return finish(BranchStop::SolverFailure, e.what());
    }
    if (dn.iterations <= 3) {
      ds = std::min(ds * 1.5, std::max(opts.ds_max, opts.ds_max_rel * norm2(dn.x)));
    } else if (dn.iterations > 8) {
      ds = std::max(ds * 0.6, opts.ds_min);
    }
  }
}

double kalpha_constant(int alpha, int N) {
  if (alpha < 1) throw ValidationError("alpha must be >= 1");
  if (N <= 2 * alpha) throw ValidationError("kalpha_constant requires N > 2*alpha");
  double d = 1.0;
  for (int j = 0; j < alpha; ++j) d *= 2.0 * (j + 1) * (N + 2.0 * j);
  return 1.0 / d;
}

double norm_lower_bound(const ProblemParams& params) {
  const double d = params.p * params.q - 1.0;
  if (!(d > 0.0)) throw ValidationError("norm_lower_bound requires p*q > 1");
  const double c1 = kalpha_constant(params.alpha, params.N);
  const double c2 = kalpha_constant(params.beta, params.N);
  return std::pow(c1 * std::pow(c2, params.q), -1.0 / d);
}

double norm_lower_bound_v(const ProblemParams& params) {
  const double d = params.p * params.q - 1.0;
  if (!(d > 0.0)) throw ValidationError("norm_lower_bound requires p*q > 1");
  const double c1 = kalpha_constant(params.alpha, params.N);
  const double c2 = kalpha_constant(params.beta, params.N);
  return std::pow(c2 * std::pow(c1, params.p), -1.0 / d);
}

double BlowupScaling::u_hat0_root() const { return std::pow(rescaled.u[0][0], 1.0 / tau); }
double BlowupScaling::v_hat0_root() const { return std::pow(rescaled.v[0][0], 1.0 / sigma); }

BlowupScaling rescale_blowup(const SolutionRecord& rec, const ProblemParams& params) {
  if (!rec.nontrivial()) throw ValidationError("rescale_blowup: trivial input");
  BlowupScaling b;
  std::tie(b.tau, b.sigma) = scaling_exponents(params);
  b.C = std::pow(rec.sup_u, 1.0 / b.tau) + std::pow(rec.sup_v, 1.0 / b.sigma);
  b.A = std::pow(b.C, b.tau);
  b.B = std::pow(b.C, b.sigma);
  b.shift_u = params.t / b.B;
  b.shift_v = std::pow(params.t, params.theta) / b.A;

  const RadialProfile& src = rec.profile;
  std::vector<double> y = src.grid.nodes();
  for (double& x : y) x *= b.C;
  RadialProfile out(RadialGrid(std::move(y)), src.alpha, src.beta);
  for (int k = 0; k < src.alpha; ++k) {
    const double f = std::pow(b.C, -2.0 * k) / b.A;
    for (std::size_t i = 0; i < src.grid.size(); ++i) {
      out.u[k][i] = f * src.u[k][i];
      out.du[k][i] = f / b.C * src.du[k][i];
    }
  }
  for (int k = 0; k < src.beta; ++k) {
    const double f = std::pow(b.C, -2.0 * k) / b.B;
    for (std::size_t i = 0; i < src.grid.size(); ++i) {
      out.v[k][i] = f * src.v[k][i];
      out.dv[k][i] = f / b.C * src.dv[k][i];
    }
  }
  b.rescaled = std::move(out);
  return b;
}

double rescaled_residual(const BlowupScaling& s, const ProblemParams& params, const IvpOptions& opts) {
  ChainSystem sys{params.N, params.alpha, params.beta,
                  Closure::shifted(s.shift_u, s.shift_v, params.p, params.q)};
  const RadialProfile& prof = s.rescaled;
  std::vector<double> center;
  for (int k = 0; k < prof.alpha; ++k) center.push_back(prof.u[k][0]);
  for (int k = 0; k < prof.beta; ++k) center.push_back(prof.v[k][0]);
  IvpOptions o = opts;
  o.r_start = opts.r_start * s.C;
  o.ode.max_step = opts.ode.max_step * s.C;
  o.ode.initial_step = opts.ode.initial_step * s.C;
  IvpResult re = integrate_chain(center, sys, prof.grid, o);
  if (!re.ok()) throw NumericalError("rescaled re-integration failed");
  double worst = 0.0;
  auto cmp = [&](const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      double scale = 0.0, diff = 0.0;
      for (std::size_t i = 0; i < a[k].size(); ++i) {
        scale = std::max(scale, std::abs(a[k][i]));
        diff = std::max(diff, std::abs(a[k][i] - b[k][i]));
      }
      if (scale > 0.0) worst = std::max(worst, diff / scale);
    }
  };
  cmp(prof.u, re.profile.u);
  cmp(prof.v, re.profile.v);
  return worst;
}

LimitReport limit_profile(const std::vector<BranchPoint>& branch, double window, const LimitOptions& opts) {
  if (!(window > 0.0)) throw ValidationError("window must be positive");
  if (opts.tail < 2) throw ValidationError("tail needs at least two points");
  const BranchPoint* first = nullptr;
  for (const auto& bp : branch) {
    if (bp.record.nontrivial()) {
      first = &bp;
      break;
    }
  }
  if (first == nullptr || static_cast<int>(branch.size()) < opts.tail) throw NumericalError("insufficient growth");
  auto sup = [](const BranchPoint& bp) { return std::max(bp.record.sup_u, bp.record.sup_v); };
  LimitReport rep;
  rep.growth = sup(branch.back()) / sup(*first);
  if (!(rep.growth >= opts.growth_factor)) throw NumericalError("insufficient growth");

  std::vector<BlowupScaling> scal;
  for (std::size_t i = branch.size() - static_cast<std::size_t>(opts.tail); i < branch.size(); ++i) {
    const BranchPoint& bp = branch[i];
    if (!bp.record.nontrivial()) throw NumericalError("insufficient growth");
    scal.push_back(rescale_blowup(bp.record, bp.record.params));
    const BlowupScaling& s = scal.back();
    rep.tail.push_back(TailPoint{bp.t, s.C, s.u_hat0_root(), s.v_hat0_root(), s.shift_u, s.shift_v});
  }

  double cmin = scal.front().C;
  for (const auto& s : scal) cmin = std::min(cmin, s.C);
  rep.window = std::min(window, cmin);
  const std::size_t m = std::max<std::size_t>(opts.samples, 2);
  auto eval = [&](const BranchPoint& bp, const BlowupScaling& s, double y, bool is_u) {
    const RadialProfile& pr = bp.record.profile;
    const double r = y / s.C;
    return is_u ? interpolate_hermite(pr.grid, pr.u[0], pr.du[0], r) / s.A
                : interpolate_hermite(pr.grid, pr.v[0], pr.dv[0], r) / s.B;
  };
  const std::size_t off = branch.size() - static_cast<std::size_t>(opts.tail);
  for (std::size_t j = 1; j < scal.size(); ++j) {
    double du = 0.0, dv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double y = rep.window * static_cast<double>(i) / static_cast<double>(m - 1);
      du = std::max(du, std::abs(eval(branch[off + j], scal[j], y, true) - eval(branch[off + j - 1], scal[j - 1], y, true)));
      dv = std::max(dv, std::abs(eval(branch[off + j], scal[j], y, false) - eval(branch[off + j - 1], scal[j - 1], y, false)));
    }
    rep.cauchy_defects.push_back(du + dv);
  }
  rep.profile = scal.back().rescaled;
  return rep;
}

}  // namespace polyemden
