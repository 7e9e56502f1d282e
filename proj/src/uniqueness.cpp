#include "polyemden/uniqueness.hpp"

#include <algorithm>
#include <cmath>

namespace polyemden {

namespace {

void require_21(const ProblemParams& params) {
  params.validate();
  if (params.alpha != 2 || params.beta != 1) throw ValidationError("uniqueness tools require (alpha, beta) = (2, 1)");
  if (!(params.p > 1.0) || !(params.q > 1.0)) throw ValidationError("uniqueness tools require p, q > 1");
}

// cubic Hermite on an increasing node array
double hermite(const std::vector<double>& r, const std::vector<double>& f, const std::vector<double>& df, double x) {
  if (x <= r.front()) return f.front();
  if (x >= r.back()) return f.back();
  const auto it = std::upper_bound(r.begin(), r.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - r.begin()) - 1;
  const double h = r[i + 1] - r[i];
  const double t = (x - r[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * f[i] + (t3 - 2 * t2 + t) * h * df[i] + (-2 * t3 + 3 * t2) * f[i + 1] +
         (t3 - t2) * h * df[i + 1];
}

double sup_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double TripleProfile::eval(int k, double s) const { return hermite(r, U[k], dU[k], s); }

namespace {

// J1(r) = int_0^r s f ds and JN(r) = int_0^r (s/r)^(N-1) f ds at every node.
// On the first panel the powers of s/r are integrated against the panel
// interpolant after substituting s = r sigma, which avoids dividing a tiny
// running integral by r^(N-1).
class KernelIntegrator {
 public:
  KernelIntegrator(const PanelGrid& grid, double N) : grid_(grid), N_(N) {
    const std::vector<double>& x = grid.points();
    n0_ = grid.order();
    const GaussLegendreRule fine(24);
    A1_.assign(n0_, std::vector<double>(n0_, 0.0));
    AN_ = A1_;
    for (std::size_t i = 0; i < n0_; ++i) {
      const double r = x[i];
      for (std::size_t m = 0; m < fine.size(); ++m) {
        const double sig = 0.5 * (fine.nodes[m] + 1.0);
        const double w = 0.5 * fine.weights[m];
        for (std::size_t j = 0; j < n0_; ++j) {
          double L = 1.0;
          for (std::size_t k = 0; k < n0_; ++k) {
            if (k != j) L *= (r * sig - x[k]) / (x[j] - x[k]);
          }
          A1_[i][j] += w * r * r * sig * L;
          AN_[i][j] += w * r * std::pow(sig, N - 1.0) * L;
        }
      }
    }
  }

  void apply(const std::vector<double>& f, std::vector<double>& J1, std::vector<double>& JN) const {
    const std::vector<double>& x = grid_.points();
    const std::size_t n = x.size();
    std::vector<double> w1(n), wN(n);
    for (std::size_t i = 0; i < n; ++i) {
      w1[i] = x[i] * f[i];
      wN[i] = std::pow(x[i], N_ - 1.0) * f[i];
    }
    J1 = grid_.cumulative(w1);
    JN = grid_.cumulative(wN);
    for (std::size_t i = 0; i < n; ++i) JN[i] *= std::pow(x[i], 1.0 - N_);
    for (std::size_t i = 0; i < n0_ && i < n; ++i) {
      double a = 0.0, b = 0.0;
      for (std::size_t j = 0; j < n0_; ++j) {
        a += A1_[i][j] * f[j];
        b += AN_[i][j] * f[j];
      }
      J1[i] = a;
      JN[i] = b;
    }
  }

 private:
  const PanelGrid& grid_;
  double N_;
  std::size_t n0_;
  std::vector<std::vector<double>> A1_, AN_;
};

}  // namespace

PicardResult picard_fixed_point(const std::array<double, 3>& center, const ProblemParams& params,
                                const PanelGrid& grid, const PicardOptions& opts) {
  require_21(params);
  if (grid.lower() != 0.0) throw ValidationError("picard_fixed_point: grid must start at r = 0");
  const std::vector<double>& pts = grid.points();
  const std::size_t n = pts.size();
  const double N = params.N;
  const KernelIntegrator kint(grid, N);

  std::array<std::vector<double>, 3> U, dU;
  for (int k = 0; k < 3; ++k) {
    U[k].assign(n, center[k]);
    dU[k].assign(n, 0.0);
  }
  PicardResult res;
  double prev = INFINITY;
  double omega = 1.0;
  std::vector<double> J1, JN;
  for (int it = 1; it <= opts.max_iter; ++it) {
    std::array<std::vector<double>, 3> F;
    F[0] = U[1];
    F[1].resize(n);
    F[2].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      F[1][i] = std::pow(std::abs(U[2][i]), params.q);
      F[2][i] = std::pow(std::abs(U[0][i]), params.p);
    }
    double update = 0.0;
    std::array<std::vector<double>, 3> next, dnext;
    for (int k = 0; k < 3; ++k) {
      kint.apply(F[k], J1, JN);
      next[k].resize(n);
      dnext[k].resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        // int_0^r K(r,s) f ds = (J1 - r JN) / (N - 2), U' = -JN
        next[k][i] = center[k] - (J1[i] - pts[i] * JN[i]) / (N - 2.0);
        dnext[k][i] = -JN[i];
      }
      double diff = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(next[k][i])) {
          res.iterations = it;
          res.last_update = INFINITY;
          return res;
        }
        diff = std::max(diff, std::abs(next[k][i] - U[k][i]));
      }
      update = std::max(update, diff / std::max(1.0, sup_abs(next[k])));
    }
    if (update >= prev && omega == 1.0) {
      omega = opts.relaxation;
      res.relaxed = true;
    }
    prev = update;
    for (int k = 0; k < 3; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        U[k][i] += omega * (next[k][i] - U[k][i]);
        dU[k][i] += omega * (dnext[k][i] - dU[k][i]);
      }
    }
    res.iterations = it;
    res.last_update = update;
    if (update < opts.tol) {
      res.converged = true;
      break;
    }
  }
  res.profile.r.push_back(0.0);
  res.profile.r.insert(res.profile.r.end(), pts.begin(), pts.end());
  for (int k = 0; k < 3; ++k) {
    res.profile.U[k].push_back(center[k]);
    res.profile.U[k].insert(res.profile.U[k].end(), U[k].begin(), U[k].end());
    res.profile.dU[k].push_back(0.0);
    res.profile.dU[k].insert(res.profile.dU[k].end(), dU[k].begin(), dU[k].end());
  }
  return res;
}

std::pair<double, double> uniqueness_exponents(const ProblemParams& params) {
  const double d = params.p * params.q - 1.0;
  if (!(d > 0.0)) throw ValidationError("scaling exponents need p*q > 1");
  return {(2.0 * params.q + 4.0) / d, (2.0 + 4.0 * params.p) / d};
}

ScaleMatch scale_match(const SolutionRecord& w, double target_u0, const ProblemParams& params, std::size_t nodes) {
  require_21(params);
  const RadialProfile& wp = w.profile;
  const double w0 = wp.u[0][0];
  if (!(w0 > 0.0)) throw ValidationError("scale_match requires w(0) > 0");
  if (!(target_u0 > 0.0)) throw ValidationError("scale_match requires a positive target");
  ScaleMatch m;
  std::tie(m.s, m.t) = uniqueness_exponents(params);
  m.lambda = std::pow(target_u0 / w0, 1.0 / m.s);
  m.r_max = std::min(1.0, 1.0 / m.lambda);
  if (nodes == 0) nodes = wp.grid.size();
  const double L = m.lambda;
  TripleProfile& tp = m.profile;
  for (std::size_t i = 0; i < nodes; ++i) {
    const double r = (i + 1 == nodes) ? m.r_max : m.r_max * static_cast<double>(i) / static_cast<double>(nodes - 1);
    const double x = std::min(L * r, wp.grid.back());
    tp.r.push_back(r);
    tp.U[0].push_back(std::pow(L, m.s) * interpolate_hermite(wp.grid, wp.u[0], wp.du[0], x));
    tp.dU[0].push_back(std::pow(L, m.s + 1) * interpolate_cubic(wp.grid, wp.du[0], x));
    tp.U[1].push_back(std::pow(L, m.s + 2) * interpolate_hermite(wp.grid, wp.u[1], wp.du[1], x));
    tp.dU[1].push_back(std::pow(L, m.s + 3) * interpolate_cubic(wp.grid, wp.du[1], x));
    tp.U[2].push_back(std::pow(L, m.t) * interpolate_hermite(wp.grid, wp.v[0], wp.dv[0], x));
    tp.dU[2].push_back(std::pow(L, m.t + 1) * interpolate_cubic(wp.grid, wp.dv[0], x));
  }
  tp.U[0][0] = target_u0;

  // the scaling is a symmetry of the unshifted system: re-integrate from the new center
  ProblemParams p0 = params;
  p0.t = 0.0;
  const std::vector<double> center{tp.U[0][0], tp.U[1][0], tp.U[2][0]};
  IvpResult re = integrate_chain(center, ChainSystem::from(p0), RadialGrid(tp.r));
  if (!re.ok()) throw NumericalError("scale_match: re-integration failed");
  const std::vector<double>* cmp[3] = {&re.profile.u[0], &re.profile.u[1], &re.profile.v[0]};
  for (int k = 0; k < 3; ++k) {
    double diff = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) diff = std::max(diff, std::abs((*cmp[k])[i] - tp.U[k][i]));
    m.residual = std::max(m.residual, diff / std::max(sup_abs(tp.U[k]), 1e-300));
  }
  return m;
}

std::string to_string(Difference d) {
  switch (d) {
    case Difference::U: return "u-w";
    case Difference::V: return "v-z";
    case Difference::LapU: return "lap(u-w)";
  }
  return "unknown";
}

std::string to_string(SignPattern::Status s) {
  switch (s) {
    case SignPattern::Status::Identical: return "profiles identical";
    case SignPattern::Status::Consistent: return "schedule consistent";
    case SignPattern::Status::ScheduleViolation: return "schedule violation";
  }
  return "unknown";
}

SignPattern sign_pattern_trace(const SolutionRecord& u_rec, const SolutionRecord& w_rec, const ProblemParams& params,
                               double identical_rel) {
  require_21(params);
  if (!u_rec.nontrivial() || !w_rec.nontrivial()) throw ValidationError("sign_pattern_trace requires nontrivial records");
  const RadialProfile& up = u_rec.profile;
  const ScaleMatch sm = scale_match(w_rec, up.u[0][0], params);
  const TripleProfile& W = sm.profile;
  const std::vector<double>& r = W.r;
  const std::size_t n = r.size();

  // d[0] = u - w~, d[1] = v - z~, d[2] = Delta(u - w~) = -(u_1 - w~_1)
  std::array<std::vector<double>, 3> d, dd;
  std::array<double, 3> scale{};
  for (int k = 0; k < 3; ++k) {
    d[k].resize(n);
    dd[k].resize(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::min(r[i], up.grid.back());
    d[0][i] = interpolate_hermite(up.grid, up.u[0], up.du[0], x) - W.U[0][i];
    dd[0][i] = interpolate_cubic(up.grid, up.du[0], x) - W.dU[0][i];
    d[1][i] = interpolate_hermite(up.grid, up.v[0], up.dv[0], x) - W.U[2][i];
    dd[1][i] = interpolate_cubic(up.grid, up.dv[0], x) - W.dU[2][i];
    d[2][i] = -(interpolate_hermite(up.grid, up.u[1], up.du[1], x) - W.U[1][i]);
    dd[2][i] = -(interpolate_cubic(up.grid, up.du[1], x) - W.dU[1][i]);
  }
  scale[0] = up.sup_u();
  scale[1] = up.sup_v();
  scale[2] = sup_abs(up.u[1]);

  SignPattern sp;
  sp.lambda = sm.lambda;
  sp.r_max = sm.r_max;
  bool identical = true;
  for (int k = 0; k < 3; ++k) {
    sp.rel_sup[k] = sup_abs(d[k]) / std::max(scale[k], 1e-300);
    identical = identical && sp.rel_sup[k] < identical_rel;
  }
  if (identical) {
    sp.status = SignPattern::Status::Identical;
    sp.message = to_string(sp.status);
    return sp;
  }

  const double residual = std::max(u_rec.residual_norm, w_rec.residual_norm);
  std::array<double, 3> noise{};
  for (int k = 0; k < 3; ++k) noise[k] = std::max(10.0 * residual, 1e-10 * scale[k]);
  auto sgn = [&](int k, double x) { return x > noise[k] ? 1 : (x < -noise[k] ? -1 : 0); };

  struct Event {
    double radius;
    Difference which;
  };
  std::vector<Event> events;
  std::array<int, 3> initial{};
  for (int k = 0; k < 3; ++k) {
    int cur = 0;
    std::size_t last = 0;
    for (std::size_t i = 1; i < n; ++i) {
      const int s = sgn(k, d[k][i]);
      if (s == 0) continue;
      if (cur == 0) {
        cur = s;
        initial[k] = s;
      } else if (s != cur) {
        double lo = r[last], hi = r[i];
        const double flo = hermite(r, d[k], dd[k], lo);
        for (int b = 0; b < 80 && hi - lo > 1e-15; ++b) {
          const double mid = 0.5 * (lo + hi);
          if ((hermite(r, d[k], dd[k], mid) > 0.0) == (flo > 0.0)) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        events.push_back({0.5 * (lo + hi), static_cast<Difference>(k)});
        cur = s;
      }
      last = i;
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.radius < b.radius; });

  auto fail = [&](std::string msg) {
    sp.status = SignPattern::Status::ScheduleViolation;
    sp.message = std::move(msg);
    return sp;
  };
  for (const Event& e : events) {
    sp.radii.push_back(e.radius);
    sp.crossing.push_back(e.which);
  }
  for (int k = 0; k < 3; ++k) {
    if (initial[k] == 0) return fail(to_string(static_cast<Difference>(k)) + " stays at noise level while the others do not");
  }
  if (initial[0] != initial[2]) return fail("u-w and lap(u-w) start with opposite signs");

  static constexpr Difference cycle[3] = {Difference::V, Difference::LapU, Difference::U};
  std::size_t pos = (initial[1] == initial[2]) ? 0 : 1;
  std::array<int, 3> signs = initial;
  for (std::size_t j = 0; j < events.size(); ++j) {
    sp.signs.push_back(signs);
    if (events[j].which != cycle[pos]) {
      return fail("crossing " + std::to_string(j + 1) + " of " + to_string(events[j].which) + " where " +
                  to_string(cycle[pos]) + " was due");
    }
    signs[static_cast<int>(events[j].which)] *= -1;
    pos = (pos + 1) % 3;
  }
  sp.signs.push_back(signs);
  sp.status = SignPattern::Status::Consistent;
  sp.message = to_string(sp.status);
  return sp;
}

UniquenessScan uniqueness_scan(const ProblemParams& params, const Box& box, int n_starts, const MultistartOptions& opts) {
  require_21(params);
  UniquenessScan scan;
  std::vector<SolutionRecord> hits = multistart_hits(params, box, n_starts, opts);
  scan.hits = hits.size();
  scan.records = deduplicate(hits, opts.dedup_rel);
  scan.count = scan.records.size();
  for (std::size_t k = 1; k < hits.size(); ++k) {
    scan.patterns.push_back(sign_pattern_trace(hits[0], hits[k], params));
    scan.all_identical = scan.all_identical && scan.patterns.back().status == SignPattern::Status::Identical;
  }
  return scan;
}

}  // namespace polyemden
