#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "polyemden/shooting.hpp"

namespace polyemden {

std::pair<double, double> scaling_exponents(const ProblemParams& params) {
  const double d = params.p * params.q - 1.0;
  if (!(d > 0.0)) throw ValidationError("scaling exponents need p*q > 1");
  return {(2.0 * params.beta * params.q + 2.0 * params.alpha) / d,
          (2.0 * params.alpha * params.p + 2.0 * params.beta) / d};
}

ShootingVector scale_center(const ShootingVector& c, const ProblemParams& params, double lambda) {
  const auto [tau, sigma] = scaling_exponents(params);
  ShootingVector out = c;
  for (int k = 0; k < params.alpha; ++k) out.values[k] *= std::pow(lambda, tau + 2.0 * k);
  for (int k = 0; k < params.beta; ++k) out.values[params.alpha + k] *= std::pow(lambda, sigma + 2.0 * k);
  return out;
}

bool same_solution(const ShootingVector& a, const ShootingVector& b, double rel) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    diff = std::max(diff, std::abs(a.values[i] - b.values[i]));
    scale = std::max({scale, std::abs(a.values[i]), std::abs(b.values[i])});
  }
  return diff <= rel * scale;
}

std::vector<ShootingVector> sample_starts(const Box& box, int n_starts, std::uint64_t seed) {
  for (const auto& [lo, hi] : box) {
    if (!(lo <= hi)) return {};
  }
  std::mt19937_64 gen(seed);
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::vector<ShootingVector> starts(static_cast<std::size_t>(std::max(n_starts, 0)));
  for (auto& s : starts) {
    s.values.resize(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) {
      const auto [lo, hi] = box[i];
      const double u = unit();
      if (lo > 0.0 && hi > 0.0) {
        s.values[i] = std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
      } else {
        s.values[i] = lo + u * (hi - lo);
      }
    }
  }
  return starts;
}

namespace {

// Scale-fixed problem at t = 0: u_0(0) = 1, remaining centers and the ball
// radius R are unknowns (all in logarithms).  The residual is the boundary
// data at R made dimensionless with the scaling of each derivative.
std::optional<ShootingVector> reduced_solve(const ShootingVector& start, const ProblemParams& params,
                                            const NewtonOptions& nopts) {
  const int a = params.alpha;
  const int b = params.beta;
  const auto [tau, sigma] = scaling_exponents(params);
  const double u00 = start.values[0];
  for (double x : start.values) {
    if (!(x > 0.0)) return std::nullopt;
  }
  // the start lies on the orbit point with u_0(0) = 1 and R = u00^(1/tau)
  std::vector<double> x0;
  for (int k = 1; k < a; ++k) x0.push_back(std::log(start.values[k]) - (tau + 2.0 * k) / tau * std::log(u00));
  for (int k = 0; k < b; ++k) x0.push_back(std::log(start.values[a + k]) - (sigma + 2.0 * k) / tau * std::log(u00));
  x0.push_back(std::log(u00) / tau);

  const ChainSystem sys = ChainSystem::from(params);
  auto unpack = [a, b](const std::vector<double>& x) {
    std::vector<double> c(static_cast<std::size_t>(a + b));
    c[0] = 1.0;
    for (int k = 1; k < a; ++k) c[k] = std::exp(x[k - 1]);
    for (int k = 0; k < b; ++k) c[a + k] = std::exp(x[a - 1 + k]);
    return c;
  };
  ResidualMap F = [&](const std::vector<double>& x) -> std::optional<std::vector<double>> {
    for (double xi : x) {
      if (!std::isfinite(xi) || std::abs(xi) > 60.0) return std::nullopt;
    }
    const double R = std::exp(x.back());
    const auto c = unpack(x);
    auto s = integrate_to(c, sys, R, nopts.ivp);
    if (!s) return std::nullopt;
    BoundaryResidual br = boundary_residual(*s, params.N);
    std::vector<double> r;
    double Rj = 1.0;
    for (int j = 0; j < a; ++j, Rj *= R) r.push_back(br.u[j] * Rj);
    Rj = 1.0;
    for (int j = 0; j < b; ++j, Rj *= R) r.push_back(br.v[j] * Rj / c[a]);
    for (double v : r) {
      if (!std::isfinite(v)) return std::nullopt;
    }
    return r;
  };
  DampedNewtonOptions dn = nopts.newton;
  dn.tol = 1e-9;
  dn.target = 1e-12;
  auto res = damped_newton(F, x0, dn);
  if (!res.converged) return std::nullopt;
  ShootingVector normalized{unpack(res.x)};
  return scale_center(normalized, params, std::exp(res.x.back()));
}

std::optional<SolutionRecord> run_start(const ShootingVector& start, const ProblemParams& params,
                                        const NewtonOptions& nopts) {
  ShootingVector c0 = start;
  if (params.t == 0.0) {
    auto reduced = reduced_solve(start, params, nopts);
    if (!reduced) return std::nullopt;
    c0 = *reduced;
  }
  NewtonResult nr = newton_solve(c0, params, nopts);
  if (!nr.converged) return std::nullopt;
  return std::move(nr.record);
}

}  // namespace

std::vector<SolutionRecord> multistart_hits(const ProblemParams& params, const Box& box, int n_starts,
                                            const MultistartOptions& opts) {
  params.validate();
  if (n_starts < 1) throw ValidationError("multistart_search: n_starts must be >= 1");
  if (box.size() != static_cast<std::size_t>(params.chain_size())) {
    throw ValidationError("multistart_search: box must have alpha + beta coordinates");
  }
  const auto starts = sample_starts(box, n_starts, opts.seed);
  std::vector<std::optional<SolutionRecord>> results(starts.size());

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(starts.size()));
  if (starts.empty()) return {};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < starts.size(); i += threads) {
        try {
          results[i] = run_start(starts[i], params, opts.newton);
        } catch (const NumericalError&) {
          results[i].reset();
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  std::vector<SolutionRecord> hits;
  for (auto& r : results) {
    if (r && r->nontrivial()) hits.push_back(std::move(*r));
  }
  std::sort(hits.begin(), hits.end(), [](const SolutionRecord& x, const SolutionRecord& y) {
    return x.shooting.values < y.shooting.values;
  });
  return hits;
}

std::vector<SolutionRecord> deduplicate(std::vector<SolutionRecord> hits, double rel) {
  std::vector<SolutionRecord> distinct;
  for (auto& h : hits) {
    bool dup = false;
    for (const auto& d : distinct) {
      if (same_solution(h.shooting, d.shooting, rel)) {
        dup = true;
        break;
      }
    }
    if (!dup) distinct.push_back(std::move(h));
  }
  return distinct;
}

std::vector<SolutionRecord> multistart_search(const ProblemParams& params, const Box& box, int n_starts,
                                              const MultistartOptions& opts) {
  return deduplicate(multistart_hits(params, box, n_starts, opts), opts.dedup_rel);
}

}  // namespace polyemden
