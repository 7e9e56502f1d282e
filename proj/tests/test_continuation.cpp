#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polyemden/continuation.hpp"

using namespace polyemden;

namespace {

ProblemParams make(int N, int a, int b, double p, double q) {
  ProblemParams pr;
  pr.N = N;
  pr.alpha = a;
  pr.beta = b;
  pr.p = p;
  pr.q = q;
  pr.theta = ProblemParams::default_theta(p, q);
  return pr;
}

const Branch& branch11() {
  static const Branch b = trace_branch(make(5, 1, 1, 2, 2), 50.0);
  return b;
}

}  // namespace

TEST_CASE("K_alpha(1) sup constant") {
  CHECK(kalpha_constant(1, 5) == doctest::Approx(1.0 / 10.0));
  CHECK(kalpha_constant(2, 6) == doctest::Approx(1.0 / 384.0));
  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (int N = 2 * alpha + 1; N <= 10; ++N) {
      // the sup sits at the center: w(0) for w = (1-r^2)^alpha / (-Delta)^alpha (1-r^2)^alpha
      CHECK(kalpha_constant(alpha, N) == doctest::Approx(oracle::kalpha_centers(alpha, N)[0]).epsilon(1e-13));
      // numeric: constant forcing integrated by shooting
      ChainSystem sys{N, alpha, 1, Closure::constant(1.0, 1.0)};
      auto res = newton_solve(ShootingVector{std::vector<double>(alpha + 1, 0.0)}, sys);
      REQUIRE(res.converged);
      CHECK(std::abs(res.record.shooting.values[0] - kalpha_constant(alpha, N)) < 1e-8);
    }
  }
}

TEST_CASE("a priori norm floor") {
  const auto p = make(5, 1, 1, 2, 2);
  CHECK(norm_lower_bound(p) == doctest::Approx(10.0));
  CHECK(norm_lower_bound_v(p) == doctest::Approx(10.0));
  const auto a = make(7, 2, 1, 1.5, 3.0);
  const auto b = make(7, 1, 2, 3.0, 1.5);
  CHECK(norm_lower_bound(a) == doctest::Approx(norm_lower_bound_v(b)));
}

TEST_CASE("t_max = 0 gives only the trivial point") {
  const Branch b = trace_branch(make(5, 1, 1, 2, 2), 0.0);
  REQUIRE(b.points.size() == 1);
  CHECK(b.points[0].t == 0.0);
  CHECK_FALSE(b.points[0].record.nontrivial());
  CHECK(b.stop == BranchStop::TMax);
  CHECK_THROWS_AS(trace_branch(make(5, 1, 1, 2, 2), -1.0), ValidationError);
}

TEST_CASE("branch from the trivial solution: invariants") {
  const Branch& b = branch11();
  REQUIRE(b.points.size() > 5);
  CHECK(b.points.front().t == 0.0);
  double fold = 0.0;
  for (std::size_t i = 1; i < b.points.size(); ++i) {
    const auto& bp = b.points[i];
    CHECK(bp.t >= 0.0);
    CHECK(bp.arclength > b.points[i - 1].arclength);
    CHECK(bp.record.residual_norm < 1e-8);
    CHECK(bp.record.nontrivial());
    if (bp.t > 0.0) {
      CHECK(bp.record.profile.u[0][0] > 0.0);
      CHECK(bp.record.profile.v[0][0] > 0.0);
    }
    // sup-norm grows monotonically along this branch
    CHECK(bp.record.sup_u >= b.points[i - 1].record.sup_u);
    fold = std::max(fold, bp.t);
  }
  // subcritical: the branch turns at a fold and lands on the t = 0 solution
  CHECK(b.stop == BranchStop::ReturnedToZero);
  CHECK(fold == doctest::Approx(3.84).epsilon(0.01));
  CHECK(b.points.back().t == 0.0);
  CHECK(b.points.back().record.shooting.values[0] == doctest::Approx(98.4500217399).epsilon(1e-9));
}

TEST_CASE("blow-up rescaling") {
  const auto p = make(6, 2, 1, 2, 2);
  const auto [tau, sigma] = scaling_exponents(p);
  CHECK(tau == doctest::Approx(8.0 / 3.0));
  CHECK(sigma == doctest::Approx(10.0 / 3.0));

  const Branch& b = branch11();
  const BranchPoint& bp = b.points[b.points.size() / 2];
  const BlowupScaling s = rescale_blowup(bp.record, bp.record.params);
  CHECK(s.C == doctest::Approx(std::pow(bp.record.sup_u, 1.0 / s.tau) + std::pow(bp.record.sup_v, 1.0 / s.sigma)));
  CHECK(s.u_hat0_root() + s.v_hat0_root() == doctest::Approx(1.0));
  CHECK(std::max(s.u_hat0_root(), s.v_hat0_root()) >= 0.5 - 1e-12);
  CHECK(s.rescaled.grid.back() == doctest::Approx(s.C));
  CHECK(s.shift_u == doctest::Approx(bp.t / s.B));
  CHECK(rescaled_residual(s, bp.record.params) < 1e-8);

  // C = 1 leaves the profile untouched
  SolutionRecord unit = bp.record;
  const double target = 1.0;
  const double su = std::pow(0.5, tau), sv = std::pow(0.5, sigma);
  unit.params = p;
  unit.profile = RadialProfile(RadialGrid::uniform(33), 2, 1);
  for (std::size_t i = 0; i < 33; ++i) {
    const double x = 1.0 - unit.profile.grid[i] * unit.profile.grid[i];
    unit.profile.u[0][i] = su * x;
    unit.profile.u[1][i] = 2.0 * x;
    unit.profile.v[0][i] = sv * x;
  }
  unit.sup_u = su;
  unit.sup_v = sv;
  const BlowupScaling id = rescale_blowup(unit, p);
  CHECK(id.C == doctest::Approx(target));
  for (std::size_t i = 0; i < 33; ++i) {
    CHECK(id.rescaled.u[0][i] == doctest::Approx(unit.profile.u[0][i]));
    CHECK(id.rescaled.u[1][i] == doctest::Approx(unit.profile.u[1][i]));
    CHECK(id.rescaled.v[0][i] == doctest::Approx(unit.profile.v[0][i]));
  }
  SolutionRecord zero = unit;
  zero.sup_u = zero.sup_v = 0.0;
  CHECK_THROWS_AS(rescale_blowup(zero, p), ValidationError);
}

TEST_CASE("limit profile along the tail") {
  const Branch& b = branch11();
  const LimitReport rep = limit_profile(b.points, 10.0);
  CHECK(rep.growth >= 1e3);
  REQUIRE(rep.tail.size() == 6);
  for (std::size_t i = 0; i < rep.tail.size(); ++i) {
    CHECK(std::max(rep.tail[i].u_hat0_root, rep.tail[i].v_hat0_root) >= 0.5 - 1e-6);
    if (i > 0) {
      CHECK(rep.tail[i].t_over_B <= rep.tail[i - 1].t_over_B);
      CHECK(rep.tail[i].ttheta_over_A <= rep.tail[i - 1].ttheta_over_A);
      CHECK(rep.tail[i].C > rep.tail[i - 1].C);
    }
  }
  REQUIRE(rep.cauchy_defects.size() == 5);
  CHECK(rep.cauchy_defects.back() < rep.cauchy_defects.front());

  LimitOptions strict;
  strict.growth_factor = 1e12;
  CHECK_THROWS_WITH_AS(limit_profile(b.points, 10.0, strict), "insufficient growth", NumericalError);
  const std::vector<BranchPoint> head(b.points.begin(), b.points.begin() + 3);
  CHECK_THROWS_AS(limit_profile(head, 10.0), NumericalError);
  CHECK_THROWS_AS(limit_profile(b.points, 0.0), ValidationError);
}

TEST_CASE("branch options validation and stop reasons") {
  BranchOptions o;
  o.max_points = 5;
  const Branch b = trace_branch(make(5, 1, 1, 2, 2), 50.0, o);
  CHECK(b.stop == BranchStop::PointBudget);
  CHECK(b.points.size() <= 5);
  BranchOptions ceil;
  ceil.norm_ceiling = 50.0;
  const Branch c = trace_branch(make(5, 1, 1, 2, 2), 50.0, ceil);
  CHECK(c.stop == BranchStop::NormCeiling);
  CHECK(to_string(BranchStop::ReturnedToZero) == "returned to t=0");
  CHECK_THROWS_AS(trace_branch(make(5, 1, 1, 0.5, 1.5), 1.0), ValidationError);
}
