#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polyemden/continuation.hpp"
#include "polyemden/shooting.hpp"

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

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(make(4, 2, 1, 2, 2).validate(), doctest::Contains("N > 2*alpha"), ValidationError);
  CHECK_THROWS_WITH_AS(make(6, 1, 3, 2, 2).validate(), doctest::Contains("N > 2*beta"), ValidationError);
  auto p = make(5, 1, 1, 2, 2);
  p.t = -1;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  auto h = make(5, 1, 1, 0.5, 1.5);
  CHECK_THROWS_AS(h.validate_homotopy(), ValidationError);
  auto th = make(5, 1, 1, 2, 2);
  th.theta = 3.0;
  th.t = 1.0;
  CHECK_THROWS_AS(th.validate_homotopy(), ValidationError);
  CHECK(ProblemParams::default_theta(2, 2) == 1.25);
}

TEST_CASE("manufactured polyharmonic solutions: K_alpha(1) centers recovered by shooting") {
  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (int N = 7; N <= 12; ++N) {
      ChainSystem sys{N, alpha, 1, Closure::constant(1.0, 1.0)};
      const auto cu = oracle::kalpha_centers(alpha, N);
      const auto cv = oracle::kalpha_centers(1, N);
      auto res = newton_solve(ShootingVector{std::vector<double>(alpha + 1, 0.0)}, sys);
      REQUIRE(res.converged);
      for (int k = 0; k < alpha; ++k) CHECK(std::abs(res.record.shooting.values[k] - cu[k]) < 1e-8);
      CHECK(std::abs(res.record.shooting.values[alpha] - cv[0]) < 1e-8);
    }
  }
}

TEST_CASE("boundary residual of a manufactured profile vanishes") {
  const int N = 8;
  ChainSystem sys{N, 2, 1, Closure::constant(1.0, 1.0)};
  const auto cu = oracle::kalpha_centers(2, N);
  const auto cv = oracle::kalpha_centers(1, N);
  auto s = integrate_to(std::vector<double>{cu[0], cu[1], cv[0]}, sys, 1.0);
  REQUIRE(s.has_value());
  CHECK(boundary_residual(*s, N).max_norm() < 1e-10);
}

TEST_CASE("regression-locked nontrivial solutions at t = 0") {
  struct Case {
    ProblemParams p;
    std::vector<double> c;
  };
  const Case cases[] = {{make(5, 1, 1, 2, 2), {98.4500217399, 98.4500217399}},
                        {make(6, 2, 1, 2, 2), {371.529635357, 24754.305142, 1631.74138367}},
                        {make(7, 2, 1, 1.5, 3), {1329.49666819, 197888.45212, 369.434859423}}};
  for (const auto& cs : cases) {
    MultistartOptions mo;
    mo.threads = 2;
    auto sols = multistart_search(cs.p, Box(cs.c.size(), {1.0, 1e5}), 40, mo);
    REQUIRE(sols.size() == 1);
    const auto& rec = sols[0];
    CHECK(rec.residual_norm < 1e-8);
    for (std::size_t k = 0; k < cs.c.size(); ++k) CHECK(rel(rec.shooting.values[k], cs.c[k]) < 1e-8);
    const ShapeReport sh = check_solution_shape(rec);
    CHECK(sh.ok);
    CHECK(sh.u_inward_sign == 1);
    CHECK(sh.v_inward_sign == 1);
    CHECK(rec.sup_u >= norm_lower_bound(cs.p));
    CHECK(rec.sup_v >= norm_lower_bound_v(cs.p));
    // maxima sit at the center
    CHECK(rec.sup_u == rec.profile.u[0][0]);
  }
}

TEST_CASE("symmetric instance has u = v") {
  auto sols = multistart_search(make(5, 1, 1, 2, 2), Box(2, {1.0, 1e4}), 20);
  REQUIRE(sols.size() == 1);
  CHECK(rel(sols[0].shooting.values[0], sols[0].shooting.values[1]) < 1e-8);
}

TEST_CASE("multistart is deterministic and threads do not change the result") {
  const auto p = make(6, 2, 1, 2, 2);
  MultistartOptions a, b;
  a.threads = 1;
  b.threads = 4;
  auto x = multistart_search(p, Box(3, {1.0, 1e5}), 24, a);
  auto y = multistart_search(p, Box(3, {1.0, 1e5}), 24, b);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i].shooting == y[i].shooting);
}

TEST_CASE("start sampling") {
  const Box box{{1.0, 1e4}, {2.0, 3.0}};
  auto s1 = sample_starts(box, 50, 11);
  auto s2 = sample_starts(box, 50, 11);
  auto s3 = sample_starts(box, 50, 12);
  CHECK(s1 == s2);
  CHECK_FALSE(s1 == s3);
  for (const auto& s : s1) {
    CHECK(s.values[0] >= 1.0);
    CHECK(s.values[0] <= 1e4);
    CHECK(s.values[1] >= 2.0);
    CHECK(s.values[1] <= 3.0);
  }
  CHECK(sample_starts(Box{{2.0, 1.0}}, 10, 1).empty());
}

TEST_CASE("scaling symmetry of the unshifted system") {
  const auto p = make(6, 2, 1, 2, 2);
  const auto [tau, sigma] = scaling_exponents(p);
  CHECK(tau == doctest::Approx(8.0 / 3.0));
  CHECK(sigma == doctest::Approx(10.0 / 3.0));
  const ShootingVector c{{2.0, 5.0, 3.0}};
  const double lam = 1.7;
  const ShootingVector cl = scale_center(c, p, lam);
  // u_l(r) = l^tau u(l r): compare at r = 0.3 against the original at l r
  const RadialGrid g1 = RadialGrid::uniform(17, 0.3 * lam);
  const RadialGrid g2 = RadialGrid::uniform(17, 0.3);
  auto a = integrate_ivp(c, p, g1);
  auto b = integrate_ivp(cl, p, g2);
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(rel(b.profile.u[0].back(), std::pow(lam, tau) * a.profile.u[0].back()) < 1e-8);
  CHECK(rel(b.profile.v[0].back(), std::pow(lam, sigma) * a.profile.v[0].back()) < 1e-8);
  CHECK(same_solution(c, ShootingVector{{2.0 * (1 + 1e-7), 5.0, 3.0}}, 1e-5));
  CHECK_FALSE(same_solution(c, ShootingVector{{2.1, 5.0, 3.0}}, 1e-5));
}

TEST_CASE("shape check flags non-solutions") {
  SolutionRecord rec;
  rec.params = make(5, 1, 1, 2, 2);
  rec.profile = RadialProfile(RadialGrid::uniform(33), 1, 1);
  CHECK_FALSE(check_solution_shape(rec).ok);
  auto sols = multistart_search(make(5, 1, 1, 2, 2), Box(2, {1.0, 1e4}), 10);
  REQUIRE_FALSE(sols.empty());
  SolutionRecord bent = sols[0];
  bent.profile.v[0][100] = -1.0;
  bent.sup_v = bent.profile.sup_v();
  const auto sh = check_solution_shape(bent);
  CHECK_FALSE(sh.ok);
  CHECK_FALSE(sh.violations.empty());
}

TEST_CASE("newton rejects non-finite starts and reports divergence") {
  const auto p = make(5, 1, 1, 2, 2);
  CHECK_THROWS_AS(newton_solve(ShootingVector{{NAN, 1.0}}, p), ValidationError);
  CHECK_THROWS_AS(make_record(ShootingVector{{1e8, 1e8}}, p), NumericalError);
  auto trivial = newton_solve(ShootingVector{{0.0, 0.0}}, p);
  CHECK(trivial.converged);
  CHECK_FALSE(trivial.record.nontrivial());
}

TEST_CASE("biharmonic manufactured chain (1 - r^2)^2") {
  for (int N : {5, 7}) {
    // Delta^2 (1-r^2)^2 = 8N(N+2), -Delta (1-r^2)^2 = 4N - 4(N+2) r^2
    ChainSystem sys{N, 2, 1, Closure::constant(8.0 * N * (N + 2), 1.0)};
    const double vc = 1.0 / (2.0 * N);
    const RadialGrid g = RadialGrid::uniform(65);
    const auto ivp = integrate_chain(std::vector<double>{1.0, 4.0 * N, vc}, sys, g);
    REQUIRE(ivp.ok());
    double err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double r2 = g[i] * g[i];
      err = std::max(err, std::abs(ivp.profile.u[0][i] - (1 - r2) * (1 - r2)));
      err = std::max(err, std::abs(ivp.profile.u[1][i] - (4.0 * N - 4.0 * (N + 2) * r2)));
    }
    CHECK(err < 1e-8);
    auto res = newton_solve(ShootingVector{{1.1, 4.0 * N * 0.9, vc * 1.1}}, sys);
    REQUIRE(res.converged);
    CHECK(std::abs(res.record.shooting.values[0] - 1.0) < 1e-8);
    CHECK(std::abs(res.record.shooting.values[1] - 4.0 * N) < 1e-8);
  }
}

TEST_CASE("zero center gives the zero profile") {
  const auto p = make(6, 2, 1, 2, 2);
  const auto ivp = integrate_ivp(ShootingVector{{0.0, 0.0, 0.0}}, p, RadialGrid::uniform(33));
  REQUIRE(ivp.ok());
  for (const auto& comp : {ivp.profile.u[0], ivp.profile.u[1], ivp.profile.v[0]})
    for (double x : comp) CHECK(x == 0.0);
}
