#include <doctest.h>

#include <cmath>

#include "polyemden/radial.hpp"
#include "polyemden/uniqueness.hpp"

using namespace polyemden;

namespace {

ProblemParams make(int N, double p, double q) {
  ProblemParams pr;
  pr.N = N;
  pr.alpha = 2;
  pr.beta = 1;
  pr.p = p;
  pr.q = q;
  return pr;
}

const Box kBox{{1.0, 1e5}, {1.0, 1e5}, {1.0, 1e5}};

const UniquenessScan& scan6() {
  static const UniquenessScan s = uniqueness_scan(make(6, 2, 2), kBox, 30);
  return s;
}

// sup relative difference between Picard and the shooting IVP on the Picard nodes
double picard_vs_ivp(const std::array<double, 3>& c, const ProblemParams& p, const PicardResult& pr) {
  const RadialGrid g(pr.profile.r);
  const auto ivp = integrate_chain(std::vector<double>{c[0], c[1], c[2]}, ChainSystem::from(p), g);
  REQUIRE(ivp.ok());
  const std::vector<double>* ref[3] = {&ivp.profile.u[0], &ivp.profile.u[1], &ivp.profile.v[0]};
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    double sc = 0.0, d = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      sc = std::max(sc, std::abs((*ref[k])[i]));
      d = std::max(d, std::abs((*ref[k])[i] - pr.profile.U[k][i]));
    }
    worst = std::max(worst, d / sc);
  }
  return worst;
}

}  // namespace

TEST_CASE("Picard iteration: zero center") {
  const PicardResult r = picard_fixed_point({0.0, 0.0, 0.0}, make(6, 2, 2), PanelGrid(0.0, 0.5, 8));
  CHECK(r.converged);
  CHECK(r.iterations <= 2);
  for (int k = 0; k < 3; ++k)
    for (double x : r.profile.U[k]) CHECK(x == 0.0);
}

TEST_CASE("Picard fixed point agrees with the shooting IVP on [0, 0.5]") {
  struct Case {
    ProblemParams p;
    std::array<double, 3> c;
  };
  const Case cases[] = {{make(6, 2, 2), {371.529635357, 24754.305142, 1631.74138367}},
                        {make(7, 1.5, 3), {1329.49666819, 197888.45212, 369.434859423}},
                        {make(8, 2, 2), {10.0, 50.0, 20.0}}};
  for (const auto& cs : cases) {
    const PanelGrid g(0.0, 0.5, 32);
    const PicardResult a = picard_fixed_point(cs.c, cs.p, g);
    REQUIRE(a.converged);
    CHECK(a.profile.r.front() == 0.0);
    CHECK(a.profile.size() == g.size() + 1);
    CHECK(picard_vs_ivp(cs.c, cs.p, a) < 1e-6);
    // repeatable
    const PicardResult b = picard_fixed_point(cs.c, cs.p, g);
    CHECK(a.profile.U == b.profile.U);
    // derivative of u is -r^(1-N) int s^(N-1) (-Delta u)
    for (std::size_t i : {std::size_t{20}, a.profile.size() / 2, a.profile.size() - 1}) {
      const double lap = volterra_derivative([&](double s) { return a.profile.eval(1, s); }, a.profile.r[i], cs.p.N);
      CHECK(std::abs(a.profile.dU[0][i] + lap) <= 1e-7 * std::abs(lap));
    }
  }
}

TEST_CASE("Picard preconditions") {
  ProblemParams p = make(6, 2, 2);
  p.alpha = 1;
  CHECK_THROWS_AS(picard_fixed_point({1, 1, 1}, p, PanelGrid(0.0, 0.5, 8)), ValidationError);
  CHECK_THROWS_AS(picard_fixed_point({1, 1, 1}, make(6, 2, 2), PanelGrid(0.1, 0.5, 8)), ValidationError);
  CHECK_THROWS_AS(picard_fixed_point({1, 1, 1}, make(6, 0.5, 2), PanelGrid(0.0, 0.5, 8)), ValidationError);
}

TEST_CASE("uniqueness exponents") {
  const auto [s, t] = uniqueness_exponents(make(6, 2, 2));
  CHECK(s == doctest::Approx(8.0 / 3.0));
  CHECK(t == doctest::Approx(10.0 / 3.0));
  const auto [tau, sigma] = scaling_exponents(make(7, 1.5, 3));
  const auto [s2, t2] = uniqueness_exponents(make(7, 1.5, 3));
  CHECK(s2 == doctest::Approx(tau));
  CHECK(t2 == doctest::Approx(sigma));
}

TEST_CASE("scale matching") {
  const auto& scan = scan6();
  REQUIRE(scan.count == 1);
  const SolutionRecord& rec = scan.records[0];
  const ProblemParams p = make(6, 2, 2);
  const ScaleMatch same = scale_match(rec, rec.profile.u[0][0], p);
  CHECK(same.lambda == doctest::Approx(1.0));
  CHECK(same.r_max == doctest::Approx(1.0));
  CHECK(same.residual < 1e-8);
  const ScaleMatch up = scale_match(rec, 2.0 * rec.profile.u[0][0], p);
  CHECK(up.lambda > 1.0);
  CHECK(up.r_max == doctest::Approx(1.0 / up.lambda));
  CHECK(up.profile.U[0].front() == doctest::Approx(2.0 * rec.profile.u[0][0]));
  CHECK(std::pow(up.lambda, up.s) == doctest::Approx(2.0));
  CHECK(up.residual < 1e-8);
}

TEST_CASE("sign patterns: identical and perturbed profiles") {
  const auto& scan = scan6();
  REQUIRE(scan.count == 1);
  const SolutionRecord& rec = scan.records[0];
  const ProblemParams p = make(6, 2, 2);
  const SignPattern same = sign_pattern_trace(rec, rec, p);
  CHECK(same.status == SignPattern::Status::Identical);
  CHECK(same.radii.empty());

  SolutionRecord scaled = rec;
  for (auto& x : scaled.profile.v[0]) x *= 1.01;
  for (auto& x : scaled.profile.dv[0]) x *= 1.01;
  const SignPattern a = sign_pattern_trace(rec, scaled, p);
  CHECK(a.status == SignPattern::Status::ScheduleViolation);
  CHECK_FALSE(a.message.empty());

  SolutionRecord wavy = rec;
  for (std::size_t i = 0; i < wavy.profile.grid.size(); ++i) {
    const double r = wavy.profile.grid[i];
    wavy.profile.v[0][i] += 1e-2 * rec.sup_v * std::sin(20 * r);
    wavy.profile.dv[0][i] += 1e-2 * rec.sup_v * 20 * std::cos(20 * r);
  }
  const SignPattern b = sign_pattern_trace(rec, wavy, p);
  CHECK(b.status == SignPattern::Status::ScheduleViolation);
  CHECK(to_string(Difference::LapU) == "lap(u-w)");
}

TEST_CASE("uniqueness scans") {
  const auto& s = scan6();
  CHECK(s.count == 1);
  CHECK(s.hits >= 1);
  CHECK(s.all_identical);
  CHECK(s.patterns.size() + 1 == s.hits);
  for (const auto& pat : s.patterns) CHECK(pat.status == SignPattern::Status::Identical);

  const UniquenessScan s7 = uniqueness_scan(make(7, 1.5, 3), kBox, 12);
  CHECK(s7.count <= 1);
  CHECK(s7.all_identical);

  const UniquenessScan none = uniqueness_scan(make(6, 2, 2), Box{{2.0, 1.0}, {1.0, 2.0}, {1.0, 2.0}}, 10);
  CHECK(none.count == 0);
  CHECK(none.hits == 0);
}
