#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "polyemden/classify.hpp"
#include "polyemden/params.hpp"

using namespace polyemden;

namespace {

using oracle::Tuple;

ClassifyInput in(int N, int a, int b, Rational p, Rational q) { return ClassifyInput{N, a, b, p, q}; }

}  // namespace

TEST_CASE("worked classifier examples") {
  auto [f, s] = condition_i(in(3, 1, 1, 3, 3));
  CHECK(f);  // equality counts
  CHECK(s);
  CHECK(Rational(2) * 1 * 3 + 3 + Rational(2) * 1 * 3 * 3 - Rational(3) * 3 * 3 == 0);
  CHECK(condition_ii(in(6, 2, 1, 2, 2)));
  CHECK_FALSE(condition_ii(in(6, 2, 1, Rational(5, 2), 2)));  // strict at the bound
  CHECK_FALSE(condition_ii(in(4, 2, 1, Rational(11, 10), Rational(11, 10))));

  CHECK(hyperbola_position(in(5, 1, 1, 2, 2)) == HyperbolaPosition::Below);
  CHECK(hyperbola_position(in(5, 1, 1, Rational(7, 3), Rational(7, 3))) == HyperbolaPosition::On);
  CHECK(hyperbola_position(in(5, 1, 1, 1000, 1000)) == HyperbolaPosition::Above);
  CHECK_THROWS_AS(hyperbola_position(in(6, 2, 1, 2, 2)), ValidationError);

  const auto v21 = verdict(in(6, 2, 1, 2, 2));
  CHECK(v21.condition_ii);
  CHECK(v21.verdict == VerdictKind::ExistenceInBall);
  CHECK(v21.hyperbola == HyperbolaPosition::NotApplicable);

  const auto v11 = verdict(in(5, 1, 1, 2, 2));
  CHECK(v11.hyperbola == HyperbolaPosition::Below);
  CHECK(v11.verdict == VerdictKind::ExistenceInBall);

  const auto lin = verdict(in(5, 1, 1, 1, 1));
  CHECK(lin.verdict == VerdictKind::NoInformation);
  CHECK(lin.reason == ExistenceReason::None);

  const auto sup = verdict(in(5, 1, 1, 4, 4));
  CHECK(sup.hyperbola == HyperbolaPosition::Above);
  CHECK(sup.verdict == VerdictKind::NoInformation);

  CHECK_THROWS_AS(verdict(in(5, 1, 1, 0, 2)), ValidationError);
}

TEST_CASE("p = q with alpha = beta makes both condition (i) inequalities coincide") {
  oracle::SplitMix rng(5);
  for (int k = 0; k < 200; ++k) {
    const int N = static_cast<int>(rng.range(3, 12));
    const int a = static_cast<int>(rng.range(1, 3));
    const Rational p(rng.range(1, 40), rng.range(1, 9));
    auto [f, s] = condition_i(in(N, a, a, p, p));
    CHECK(f == s);
  }
}

TEST_CASE("classifier agrees with direct inequality evaluation on 10^4 random tuples") {
  oracle::SplitMix rng(20240611);
  int mismatches = 0;
  for (int k = 0; k < 10000; ++k) {
    const Tuple t = oracle::random_tuple(rng, k % 3 == 0);
    const ClassifyInput ci = in(static_cast<int>(t.N), static_cast<int>(t.a), static_cast<int>(t.b),
                                Rational(t.pn, t.pd), Rational(t.qn, t.qd));
    const auto v = verdict(ci);
    const bool f = oracle::cond_i_first(t), s = oracle::cond_i_second(t), ii = oracle::cond_ii(t);
    const bool standing = t.N > 2 * t.a && t.N > 2 * t.b;
    const bool superlinear = t.pn > t.pd && t.qn > t.qd;
    const bool at_least_one = t.pn >= t.pd && t.qn >= t.qd && !(t.pn == t.pd && t.qn == t.qd);
    bool below = false;
    if (t.a == t.b) {
      const int h = oracle::hyperbola_sign(t);
      const auto expect = h > 0 ? HyperbolaPosition::Below : h == 0 ? HyperbolaPosition::On : HyperbolaPosition::Above;
      if (v.hyperbola != expect) ++mismatches;
      below = h > 0 && at_least_one;
    } else if (v.hyperbola != HyperbolaPosition::NotApplicable) {
      ++mismatches;
    }
    const bool exists = standing && ((superlinear && (f || s || ii)) || below);
    if (v.condition_i_first != f || v.condition_i_second != s || v.condition_ii != ii) ++mismatches;
    if ((v.verdict == VerdictKind::ExistenceInBall) != exists) ++mismatches;
    if (v.verdict == VerdictKind::ExistenceInBall) {
      const auto r = v.reason;
      const bool consistent = (r == ExistenceReason::ConditionI && superlinear && (f || s)) ||
                              (r == ExistenceReason::ConditionII && superlinear && ii) ||
                              (r == ExistenceReason::BelowHyperbola && below);
      if (!consistent) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("alpha = beta = 1: condition (i) is the Serrin curve form on 10^3 tuples") {
  // 1/(p+1) + 1/(q+1) >= 1 - 2/(N-2) max(1/(p+1), 1/(q+1))
  oracle::SplitMix rng(77);
  int mismatches = 0;
  for (int k = 0; k < 1000; ++k) {
    const int N = static_cast<int>(rng.range(3, 14));
    const Rational p(rng.range(1, 60), rng.range(1, 10));
    const Rational q(rng.range(1, 60), rng.range(1, 10));
    const Rational a = Rational(1) / (p + 1), b = Rational(1) / (q + 1);
    const bool serrin = a + b >= Rational(1) - Rational(2, N - 2) * max(a, b);
    auto [f, s] = condition_i(in(N, 1, 1, p, q));
    if ((f || s) != serrin) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("swap symmetry") {
  oracle::SplitMix rng(3);
  for (int k = 0; k < 500; ++k) {
    const Tuple t = oracle::random_tuple(rng, k % 2 == 0);
    const ClassifyInput x = in(static_cast<int>(t.N), static_cast<int>(t.a), static_cast<int>(t.b),
                               Rational(t.pn, t.pd), Rational(t.qn, t.qd));
    const ClassifyInput y = in(x.N, x.beta, x.alpha, x.q, x.p);
    const auto vx = verdict(x), vy = verdict(y);
    CHECK(vx.condition_i_first == vy.condition_i_second);
    CHECK(vx.condition_i_second == vy.condition_i_first);
    CHECK(vx.condition_ii == vy.condition_ii);
    CHECK(vx.hyperbola == vy.hyperbola);
    CHECK(vx.verdict == vy.verdict);
  }
}

TEST_CASE("exact exponent identities") {
  oracle::SplitMix rng(11);
  int checked = 0;
  for (int k = 0; k < 2000; ++k) {
    const Tuple t = oracle::random_tuple(rng, false);
    const ClassifyInput x = in(static_cast<int>(t.N), static_cast<int>(t.a), static_cast<int>(t.b),
                               Rational(t.pn, t.pd), Rational(t.qn, t.qd));
    const Rational pq1 = x.p * x.q - 1;
    const Exponents e = exponents(x);
    if (pq1.sign() <= 0) {
      CHECK_FALSE(e.tau.has_value());
      continue;
    }
    ++checked;
    REQUIRE(e.tau.has_value());
    CHECK(*e.tau * pq1 == Rational(2 * x.beta) * x.q + Rational(2 * x.alpha));
    CHECK(*e.sigma * pq1 == Rational(2 * x.alpha) * x.p + Rational(2 * x.beta));
    CHECK(*e.s21 * pq1 == Rational(2) * x.q + 4);
    CHECK(*e.t21 * pq1 == Rational(2) + Rational(4) * x.p);
    if (x.alpha == 2 && x.beta == 1) {
      CHECK(*e.tau == *e.s21);
      CHECK(*e.sigma == *e.t21);
    }
    if (x.p > Rational(1)) CHECK(*e.p_prime == x.p / (x.p - 1));
  }
  CHECK(checked > 500);
  const Exponents e = exponents(in(6, 2, 1, 2, 2));
  CHECK(*e.tau == Rational(8, 3));
  CHECK(*e.sigma == Rational(10, 3));
  CHECK(*e.p_prime == Rational(2));
}

TEST_CASE("verdict JSON line") {
  const std::string line = to_json_line(verdict(in(6, 2, 1, Rational(3, 2), 3)));
  CHECK(line.find('\n') == std::string::npos);
  const auto j = nlohmann::json::parse(line);
  CHECK(j["p"] == "3/2");
  CHECK(j["verdict"] == "ExistenceInBall");
  CHECK(j["hyperbola_position"] == "not-applicable");
  CHECK(j["exponents"]["tau"] == "20/7");
}
