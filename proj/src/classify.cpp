#include "polyemden/classify.hpp"

#include <json.hpp>

#include "polyemden/params.hpp"

namespace polyemden {

std::pair<bool, bool> condition_i(const ClassifyInput& in) {
  const Rational N(in.N), a(in.alpha), b(in.beta);
  const Rational pq = in.p * in.q;
  const Rational first = 2 * b * in.q + N + 2 * a * pq - N * pq;
  const Rational second = 2 * a * in.p + N + 2 * b * pq - N * pq;
  return {first.sign() >= 0, second.sign() >= 0};
}

bool condition_ii(const ClassifyInput& in) {
  if (in.N <= 2 * in.alpha || in.N <= 2 * in.beta) return false;
  const Rational bound = min(Rational(in.N + 2 * in.alpha, in.N - 2 * in.beta),
                             Rational(in.N + 2 * in.beta, in.N - 2 * in.alpha));
  return in.p < bound && in.q < bound;
}

HyperbolaPosition hyperbola_position(const ClassifyInput& in) {
  if (in.alpha != in.beta) throw ValidationError("hyperbola_position requires alpha == beta");
  const Rational lhs = Rational(1) / (in.p + 1) + Rational(1) / (in.q + 1);
  const Rational rhs(in.N - 2 * in.alpha, in.N);
  if (lhs > rhs) return HyperbolaPosition::Below;
  if (lhs == rhs) return HyperbolaPosition::On;
  return HyperbolaPosition::Above;
}

Exponents exponents(const ClassifyInput& in) {
  Exponents e;
  const Rational d = in.p * in.q - 1;
  if (d.sign() > 0) {
    e.tau = (2 * Rational(in.beta) * in.q + 2 * in.alpha) / d;
    e.sigma = (2 * Rational(in.alpha) * in.p + 2 * in.beta) / d;
    e.s21 = (2 * in.q + 4) / d;
    e.t21 = (2 + 4 * in.p) / d;
  }
  if (in.p > Rational(1)) e.p_prime = in.p / (in.p - 1);
  if (in.q > Rational(1)) e.q_prime = in.q / (in.q - 1);
  return e;
}

RegionVerdict verdict(const ClassifyInput& in) {
  if (in.N < 1 || in.alpha < 1 || in.beta < 1) throw ValidationError("N, alpha, beta must be positive");
  if (in.p.sign() <= 0 || in.q.sign() <= 0) throw ValidationError("p and q must be positive");
  RegionVerdict v;
  v.input = in;
  std::tie(v.condition_i_first, v.condition_i_second) = condition_i(in);
  v.condition_ii = condition_ii(in);
  if (in.alpha == in.beta) v.hyperbola = hyperbola_position(in);
  v.exponents = exponents(in);

  const bool standing = in.N > 2 * in.alpha && in.N > 2 * in.beta;
  const bool super_linear = in.p > Rational(1) && in.q > Rational(1);
  const bool at_least_one = in.p >= Rational(1) && in.q >= Rational(1) && !(in.p == 1 && in.q == 1);
  const bool cond_i = v.condition_i_first || v.condition_i_second;
  const bool below = v.hyperbola == HyperbolaPosition::Below && at_least_one;

  v.whole_space_radial_nonexistence = (standing && super_linear && (cond_i || v.condition_ii)) || below;

  if (standing && super_linear && cond_i) {
    v.verdict = VerdictKind::ExistenceInBall;
    v.reason = ExistenceReason::ConditionI;
  } else if (standing && super_linear && v.condition_ii) {
    v.verdict = VerdictKind::ExistenceInBall;
    v.reason = ExistenceReason::ConditionII;
  } else if (standing && below) {
    v.verdict = VerdictKind::ExistenceInBall;
    v.reason = ExistenceReason::BelowHyperbola;
  } else if (below) {
    v.verdict = VerdictKind::RadialNonexistenceWholeSpace;
  }
  return v;
}

std::string to_string(HyperbolaPosition h) {
  switch (h) {
    case HyperbolaPosition::Below: return "below";
    case HyperbolaPosition::On: return "on";
    case HyperbolaPosition::Above: return "above";
    case HyperbolaPosition::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::ExistenceInBall: return "ExistenceInBall";
    case VerdictKind::RadialNonexistenceWholeSpace: return "RadialNonexistenceWholeSpace";
    case VerdictKind::NoInformation: return "NoInformation";
  }
  return "unknown";
}

std::string to_string(ExistenceReason r) {
  switch (r) {
    case ExistenceReason::None: return "";
    case ExistenceReason::ConditionI: return "condition_i";
    case ExistenceReason::ConditionII: return "condition_ii";
    case ExistenceReason::BelowHyperbola: return "below_hyperbola";
  }
  return "unknown";
}

std::string to_json_line(const RegionVerdict& v) {
  using nlohmann::json;
  auto opt = [](const std::optional<Rational>& r) -> json { return r ? json(r->str()) : json(nullptr); };
  json j;
  j["N"] = v.input.N;
  j["alpha"] = v.input.alpha;
  j["beta"] = v.input.beta;
  j["p"] = v.input.p.str();
  j["q"] = v.input.q.str();
  j["condition_i_first"] = v.condition_i_first;
  j["condition_i_second"] = v.condition_i_second;
  j["condition_ii"] = v.condition_ii;
  j["hyperbola_position"] = to_string(v.hyperbola);
  j["verdict"] = to_string(v.verdict);
  j["reason"] = to_string(v.reason);
  j["whole_space_radial_nonexistence"] = v.whole_space_radial_nonexistence;
  j["exponents"] = {{"tau", opt(v.exponents.tau)},         {"sigma", opt(v.exponents.sigma)},
                    {"s21", opt(v.exponents.s21)},         {"t21", opt(v.exponents.t21)},
                    {"p_prime", opt(v.exponents.p_prime)}, {"q_prime", opt(v.exponents.q_prime)}};
  return j.dump();
}

}  // namespace polyemden
