#pragma once

// Exact classification of (N, alpha, beta, p, q) against the existence
// conditions for the Dirichlet system on the ball.

#include <optional>
#include <utility>
#include <string>

#include "polyemden/rational.hpp"

namespace polyemden {

struct ClassifyInput {
  int N = 5;
  int alpha = 1;
  int beta = 1;
  Rational p{2};
  Rational q{2};
};

enum class HyperbolaPosition { Below, On, Above, NotApplicable };

enum class VerdictKind { ExistenceInBall, RadialNonexistenceWholeSpace, NoInformation };

enum class ExistenceReason { None, ConditionI, ConditionII, BelowHyperbola };

struct Exponents {
  std::optional<Rational> tau, sigma;  ///< need p q > 1
  std::optional<Rational> s21, t21;    ///< (2q+4)/(pq-1), (2+4p)/(pq-1)
  std::optional<Rational> p_prime, q_prime;  ///< p/(p-1), need p > 1
};

struct RegionVerdict {
  ClassifyInput input;
  bool condition_i_first = false;
  bool condition_i_second = false;
  bool condition_ii = false;
  HyperbolaPosition hyperbola = HyperbolaPosition::NotApplicable;
  VerdictKind verdict = VerdictKind::NoInformation;
  ExistenceReason reason = ExistenceReason::None;
  bool whole_space_radial_nonexistence = false;  ///< some Liouville theorem applies
  Exponents exponents;
};

/// 2 beta q + N + 2 alpha p q - N p q >= 0 and 2 alpha p + N + 2 beta p q - N p q >= 0.
std::pair<bool, bool> condition_i(const ClassifyInput& in);

/// p, q < min{(N + 2 alpha)/(N - 2 beta), (N + 2 beta)/(N - 2 alpha)}; false unless N > 2 alpha, 2 beta.
bool condition_ii(const ClassifyInput& in);

/// 1/(p+1) + 1/(q+1) versus (N - 2 alpha)/N; throws ValidationError when alpha != beta.
HyperbolaPosition hyperbola_position(const ClassifyInput& in);

Exponents exponents(const ClassifyInput& in);

RegionVerdict verdict(const ClassifyInput& in);

std::string to_string(HyperbolaPosition h);
std::string to_string(VerdictKind v);
std::string to_string(ExistenceReason r);

/// One JSON object (single line).
std::string to_json_line(const RegionVerdict& v);

}  // namespace polyemden
