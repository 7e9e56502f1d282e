#pragma once

// Tools for the (alpha, beta) = (2, 1) uniqueness argument: the Volterra form
// of the triple U = (u, -Delta u, v), the scaling that matches two solutions at
// the origin, and the interleaving of zeros of their differences.

#include <array>
#include <string>
#include <vector>

#include "polyemden/quadrature.hpp"
#include "polyemden/shooting.hpp"

namespace polyemden {

/// U(r) = (u, -Delta u, v) and its radial derivative at each node.
struct TripleProfile {
  std::vector<double> r;
  std::array<std::vector<double>, 3> U;
  std::array<std::vector<double>, 3> dU;

  std::size_t size() const { return r.size(); }
  /// Cubic Hermite evaluation of component k at radius s in [r.front(), r.back()].
  double eval(int k, double s) const;
};

struct PicardOptions {
  int max_iter = 500;
  double tol = 1e-10;  ///< successive-iterate sup-difference, relative to max(1, sup |U_k|)
  double relaxation = 0.5;  ///< applied once the update norm stops decreasing
};

struct PicardResult {
  bool converged = false;
  int iterations = 0;
  double last_update = 0.0;
  bool relaxed = false;
  TripleProfile profile;
};

/// Iterates U <- U(0) - int_0^r K(r,s) F(U(s)) ds with F(x,y,z) = (y, |z|^q, |x|^p)
/// on the Gauss-Legendre nodes of `grid` (r = 0 prepended).
PicardResult picard_fixed_point(const std::array<double, 3>& center, const ProblemParams& params,
                                const PanelGrid& grid, const PicardOptions& opts = {});

/// Scaling exponents s = (2q+4)/(pq-1), t = (2+4p)/(pq-1) of the (2,1) system.
std::pair<double, double> uniqueness_exponents(const ProblemParams& params);

struct ScaleMatch {
  double lambda = 1.0;
  double s = 0.0;
  double t = 0.0;
  double r_max = 1.0;  ///< min(1, 1/lambda)
  TripleProfile profile;  ///< (w~, -Delta w~, z~) on [0, r_max]
  double residual = 0.0;  ///< relative sup deviation from re-integration
};

/// w~(r) = lambda^s w(lambda r), z~(r) = lambda^t z(lambda r) with w~(0) = target_u0.
ScaleMatch scale_match(const SolutionRecord& w, double target_u0, const ProblemParams& params,
                       std::size_t nodes = 513);

enum class Difference { U = 0, V = 1, LapU = 2 };  ///< u - w~, v - z~, Delta(u - w~)

std::string to_string(Difference d);

struct SignPattern {
  enum class Status { Identical, Consistent, ScheduleViolation };
  Status status = Status::Identical;
  double lambda = 1.0;
  double r_max = 1.0;
  std::vector<double> radii;            ///< R_1 < R_2 < ...
  std::vector<Difference> crossing;     ///< which difference vanishes at R_k
  std::vector<std::array<int, 3>> signs;  ///< signs on (R_{k-1}, R_k), last entry up to r_max
  std::array<double, 3> rel_sup{};      ///< sup |difference| / sup |component of u|
  std::string message;
};

std::string to_string(SignPattern::Status s);

/// Matches w to u at the origin and follows the zeros of the three differences.
/// Crossings must cycle v - z~, Delta(u - w~), u - w~; the cycle starts at
/// v - z~ when v - z~ and Delta(u - w~) share a sign at the origin and at
/// Delta(u - w~) otherwise.  All relative sup differences below `identical_rel`
/// give Status::Identical.
SignPattern sign_pattern_trace(const SolutionRecord& u_rec, const SolutionRecord& w_rec, const ProblemParams& params,
                               double identical_rel = 1e-8);

struct UniquenessScan {
  std::size_t count = 0;
  std::vector<SolutionRecord> records;
  std::size_t hits = 0;             ///< converged nontrivial starts before deduplication
  std::vector<SignPattern> patterns;  ///< first hit against each other hit
  bool all_identical = true;
};

/// multistart_search plus pairwise pattern traces; count > 1 contradicts uniqueness.
UniquenessScan uniqueness_scan(const ProblemParams& params, const Box& box, int n_starts,
                               const MultistartOptions& opts = {});

}  // namespace polyemden
