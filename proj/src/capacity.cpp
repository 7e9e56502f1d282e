#include "polyemden/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "polyemden/quadrature.hpp"

namespace polyemden {

CoeffTable coeff_recursion(int s, int N) {
  if (s < 1) throw ValidationError("coeff_recursion requires s >= 1");
  // c[j] multiplies h^(j) t^-(2 level - j); index 0 stays zero from level 1 on
  std::vector<Rational> c{Rational(0), Rational(N - 1), Rational(1)};
  for (int level = 1; level < s; ++level) {
    const int m = 2 * level;
    std::vector<Rational> d(static_cast<std::size_t>(m + 2), Rational(0));
    for (int j = 0; j <= m + 1; ++j) {
      if (j >= 1) d[j] += c[j - 1];
      if (j <= m) d[j] += Rational(j - m) * c[j];
    }
    std::vector<Rational> dd(static_cast<std::size_t>(m + 3), Rational(0));
    for (int j = 0; j <= m + 2; ++j) {
      if (j >= 1) dd[j] += d[j - 1];
      if (j <= m + 1) dd[j] += Rational(j - m - 1) * d[j];
    }
    std::vector<Rational> next(static_cast<std::size_t>(m + 3), Rational(0));
    for (int j = 0; j <= m + 2; ++j) next[j] = dd[j] + (j <= m + 1 ? Rational(N - 1) * d[j] : Rational(0));
    c = std::move(next);
  }
  CoeffTable t;
  t.s = s;
  t.N = N;
  t.coeffs.assign(c.begin() + 1, c.end());
  return t;
}

namespace {

// Truncated Taylor series a_0 + a_1 h + ... + a_n h^n.
using Jet = std::vector<double>;

Jet jet_div(const Jet& a, const Jet& b) {
  Jet c(a.size(), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    double s = a[k];
    for (std::size_t i = 1; i <= k; ++i) s -= b[i] * c[k - i];
    c[k] = s / b[0];
  }
  return c;
}

Jet jet_exp(const Jet& a) {
  Jet e(a.size(), 0.0);
  e[0] = std::exp(a[0]);
  for (std::size_t k = 1; k < e.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

Jet jet_log(const Jet& a) {
  Jet l(a.size(), 0.0);
  l[0] = std::log(a[0]);
  for (std::size_t k = 1; k < l.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j < k; ++j) s += static_cast<double>(j) * l[j] * a[k - j];
    l[k] = (a[k] - s / static_cast<double>(k)) / a[0];
  }
  return l;
}

// g(y) = exp(-1/y) for y > 0; below 1/700 every coefficient is beneath 1e-250
Jet g_jet(const Jet& y) {
  if (!(y[0] > 1.0 / 700.0)) return Jet(y.size(), 0.0);
  Jet one(y.size(), 0.0);
  one[0] = 1.0;
  Jet inv = jet_div(one, y);
  for (double& x : inv) x = -x;
  return jet_exp(inv);
}

Jet bump_jet(double x, int order) {
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  Jet out(n, 0.0);
  if (x <= 1.0) {
    out[0] = 1.0;
    return out;
  }
  if (x >= 2.0) return out;
  Jet a(n, 0.0), b(n, 0.0);
  a[0] = 2.0 - x;
  if (n > 1) a[1] = -1.0;
  b[0] = x - 1.0;
  if (n > 1) b[1] = 1.0;
  const Jet ga = g_jet(a), gb = g_jet(b);
  Jet den(n);
  for (std::size_t k = 0; k < n; ++k) den[k] = ga[k] + gb[k];
  return jet_div(ga, den);
}

std::vector<double> jet_to_derivatives(const Jet& j) {
  std::vector<double> d(j.size());
  double f = 1.0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (k > 0) f *= static_cast<double>(k);
    d[k] = j[k] * f;
  }
  return d;
}

using Multiset = std::vector<int>;  // sorted derivative orders of the psi factors
using CompositionTerms = std::map<Multiset, double>;

// terms[i] gives h^(i) / psi^(gamma - i) as a polynomial in psi, psi', ...
std::vector<CompositionTerms> composition_table(double gamma, int order) {
  std::vector<CompositionTerms> terms(static_cast<std::size_t>(order) + 1);
  if (order >= 1) terms[1][{1}] = gamma;
  for (int i = 1; i < order; ++i) {
    CompositionTerms& next = terms[i + 1];
    for (const auto& [K, cK] : terms[i]) {
      for (std::size_t j = 0; j < K.size(); ++j) {
        if (j > 0 && K[j] == K[j - 1]) continue;  // equal entries differentiate identically
        const auto mult = static_cast<double>(std::count(K.begin(), K.end(), K[j]));
        Multiset L = K;
        L[j] += 1;
        L.push_back(0);
        std::sort(L.begin(), L.end());
        next[L] += mult * cK;
      }
      Multiset L = K;
      L.push_back(1);
      std::sort(L.begin(), L.end());
      next[L] += (gamma - i) * cK;
    }
  }
  return terms;
}

// P_i = h^(i) / psi^(gamma - i) for i = 1..order
std::vector<double> composition_polys(const std::vector<CompositionTerms>& table, const std::vector<double>& dpsi) {
  std::vector<double> P(table.size(), 0.0);
  for (std::size_t i = 1; i < table.size(); ++i) {
    for (const auto& [K, cK] : table[i]) {
      double prod = cK;
      for (int k : K) prod *= dpsi[static_cast<std::size_t>(k)];
      P[i] += prod;
    }
  }
  return P;
}

void check_order(const CutoffSpec& spec, int order) {
  if (order < 0 || order > spec.budget) throw ValidationError("derivative order exceeds the cutoff budget");
  if (!(spec.gamma > 0.0)) throw ValidationError("gamma must be positive");
}

}  // namespace

double bump(double x) { return bump_jet(x, 0)[0]; }

std::vector<double> bump_derivatives(double x, int order) {
  if (order < 0) throw ValidationError("order must be >= 0");
  return jet_to_derivatives(bump_jet(x, order));
}

double default_gamma(const ProblemParams& params) {
  if (!(params.p > 1.0) || !(params.q > 1.0)) throw ValidationError("default_gamma requires p, q > 1");
  const double pp = params.p / (params.p - 1.0);
  const double qq = params.q / (params.q - 1.0);
  return std::ceil(std::max(2.0 * params.alpha * pp, 2.0 * params.beta * qq)) + 1.0;
}

std::vector<double> cutoff_derivatives(const CutoffSpec& spec, int order, double x, DerivativePath path) {
  check_order(spec, order);
  std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
  if (x <= 1.0) {
    out[0] = 1.0;
    return out;
  }
  if (x >= 2.0) return out;
  const Jet psi = bump_jet(x, order);
  if (!(psi[0] > 0.0)) return out;
  if (path == DerivativePath::Direct) {
    Jet l = jet_log(psi);
    for (double& c : l) c *= spec.gamma;
    return jet_to_derivatives(jet_exp(l));
  }
  const std::vector<double> dpsi = jet_to_derivatives(psi);
  const std::vector<double> P = composition_polys(composition_table(spec.gamma, order), dpsi);
  out[0] = std::pow(psi[0], spec.gamma);
  for (int i = 1; i <= order; ++i) out[i] = P[i] * std::pow(psi[0], spec.gamma - i);
  return out;
}

double laplacian_power_cutoff(const CutoffSpec& spec, int s, double rho, double R, int N) {
  const CoeffTable tab = coeff_recursion(s, N);
  const std::vector<double> h = cutoff_derivatives(spec, 2 * s, rho / R);
  double sum = 0.0;
  for (int i = 1; i <= 2 * s; ++i) sum += tab.c(i).to_double() * h[i] / (std::pow(R, i) * std::pow(rho, 2 * s - i));
  return sum;
}

double sphere_area(int N) {
  if (N < 1) throw ValidationError("N must be >= 1");
  // Gamma(N/2) from Gamma(1) = 1 or Gamma(1/2) = sqrt(pi)
  double g = (N % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (double x = (N % 2 == 0) ? 1.0 : 0.5; x < 0.5 * N - 0.25; x += 1.0) g *= x;
  return 2.0 * std::pow(std::numbers::pi, 0.5 * N) / g;
}

namespace {

// psi^(gamma - 2 s r) |Q|^r with Delta^s phi = psi^(gamma - 2s) Q, which stays finite where psi -> 0
struct CapIntegrand {
  CutoffSpec spec;
  int s;
  double r;
  double R;
  int N;
  std::vector<double> c;
  std::vector<CompositionTerms> table;

  CapIntegrand(const CutoffSpec& sp, int s_, double r_, double R_, int N_)
      : spec(sp), s(s_), r(r_), R(R_), N(N_), table(composition_table(sp.gamma, 2 * s_)) {
    for (const Rational& x : coeff_recursion(s, N).coeffs) c.push_back(x.to_double());
  }

  double operator()(double rho) const {
    const double x = rho / R;
    if (x <= 1.0 || x >= 2.0) return 0.0;
    const Jet psi = bump_jet(x, 2 * s);
    if (!(psi[0] > 0.0)) return 0.0;
    const std::vector<double> P = composition_polys(table, jet_to_derivatives(psi));
    double Q = 0.0;
    for (int i = 1; i <= 2 * s; ++i) {
      Q += c[i - 1] * std::pow(psi[0], 2 * s - i) * P[i] / (std::pow(R, i) * std::pow(rho, 2 * s - i));
    }
    return std::pow(psi[0], spec.gamma - 2.0 * s * r) * std::pow(std::abs(Q), r) * std::pow(rho, N - 1);
  }
};

}  // namespace

double capacity_integral(const CutoffSpec& spec, int s, double r_exp, double R, int N, const QuadratureSpec& quad) {
  if (s < 1) throw ValidationError("s must be >= 1");
  if (2 * s > spec.budget) throw ValidationError("derivative order exceeds the cutoff budget");
  if (!(spec.gamma > 2.0 * s * r_exp)) throw ValidationError("capacity requires gamma > 2 s r");
  if (!(R > 0.0)) throw ValidationError("R must be positive");
  if (!(r_exp >= 1.0)) throw ValidationError("capacity exponent must be >= 1");
  const CapIntegrand f(spec, s, r_exp, R, N);
  const GaussLegendreRule rule(static_cast<std::size_t>(quad.points));
  const double v = sphere_area(N) * integrate_composite(std::cref(f), R, 2.0 * R, static_cast<std::size_t>(quad.panels), rule);
  if (!std::isfinite(v)) throw NumericalError("capacity integral is not finite");
  return v;
}

CapacityReport decay_slope(const std::vector<double>& R_values, const std::vector<double>& cap_values,
                           double theoretical_slope) {
  if (R_values.size() != cap_values.size()) throw ValidationError("degenerate fit: length mismatch");
  if (R_values.size() < 4) throw ValidationError("degenerate fit: need at least 4 radii");
  const auto [lo, hi] = std::minmax_element(R_values.begin(), R_values.end());
  if (!(*lo > 0.0) || !(*hi / *lo >= 100.0 * (1.0 - 1e-12))) throw ValidationError("degenerate fit: radii must span two decades");
  const std::size_t n = R_values.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cap_values[i] > 0.0)) throw ValidationError("degenerate fit: capacities must be positive");
    const double x = std::log(R_values[i]), y = std::log(cap_values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = static_cast<double>(n) * sxx - sx * sx;
  if (!(std::abs(den) > 0.0)) throw ValidationError("degenerate fit");
  CapacityReport rep;
  rep.R_values = R_values;
  rep.cap_values = cap_values;
  rep.fitted_slope = (static_cast<double>(n) * sxy - sx * sy) / den;
  rep.intercept = (sy - rep.fitted_slope * sx) / static_cast<double>(n);
  rep.theoretical_slope = theoretical_slope;
  for (std::size_t i = 0; i < n; ++i) {
    const double model = std::exp(rep.intercept + rep.fitted_slope * std::log(R_values[i]));
    rep.max_relative_fit_residual = std::max(rep.max_relative_fit_residual, std::abs(cap_values[i] / model - 1.0));
  }
  return rep;
}

CapacityReport capacity_sweep(const CutoffSpec& spec, int s, double r_exp, int N, const std::vector<double>& R_values,
                              const QuadratureSpec& quad) {
  std::vector<double> caps;
  for (double R : R_values) caps.push_back(capacity_integral(spec, s, r_exp, R, N, quad));
  return decay_slope(R_values, caps, N - 2.0 * s * r_exp);
}

std::pair<double, double> nonexistence_exponent(const ProblemParams& params) {
  const double d = params.p * params.q - 1.0;
  if (!(d > 0.0)) throw ValidationError("nonexistence_exponent requires p*q > 1");
  const double N = params.N, a = params.alpha, b = params.beta, p = params.p, q = params.q;
  return {(2 * b * q + N + 2 * a * p * q - N * p * q) / d, (2 * a * p + N + 2 * b * p * q - N * p * q) / d};
}

std::pair<Rational, Rational> nonexistence_exponent(const ClassifyInput& in) {
  const Rational d = in.p * in.q - 1;
  if (d.sign() <= 0) throw ValidationError("nonexistence_exponent requires p*q > 1");
  const Rational N(in.N), a(in.alpha), b(in.beta), pq = in.p * in.q;
  return {(2 * b * in.q + N + 2 * a * pq - N * pq) / d, (2 * a * in.p + N + 2 * b * pq - N * pq) / d};
}

HolderChainReport holder_chain_check(const RadialFunction& u, const RadialFunction& v, const ProblemParams& params,
                                     double R, const CutoffSpec& spec, const QuadratureSpec& quad) {
  if (!(params.p > 1.0) || !(params.q > 1.0)) throw ValidationError("Hoelder chain requires p, q > 1");
  if (!(R > 0.0)) throw ValidationError("R must be positive");
  const double p = params.p, q = params.q;
  const double pp = p / (p - 1.0), qq = q / (q - 1.0);
  const int N = params.N;
  const GaussLegendreRule rule(static_cast<std::size_t>(quad.points));
  const auto panels = static_cast<std::size_t>(quad.panels);
  const double omega = sphere_area(N);

  auto phi = [&](double rho) { return std::pow(bump(rho / R), spec.gamma); };
  auto over_ball = [&](const std::function<double(double)>& f) {
    auto g = [&](double rho) { return f(rho) * std::pow(rho, N - 1); };
    return omega * (integrate_composite(g, 0.0, R, panels, rule) + integrate_composite(g, R, 2.0 * R, panels, rule));
  };
  auto over_annulus = [&](const std::function<double(double)>& f) {
    auto g = [&](double rho) { return f(rho) * std::pow(rho, N - 1); };
    return omega * integrate_composite(g, R, 2.0 * R, panels, rule);
  };
  const double sign_a = (params.alpha % 2 == 0) ? 1.0 : -1.0;
  const double sign_b = (params.beta % 2 == 0) ? 1.0 : -1.0;

  HolderChainReport rep;
  const double vq_phi = over_ball([&](double r) { return std::pow(std::abs(v(r)), q) * phi(r); });
  const double up_phi = over_ball([&](double r) { return std::pow(std::abs(u(r)), p) * phi(r); });
  const double u_La = over_annulus([&](double r) { return u(r) * sign_a * laplacian_power_cutoff(spec, params.alpha, r, R, N); });
  const double v_Lb = over_annulus([&](double r) { return v(r) * sign_b * laplacian_power_cutoff(spec, params.beta, r, R, N); });
  rep.cap_alpha = capacity_integral(spec, params.alpha, pp, R, N, quad);
  rep.cap_beta = capacity_integral(spec, params.beta, qq, R, N, quad);

  const double ca = std::pow(rep.cap_alpha, 1.0 / pp);
  rep.A = vq_phi;
  rep.B = u_La;
  rep.C = std::pow(up_phi, 1.0 / p) * ca;
  rep.D = std::pow(std::max(v_Lb, 0.0), 1.0 / p) * ca;
  rep.E = std::pow(vq_phi, 1.0 / (p * q)) * std::pow(rep.cap_beta, 1.0 / (p * qq)) * ca;
  const double vals[5] = {rep.A, rep.B, rep.C, rep.D, rep.E};
  for (double x : vals) {
    if (!std::isfinite(x)) throw NumericalError("Hoelder chain: integrability failure");
  }
  rep.ok = true;
  for (int k = 0; k < 4; ++k) {
    rep.holds[k] = vals[k] <= vals[k + 1] + rep.rel_tol * std::max(std::abs(vals[k]), std::abs(vals[k + 1])) + 1e-300;
    rep.ok = rep.ok && rep.holds[k];
  }
  return rep;
}

}  // namespace polyemden
