#pragma once

// Independent reference computations shared by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

/// Polynomial in x = r^2, coefficient k multiplies r^(2k).
using EvenPoly = std::vector<double>;

/// -Delta of sum a_k r^(2k) in N dimensions: Delta r^(2m) = 2m(2m + N - 2) r^(2m-2).
inline EvenPoly neg_laplacian(const EvenPoly& a, int N) {
  EvenPoly out(a.size() > 1 ? a.size() - 1 : 1, 0.0);
  for (std::size_t m = 1; m < a.size(); ++m) out[m - 1] = -a[m] * 2.0 * m * (2.0 * m + N - 2.0);
  return out;
}

/// (1 - r^2)^alpha.
inline EvenPoly one_minus_r2_pow(int alpha) {
  EvenPoly a{1.0};
  for (int k = 0; k < alpha; ++k) {
    EvenPoly b(a.size() + 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      b[i] += a[i];
      b[i + 1] -= a[i];
    }
    a = b;
  }
  return a;
}

inline double eval(const EvenPoly& a, double r) {
  double s = 0.0, x = 1.0;
  for (double c : a) {
    s += c * x;
    x *= r * r;
  }
  return s;
}

/// Center values ((-Delta)^k w)(0), k < alpha, for w = (1-r^2)^alpha / ((-Delta)^alpha (1-r^2)^alpha).
inline std::vector<double> kalpha_centers(int alpha, int N) {
  EvenPoly w = one_minus_r2_pow(alpha);
  EvenPoly top = w;
  for (int k = 0; k < alpha; ++k) top = neg_laplacian(top, N);
  const double scale = 1.0 / top[0];
  std::vector<double> c;
  EvenPoly cur = w;
  for (int k = 0; k < alpha; ++k) {
    c.push_back(cur[0] * scale);
    cur = neg_laplacian(cur, N);
  }
  return c;
}

/// Tiny deterministic generator (splitmix64) so oracle sweeps do not share the library RNG.
struct SplitMix {
  std::uint64_t s;
  explicit SplitMix(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Classifier inequalities cross-multiplied over integers: p = pn/pd, q = qn/qd, pd, qd > 0.
struct Tuple {
  std::int64_t N, a, b, pn, pd, qn, qd;
};

inline bool cond_i_first(const Tuple& t) {
  // (2 b q + N + 2 a p q - N p q) pd qd
  return 2 * t.b * t.qn * t.pd + t.N * t.pd * t.qd + 2 * t.a * t.pn * t.qn - t.N * t.pn * t.qn >= 0;
}
inline bool cond_i_second(const Tuple& t) {
  return 2 * t.a * t.pn * t.qd + t.N * t.pd * t.qd + 2 * t.b * t.pn * t.qn - t.N * t.pn * t.qn >= 0;
}
inline bool cond_ii(const Tuple& t) {
  if (!(t.N > 2 * t.a && t.N > 2 * t.b)) return false;
  auto below = [&](std::int64_t xn, std::int64_t xd) {
    // x < (N + 2a)/(N - 2b) and x < (N + 2b)/(N - 2a)
    return xn * (t.N - 2 * t.b) < xd * (t.N + 2 * t.a) && xn * (t.N - 2 * t.a) < xd * (t.N + 2 * t.b);
  };
  return below(t.pn, t.pd) && below(t.qn, t.qd);
}
// sign of 1/(p+1) + 1/(q+1) - (N - 2a)/N
inline int hyperbola_sign(const Tuple& t) {
  const std::int64_t lhs = t.N * (t.pd * (t.qn + t.qd) + t.qd * (t.pn + t.pd));
  const std::int64_t rhs = (t.N - 2 * t.a) * (t.pn + t.pd) * (t.qn + t.qd);
  return (lhs > rhs) - (lhs < rhs);
}

inline Tuple random_tuple(SplitMix& rng, bool equal_orders) {
  Tuple t{};
  t.N = rng.range(1, 14);
  t.a = rng.range(1, 4);
  t.b = equal_orders ? t.a : rng.range(1, 4);
  t.pd = rng.range(1, 12);
  t.qd = rng.range(1, 12);
  t.pn = rng.range(1, 6 * t.pd);
  t.qn = rng.range(1, 6 * t.qd);
  return t;
}

// Polynomials in ascending powers.
using Poly = std::vector<double>;

inline Poly deriv(const Poly& a) {
  Poly d(a.size() > 1 ? a.size() - 1 : 1, 0.0);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = a[k] * static_cast<double>(k);
  return d;
}
inline Poly axpy(double s, const Poly& a, const Poly& b) {  // s a + b
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += s * a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}
inline Poly shift(const Poly& a) {  // x a
  Poly out(a.size() + 1, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k + 1] = a[k];
  return out;
}
inline double peval(const Poly& a, double x) {
  double s = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) s = s * x + a[k];
  return s;
}

// f(rho) = P(x) e^{-b x}, x = rho^2: Delta f = [4x(P'' - 2bP' + b^2 P) + 2N(P' - bP)] e^{-bx}.
inline Poly laplace_gauss(const Poly& P, double b, int N) {
  const Poly d1 = deriv(P), d2 = deriv(d1);
  Poly inner = axpy(-2.0 * b, d1, d2);
  inner = axpy(b * b, P, inner);
  Poly out = shift(inner);
  for (double& c : out) c *= 4.0;
  return axpy(2.0 * N, axpy(-b, P, d1), out);
}

// h(t) = e^{-a t^2}: h^(i) = Q_i(t) e^{-a t^2}, Q_{i+1} = Q_i' - 2 a t Q_i.
inline std::vector<Poly> gauss_derivs(double a, int n) {
  std::vector<Poly> Q{{1.0}};
  for (int i = 0; i < n; ++i) Q.push_back(axpy(-2.0 * a, shift(Q.back()), deriv(Q.back())));
  return Q;
}

}  // namespace oracle
