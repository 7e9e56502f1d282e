#include "polyemden/radial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "polyemden/quadrature.hpp"

namespace polyemden {

RadialGrid::RadialGrid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 17) throw ValidationError("RadialGrid: at least 17 nodes (M >= 16) are required");
  if (nodes_.front() != 0.0) throw ValidationError("RadialGrid: first node must be exactly 0");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) throw ValidationError("RadialGrid: nodes must be strictly increasing");
  }
}

RadialGrid RadialGrid::uniform(std::size_t count, double r_max) {
  if (count < 17) throw ValidationError("RadialGrid: at least 17 nodes (M >= 16) are required");
  std::vector<double> nodes(count);
  const double m = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) nodes[i] = r_max * static_cast<double>(i) / m;
  nodes.back() = r_max;
  return RadialGrid(std::move(nodes));
}

ChainSystem ChainSystem::from(const ProblemParams& params) {
  return ChainSystem{params.N, params.alpha, params.beta, Closure::lane_emden(params)};
}

RadialProfile::RadialProfile(RadialGrid g, int a, int b) : grid(std::move(g)), alpha(a), beta(b) {
  const std::size_t n = grid.size();
  u.assign(a, std::vector<double>(n, 0.0));
  du.assign(a, std::vector<double>(n, 0.0));
  v.assign(b, std::vector<double>(n, 0.0));
  dv.assign(b, std::vector<double>(n, 0.0));
}

ChainState RadialProfile::state(std::size_t node) const {
  ChainState s(grid[node], alpha, beta);
  for (int k = 0; k < alpha; ++k) {
    s.u(k) = u[k][node];
    s.du(k) = du[k][node];
  }
  for (int k = 0; k < beta; ++k) {
    s.v(k) = v[k][node];
    s.dv(k) = dv[k][node];
  }
  return s;
}

void RadialProfile::set_state(std::size_t node, const ChainState& s) {
  for (int k = 0; k < alpha; ++k) {
    u[k][node] = s.u(k);
    du[k][node] = s.du(k);
  }
  for (int k = 0; k < beta; ++k) {
    v[k][node] = s.v(k);
    dv[k][node] = s.dv(k);
  }
}

double RadialProfile::sup_u() const {
  double m = 0.0;
  for (double x : u[0]) m = std::max(m, std::abs(x));
  return m;
}

double RadialProfile::sup_v() const {
  double m = 0.0;
  for (double x : v[0]) m = std::max(m, std::abs(x));
  return m;
}

void chain_rhs_raw(double r, std::span<const double> y, std::span<double> dydr, const ChainSystem& sys) {
  const int a = sys.alpha;
  const int b = sys.beta;
  const double u0 = y[0];
  const double v0 = y[2 * a];
  const double top_u = sys.closure.top_u(u0, v0);
  const double top_v = sys.closure.top_v(u0, v0);
  const double damp = static_cast<double>(sys.N - 1) / r;
  for (int k = 0; k < a; ++k) {
    const double next = (k + 1 < a) ? y[2 * (k + 1)] : top_u;
    dydr[2 * k] = y[2 * k + 1];
    dydr[2 * k + 1] = -next - damp * y[2 * k + 1];
  }
  for (int k = 0; k < b; ++k) {
    const std::size_t base = 2 * static_cast<std::size_t>(a + k);
    const double next = (k + 1 < b) ? y[base + 2] : top_v;
    dydr[base] = y[base + 1];
    dydr[base + 1] = -next - damp * y[base + 1];
  }
}

ChainState chain_rhs(const ChainState& state, const ChainSystem& system) {
  if (!(state.radius > 0.0)) throw ValidationError("chain_rhs: radius must be positive (use taylor_origin at 0)");
  ChainState d(state.radius, system.alpha, system.beta);
  chain_rhs_raw(state.radius, state.y, d.y, system);
  return d;
}

ChainState chain_rhs(const ChainState& state, const ProblemParams& params) {
  return chain_rhs(state, ChainSystem::from(params));
}

ChainState taylor_origin(std::span<const double> center, double r0, const ChainSystem& sys) {
  if (!(r0 > 0.0)) throw ValidationError("taylor_origin: r0 must be positive");
  const int a = sys.alpha;
  const int b = sys.beta;
  if (center.size() != static_cast<std::size_t>(a + b)) throw ValidationError("taylor_origin: center size mismatch");
  ChainState s(r0, a, b);
  const double n = static_cast<double>(sys.N);
  const double top_u = sys.closure.top_u(center[0], center[a]);
  const double top_v = sys.closure.top_v(center[0], center[a]);
  for (int k = 0; k < a; ++k) {
    const double next = (k + 1 < a) ? center[k + 1] : top_u;
    s.u(k) = center[k] - next * r0 * r0 / (2.0 * n);
    s.du(k) = -next * r0 / n;
  }
  for (int k = 0; k < b; ++k) {
    const double next = (k + 1 < b) ? center[a + k + 1] : top_v;
    s.v(k) = center[a + k] - next * r0 * r0 / (2.0 * n);
    s.dv(k) = -next * r0 / n;
  }
  return s;
}

double kernel_eval(double r, double s, int N) {
  if (N < 3) throw ValidationError("kernel_eval: N >= 3 required");
  if (s < 0.0 || s > r) throw ValidationError("kernel_eval: need 0 <= s <= r");
  if (s == 0.0) return 0.0;
  return s / static_cast<double>(N - 2) * (1.0 - std::pow(s / r, N - 2));
}

namespace {

constexpr std::size_t kPanels = 16;

double kernel_integral(const std::function<double(double)>& f, double r, int N) {
  if (r == 0.0) return 0.0;
  return integrate_composite([&](double s) { return kernel_eval(r, s, N) * f(s); }, 0.0, r, kPanels);
}

double volterra_integral(const std::function<double(double)>& f, double r, int N) {
  // r^(1-N) int_0^r s^(N-1) f = int_0^r (s/r)^(N-1) f, which stays bounded as r -> 0
  return integrate_composite([&](double s) { return std::pow(s / r, N - 1) * f(s); }, 0.0, r, kPanels);
}

std::size_t locate(const std::vector<double>& nodes, double r) {
  auto it = std::upper_bound(nodes.begin(), nodes.end(), r);
  std::size_t i = static_cast<std::size_t>(std::distance(nodes.begin(), it));
  if (i == 0) return 0;
  return std::min(i - 1, nodes.size() - 2);
}

}  // namespace

std::vector<double> inverse_laplacian_ivp(const std::function<double(double)>& f, double u_center, int N,
                                          std::span<const double> radii) {
  if (N < 3) throw ValidationError("inverse_laplacian_ivp: N >= 3 required");
  std::vector<double> out(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) out[i] = u_center - kernel_integral(f, radii[i], N);
  return out;
}

double interpolate_cubic(const RadialGrid& grid, std::span<const double> f, double r) {
  const auto& x = grid.nodes();
  if (f.size() != x.size()) throw ValidationError("interpolate_cubic: sample size mismatch");
  std::size_t i = locate(x, r);
  std::size_t lo = (i == 0) ? 0 : i - 1;
  lo = std::min(lo, x.size() - 4);
  double sum = 0.0;
  for (std::size_t j = lo; j < lo + 4; ++j) {
    double w = f[j];
    for (std::size_t m = lo; m < lo + 4; ++m) {
      if (m != j) w *= (r - x[m]) / (x[j] - x[m]);
    }
    sum += w;
  }
  return sum;
}

double interpolate_hermite(const RadialGrid& grid, std::span<const double> f, std::span<const double> df, double r) {
  const auto& x = grid.nodes();
  std::size_t i = locate(x, r);
  const double h = x[i + 1] - x[i];
  const double t = (r - x[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t, h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * f[i] + h10 * h * df[i] + h01 * f[i + 1] + h11 * h * df[i + 1];
}

std::vector<double> inverse_laplacian_ivp(const RadialGrid& grid, std::span<const double> f, double u_center, int N) {
  if (f.size() != grid.size()) throw ValidationError("inverse_laplacian_ivp: component does not match grid");
  auto interp = [&](double s) { return interpolate_cubic(grid, f, s); };
  return inverse_laplacian_ivp(interp, u_center, N, grid.nodes());
}

double volterra_derivative(const std::function<double(double)>& f, double r, int N) {
  if (!(r > 0.0)) throw ValidationError("volterra_derivative: r must be positive");
  return volterra_integral(f, r, N);
}

double volterra_derivative(const RadialGrid& grid, std::span<const double> f, double r, int N) {
  if (f.size() != grid.size()) throw ValidationError("volterra_derivative: component does not match grid");
  return volterra_derivative([&](double s) { return interpolate_cubic(grid, f, s); }, r, N);
}

std::vector<double> radial_derivatives(std::span<const double> values, std::span<const double> slopes, double r,
                                       int N, int max_order) {
  if (!(r > 0.0)) throw ValidationError("radial_derivatives: r must be positive");
  const int len = static_cast<int>(values.size());
  std::map<std::pair<int, int>, double> memo;
  auto binom = [](int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
  };
  // d^m/dr^m (1/r)
  auto inv_deriv = [r](int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return ((m % 2) ? -f : f) / std::pow(r, m + 1);
  };
  std::function<double(int, int)> D = [&](int k, int j) -> double {
    if (k >= len) throw ValidationError("radial_derivatives: order requires the chain closure");
    if (j == 0) return values[k];
    if (j == 1) return slopes[k];
    auto key = std::make_pair(k, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int m = j - 2;
    double s = -D(k + 1, m);
    double acc = 0.0;
    for (int i = 0; i <= m; ++i) acc += binom(m, i) * D(k, i + 1) * inv_deriv(m - i);
    s -= static_cast<double>(N - 1) * acc;
    memo[key] = s;
    return s;
  };
  std::vector<double> out(max_order + 1);
  for (int j = 0; j <= max_order; ++j) out[j] = D(0, j);
  return out;
}

}  // namespace polyemden
