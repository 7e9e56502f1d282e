#include "polyemden/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyemden {

GaussLegendreRule::GaussLegendreRule(std::size_t n) : nodes(n), weights(n) {
  if (n == 0) throw std::invalid_argument("GaussLegendreRule: n must be positive");
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / static_cast<double>(j);
      }
      pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

const GaussLegendreRule& gauss8() {
  static const GaussLegendreRule rule(8);
  return rule;
}

double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           std::size_t panels, const GaussLegendreRule& rule) {
  if (panels == 0) throw std::invalid_argument("integrate_composite: need at least one panel");
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    const double mid = a + (static_cast<double>(k) + 0.5) * h;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    sum += 0.5 * h * panel;
  }
  return sum;
}

PanelGrid::PanelGrid(double a, double b, std::size_t panels, const GaussLegendreRule& rule)
    : a_(a), b_(b), h_((b - a) / static_cast<double>(panels)), panels_(panels), rule_(&rule) {
  if (panels == 0 || !(b > a)) throw std::invalid_argument("PanelGrid: need b > a and panels > 0");
  const std::size_t n = rule.size();
  points_.reserve(panels * n);
  for (std::size_t k = 0; k < panels; ++k) {
    const double mid = a + (static_cast<double>(k) + 0.5) * h_;
    for (std::size_t i = 0; i < n; ++i) points_.push_back(mid + 0.5 * h_ * rule.nodes[i]);
  }

  // Integrate each Lagrange basis polynomial from -1 to every node with a
  // rule of the same size mapped onto [-1, t_i]; exact for degree 2n-1.
  auto lagrange = [&](std::size_t j, double t) {
    double v = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      if (m != j) v *= (t - rule.nodes[m]) / (rule.nodes[j] - rule.nodes[m]);
    }
    return v;
  };
  cum_.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = rule.nodes[i];
    const double half = 0.5 * (hi + 1.0);
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t m = 0; m < n; ++m) {
        s += rule.weights[m] * lagrange(j, -1.0 + half * (rule.nodes[m] + 1.0));
      }
      cum_[i][j] = half * s;
    }
  }
  bary_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double w = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      if (m != j) w *= rule.nodes[j] - rule.nodes[m];
    }
    bary_[j] = 1.0 / w;
  }
}

std::vector<double> PanelGrid::cumulative(std::span<const double> samples) const {
  if (samples.size() != points_.size()) throw std::invalid_argument("PanelGrid: sample size mismatch");
  const std::size_t n = order();
  std::vector<double> out(points_.size());
  double base = 0.0;
  for (std::size_t k = 0; k < panels_; ++k) {
    const double* f = samples.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += cum_[i][j] * f[j];
      out[k * n + i] = base + 0.5 * h_ * s;
    }
    double panel = 0.0;
    for (std::size_t j = 0; j < n; ++j) panel += rule_->weights[j] * f[j];
    base += 0.5 * h_ * panel;
  }
  return out;
}

double PanelGrid::total(std::span<const double> samples) const {
  if (samples.size() != points_.size()) throw std::invalid_argument("PanelGrid: sample size mismatch");
  const std::size_t n = order();
  double sum = 0.0;
  for (std::size_t k = 0; k < panels_; ++k) {
    double panel = 0.0;
    for (std::size_t j = 0; j < n; ++j) panel += rule_->weights[j] * samples[k * n + j];
    sum += 0.5 * h_ * panel;
  }
  return sum;
}

double PanelGrid::interpolate(std::span<const double> samples, double x) const {
  const std::size_t n = order();
  auto k = static_cast<std::size_t>(std::clamp((x - a_) / h_, 0.0, static_cast<double>(panels_) - 0.5));
  k = std::min(k, panels_ - 1);
  const double mid = a_ + (static_cast<double>(k) + 0.5) * h_;
  const double t = (x - mid) / (0.5 * h_);
  const double* f = samples.data() + k * n;
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = t - rule_->nodes[j];
    if (d == 0.0) return f[j];
    const double w = bary_[j] / d;
    num += w * f[j];
    den += w;
  }
  return num / den;
}

}  // namespace polyemden
