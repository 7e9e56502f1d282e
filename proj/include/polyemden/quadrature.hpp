#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace polyemden {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(std::size_t n);
  std::size_t size() const { return nodes.size(); }
};

/// Shared 8-point rule used by every composite kernel integral.
const GaussLegendreRule& gauss8();

/// Composite Gauss-Legendre over [a, b] split into `panels` equal panels.
double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           std::size_t panels, const GaussLegendreRule& rule = gauss8());

/// Panel discretization of [a, b] with the nodes of `rule` inside each panel.
///
/// Supports spectral interpolation and cumulative integration of nodal data,
/// which is what the Volterra fixed-point iteration needs.
class PanelGrid {
 public:
  PanelGrid(double a, double b, std::size_t panels, const GaussLegendreRule& rule = gauss8());

  std::size_t panels() const { return panels_; }
  std::size_t order() const { return rule_->size(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<double>& points() const { return points_; }
  double lower() const { return a_; }
  double upper() const { return b_; }

  /// Running integral F(x_i) = int_a^{x_i} f for nodal samples f(x_i).
  std::vector<double> cumulative(std::span<const double> samples) const;

  /// Full integral of nodal samples over [a, b].
  double total(std::span<const double> samples) const;

  /// Evaluates the per-panel interpolating polynomial of the samples at x.
  double interpolate(std::span<const double> samples, double x) const;

 private:
  double a_, b_, h_;
  std::size_t panels_;
  const GaussLegendreRule* rule_;
  std::vector<double> points_;
  // cum_[i][j] = int_{-1}^{t_i} L_j(t) dt on the reference panel
  std::vector<std::vector<double>> cum_;
  std::vector<double> bary_;
};

}  // namespace polyemden
