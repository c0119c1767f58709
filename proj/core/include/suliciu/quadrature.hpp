#pragma once

#include <cstddef>
#include <vector>

namespace suliciu::quad {

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n - 1.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(std::size_t n);

  std::size_t size() const { return nodes.size(); }

  /// Integral of f over [a, b].
  template <class F>
  double integrate(double a, double b, F&& f) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      acc += weights[i] * f(mid + half * nodes[i]);
    }
    return half * acc;
  }
};

}  // namespace suliciu::quad
