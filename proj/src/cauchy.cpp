#include "ek/cauchy.hpp"

#include <cmath>

#include "ek/errors.hpp"

namespace ek {
namespace {

std::vector<Complex> circle_samples(const ComplexFn& f, Complex center, double radius,
                                    int nodes) {
  auto values = cauchy_nodes(center, radius, nodes);
  for (auto& v : values)
    v = f(v);
  return values;
}

// (1/N) sum_j values[j] e^{-2 pi i j a / N} / radius^a
Complex coefficient(const std::vector<Complex>& values, int a, double radius) {
  const int n = static_cast<int>(values.size());
  Complex sum = 0.0;
  for (int j = 0; j < n; ++j)
    sum += values[j] * std::polar(1.0, -2.0 * pi * ((static_cast<long>(j) * a) % n) / n);
  return sum / (static_cast<double>(n) * std::pow(radius, a));
}

} // namespace

std::vector<Complex> cauchy_nodes(Complex center, double radius, int nodes) {
  if (nodes < 32)
    throw PreconditionError("Cauchy quadrature needs at least 32 nodes");
  if (!(radius > 0.0))
    throw PreconditionError("Cauchy quadrature needs a positive radius");
  std::vector<Complex> points(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j)
    points[j] = center + std::polar(radius, 2.0 * pi * j / nodes);
  return points;
}

Complex derivative_from_samples(const std::vector<Complex>& values, int order, double radius) {
  if (values.size() < 32)
    throw PreconditionError("Cauchy quadrature needs at least 32 nodes");
  if (order < 1)
    throw PreconditionError("derivative order must be positive");
  return coefficient(values, order, radius) * std::tgamma(order + 1.0);
}

Complex cauchy_derivative(const ComplexFn& f, Complex center, int order, double radius,
                          int nodes) {
  if (order < 0)
    throw PreconditionError("derivative order must be non-negative");
  if (order == 0)
    return f(center);
  return derivative_from_samples(circle_samples(f, center, radius, nodes), order, radius);
}

std::vector<Complex> taylor_coefficients(const ComplexFn& f, Complex center, int count,
                                         double radius, int nodes) {
  if (count < 1)
    return {};
  if (count > nodes / 2)
    throw PreconditionError("too few quadrature nodes for the requested coefficients");
  const auto values = circle_samples(f, center, radius, nodes);
  std::vector<Complex> coeffs(static_cast<std::size_t>(count));
  coeffs[0] = f(center);
  for (int a = 1; a < count; ++a)
    coeffs[a] = coefficient(values, a, radius);
  return coeffs;
}

} // namespace ek
