#pragma once

#include <functional>
#include <vector>

#include "ek/special_functions.hpp"

namespace ek {

using ComplexFn = std::function<Complex(Complex)>;

/// order-th derivative of f at center from the Cauchy integral formula,
/// discretised by the trapezoidal rule on |z - center| = radius. f must be
/// analytic on the closed disk; nodes >= 32.
Complex cauchy_derivative(const ComplexFn& f, Complex center, int order, double radius,
                          int nodes = 32);

/// The quadrature points used by cauchy_derivative, in order.
std::vector<Complex> cauchy_nodes(Complex center, double radius, int nodes = 32);

/// order-th derivative (order >= 1) from f sampled at cauchy_nodes(center, radius, N).
Complex derivative_from_samples(const std::vector<Complex>& values, int order, double radius);

/// Taylor coefficients f^(a)(center) / a! for a < count, from one set of
/// `nodes` samples on the circle. The constant term is f(center) itself.
std::vector<Complex> taylor_coefficients(const ComplexFn& f, Complex center, int count,
                                         double radius, int nodes = 128);

} // namespace ek
