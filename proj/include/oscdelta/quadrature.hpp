#pragma once

#include <functional>

namespace oscdelta {

/// Tanh-sinh (double-exponential) quadrature of f on the open interval (a, b).
///
/// The integrand receives both the abscissa x and its distance d to the
/// nearer endpoint, so integrable endpoint singularities can be evaluated
/// without cancellation (x itself rounds to the endpoint once d < eps*|b-a|).
/// Refines the node spacing until two consecutive levels agree to `tol`;
/// throws std::runtime_error if `max_level` refinements do not suffice.
double tanh_sinh(const std::function<double(double x, double d)>& f, double a, double b,
                 double tol = 1e-11, int max_level = 14);

}  // namespace oscdelta
