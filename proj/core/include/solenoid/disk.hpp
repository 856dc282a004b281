#pragma once

#include <complex>
#include <vector>

namespace solenoid::disk {

using Point = std::complex<double>;

/// Hyperbolic distance in the Poincaré model.
double dist(const Point& z, const Point& w);

/// Moebius map sending a to 0 (an isometry).
Point to_origin(const Point& a, const Point& z);

/// Moebius map sending 0 to a (inverse of to_origin).
Point from_origin(const Point& a, const Point& z);

/// Point at fraction t of the geodesic from x to y (t = 1 lands on y).
Point geodesic_point(const Point& x, const Point& y, double t);

/// Disk automorphism z -> e^{i theta} (z + a)/(1 + conj(a) z).
Point automorphism(const Point& a, double theta, const Point& z);

/// Riemannian log at x: the tangent vector (chart coordinates at x after
/// translating x to 0) whose exponential reaches y. Euclidean length is
/// half the hyperbolic distance (the metric at 0 has scale 2).
Point log_map(const Point& x, const Point& y);

/// Inverse of log_map.
Point exp_map(const Point& x, const Point& tangent);

/// Weighted Karcher mean by fixed-point iteration of geodesic averaging.
/// Throws NumericError if the iteration fails to reach tol.
Point karcher_mean(const std::vector<Point>& points, const std::vector<double>& weights,
                   double tol = 1e-12, int max_iter = 400);

/// Conformal factor of the hyperbolic metric, 2/(1-|z|^2).
double conformal_factor(const Point& z);

}  // namespace solenoid::disk
