#include "solenoid/disk.hpp"

#include <cmath>

#include "solenoid/errors.hpp"

namespace solenoid::disk {

namespace {

void check_inside(const Point& z, const char* who) {
  if (std::norm(z) >= 1.0) throw PreconditionError(std::string(who) + ": point not inside the unit disk");
}

}  // namespace

double dist(const Point& z, const Point& w) {
  check_inside(z, "dist");
  check_inside(w, "dist");
  double r = std::abs((z - w) / (1.0 - std::conj(z) * w));
  // 2 atanh(r), written to stay accurate near the boundary
  return std::log1p(2.0 * r / (1.0 - r));
}

Point to_origin(const Point& a, const Point& z) { return (z - a) / (1.0 - std::conj(a) * z); }

Point from_origin(const Point& a, const Point& z) { return (z + a) / (1.0 + std::conj(a) * z); }

Point geodesic_point(const Point& x, const Point& y, double t) {
  check_inside(x, "geodesic_point");
  check_inside(y, "geodesic_point");
  Point w = to_origin(x, y);
  double r = std::abs(w);
  if (r == 0.0) return x;
  double d = 2.0 * std::atanh(r);
  Point dir = w / r;
  Point moved = std::tanh(0.5 * t * d) * dir;
  return from_origin(x, moved);
}

Point automorphism(const Point& a, double theta, const Point& z) {
  return std::polar(1.0, theta) * from_origin(a, z);
}

Point log_map(const Point& x, const Point& y) {
  Point w = to_origin(x, y);
  double r = std::abs(w);
  if (r == 0.0) return Point(0.0, 0.0);
  double d = 2.0 * std::atanh(r);
  return (w / r) * (0.5 * d);
}

Point exp_map(const Point& x, const Point& tangent) {
  double s = std::abs(tangent);
  if (s == 0.0) return x;
  Point moved = std::tanh(s) * (tangent / s);
  return from_origin(x, moved);
}

Point karcher_mean(const std::vector<Point>& points, const std::vector<double>& weights,
                   double tol, int max_iter) {
  if (points.empty() || points.size() != weights.size())
    throw PreconditionError("karcher_mean: inputs empty or mismatched");
  double wsum = 0.0;
  for (double w : weights) {
    if (w <= 0.0) throw PreconditionError("karcher_mean: weights must be positive");
    wsum += w;
  }
  Point x = points[0];
  for (int it = 0; it < max_iter; ++it) {
    Point g(0.0, 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) g += weights[i] * log_map(x, points[i]);
    g /= wsum;
    if (std::abs(g) < 0.5 * tol) return x;
    x = exp_map(x, g);
  }
  throw NumericError("karcher_mean: centroid iteration did not converge");
}

double conformal_factor(const Point& z) { return 2.0 / (1.0 - std::norm(z)); }

}  // namespace solenoid::disk
