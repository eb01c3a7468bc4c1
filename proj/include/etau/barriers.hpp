#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "etau/models.hpp"

namespace etau {

// Polyline on S^1 x R. Closed curves repeat their first sample at the end.
struct BoundaryCurve {
  std::vector<BoundaryPoint> samples;
  bool closed = false;

  // Throws std::invalid_argument if adjacent samples are more than pi/180
  // apart in angle or a closed curve does not end where it starts.
  void validate() const;
};

inline constexpr double kMaxAngularStep = 3.14159265358979323846 / 180.0;

class TallRectangleBoundary {
 public:
  // Throws std::domain_error unless h > pi sqrt(1 + 4 tau^2) and 0 < r < pi.
  TallRectangleBoundary(const AmbientSpace& amb, double h, double r, double rotation = 0.0,
                        double vertical_offset = 0.0);

  const AmbientSpace& amb() const { return amb_; }
  double h() const { return h_; }
  double r() const { return r_; }
  double rotation() const { return rotation_; }
  double vertical_offset() const { return vertical_offset_; }

  // Fiber coordinate of the lower arc at parameter theta in [-r, r], before
  // the vertical offset.
  double lower_arc_t(double theta) const;

 private:
  AmbientSpace amb_;
  double h_;
  double r_;
  double rotation_;
  double vertical_offset_;
};

double tall_threshold(const AmbientSpace& amb);  // pi sqrt(1 + 4 tau^2)

// Lower and upper arcs. At least n samples each; more if needed to keep the
// angular step below pi/180.
std::pair<BoundaryCurve, BoundaryCurve> gamma_curves(const TallRectangleBoundary& rect, int n);

// Closed curve: lower arc, side at angle pi + r, upper arc reversed, side at
// pi - r (before rotation).
BoundaryCurve rectangle_boundary(const TallRectangleBoundary& rect, int n);

// Self-intersection sweep over the segments of a closed curve, with angles
// unwrapped along the curve.
bool is_simple(const BoundaryCurve& curve);

// Throws std::domain_error unless t2 - t1 > pi sqrt(1 + 4 tau^2).
double delta_for_slab(const AmbientSpace& amb, double t1, double t2);

// Rectangle inside [theta1, theta2] x (t1, t2); throws std::domain_error if
// |theta2 - theta1| >= delta_for_slab(amb, t1, t2) or theta1 == theta2.
TallRectangleBoundary place_rectangle(const AmbientSpace& amb, double theta1, double theta2, double t1, double t2);

std::pair<BoundaryCurve, BoundaryCurve> catenoid_asymptotic_circles(const AmbientSpace& amb, double d,
                                                                    double t_offset, int n = 360);

BoundaryCurve horizontal_circle(double t, int n = 360);

// CSV with columns component_id, sample_index, theta, t. Closed curves are
// written without the repeated endpoint.
void write_curves_csv(std::ostream& out, const std::vector<BoundaryCurve>& curves);

}  // namespace etau
