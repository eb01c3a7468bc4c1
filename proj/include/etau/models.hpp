#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <variant>

#include "etau/numerics.hpp"

namespace etau {

struct AmbientSpace {
  double tau = 0.0;
  ToleranceConfig tol{};

  AmbientSpace() = default;
  // Throws std::invalid_argument for tau < 0 or a non-finite tau.
  explicit AmbientSpace(double tau_, ToleranceConfig tol_ = {});
};

// Point of the cylinder model D x R. Construction rejects x^2 + y^2 within
// 1e-12 of (or beyond) the unit circle with std::domain_error.
class CylinderPoint {
 public:
  CylinderPoint() = default;
  CylinderPoint(double x, double y, double t);

  double x() const { return x_; }
  double y() const { return y_; }
  double t() const { return t_; }
  Eigen::Vector3d coords() const { return {x_, y_, t_}; }

  bool operator==(const CylinderPoint&) const = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double t_ = 0.0;
};

// Point of the half-space model {y > 0} x R.
class HalfSpacePoint {
 public:
  HalfSpacePoint() : y_(1.0) {}
  HalfSpacePoint(double x, double y, double t);

  double x() const { return x_; }
  double y() const { return y_; }
  double t() const { return t_; }
  Eigen::Vector3d coords() const { return {x_, y_, t_}; }

  bool operator==(const HalfSpacePoint&) const = default;

 private:
  double x_ = 0.0;
  double y_ = 1.0;
  double t_ = 0.0;
};

using ModelPoint = std::variant<CylinderPoint, HalfSpacePoint>;

struct TangentVector {
  ModelPoint base;
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
};

// Metric at a point, coordinate order (x, y, t).
struct MetricTensor {
  Eigen::Matrix3d g = Eigen::Matrix3d::Identity();
};

// A point of S^1 x R. The angle is normalized to [0, 2pi).
struct BoundaryPoint {
  double theta = 0.0;
  double t = 0.0;

  BoundaryPoint() = default;
  BoundaryPoint(double theta_, double t_);
};

double normalize_angle(double theta);

double conformal_factor(double x, double y);

MetricTensor metric_cylinder(const AmbientSpace& amb, const CylinderPoint& p);

// Unchecked variants for inner loops; callers guarantee x^2 + y^2 < 1.
Eigen::Matrix3d metric_cylinder_raw(double tau, double x, double y);
// Partial derivatives of the cylinder metric with respect to x and y (the
// metric does not depend on t).
std::array<Eigen::Matrix3d, 2> metric_cylinder_gradient(double tau, double x, double y);

MetricTensor metric_halfspace(const AmbientSpace& amb, const HalfSpacePoint& p);

// Throws std::invalid_argument if u and v have different base points.
double inner(const MetricTensor& g, const TangentVector& u, const TangentVector& v);

CylinderPoint to_disk_model(const AmbientSpace& amb, const HalfSpacePoint& p);
HalfSpacePoint to_halfspace_model(const AmbientSpace& amb, const CylinderPoint& p);

// d(to_disk_model) at p; rows are (x, y, t) of the image, columns the
// half-space coordinates.
Eigen::Matrix3d to_disk_jacobian(const AmbientSpace& amb, const HalfSpacePoint& p);

// J^T g J.
Eigen::Matrix3d pullback(const Eigen::Matrix3d& g, const Eigen::Matrix3d& jacobian);

using Immersion = std::function<Eigen::Vector3d(double u, double w)>;

struct PatchAreaResult {
  double area = 0.0;
  bool degenerate = false;  // some sample had a rank < 2 differential
};

// Induced area of (u, w) -> (x, y, t) over [u0, u1] x [w0, w1]. Tensor
// Gauss-Legendre rule on resolution x resolution cells; partials by central
// differences.
PatchAreaResult patch_area(const AmbientSpace& amb, const Immersion& immersion, double u0, double u1, double w0,
                           double w1, int resolution);

}  // namespace etau
