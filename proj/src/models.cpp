#include "etau/models.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace etau {

namespace {
constexpr double kBoundaryMargin = 1e-12;
}

AmbientSpace::AmbientSpace(double tau_, ToleranceConfig tol_) : tau(tau_), tol(tol_) {
  if (!std::isfinite(tau) || tau < 0.0) throw std::invalid_argument("tau must be finite and >= 0");
  tol.validate();
}

CylinderPoint::CylinderPoint(double x, double y, double t) : x_(x), y_(y), t_(t) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(t))
    throw std::domain_error("cylinder point has non-finite coordinates");
  if (std::hypot(x, y) >= 1.0 - kBoundaryMargin) throw std::domain_error("cylinder point outside the open unit disk");
}

HalfSpacePoint::HalfSpacePoint(double x, double y, double t) : x_(x), y_(y), t_(t) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(t))
    throw std::domain_error("half-space point has non-finite coordinates");
  if (!(y > 0.0)) throw std::domain_error("half-space point needs y > 0");
}

double normalize_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(theta, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a = 0.0;
  return a;
}

BoundaryPoint::BoundaryPoint(double theta_, double t_) : theta(normalize_angle(theta_)), t(t_) {}

double conformal_factor(double x, double y) { return 2.0 / (1.0 - x * x - y * y); }

Eigen::Matrix3d metric_cylinder_raw(double tau, double x, double y) {
  const double lam = conformal_factor(x, y);
  const Eigen::Vector3d w(2.0 * tau * lam * y, -2.0 * tau * lam * x, 1.0);
  Eigen::Matrix3d g = w * w.transpose();
  g(0, 0) += lam * lam;
  g(1, 1) += lam * lam;
  return g;
}

std::array<Eigen::Matrix3d, 2> metric_cylinder_gradient(double tau, double x, double y) {
  const double lam = conformal_factor(x, y);
  const double lx = lam * lam * x;
  const double ly = lam * lam * y;
  const Eigen::Vector3d w(2.0 * tau * lam * y, -2.0 * tau * lam * x, 1.0);
  const Eigen::Vector3d wx(2.0 * tau * lx * y, -2.0 * tau * (lx * x + lam), 0.0);
  const Eigen::Vector3d wy(2.0 * tau * (ly * y + lam), -2.0 * tau * ly * x, 0.0);
  std::array<Eigen::Matrix3d, 2> out;
  out[0] = wx * w.transpose() + w * wx.transpose();
  out[1] = wy * w.transpose() + w * wy.transpose();
  out[0](0, 0) += 2.0 * lam * lx;
  out[0](1, 1) += 2.0 * lam * lx;
  out[1](0, 0) += 2.0 * lam * ly;
  out[1](1, 1) += 2.0 * lam * ly;
  return out;
}

MetricTensor metric_cylinder(const AmbientSpace& amb, const CylinderPoint& p) {
  return {metric_cylinder_raw(amb.tau, p.x(), p.y())};
}

MetricTensor metric_halfspace(const AmbientSpace& amb, const HalfSpacePoint& p) {
  const double y = p.y();
  const Eigen::Vector3d w(-2.0 * amb.tau / y, 0.0, 1.0);
  Eigen::Matrix3d g = w * w.transpose();
  g(0, 0) += 1.0 / (y * y);
  g(1, 1) += 1.0 / (y * y);
  return {g};
}

double inner(const MetricTensor& g, const TangentVector& u, const TangentVector& v) {
  if (!(u.base == v.base)) throw std::invalid_argument("tangent vectors have different base points");
  return u.v.dot(g.g * v.v);
}

namespace {

using cd = std::complex<double>;

double fiber_shift(double tau, double x, double y) { return 4.0 * tau * std::atan(x / (y + 1.0)); }

}  // namespace

CylinderPoint to_disk_model(const AmbientSpace& amb, const HalfSpacePoint& p) {
  const cd z(p.x(), p.y());
  const cd i(0.0, 1.0);
  const cd w = (z - i) / (z + i);
  return {w.real(), w.imag(), p.t() - fiber_shift(amb.tau, p.x(), p.y())};
}

HalfSpacePoint to_halfspace_model(const AmbientSpace& amb, const CylinderPoint& p) {
  const cd w(p.x(), p.y());
  const cd i(0.0, 1.0);
  const cd z = i * (1.0 + w) / (1.0 - w);
  // |w| < 1 keeps Im z > 0 analytically; guard against rounding at the rim.
  const double y = std::max(z.imag(), std::numeric_limits<double>::min());
  return {z.real(), y, p.t() + fiber_shift(amb.tau, z.real(), y)};
}

Eigen::Matrix3d to_disk_jacobian(const AmbientSpace& amb, const HalfSpacePoint& p) {
  const cd z(p.x(), p.y());
  const cd i(0.0, 1.0);
  const cd dphi = 2.0 * i / ((z + i) * (z + i));
  const double x = p.x();
  const double yp = p.y() + 1.0;
  const double q = yp * yp + x * x;
  Eigen::Matrix3d J = Eigen::Matrix3d::Zero();
  J(0, 0) = dphi.real();
  J(0, 1) = -dphi.imag();
  J(1, 0) = dphi.imag();
  J(1, 1) = dphi.real();
  J(2, 0) = -4.0 * amb.tau * yp / q;
  J(2, 1) = 4.0 * amb.tau * x / q;
  J(2, 2) = 1.0;
  return J;
}

Eigen::Matrix3d pullback(const Eigen::Matrix3d& g, const Eigen::Matrix3d& jacobian) {
  return jacobian.transpose() * g * jacobian;
}

PatchAreaResult patch_area(const AmbientSpace& amb, const Immersion& immersion, double u0, double u1, double w0,
                           double w1, int resolution) {
  if (resolution < 1) throw std::invalid_argument("patch_area resolution must be >= 1");
  if (!(u1 > u0) || !(w1 > w0)) throw std::invalid_argument("patch_area needs a non-empty rectangle");
  static constexpr double nodes[5] = {-0.906179845938663992797626878299, -0.538469310105683091036314420700, 0.0,
                                      0.538469310105683091036314420700, 0.906179845938663992797626878299};
  static constexpr double weights[5] = {0.236926885056189087514264040720, 0.478628670499366468041291514836,
                                        0.568888888888888888888888888889, 0.478628670499366468041291514836,
                                        0.236926885056189087514264040720};
  const double du = (u1 - u0) / resolution;
  const double dw = (w1 - w0) / resolution;
  const double hu = 1e-6 * du;
  const double hw = 1e-6 * dw;
  PatchAreaResult result;
  for (int a = 0; a < resolution; ++a) {
    for (int b = 0; b < resolution; ++b) {
      double cell = 0.0;
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          const double u = u0 + du * (a + 0.5 * (nodes[i] + 1.0));
          const double w = w0 + dw * (b + 0.5 * (nodes[j] + 1.0));
          const Eigen::Vector3d p = immersion(u, w);
          const Eigen::Vector3d pu = (immersion(u + hu, w) - immersion(u - hu, w)) / (2.0 * hu);
          const Eigen::Vector3d pw = (immersion(u, w + hw) - immersion(u, w - hw)) / (2.0 * hw);
          const Eigen::Matrix3d g = metric_cylinder(amb, CylinderPoint(p.x(), p.y(), p.z())).g;
          const double e = pu.dot(g * pu);
          const double f = pu.dot(g * pw);
          const double gg = pw.dot(g * pw);
          const double det = e * gg - f * f;
          if (!(det > 1e-14 * std::max(e * gg, 1e-300))) {
            result.degenerate = true;
            continue;
          }
          cell += weights[i] * weights[j] * std::sqrt(det);
        }
      }
      result.area += cell * 0.25 * du * dw;
    }
  }
  return result;
}

}  // namespace etau
