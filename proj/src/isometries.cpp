#include "etau/isometries.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace etau {

namespace {

const Complex kI(0.0, 1.0);

void require_in_disk(Complex z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("point is not in the open unit disk");
}

// o = w1 / conj(w2); only meaningful for w2 != 0.
Complex sector_pole(const MobiusIsometry& m) { return m.w1() / std::conj(m.w2()); }

double theta_tilde(const MobiusIsometry& m) { return std::arg(-std::conj(m.w2()) * std::conj(m.w2())); }

}  // namespace

MobiusIsometry::MobiusIsometry() : w1_(kI), w2_(0.0, 0.0) {}

MobiusIsometry MobiusIsometry::from_coefficients(Complex w1, Complex w2) {
  const double q = std::norm(w1) - std::norm(w2);
  if (!std::isfinite(q) || std::abs(q - 1.0) > 1e-6)
    throw std::invalid_argument("Mobius coefficients must satisfy |w1|^2 - |w2|^2 = 1");
  const double s = 1.0 / std::sqrt(q);
  return {w1 * s, w2 * s};
}

MobiusIsometry MobiusIsometry::rotation(double alpha) { return {kI * std::polar(1.0, 0.5 * alpha), 0.0}; }

MobiusIsometry MobiusIsometry::real_translation(double r) {
  return {-kI * std::cosh(r), -kI * std::sinh(r)};
}

MobiusIsometry compose(const MobiusIsometry& outer, const MobiusIsometry& inner) {
  // In SU(1,1) form f(z) = (a z + b) / (conj(b) z + conj(a)) with a = i w1,
  // b = -i conj(w2); composition is the matrix product.
  const Complex a2 = kI * outer.w1();
  const Complex b2 = -kI * std::conj(outer.w2());
  const Complex a1 = kI * inner.w1();
  const Complex b1 = -kI * std::conj(inner.w2());
  const Complex a = a2 * a1 + b2 * std::conj(b1);
  const Complex b = a2 * b1 + b2 * std::conj(a1);
  return MobiusIsometry::from_coefficients(-kI * a, -kI * std::conj(b));
}

Complex mobius_apply(const MobiusIsometry& m, Complex z) {
  require_in_disk(z);
  return (m.w1() * z - std::conj(m.w2())) / (m.w2() * z - std::conj(m.w1()));
}

Complex mobius_derivative(const MobiusIsometry& m, Complex z) {
  require_in_disk(z);
  const Complex den = m.w2() * z - std::conj(m.w1());
  return -1.0 / (den * den);
}

SectorBranch compute_branch_sector(const MobiusIsometry& m) {
  if (m.is_rotation()) {
    const double a = std::arg(-1.0 / (std::conj(m.w1()) * std::conj(m.w1())));
    return {a, a};
  }
  const Complex o = sector_pole(m);
  const double center = std::arg(-o);
  const double half = std::asin(1.0 / std::abs(o));
  const double tt = theta_tilde(m);
  return {tt + 2.0 * (center - half), tt + 2.0 * (center + half)};
}

double branch_arg_derivative(const MobiusIsometry& m, Complex z) {
  require_in_disk(z);
  if (m.is_rotation()) return compute_branch_sector(m).theta1;
  const Complex o = sector_pole(m);
  const Complex w = std::conj(z) - o;
  return theta_tilde(m) + 2.0 * (std::arg(-o) + std::arg(w / (-o)));
}

Eigen::Vector2d branch_arg_gradient(const MobiusIsometry& m, Complex z) {
  require_in_disk(z);
  if (m.is_rotation()) return Eigen::Vector2d::Zero();
  const Complex inv = 1.0 / (std::conj(z) - sector_pole(m));
  return {2.0 * inv.imag(), -2.0 * inv.real()};
}

LiftedIsometry make_lift(const AmbientSpace& amb, const MobiusIsometry& f, double c, Orientation orientation) {
  return {f, amb.tau, c, orientation};
}

LiftedIsometry bounded_lift(const AmbientSpace& amb, const MobiusIsometry& m) {
  const SectorBranch s = compute_branch_sector(m);
  return make_lift(amb, m, amb.tau * (s.theta1 + s.theta2));
}

LiftedIsometry hyperbolic_translation(const AmbientSpace& amb, double r) {
  if (!std::isfinite(r)) throw std::invalid_argument("translation distance must be finite");
  if (r == 0.0) return make_lift(amb, MobiusIsometry::identity(), 0.0);
  return bounded_lift(amb, MobiusIsometry::real_translation(r));
}

double lift_delta_t(const LiftedIsometry& L, Complex z) {
  return -2.0 * L.tau * branch_arg_derivative(L.f, z) + L.c;
}

CylinderPoint apply_lift(const LiftedIsometry& L, const CylinderPoint& p) {
  const Complex z(p.x(), p.y());
  const Complex fz = mobius_apply(L.f, z);
  const double a = 2.0 * L.tau * branch_arg_derivative(L.f, z);
  if (L.orientation == Orientation::Positive) return {fz.real(), fz.imag(), p.t() - a + L.c};
  return {fz.real(), -fz.imag(), -p.t() + a + L.c};
}

Eigen::Matrix3d lift_jacobian(const LiftedIsometry& L, const CylinderPoint& p) {
  const Complex z(p.x(), p.y());
  const Complex df = mobius_derivative(L.f, z);
  const Eigen::Vector2d da = 2.0 * L.tau * branch_arg_gradient(L.f, z);
  Eigen::Matrix3d J = Eigen::Matrix3d::Zero();
  J(0, 0) = df.real();
  J(0, 1) = -df.imag();
  J(1, 0) = df.imag();
  J(1, 1) = df.real();
  J(2, 0) = -da.x();
  J(2, 1) = -da.y();
  J(2, 2) = 1.0;
  if (L.orientation == Orientation::Negative) {
    J.row(1) *= -1.0;
    J.row(2) *= -1.0;
  }
  return J;
}

std::vector<Complex> disk_sample(int n_angles, int n_radii) {
  if (n_angles < 1 || n_radii < 2) throw std::invalid_argument("disk_sample needs n_angles >= 1, n_radii >= 2");
  std::vector<Complex> out;
  out.reserve(1 + static_cast<std::size_t>(n_angles) * (n_radii - 1));
  out.emplace_back(0.0, 0.0);
  for (int i = 1; i < n_radii; ++i) {
    const double rho = 1.0 - std::pow(10.0, -8.0 * i / (n_radii - 1));
    for (int k = 0; k < n_angles; ++k) out.push_back(std::polar(rho, 2.0 * std::numbers::pi * k / n_angles));
  }
  return out;
}

DeltaTSup sampled_delta_t(const LiftedIsometry& L, const std::vector<Complex>& samples) {
  DeltaTSup out;
  bool first = true;
  for (const Complex& z : samples) {
    const double dt = lift_delta_t(L, z);
    if (first) {
      out.min = out.max = dt;
      first = false;
    }
    out.min = std::min(out.min, dt);
    out.max = std::max(out.max, dt);
    out.sup_abs = std::max(out.sup_abs, std::abs(dt));
  }
  return out;
}

MobiusIsometry random_mobius(std::uint64_t seed, double max_f0) {
  if (!(max_f0 >= 0.0 && max_f0 < 1.0)) throw std::invalid_argument("max_f0 must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rho = std::atanh(max_f0 * unit(rng));
  const double a = 2.0 * std::numbers::pi * unit(rng);
  const double b = 2.0 * std::numbers::pi * unit(rng);
  return MobiusIsometry::from_coefficients(std::polar(std::cosh(rho), a), std::polar(std::sinh(rho), b));
}

}  // namespace etau
