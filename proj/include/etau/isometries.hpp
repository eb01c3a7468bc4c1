#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "etau/models.hpp"

namespace etau {

using Complex = std::complex<double>;

// f(z) = (w1 z - conj(w2)) / (w2 z - conj(w1)) with |w1|^2 - |w2|^2 = 1.
class MobiusIsometry {
 public:
  MobiusIsometry();  // identity, w1 = i, w2 = 0

  // Rejects |w1|^2 - |w2|^2 off from 1 by more than 1e-6
  // (std::invalid_argument); smaller deviations are normalized away.
  static MobiusIsometry from_coefficients(Complex w1, Complex w2);
  static MobiusIsometry identity() { return {}; }
  // z -> e^{i alpha} z.
  static MobiusIsometry rotation(double alpha);
  // Real-axis translation z -> (z + tanh r) / (1 + z tanh r).
  static MobiusIsometry real_translation(double r);

  Complex w1() const { return w1_; }
  Complex w2() const { return w2_; }
  bool is_rotation() const { return w2_ == Complex(0.0, 0.0); }

 private:
  MobiusIsometry(Complex w1, Complex w2) : w1_(w1), w2_(w2) {}
  Complex w1_;
  Complex w2_;
};

// outer o inner, i.e. z -> outer(inner(z)).
MobiusIsometry compose(const MobiusIsometry& outer, const MobiusIsometry& inner);

// Both throw std::domain_error if |z| >= 1.
Complex mobius_apply(const MobiusIsometry& m, Complex z);
Complex mobius_derivative(const MobiusIsometry& m, Complex z);

// Open sector (theta1, theta2) containing every value of the chosen branch
// of arg f'. For rotations theta1 == theta2 is the constant argument.
struct SectorBranch {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double width() const { return theta2 - theta1; }
};

SectorBranch compute_branch_sector(const MobiusIsometry& m);

// Branch of arg f' fixed by the sector: continuous on D with values inside
// compute_branch_sector(m).
double branch_arg_derivative(const MobiusIsometry& m, Complex z);
// Gradient of branch_arg_derivative with respect to (x, y).
Eigen::Vector2d branch_arg_gradient(const MobiusIsometry& m, Complex z);

enum class Orientation { Positive, Negative };

// Positive: F(z, t) = (f(z), t - 2 tau arg f'(z) + c).
// Negative: G(z, t) = (conj f(z), -t + 2 tau arg f'(z) + c).
struct LiftedIsometry {
  MobiusIsometry f;
  double tau = 0.0;
  double c = 0.0;
  Orientation orientation = Orientation::Positive;
};

LiftedIsometry make_lift(const AmbientSpace& amb, const MobiusIsometry& f, double c,
                         Orientation orientation = Orientation::Positive);

// Positive lift with c centred on the sector, so |t' - t| < tau * width < 2 tau pi.
LiftedIsometry bounded_lift(const AmbientSpace& amb, const MobiusIsometry& m);

// Lift of the real-axis translation mapping 0 to tanh(r).
LiftedIsometry hyperbolic_translation(const AmbientSpace& amb, double r);

CylinderPoint apply_lift(const LiftedIsometry& L, const CylinderPoint& p);
Eigen::Matrix3d lift_jacobian(const LiftedIsometry& L, const CylinderPoint& p);

// Vertical displacement t' - t of a positive lift at z (independent of t).
double lift_delta_t(const LiftedIsometry& L, Complex z);

// Deterministic polar sample of D: radii 1 - 10^{-8 i / (n_radii - 1)}
// (i = 0 gives the origin) times n_angles equispaced angles.
std::vector<Complex> disk_sample(int n_angles, int n_radii);

struct DeltaTSup {
  double sup_abs = 0.0;
  double min = 0.0;
  double max = 0.0;
};

DeltaTSup sampled_delta_t(const LiftedIsometry& L, const std::vector<Complex>& samples);

MobiusIsometry random_mobius(std::uint64_t seed, double max_f0);

}  // namespace etau
