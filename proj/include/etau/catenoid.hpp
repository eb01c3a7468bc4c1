#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etau/models.hpp"
#include "etau/numerics.hpp"

namespace etau {

// Rotational catenoid M_d. All radial integrals are evaluated in the variable
// t with cosh r = sqrt(1 + d^2) cosh t, which removes the inverse square root
// at the neck r = arcsinh(d).
class CatenoidProfile {
 public:
  // Throws std::invalid_argument unless d > 0 is finite.
  CatenoidProfile(const AmbientSpace& amb, double d);

  const AmbientSpace& amb() const { return amb_; }
  double d() const { return d_; }
  double neck() const;  // arcsinh(d)

  // Regularized variable for a radius s >= arcsinh(d), and back.
  double t_of_r(double s) const;
  double r_of_t(double t) const;

  // Integrands in t for u_d and the one-sided area 2 pi sinh r sqrt(...).
  double height_integrand(double t) const;
  double area_integrand(double t) const;

 private:
  AmbientSpace amb_;
  double d_;
  double k_;  // sqrt(1 + d^2)
};

// sup of u_d over all d and s: (pi/2) sqrt(1 + 4 tau^2).
double height_supremum(const AmbientSpace& amb);

// u_d(s); throws std::domain_error for s < arcsinh(d) and std::runtime_error
// if the quadrature does not converge.
double u_d(const CatenoidProfile& profile, double s);
QuadratureResult u_d_quadrature(const CatenoidProfile& profile, double s);
// Same integral with the regularized variable as upper limit.
double u_d_of_t(const CatenoidProfile& profile, double t);

// lim_{s -> inf} u_d(s), with the truncation bound folded into error_estimate.
QuadratureResult asymptotic_height(const CatenoidProfile& profile);

// Inverse of d -> asymptotic_height; throws std::domain_error unless
// 0 < h < height_supremum, std::runtime_error if no bracket is found.
double d_for_height(const AmbientSpace& amb, double h);

// u_d at tau = 0, independent of the ambient space.
double lambda_d(double d, double s);
// lambda_d(rho(s)) with rho(s) = arccosh(sqrt(1 + d^2) cosh s), i.e. the
// integral up to s in the regularized variable.
double lambda_d_rho(double d, double s);
double rho_of_s(double d, double s);

double R_of_d(double d);
// Throws std::domain_error when the arccosh argument is below 1.
double s_of_d(double d);

struct CatenoidTruncation {
  CatenoidProfile profile;
  double R;
  double half_height;

  // Throws std::domain_error unless R > arcsinh(d).
  CatenoidTruncation(const CatenoidProfile& p, double R_);
};

// Area of M_d(R), both halves.
double area_Md(const CatenoidTruncation& truncation);
// Area of one horizontal disk of hyperbolic radius R, by quadrature.
double area_disk(const AmbientSpace& amb, double R);
double area_disk_closed_form(const AmbientSpace& amb, double R);

struct LemmaUpper {
  double area = 0.0;
  double bound = 0.0;
  bool holds = false;
};
// Throws std::domain_error unless R > arcsinh(d + 1) and e^{2R} > 2 + 4 d^2.
LemmaUpper verify_lemma_upper(const AmbientSpace& amb, double d, double R);
double lemma_upper_bound(const AmbientSpace& amb, double d, double R);

struct LemmaLower {
  double two_disk_area = 0.0;
  double bound = 0.0;
  bool holds = false;
  double c1 = 0.0;
  double c2 = 0.0;
  bool sufficient_condition = false;  // 3 c1 log d + 2 c2 < sqrt(d)
};
// Uses R = R_of_d(d); throws std::domain_error unless d^3 > 4.
LemmaLower verify_lemma_lower(const AmbientSpace& amb, double d);
double lemma_lower_bound(const AmbientSpace& amb, double d);

struct AreaComparison {
  double d = 0.0;
  double R = 0.0;
  double area_catenoid = 0.0;
  double area_two_disks = 0.0;
  double upper_bound_lemma = 0.0;  // NaN where the hypothesis fails
  double lower_bound_lemma = 0.0;  // NaN where the hypothesis fails
  bool connected_wins = false;
};

AreaComparison compare_areas(const AmbientSpace& amb, double d, double R);

struct CrossoverResult {
  bool found = false;
  double d_tilde = 0.0;
  std::size_t index = 0;
  bool non_monotone = false;  // the comparison flipped more than once on the grid
  std::vector<AreaComparison> rows;  // at R = R(d) for each grid point
};

// Requires an increasing grid, every point with d^3 > 4 and R(d) > arcsinh(d).
CrossoverResult find_crossover(const AmbientSpace& amb, const std::vector<double>& d_grid);

std::vector<double> default_crossover_grid();

struct ConnectedBoundary {
  bool found = false;
  double d = 0.0;
  double R = 0.0;
  double d_tilde = 0.0;
  AreaComparison comparison;
  std::string diagnostic;
};

// Finds d >= d_tilde with u_d(R(d)) >= h and R with u_d(R) = h.
ConnectedBoundary connected_boundary_for_height(const AmbientSpace& amb, double h, double d_max = 1e5);

struct CatenoidRing {
  double r;       // hyperbolic radius
  double radius;  // euclidean radius tanh(r/2)
  double height;  // u_d(r) >= 0
};

// Rings of M_d^+ at n_r values of the regularized variable, uniform from the
// neck to R.
std::vector<CatenoidRing> catenoid_rings(const CatenoidTruncation& truncation, int n_r);

struct SampledCatenoid {
  std::vector<std::vector<CylinderPoint>> upper;  // rows of M_d^+
  std::vector<std::vector<CylinderPoint>> lower;  // rows of M_d^-
};

SampledCatenoid parametrize_Md(const CatenoidTruncation& truncation, int n_r, int n_theta);

}  // namespace etau
