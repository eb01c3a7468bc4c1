#include "etau/catenoid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace etau {

namespace {

constexpr double kPi = std::numbers::pi;

double checked_value(const QuadratureResult& q, const char* what) {
  if (!q.converged) throw std::runtime_error(std::string(what) + ": quadrature did not converge");
  return q.value;
}

// tanh^2(r/2) from cosh r.
double tanh_half_sq(double cosh_r) { return (cosh_r - 1.0) / (cosh_r + 1.0); }

}  // namespace

CatenoidProfile::CatenoidProfile(const AmbientSpace& amb, double d) : amb_(amb), d_(d), k_(std::hypot(1.0, d)) {
  if (!std::isfinite(d) || !(d > 0.0)) throw std::invalid_argument("catenoid parameter d must be > 0");
}

double CatenoidProfile::neck() const { return std::asinh(d_); }

double CatenoidProfile::t_of_r(double s) const {
  if (s < neck()) {
    if (neck() - s > 1e-14 * std::max(1.0, neck())) throw std::domain_error("radius below the catenoid neck");
    return 0.0;
  }
  const double sh = std::sinh(s);
  const double q = std::max(0.0, (sh - d_) * (sh + d_));
  return std::asinh(std::sqrt(q) / k_);
}

double CatenoidProfile::r_of_t(double t) const { return std::acosh(k_ * std::cosh(t)); }

double CatenoidProfile::height_integrand(double t) const {
  const double sh = std::sinh(t);
  const double th2 = tanh_half_sq(k_ * std::cosh(t));
  const double tau = amb_.tau;
  return d_ * std::sqrt(1.0 + 4.0 * tau * tau * th2) / std::sqrt(d_ * d_ + k_ * k_ * sh * sh);
}

double CatenoidProfile::area_integrand(double t) const {
  const double sh = std::sinh(t);
  const double th2 = tanh_half_sq(k_ * std::cosh(t));
  const double tau = amb_.tau;
  return 2.0 * kPi * std::sqrt(d_ * d_ + k_ * k_ * sh * sh) * std::sqrt(1.0 + 4.0 * tau * tau * th2);
}

double height_supremum(const AmbientSpace& amb) { return 0.5 * kPi * std::sqrt(1.0 + 4.0 * amb.tau * amb.tau); }

QuadratureResult u_d_quadrature(const CatenoidProfile& profile, double s) {
  const double t = profile.t_of_r(s);
  return integrate([&](double x) { return profile.height_integrand(x); }, 0.0, t, profile.amb().tol);
}

double u_d(const CatenoidProfile& profile, double s) { return checked_value(u_d_quadrature(profile, s), "u_d"); }

double u_d_of_t(const CatenoidProfile& profile, double t) {
  if (t < 0.0) throw std::domain_error("regularized variable must be >= 0");
  return checked_value(
      integrate([&](double x) { return profile.height_integrand(x); }, 0.0, t, profile.amb().tol), "u_d");
}

QuadratureResult asymptotic_height(const CatenoidProfile& profile) {
  const double d = profile.d();
  const double k = std::hypot(1.0, d);
  const double tau = profile.amb().tau;
  auto tail = [=](double T) {
    const double kc = k * std::cosh(T);
    return std::sqrt(1.0 + 4.0 * tau * tau) * (d / k) / std::sqrt(1.0 - 1.0 / (kc * kc)) * 2.0 * std::exp(-T);
  };
  return integrate_to_infinity([&](double x) { return profile.height_integrand(x); }, 0.0, profile.amb().tol,
                               tail);
}

double d_for_height(const AmbientSpace& amb, double h) {
  const double sup = height_supremum(amb);
  if (!(h > 0.0 && h < sup))
    throw std::domain_error("height must lie in the open interval (0, " + std::to_string(sup) + ")");
  auto g = [&](double d) { return checked_value(asymptotic_height(CatenoidProfile(amb, d)), "height"); };
  const auto bracket = grow_bracket_increasing(g, h, 1.0, 2.0, 1e-12, 1e12);
  if (!bracket) throw std::runtime_error("d_for_height: no bracket in [1e-12, 1e12]");
  return bisect_monotone(g, bracket->lo, bracket->hi, h, 1e-10);
}

double lambda_d(double d, double s) { return u_d(CatenoidProfile(AmbientSpace(0.0), d), s); }

double lambda_d_rho(double d, double s) { return u_d_of_t(CatenoidProfile(AmbientSpace(0.0), d), s); }

double rho_of_s(double d, double s) { return std::acosh(std::hypot(1.0, d) * std::cosh(s)); }

double R_of_d(double d) {
  if (!(d > 0.0)) throw std::domain_error("R(d) needs d > 0");
  return 1.5 * std::log(d);
}

double s_of_d(double d) {
  if (!(d > 0.0)) throw std::domain_error("s(d) needs d > 0");
  const double arg = (d * d * d + 1.0) / (2.0 * std::pow(d, 1.5) * std::hypot(1.0, d));
  if (arg < 1.0) throw std::domain_error("s(d) undefined: arccosh argument below 1");
  return std::acosh(arg);
}

CatenoidTruncation::CatenoidTruncation(const CatenoidProfile& p, double R_) : profile(p), R(R_), half_height(0.0) {
  if (!(R > p.neck())) throw std::domain_error("truncation radius must exceed arcsinh(d)");
  half_height = u_d(profile, R);
}

double area_Md(const CatenoidTruncation& truncation) {
  const CatenoidProfile& p = truncation.profile;
  const double t = p.t_of_r(truncation.R);
  // Both halves: twice the one-sided area.
  return 2.0 * checked_value(integrate([&](double x) { return p.area_integrand(x); }, 0.0, t, p.amb().tol), "area");
}

double area_disk(const AmbientSpace& amb, double R) {
  if (!(R > 0.0)) throw std::domain_error("disk radius must be > 0");
  const double tau = amb.tau;
  auto f = [=](double s) {
    const double th = std::tanh(0.5 * s);
    return 2.0 * kPi * std::sinh(s) * std::sqrt(1.0 + 4.0 * tau * tau * th * th);
  };
  return checked_value(integrate(f, 0.0, R, amb.tol), "disk area");
}

double area_disk_closed_form(const AmbientSpace& amb, double R) {
  if (!(R > 0.0)) throw std::domain_error("disk radius must be > 0");
  const double q = 1.0 + 4.0 * amb.tau * amb.tau;
  const double a = (1.0 - 4.0 * amb.tau * amb.tau) / q;
  const double c = std::cosh(R);
  const double i_tilde = std::sqrt((c + a) * (c + 1.0)) - 2.0 / std::sqrt(q) -
                         (8.0 * amb.tau * amb.tau / q) *
                             std::log((std::sqrt(c + a) + std::sqrt(c + 1.0)) / (std::sqrt(2.0 / q) + std::sqrt(2.0)));
  return 2.0 * kPi * std::sqrt(q) * i_tilde;
}

double lemma_upper_bound(const AmbientSpace& amb, double d, double R) {
  const double q = std::exp(2.0 * R) - 2.0 - 4.0 * d * d;
  if (!(q > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return 2.0 * kPi * std::sqrt(1.0 + 4.0 * amb.tau * amb.tau) * (std::sqrt(q) + 1.0);
}

LemmaUpper verify_lemma_upper(const AmbientSpace& amb, double d, double R) {
  if (!(R > std::asinh(d + 1.0))) throw std::domain_error("upper area estimate needs R > arcsinh(d + 1)");
  if (!(std::exp(2.0 * R) > 2.0 + 4.0 * d * d)) throw std::domain_error("upper area estimate needs e^{2R} > 2 + 4d^2");
  LemmaUpper out;
  out.area = area_Md(CatenoidTruncation(CatenoidProfile(amb, d), R));
  out.bound = lemma_upper_bound(amb, d, R);
  out.holds = out.area < out.bound;
  return out;
}

double lemma_lower_bound(const AmbientSpace& amb, double d) {
  if (!(d * d * d > 4.0)) return std::numeric_limits<double>::quiet_NaN();
  return 2.0 * kPi * std::sqrt(1.0 + 4.0 * amb.tau * amb.tau) * (std::sqrt(d * d * d - 4.0) - std::sqrt(d));
}

LemmaLower verify_lemma_lower(const AmbientSpace& amb, double d) {
  if (!(d * d * d > 4.0)) throw std::domain_error("lower area estimate needs d^3 > 4");
  const double q = 1.0 + 4.0 * amb.tau * amb.tau;
  LemmaLower out;
  out.two_disk_area = 2.0 * area_disk_closed_form(amb, R_of_d(d));
  out.bound = lemma_lower_bound(amb, d);
  out.holds = out.two_disk_area > out.bound;
  out.c1 = 4.0 * amb.tau * amb.tau / q;
  out.c2 = 2.0 / std::sqrt(q) +
           (8.0 * amb.tau * amb.tau / q) * std::log(std::sqrt(2.0) * std::sqrt(q) / (1.0 + std::sqrt(q)));
  out.sufficient_condition = 3.0 * out.c1 * std::log(d) + 2.0 * out.c2 < std::sqrt(d);
  return out;
}

AreaComparison compare_areas(const AmbientSpace& amb, double d, double R) {
  AreaComparison out;
  out.d = d;
  out.R = R;
  out.area_catenoid = area_Md(CatenoidTruncation(CatenoidProfile(amb, d), R));
  out.area_two_disks = 2.0 * area_disk_closed_form(amb, R);
  out.upper_bound_lemma =
      R > std::asinh(d + 1.0) ? lemma_upper_bound(amb, d, R) : std::numeric_limits<double>::quiet_NaN();
  out.lower_bound_lemma = lemma_lower_bound(amb, d);
  out.connected_wins = out.area_catenoid < out.area_two_disks;
  return out;
}

std::vector<double> default_crossover_grid() { return log_grid(8.0, 1e5, 40); }

CrossoverResult find_crossover(const AmbientSpace& amb, const std::vector<double>& d_grid) {
  for (std::size_t i = 0; i < d_grid.size(); ++i) {
    const double d = d_grid[i];
    if (i > 0 && !(d > d_grid[i - 1])) throw std::invalid_argument("crossover grid must be increasing");
    if (!(d * d * d > 4.0) || !(R_of_d(d) > std::asinh(d)))
      throw std::invalid_argument("crossover grid point below the admissible range");
  }
  CrossoverResult out;
  out.rows = parallel_map<AreaComparison>(d_grid.size(), [&](std::size_t i) {
    return compare_areas(amb, d_grid[i], R_of_d(d_grid[i]));
  });
  int flips = 0;
  for (std::size_t i = 1; i < out.rows.size(); ++i)
    if (out.rows[i].connected_wins != out.rows[i - 1].connected_wins) ++flips;
  out.non_monotone = flips > 1;
  std::size_t start = out.rows.size();
  while (start > 0 && out.rows[start - 1].connected_wins) --start;
  if (start < out.rows.size()) {
    out.found = true;
    out.index = start;
    out.d_tilde = d_grid[start];
  }
  return out;
}

ConnectedBoundary connected_boundary_for_height(const AmbientSpace& amb, double h, double d_max) {
  const double sup = height_supremum(amb);
  if (!(h > 0.0 && h < sup))
    throw std::domain_error("height must lie in the open interval (0, " + std::to_string(sup) + ")");
  ConnectedBoundary out;
  const CrossoverResult cross = find_crossover(amb, default_crossover_grid());
  if (!cross.found) {
    out.diagnostic = "no area crossover on the default grid";
    return out;
  }
  out.d_tilde = cross.d_tilde;
  auto height_at_R_of_d = [&](double d) { return u_d(CatenoidProfile(amb, d), R_of_d(d)); };

  double d = cross.d_tilde;
  if (height_at_R_of_d(d) < h) {
    const double top = height_at_R_of_d(d_max);
    if (top < h) {
      out.diagnostic = "u_d(R(d)) stays below h up to d = " + std::to_string(d_max) +
                       " (reaches " + std::to_string(top) + ")";
      return out;
    }
    d = bisect_monotone(height_at_R_of_d, cross.d_tilde, d_max, h, 1e-11);
    // Keep u_d(R(d)) >= h so that the radius solve below stays bracketed.
    while (height_at_R_of_d(d) < h) d *= 1.0 + 1e-12;
  }
  const CatenoidProfile profile(amb, d);
  const double R_hi = R_of_d(d);
  const double R_lo = profile.neck();
  auto u = [&](double R) { return u_d(profile, std::max(R, R_lo)); };
  out.R = bisect_monotone(u, R_lo, R_hi, h, 1e-11);
  out.d = d;
  out.found = true;
  out.comparison = compare_areas(amb, d, out.R);
  return out;
}

std::vector<CatenoidRing> catenoid_rings(const CatenoidTruncation& truncation, int n_r) {
  if (n_r < 2) throw std::invalid_argument("catenoid_rings needs n_r >= 2");
  const CatenoidProfile& p = truncation.profile;
  const double t_end = p.t_of_r(truncation.R);
  std::vector<CatenoidRing> rings(n_r);
  double height = 0.0;
  double prev_t = 0.0;
  for (int i = 0; i < n_r; ++i) {
    const double t = t_end * i / (n_r - 1);
    if (i > 0)
      height += checked_value(
          integrate([&](double x) { return p.height_integrand(x); }, prev_t, t, p.amb().tol), "u_d");
    prev_t = t;
    const double r = (i == n_r - 1) ? truncation.R : p.r_of_t(t);
    rings[i] = {r, std::tanh(0.5 * r), height};
  }
  rings.back().height = truncation.half_height;
  return rings;
}

SampledCatenoid parametrize_Md(const CatenoidTruncation& truncation, int n_r, int n_theta) {
  if (n_theta < 2) throw std::invalid_argument("parametrize_Md needs n_theta >= 2");
  const auto rings = catenoid_rings(truncation, n_r);
  SampledCatenoid out;
  for (const auto& ring : rings) {
    std::vector<CylinderPoint> up;
    std::vector<CylinderPoint> down;
    for (int j = 0; j < n_theta; ++j) {
      const double th = 2.0 * kPi * j / n_theta;
      up.emplace_back(ring.radius * std::cos(th), ring.radius * std::sin(th), ring.height);
      down.emplace_back(ring.radius * std::cos(th), ring.radius * std::sin(th), -ring.height);
    }
    out.upper.push_back(std::move(up));
    out.lower.push_back(std::move(down));
  }
  return out;
}

}  // namespace etau
