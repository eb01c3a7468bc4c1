#include "etau/barriers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "etau/catenoid.hpp"
#include "etau/csv.hpp"

namespace etau {

namespace {

constexpr double kPi = std::numbers::pi;

// Difference b - a of two angles, wrapped to (-pi, pi].
double angle_step(double a, double b) {
  double d = std::remainder(b - a, 2.0 * kPi);
  if (d <= -kPi) d += 2.0 * kPi;
  return d;
}

int samples_for_span(double span, int n) {
  return std::max(n, static_cast<int>(std::ceil(span / (0.999 * kMaxAngularStep))) + 1);
}

}  // namespace

void BoundaryCurve::validate() const {
  if (samples.size() < 2) throw std::invalid_argument("boundary curve needs at least two samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (std::abs(angle_step(samples[i - 1].theta, samples[i].theta)) > kMaxAngularStep + 1e-12)
      throw std::invalid_argument("boundary curve angular step exceeds pi/180");
  if (closed) {
    const auto& a = samples.front();
    const auto& b = samples.back();
    if (std::abs(angle_step(a.theta, b.theta)) > 1e-12 || std::abs(a.t - b.t) > 1e-12)
      throw std::invalid_argument("closed boundary curve must end at its first sample");
  }
}

double tall_threshold(const AmbientSpace& amb) { return kPi * std::sqrt(1.0 + 4.0 * amb.tau * amb.tau); }

TallRectangleBoundary::TallRectangleBoundary(const AmbientSpace& amb, double h, double r, double rotation,
                                             double vertical_offset)
    : amb_(amb), h_(h), r_(r), rotation_(rotation), vertical_offset_(vertical_offset) {
  if (!(h > tall_threshold(amb))) throw std::domain_error("tall rectangle needs h > pi sqrt(1 + 4 tau^2)");
  if (!(r > 0.0 && r < kPi)) throw std::domain_error("tall rectangle half-width r must lie in (0, pi)");
}

double TallRectangleBoundary::lower_arc_t(double theta) const {
  return -4.0 * amb_.tau * std::atan(std::sin(theta) / (1.0 + std::cos(theta)));
}

std::pair<BoundaryCurve, BoundaryCurve> gamma_curves(const TallRectangleBoundary& rect, int n) {
  if (n < 2) throw std::invalid_argument("gamma_curves needs n >= 2");
  const int m = samples_for_span(2.0 * rect.r(), n);
  BoundaryCurve lower;
  BoundaryCurve upper;
  for (int j = 0; j < m; ++j) {
    const double th = -rect.r() + 2.0 * rect.r() * j / (m - 1);
    const double angle = th + kPi + rect.rotation();
    const double t = rect.lower_arc_t(th) + rect.vertical_offset();
    lower.samples.emplace_back(angle, t);
    upper.samples.emplace_back(angle, t + rect.h());
  }
  return {lower, upper};
}

BoundaryCurve rectangle_boundary(const TallRectangleBoundary& rect, int n) {
  auto [lower, upper] = gamma_curves(rect, n);
  const int side = std::max(2, n / 4);
  BoundaryCurve out;
  out.closed = true;
  out.samples = lower.samples;
  const BoundaryPoint right = lower.samples.back();
  for (int j = 1; j < side; ++j) out.samples.emplace_back(right.theta, right.t + rect.h() * j / side);
  for (auto it = upper.samples.rbegin(); it != upper.samples.rend(); ++it) out.samples.push_back(*it);
  const BoundaryPoint left = upper.samples.front();
  for (int j = 1; j < side; ++j) out.samples.emplace_back(left.theta, left.t - rect.h() * j / side);
  out.samples.push_back(out.samples.front());
  return out;
}

bool is_simple(const BoundaryCurve& curve) {
  const auto& s = curve.samples;
  if (s.size() < 4) return true;
  std::vector<Eigen::Vector2d> p(s.size());
  p[0] = {s[0].theta, s[0].t};
  for (std::size_t i = 1; i < s.size(); ++i) p[i] = {p[i - 1].x() + angle_step(s[i - 1].theta, s[i].theta), s[i].t};
  const std::size_t m = s.size() - 1;  // segments
  auto cross = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); };
  auto intersect = [&](std::size_t i, std::size_t j, double shift) {
    const Eigen::Vector2d a = p[i];
    const Eigen::Vector2d b = p[i + 1];
    const Eigen::Vector2d c = p[j] + Eigen::Vector2d(shift, 0.0);
    const Eigen::Vector2d d = p[j + 1] + Eigen::Vector2d(shift, 0.0);
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      if (curve.closed && i == 0 && j == m - 1) continue;  // adjacent through the closing sample
      for (double shift : {-2.0 * kPi, 0.0, 2.0 * kPi})
        if (intersect(i, j, shift)) return false;
    }
  return true;
}

double delta_for_slab(const AmbientSpace& amb, double t1, double t2) {
  const double thr = tall_threshold(amb);
  if (!(t2 - t1 > thr)) throw std::domain_error("slab must be thicker than pi sqrt(1 + 4 tau^2)");
  const double h = 0.5 * (t2 - t1 + thr);
  const double eps = 0.5 * (h - thr);
  if (amb.tau == 0.0) return kPi;
  return std::min(kPi, eps / (2.0 * amb.tau));
}

TallRectangleBoundary place_rectangle(const AmbientSpace& amb, double theta1, double theta2, double t1, double t2) {
  const double delta = delta_for_slab(amb, t1, t2);
  const double gap = std::abs(theta2 - theta1);
  if (!(gap < delta)) throw std::domain_error("angular gap must be smaller than the slab's delta");
  if (!(gap > 0.0)) throw std::domain_error("angular gap must be positive");
  const double thr = tall_threshold(amb);
  const double h = 0.5 * (t2 - t1 + thr);
  const double eps = 0.5 * (h - thr);
  const double mid = 0.5 * (theta1 + theta2);
  return TallRectangleBoundary(amb, h, 0.5 * gap, mid - kPi, t1 + eps);
}

BoundaryCurve horizontal_circle(double t, int n) {
  const int m = samples_for_span(2.0 * kPi, n) - 1;
  BoundaryCurve c;
  c.closed = true;
  for (int j = 0; j < m; ++j) c.samples.emplace_back(2.0 * kPi * j / m, t);
  c.samples.push_back(c.samples.front());
  return c;
}

std::pair<BoundaryCurve, BoundaryCurve> catenoid_asymptotic_circles(const AmbientSpace& amb, double d,
                                                                    double t_offset, int n) {
  const QuadratureResult h = asymptotic_height(CatenoidProfile(amb, d));
  return {horizontal_circle(t_offset - h.value, n), horizontal_circle(t_offset + h.value, n)};
}

void write_curves_csv(std::ostream& out, const std::vector<BoundaryCurve>& curves) {
  csv::write_header(out, "boundary-curve", {"component_id", "sample_index", "theta", "t"});
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const auto& s = curves[c].samples;
    const std::size_t count = curves[c].closed && s.size() > 1 ? s.size() - 1 : s.size();
    for (std::size_t i = 0; i < count; ++i)
      out << c << ',' << i << ',' << csv::num(s[i].theta) << ',' << csv::num(s[i].t) << '\n';
  }
}

}  // namespace etau
