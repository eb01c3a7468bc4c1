#include "etau/numerics.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace etau {

void ToleranceConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_evals <= 0)
    throw std::invalid_argument("tolerances and max_evals must be positive");
}

namespace {

// Kronrod 15-point abscissae and weights; the Gauss 7-point rule uses the
// odd-indexed abscissae. Values from QUADPACK (qk15).
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

double checked(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw std::domain_error("integrand returned a non-finite value");
  return y;
}

Panel gauss_kronrod(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  double fv1[7];
  double fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = checked(f, center - dx);
    fv2[j] = checked(f, center + dx);
    kronrod += kWgk[j] * (fv1[j] + fv2[j]);
    abs_sum += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * (fv1[j] + fv2[j]);
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

  const double value = kronrod * half;
  asc *= std::abs(half);
  abs_sum *= std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * abs_sum, err);
  return {a, b, value, err};
}

}  // namespace

QuadratureResult integrate(const RealFunction& f, double a, double b, const ToleranceConfig& tol) {
  tol.validate();
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0, 1, true};
    throw std::invalid_argument("integrate requires a < b");
  }
  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, a, b);
  long evals = 15;
  double total = first.value;
  double total_err = first.error;
  panels.push(first);

  auto done = [&] { return total_err <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total)); };
  bool converged = done();
  while (!converged) {
    if (evals + 30 > tol.max_evals) break;
    Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) break;  // interval exhausted at double precision
    panels.pop();
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    converged = done();
  }

  // Re-sum in a fixed order so the result does not carry the drift of the
  // incremental updates.
  double sum = 0.0;
  double err = 0.0;
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  for (const auto& p : all) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, evals, converged || err <= std::max(tol.abs_tol, tol.rel_tol * std::abs(sum))};
}

QuadratureResult integrate_to_infinity(const RealFunction& f, double a, const ToleranceConfig& tol,
                                       const RealFunction& tail_bound) {
  tol.validate();
  const double target = 0.5 * tol.abs_tol;
  constexpr double kMaxSpan = 1e4;

  double lo = a;
  double hi = a + 1.0;
  while (!(tail_bound(hi) < target)) {
    lo = hi;
    hi = a + 2.0 * (hi - a);
    if (hi - a > kMaxSpan) {
      QuadratureResult r = integrate(f, a, lo, tol);
      r.error_estimate += tail_bound(lo);
      r.converged = false;
      return r;
    }
  }
  for (int it = 0; it < 60 && hi - lo > 1e-3; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tail_bound(mid) < target)
      hi = mid;
    else
      lo = mid;
  }
  const double cut = hi;
  ToleranceConfig inner = tol;
  inner.abs_tol = 0.5 * tol.abs_tol;
  QuadratureResult r = integrate(f, a, cut, inner);
  r.error_estimate += tail_bound(cut);
  return r;
}

double bisect_monotone(const RealFunction& g, double lo, double hi, double target, double tol) {
  if (!(lo <= hi)) throw std::invalid_argument("bisect_monotone requires lo <= hi");
  double glo = g(lo) - target;
  double ghi = g(hi) - target;
  if (glo * ghi > 0.0) throw std::invalid_argument("bisect_monotone: target is not bracketed");
  if (std::abs(glo) <= tol) return lo;
  if (std::abs(ghi) <= tol) return hi;
  const bool increasing = glo < ghi;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < tol || mid <= lo || mid >= hi) return mid;
    const double gm = g(mid) - target;
    if (std::abs(gm) <= tol) return mid;
    if ((gm < 0.0) == increasing)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<Bracket> grow_bracket_increasing(const RealFunction& g, double target, double start, double factor,
                                               double min_x, double max_x) {
  if (!(factor > 1.0) || !(start > 0.0)) throw std::invalid_argument("bracket growth needs factor > 1, start > 0");
  double lo = start;
  double hi = start;
  if (g(start) > target) {
    while (g(lo) > target) {
      hi = lo;
      lo /= factor;
      if (lo < min_x) return std::nullopt;
    }
  } else {
    while (g(hi) < target) {
      lo = hi;
      hi *= factor;
      if (hi > max_x) return std::nullopt;
    }
  }
  return Bracket{lo, hi};
}

std::vector<double> log_grid(double start, double stop, std::size_t count) {
  if (count == 0 || !(start > 0.0) || !(stop >= start)) throw std::invalid_argument("invalid log grid");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double l0 = std::log(start);
  const double l1 = std::log(stop);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::exp(l0 + (l1 - l0) * double(i) / double(count - 1));
  out.front() = start;
  out.back() = stop;
  return out;
}

}  // namespace etau
