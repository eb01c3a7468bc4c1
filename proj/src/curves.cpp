#include "etau/curves.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "etau/csv.hpp"

namespace etau {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_step(double d) {
  d = std::remainder(d, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

double circular_distance(double a, double b) { return std::abs(wrap_step(a - b)); }

// End angle of the closing segment, continuing the unwrapped sequence.
double closing_theta(const CurveComponent& c) {
  return c.theta.back() + wrap_step(c.theta.front() - c.theta.back());
}

struct Segment {
  double th0, t0, th1, t1;
};

template <class Fn>
void for_each_segment(const CurveComponent& c, Fn&& fn) {
  const std::size_t n = c.theta.size();
  for (std::size_t i = 0; i + 1 < n; ++i) fn(Segment{c.theta[i], c.t[i], c.theta[i + 1], c.t[i + 1]});
  fn(Segment{c.theta.back(), c.t.back(), closing_theta(c), c.t.front()});
}

CurveComponent unwrap(std::vector<double> theta, std::vector<double> t) {
  CurveComponent c;
  c.theta.resize(theta.size());
  c.t = std::move(t);
  c.theta[0] = theta[0];
  for (std::size_t i = 1; i < theta.size(); ++i) c.theta[i] = c.theta[i - 1] + wrap_step(theta[i] - theta[i - 1]);
  return c;
}

bool segments_cross(const Segment& a, const Segment& b, double shift) {
  auto cross = [](double ax, double ay, double bx, double by) { return ax * by - ay * bx; };
  const double ax = a.th0, ay = a.t0, bx = a.th1, by = a.t1;
  const double cx = b.th0 + shift, cy = b.t0, dx = b.th1 + shift, dy = b.t1;
  const double d1 = cross(bx - ax, by - ay, cx - ax, cy - ay);
  const double d2 = cross(bx - ax, by - ay, dx - ax, dy - ay);
  const double d3 = cross(dx - cx, dy - cy, ax - cx, ay - cy);
  const double d4 = cross(dx - cx, dy - cy, bx - cx, by - cy);
  if (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0) return false;
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

AsymptoticCurve::AsymptoticCurve(std::vector<CurveComponent> components) {
  for (auto& c : components) {
    if (c.theta.size() != c.t.size()) throw std::invalid_argument("curve component has mismatched sample arrays");
    if (c.theta.size() < 3) throw std::invalid_argument("curve component needs at least three samples");
    for (std::size_t i = 0; i < c.theta.size(); ++i)
      if (!std::isfinite(c.theta[i]) || !std::isfinite(c.t[i]))
        throw std::invalid_argument("curve component has non-finite samples");
    components_.push_back(unwrap(std::move(c.theta), std::move(c.t)));
  }
  index_critical_angles();
}

void AsymptoticCurve::index_critical_angles() {
  critical_.clear();
  for (const auto& c : components_) {
    const std::size_t n = c.theta.size();
    const double close = closing_theta(c);
    for (std::size_t i = 0; i < n; ++i) {
      const double prev = (i == 0) ? c.theta[n - 1] - close + c.theta[0] : c.theta[i - 1];
      const double next = (i + 1 == n) ? close : c.theta[i + 1];
      const double din = c.theta[i] - prev;
      const double dout = next - c.theta[i];
      if (din * dout <= 0.0) critical_.push_back(normalize_angle(c.theta[i]));
    }
  }
  std::sort(critical_.begin(), critical_.end());
}

AsymptoticCurve AsymptoticCurve::parallel_circles(const std::vector<double>& heights, int n) {
  if (heights.empty()) throw std::invalid_argument("parallel_circles needs at least one height");
  for (std::size_t i = 1; i < heights.size(); ++i)
    if (!(heights[i] > heights[i - 1])) throw std::invalid_argument("parallel_circles heights must increase");
  std::vector<CurveComponent> comps;
  for (double h : heights) {
    CurveComponent c;
    for (int j = 0; j < n; ++j) {
      c.theta.push_back(kTwoPi * j / n);
      c.t.push_back(h);
    }
    comps.push_back(std::move(c));
  }
  return AsymptoticCurve(std::move(comps));
}

AsymptoticCurve AsymptoticCurve::from_graph(const std::function<double(double)>& f, int n) {
  CurveComponent c;
  for (int j = 0; j < n; ++j) {
    const double th = kTwoPi * j / n;
    c.theta.push_back(th);
    c.t.push_back(f(th));
  }
  return AsymptoticCurve({c});
}

AsymptoticCurve AsymptoticCurve::from_boundary_curves(const std::vector<BoundaryCurve>& curves) {
  std::vector<CurveComponent> comps;
  for (const auto& bc : curves) {
    if (!bc.closed) throw std::invalid_argument("asymptotic curves are built from closed boundary curves");
    CurveComponent c;
    for (std::size_t i = 0; i + 1 < bc.samples.size(); ++i) {
      c.theta.push_back(bc.samples[i].theta);
      c.t.push_back(bc.samples[i].t);
    }
    comps.push_back(std::move(c));
  }
  return AsymptoticCurve(std::move(comps));
}

AsymptoticCurve AsymptoticCurve::parse(const std::string& text) {
  std::map<long, std::pair<long, CurveComponent>> by_id;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = csv::split_row(line);
    if (fields.size() != 4) throw std::runtime_error("curve file line " + std::to_string(line_no) + ": expected 4 fields");
    if (fields[0] == "component_id") continue;
    try {
      const long id = static_cast<long>(csv::parse_num(fields[0]));
      const long idx = static_cast<long>(csv::parse_num(fields[1]));
      const double th = csv::parse_num(fields[2]);
      const double t = csv::parse_num(fields[3]);
      auto [it, inserted] = by_id.try_emplace(id, -1, CurveComponent{});
      if (idx <= it->second.first)
        throw std::runtime_error("curve file line " + std::to_string(line_no) +
                                 ": sample_index must increase within a component");
      it->second.first = idx;
      it->second.second.theta.push_back(th);
      it->second.second.t.push_back(t);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("curve file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  std::vector<CurveComponent> comps;
  for (auto& [id, entry] : by_id) comps.push_back(std::move(entry.second));
  if (comps.empty()) throw std::runtime_error("curve file has no samples");
  try {
    AsymptoticCurve curve(std::move(comps));
    curve.validate();
    return curve;
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid curve: ") + e.what());
  }
}

AsymptoticCurve AsymptoticCurve::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

AsymptoticCurve AsymptoticCurve::with_component(const CurveComponent& c) const {
  auto comps = components_;
  comps.push_back(c);
  return AsymptoticCurve(std::move(comps));
}

AsymptoticCurve AsymptoticCurve::translated(double dt) const {
  auto comps = components_;
  for (auto& c : comps)
    for (auto& t : c.t) t += dt;
  return AsymptoticCurve(std::move(comps));
}

AsymptoticCurve AsymptoticCurve::rotated(double dtheta) const {
  auto comps = components_;
  for (auto& c : comps)
    for (auto& th : c.theta) th += dtheta;
  return AsymptoticCurve(std::move(comps));
}

double AsymptoticCurve::min_component_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < components_.size(); ++a)
    for (std::size_t b = a + 1; b < components_.size(); ++b)
      for (std::size_t i = 0; i < components_[a].theta.size(); ++i)
        for (std::size_t j = 0; j < components_[b].theta.size(); ++j) {
          const double dth = circular_distance(components_[a].theta[i], components_[b].theta[j]);
          const double dt = components_[a].t[i] - components_[b].t[j];
          best = std::min(best, std::hypot(dth, dt));
        }
  return best;
}

void AsymptoticCurve::validate() const {
  std::vector<std::vector<Segment>> segs(components_.size());
  for (std::size_t c = 0; c < components_.size(); ++c)
    for_each_segment(components_[c], [&](const Segment& s) { segs[c].push_back(s); });
  for (std::size_t a = 0; a < segs.size(); ++a) {
    for (std::size_t b = a; b < segs.size(); ++b) {
      for (std::size_t i = 0; i < segs[a].size(); ++i) {
        for (std::size_t j = (a == b ? i + 2 : 0); j < segs[b].size(); ++j) {
          if (a == b && i == 0 && j + 1 == segs[b].size()) continue;
          // Unwrapped angles can drift by several turns along a loop.
          const double lo = std::min(segs[a][i].th0, segs[a][i].th1) - std::max(segs[b][j].th0, segs[b][j].th1);
          const double hi = std::max(segs[a][i].th0, segs[a][i].th1) - std::min(segs[b][j].th0, segs[b][j].th1);
          for (long k = static_cast<long>(std::floor(lo / kTwoPi)); k <= static_cast<long>(std::ceil(hi / kTwoPi)); ++k)
            if (segments_cross(segs[a][i], segs[b][j], kTwoPi * k))
              throw std::invalid_argument(a == b ? "curve component intersects itself"
                                                 : "curve components intersect");
        }
      }
    }
  }
}

Crossings vertical_line_crossings(const AsymptoticCurve& curve, double p, double tangency_tol) {
  Crossings out;
  for (double c : curve.critical_angles())
    if (circular_distance(c, p) <= tangency_tol) {
      out.indeterminate = true;
      return out;
    }
  for (const auto& comp : curve.components()) {
    for_each_segment(comp, [&](const Segment& s) {
      if (s.th0 == s.th1) return;
      const double lo = std::min(s.th0, s.th1);
      const double hi = std::max(s.th0, s.th1);
      // Crossing angles q = p + 2 pi k in (lo, hi].
      long k = static_cast<long>(std::floor((lo - p) / kTwoPi));
      for (double q = p + kTwoPi * k; q <= hi; q = p + kTwoPi * (++k)) {
        if (!(q > lo)) continue;
        out.t.push_back(s.t0 + (s.t1 - s.t0) * (q - s.th0) / (s.th1 - s.th0));
      }
    });
  }
  std::sort(out.t.begin(), out.t.end());
  return out;
}

HeightValue height_at(const AsymptoticCurve& curve, double p, double tangency_tol) {
  const Crossings c = vertical_line_crossings(curve, p, tangency_tol);
  HeightValue h;
  h.indeterminate = c.indeterminate;
  h.crossings = c.t.size();
  for (std::size_t i = 1; i < c.t.size(); ++i) h.value = std::min(h.value, c.t[i] - c.t[i - 1]);
  return h;
}

GlobalHeight global_height(const AsymptoticCurve& curve, int n) {
  if (n < 3) throw std::invalid_argument("global_height needs at least 3 grid angles");
  GlobalHeight out;
  std::vector<HeightValue> vals(n);
  std::size_t best = 0;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    vals[i] = height_at(curve, kTwoPi * i / n);
    if (vals[i].indeterminate) continue;
    if (!any || vals[i].value < vals[best].value) {
      best = i;
      any = true;
    }
  }
  double step = kTwoPi / n;
  out.final_step = step;
  if (!any) {
    out.flagged = true;
    return out;
  }
  out.flagged = vals[(best + n - 1) % n].indeterminate || vals[(best + 1) % n].indeterminate;
  double center = kTwoPi * best / n;
  double value = vals[best].value;
  if (!std::isfinite(value)) {
    out.value = value;
    out.argmin = center;
    return out;
  }
  double previous = value;
  for (int level = 0; level < 60; ++level) {
    step *= 0.5;
    for (double cand : {center - step, center + step}) {
      const HeightValue h = height_at(curve, cand);
      if (h.indeterminate) {
        out.flagged = true;
        continue;
      }
      if (h.value < value) {
        value = h.value;
        center = cand;
      }
    }
    if (level >= 2 && std::abs(previous - value) < 1e-4 && step < 1e-3) break;
    previous = value;
  }
  out.value = value;
  out.argmin = normalize_angle(center);
  out.final_step = step;
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Tall:
      return "Tall";
    case Verdict::Short:
      return "Short";
    case Verdict::NonexistenceCondition:
      return "NonexistenceCondition";
    case Verdict::Indeterminate:
      return "Indeterminate";
  }
  return "Indeterminate";
}

double nonexistence_threshold(const AmbientSpace& amb) {
  return (std::sqrt(1.0 + 4.0 * amb.tau * amb.tau) - 4.0 * amb.tau) * kPi;
}

Classification classify(const AmbientSpace& amb, const AsymptoticCurve& curve, int n) {
  if (n < 3) throw std::invalid_argument("classify needs at least 3 grid angles");
  Classification out;
  const double step = kTwoPi / n;
  out.profile.reserve(n);
  for (int i = 0; i < n; ++i) {
    double p = step * i;
    HeightValue h = height_at(curve, p);
    if (h.indeterminate) {
      p += 1e-4 * step;
      h = height_at(curve, p);
    }
    out.profile.push_back({p, h});
  }

  const double tall = tall_threshold(amb);
  bool all_tall = true;
  bool unresolved = false;
  for (const auto& s : out.profile) {
    if (s.height.indeterminate) {
      unresolved = true;
      continue;
    }
    out.global_min_height = std::min(out.global_min_height, s.height.value);
    if (s.height.crossings == 0) continue;  // outside the angular footprint
    if (!(s.height.value > tall)) all_tall = false;
    if (!out.witness_angle || s.height.value < out.min_height_footprint) {
      out.min_height_footprint = s.height.value;
      out.witness_angle = s.angle;
    }
  }

  if (all_tall && !unresolved) {
    out.verdict = Verdict::Tall;
    out.witness_angle.reset();
    return out;
  }

  const double thr = nonexistence_threshold(amb);
  if (thr > 0.0) {
    std::vector<bool> below(n);
    for (int i = 0; i < n; ++i)
      below[i] = !out.profile[i].height.indeterminate && out.profile[i].height.value < thr;
    if (std::all_of(below.begin(), below.end(), [](bool b) { return b; })) {
      out.verdict = Verdict::NonexistenceCondition;
      out.witness_arc = std::make_pair(0.0, kTwoPi);
      return out;
    }
    // Longest cyclic run, starting the scan just after a false entry.
    int start = 0;
    while (below[start]) ++start;
    int best_len = 0;
    int best_start = 0;
    int run = 0;
    for (int k = 1; k <= n; ++k) {
      const int i = (start + k) % n;
      if (below[i]) {
        ++run;
        if (run > best_len) {
          best_len = run;
          best_start = (i - run + 1 + n) % n;
        }
      } else {
        run = 0;
      }
    }
    if (best_len >= 2) {
      out.verdict = Verdict::NonexistenceCondition;
      const double a = out.profile[best_start].angle;
      const double b = a + step * (best_len - 1);
      out.witness_arc = std::make_pair(a, b);
      return out;
    }
  }
  out.verdict = unresolved ? Verdict::Indeterminate : Verdict::Short;
  return out;
}

std::vector<std::vector<Eigen::Vector3d>> radial_projection(const AsymptoticCurve& curve, double n, double T) {
  if (!(n > 0.0)) throw std::domain_error("radial projection needs n > 0");
  const double rho = std::tanh(n);
  std::vector<std::vector<Eigen::Vector3d>> out;
  for (const auto& c : curve.components()) {
    std::vector<Eigen::Vector3d> loop;
    for (std::size_t i = 0; i < c.theta.size(); ++i) {
      if (!(std::abs(c.t[i]) < T)) throw std::domain_error("curve leaves the slab |t| < T");
      loop.emplace_back(rho * std::cos(c.theta[i]), rho * std::sin(c.theta[i]), c.t[i]);
    }
    out.push_back(std::move(loop));
  }
  return out;
}

}  // namespace etau
