#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "etau/barriers.hpp"
#include "etau/catenoid.hpp"
#include "etau/curves.hpp"

using namespace etau;
using std::numbers::pi;

namespace {

double circ(double a, double b) { return std::abs(std::remainder(a - b, 2 * pi)); }

}  // namespace

TEST_SUITE("barriers") {
  TEST_CASE("gamma curves") {
    const AmbientSpace flat(0.0);
    const TallRectangleBoundary r0(flat, 4.0, 1.0);
    const auto [g0, g1] = gamma_curves(r0, 50);
    REQUIRE(g0.samples.size() == g1.samples.size());
    for (std::size_t i = 0; i < g0.samples.size(); ++i) {
      CHECK(g0.samples[i].t == 0.0);
      CHECK(g1.samples[i].t == 4.0);
      CHECK(g0.samples[i].theta == g1.samples[i].theta);
    }
    g0.validate();

    const AmbientSpace half(0.5);
    const TallRectangleBoundary rh(half, 4.5, pi / 2);
    CHECK(rh.lower_arc_t(0.0) == 0.0);
    const auto [h0, h1] = gamma_curves(rh, 201);
    CHECK(circ(h0.samples[h0.samples.size() / 2].theta, pi) < 1e-12);
    CHECK(std::abs(h0.samples[h0.samples.size() / 2].t) < 1e-12);
    double lo = 1e9, hi = -1e9;
    for (const auto& s : h0.samples) {
      lo = std::min(lo, s.t);
      hi = std::max(hi, s.t);
    }
    CHECK(lo == doctest::Approx(-pi / 2));
    CHECK(hi == doctest::Approx(pi / 2));
    CHECK(std::abs(rh.lower_arc_t(pi / 2)) == doctest::Approx(pi / 2));

    CHECK_THROWS_AS(TallRectangleBoundary(half, 4.0, 1.0), std::domain_error);  // 4 < pi sqrt 2
    CHECK_THROWS_AS(TallRectangleBoundary(flat, 4.0, pi), std::domain_error);
    CHECK_THROWS_AS(TallRectangleBoundary(flat, 4.0, 0.0), std::domain_error);
  }

  TEST_CASE("half-angle identity") {
    double worst = 0;
    for (int i = 0; i <= 10000; ++i) {
      const double th = -pi + 0.01 + (2 * pi - 0.02) * i / 10000;
      worst = std::max(worst, std::abs(std::atan(std::sin(th) / (1 + std::cos(th))) - th / 2));
    }
    CHECK(worst < 1e-12);
  }

  TEST_CASE("rectangle boundary") {
    for (double tau : {0.0, 0.3, 1.0}) {
      const AmbientSpace amb(tau);
      const double h = tall_threshold(amb) + 0.5, r = 0.7;
      const TallRectangleBoundary rect(amb, h, r);
      const auto c = rectangle_boundary(rect, 100);
      c.validate();
      CHECK(c.closed);
      CHECK(is_simple(c));
      // Footprint is exactly [pi - r, pi + r].
      double fmax = 0;
      for (const auto& s : c.samples) fmax = std::max(fmax, circ(s.theta, pi));
      CHECK(fmax == doctest::Approx(r));
      const auto [g0, g1] = gamma_curves(rect, 100);
      CHECK(circ(g0.samples.front().theta, pi - r) < 1e-12);
      CHECK(circ(g0.samples.back().theta, pi + r) < 1e-12);
      CHECK(g1.samples.back().t - g0.samples.back().t == doctest::Approx(h));
      CHECK(g1.samples.front().t - g0.samples.front().t == doctest::Approx(h));

      const auto curve = AsymptoticCurve::from_boundary_curves({c});
      for (double p : {pi - 0.5 * r, pi, pi + 0.3 * r}) {
        const auto x = vertical_line_crossings(curve, p);
        CHECK(x.t.size() == 2);
        CHECK(height_at(curve, p).value == doctest::Approx(h));
      }
      CHECK(vertical_line_crossings(curve, 0.5).t.empty());
      CHECK(global_height(curve, 720).value == doctest::Approx(h).epsilon(1e-9));
    }
  }

  TEST_CASE("is_simple detects a crossing") {
    BoundaryCurve bow;
    bow.closed = true;
    // Figure eight: (theta, t) = (sin s, sin 2s).
    for (int i = 0; i < 400; ++i) {
      const double s = 2 * pi * i / 400;
      bow.samples.emplace_back(0.5 * std::sin(s), std::sin(2 * s));
    }
    bow.samples.push_back(bow.samples.front());
    CHECK_FALSE(is_simple(bow));
    BoundaryCurve gappy;
    gappy.samples = {BoundaryPoint(0, 0), BoundaryPoint(0.5, 0)};
    CHECK_THROWS_AS(gappy.validate(), std::invalid_argument);
  }

  TEST_CASE("delta for a slab") {
    CHECK(delta_for_slab(AmbientSpace(0), 0, 4) == pi);
    const AmbientSpace half(0.5);
    CHECK(delta_for_slab(half, 0, 2 * pi * std::sqrt(2.0)) == doctest::Approx(pi * std::sqrt(2.0) / 4));
    const double thr = tall_threshold(half);
    double prev = 1e9;
    for (double extra : {1.0, 0.1, 0.01, 1e-4}) {
      const double d = delta_for_slab(half, 0, thr + extra);
      CHECK(d > 0);
      CHECK(d < prev);
      prev = d;
    }
    CHECK(prev < 1e-4);
    CHECK_THROWS_AS(delta_for_slab(half, 0, thr), std::domain_error);
  }

  TEST_CASE("placed rectangles stay inside the slab") {
    struct Case {
      double tau, th1, gap_frac, t1, t2;
    };
    for (const Case& k : {Case{0.0, 1.0, 0.05, -1.0, 3.5}, Case{0.5, 5.9, 0.999, 0.0, 7.0},
                          Case{0.5, 2.0, 0.5, -3, 3}, Case{1.0, 0.2, 0.9, 10, 18}}) {
      const AmbientSpace amb(k.tau);
      const double delta = delta_for_slab(amb, k.t1, k.t2);
      const double th2 = k.th1 + k.gap_frac * std::min(delta, 1.0);
      const auto rect = place_rectangle(amb, k.th1, th2, k.t1, k.t2);
      const auto c = rectangle_boundary(rect, 1000);
      REQUIRE(c.samples.size() >= 1000);
      const double mid = 0.5 * (k.th1 + th2), half_gap = 0.5 * (th2 - k.th1);
      for (const auto& s : c.samples) {
        CHECK(circ(s.theta, mid) <= half_gap + 1e-12);
        CHECK(s.t > k.t1);
        CHECK(s.t < k.t2);
      }
      CHECK_THROWS_AS(place_rectangle(amb, k.th1, k.th1 + delta, k.t1, k.t2), std::domain_error);
      // Rotating by 2 pi gives the same samples.
      const TallRectangleBoundary spun(amb, rect.h(), rect.r(), rect.rotation() + 2 * pi, rect.vertical_offset());
      const auto c2 = rectangle_boundary(spun, 1000);
      REQUIRE(c2.samples.size() == c.samples.size());
      for (std::size_t i = 0; i < c.samples.size(); ++i) {
        CHECK(circ(c.samples[i].theta, c2.samples[i].theta) < 1e-12);
        CHECK(c.samples[i].t == c2.samples[i].t);
      }
    }
  }

  TEST_CASE("catenoid asymptotic circles") {
    for (double tau : {0.0, 0.5}) {
      const AmbientSpace amb(tau);
      const auto [lo, hi] = catenoid_asymptotic_circles(amb, 2.0, 0.0);
      const double gap = hi.samples[0].t - lo.samples[0].t;
      CHECK(gap == doctest::Approx(2 * asymptotic_height(CatenoidProfile(amb, 2.0)).value));
      CHECK(gap < tall_threshold(amb));
      const auto [lo2, hi2] = catenoid_asymptotic_circles(amb, 1e6, 0.0);
      CHECK(hi2.samples[0].t - lo2.samples[0].t > 0.999 * tall_threshold(amb));
      const auto [lo3, hi3] = catenoid_asymptotic_circles(amb, 2.0, 5.0);
      CHECK(lo3.samples[0].t - lo.samples[0].t == doctest::Approx(5.0));
      CHECK(hi3.samples[0].t - hi.samples[0].t == doctest::Approx(5.0));
      lo.validate();
    }
  }

  TEST_CASE("curve csv round trip") {
    const auto rect = TallRectangleBoundary(AmbientSpace(0.2), 5.0, 0.4, 0.3, -1.0);
    const auto c = rectangle_boundary(rect, 60);
    const auto circle = horizontal_circle(10.0, 360);
    std::ostringstream out;
    write_curves_csv(out, {c, circle});
    const std::string text = out.str();
    CHECK(text.rfind("# etau-csv schema=boundary-curve version=1\ncomponent_id,sample_index,theta,t\n", 0) == 0);
    const auto curve = AsymptoticCurve::parse(text);
    REQUIRE(curve.components().size() == 2);
    CHECK(curve.components()[0].theta.size() == c.samples.size() - 1);
    CHECK(curve.components()[1].t[17] == 10.0);
  }
}
