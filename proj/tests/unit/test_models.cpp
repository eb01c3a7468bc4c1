#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "etau/catenoid.hpp"
#include "etau/models.hpp"

using namespace etau;
using std::numbers::pi;

namespace {

// ds^2 evaluated on a vector straight from the line element.
double line_element(double tau, double x, double y, const Eigen::Vector3d& v) {
  const double lam = 2.0 / (1.0 - x * x - y * y);
  const double fiber = 2.0 * tau * lam * (y * v.x() - x * v.y()) + v.z();
  return lam * lam * (v.x() * v.x() + v.y() * v.y()) + fiber * fiber;
}

}  // namespace

TEST_SUITE("models") {
  TEST_CASE("points and ambient validation") {
    CHECK_THROWS_AS(AmbientSpace(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(AmbientSpace(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(CylinderPoint(1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(CylinderPoint(0.8, 0.7, 0.0), std::domain_error);
    CHECK_THROWS_AS(HalfSpacePoint(0.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(HalfSpacePoint(0.0, -1.0, 0.0), std::domain_error);
    CHECK(BoundaryPoint(-pi / 2, 0).theta == doctest::Approx(1.5 * pi));
    CHECK(BoundaryPoint(4 * pi, 1).theta == doctest::Approx(0.0));
  }

  TEST_CASE("cylinder metric examples") {
    const AmbientSpace one(1.0);
    const auto g0 = metric_cylinder(one, CylinderPoint(0, 0, 0)).g;
    CHECK((g0 - Eigen::Vector3d(4, 4, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-15);

    const AmbientSpace flat(0.0);
    const auto gf = metric_cylinder(flat, CylinderPoint(0.3, -0.4, 2.0)).g;
    const double lam = 2.0 / (1.0 - 0.25);
    CHECK(gf(0, 0) == doctest::Approx(lam * lam));
    CHECK(gf(1, 1) == doctest::Approx(lam * lam));
    CHECK(gf(2, 2) == 1.0);
    CHECK(gf(0, 1) == 0.0);
    CHECK(gf(0, 2) == 0.0);
    CHECK(gf(1, 2) == 0.0);

    // tau = 1 at (1/2, 0): lambda = 8/3, w = (0, -8/3, 1).
    const auto g = metric_cylinder(one, CylinderPoint(0.5, 0, 0)).g;
    CHECK(g(0, 0) == doctest::Approx(64.0 / 9));
    CHECK(g(1, 1) == doctest::Approx(128.0 / 9));
    CHECK(g(2, 2) == doctest::Approx(1.0));
    CHECK(g(1, 2) == doctest::Approx(-8.0 / 3));
    CHECK(g(0, 1) == doctest::Approx(0.0));
    CHECK(g(0, 2) == doctest::Approx(0.0));
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n01;
    for (int i = 0; i < 20; ++i) {
      const Eigen::Vector3d v(n01(rng), n01(rng), n01(rng));
      CHECK(v.dot(g * v) == doctest::Approx(line_element(1.0, 0.5, 0.0, v)).epsilon(1e-13));
    }
  }

  TEST_CASE("metric invariants on random samples") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    for (double tau : {0.0, 0.1, 0.5, 1.0}) {
      const AmbientSpace amb(tau);
      for (int i = 0; i < 200; ++i) {
        double x, y;
        do {
          x = 0.99 * u(rng);
          y = 0.99 * u(rng);
        } while (x * x + y * y >= 0.98);
        const auto g = metric_cylinder(amb, CylinderPoint(x, y, u(rng))).g;
        CHECK((g - g.transpose()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(g).eigenvalues().minCoeff() > 0.0);
        const double lam = conformal_factor(x, y);
        CHECK(std::abs(g.determinant() / std::pow(lam, 4) - 1.0) < 1e-10);
        if (tau == 0.0) CHECK(g(0, 2) == 0.0);

        const auto gh = metric_halfspace(amb, HalfSpacePoint(x, 1.0 + y, 0.0)).g;
        CHECK(Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(gh).eigenvalues().minCoeff() > 0.0);
        if (tau == 0.0) CHECK(gh(0, 2) == 0.0);
      }
    }
  }

  TEST_CASE("metric gradient matches finite differences") {
    for (double tau : {0.0, 0.3, 1.0}) {
      const double x = 0.31, y = -0.52, h = 1e-6;
      const auto d = metric_cylinder_gradient(tau, x, y);
      const Eigen::Matrix3d fx = (metric_cylinder_raw(tau, x + h, y) - metric_cylinder_raw(tau, x - h, y)) / (2 * h);
      const Eigen::Matrix3d fy = (metric_cylinder_raw(tau, x, y + h) - metric_cylinder_raw(tau, x, y - h)) / (2 * h);
      CHECK((d[0] - fx).cwiseAbs().maxCoeff() < 1e-6 * (1 + fx.cwiseAbs().maxCoeff()));
      CHECK((d[1] - fy).cwiseAbs().maxCoeff() < 1e-6 * (1 + fy.cwiseAbs().maxCoeff()));
    }
  }

  TEST_CASE("half-space metric examples") {
    const auto g1 = metric_halfspace(AmbientSpace(0.0), HalfSpacePoint(0, 1, 0)).g;
    CHECK((g1 - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    const auto g2 = metric_halfspace(AmbientSpace(1.0), HalfSpacePoint(0, 1, 0)).g;
    CHECK(g2(0, 0) == doctest::Approx(5.0));
    CHECK(g2(0, 2) == doctest::Approx(-2.0));
    CHECK(g2(2, 2) == doctest::Approx(1.0));
    CHECK(g2(1, 1) == doctest::Approx(1.0));
    const auto g3 = metric_halfspace(AmbientSpace(0.0), HalfSpacePoint(0, 2, 0)).g;
    CHECK((g3 - Eigen::Vector3d(0.25, 0.25, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("inner product") {
    const AmbientSpace flat(0.0);
    const CylinderPoint o(0, 0, 0);
    const auto g = metric_cylinder(flat, o);
    const TangentVector ex{o, Eigen::Vector3d(0.5, 0, 0)};
    CHECK(inner(g, ex, ex) == doctest::Approx(1.0));
    const TangentVector other{CylinderPoint(0.1, 0, 0), Eigen::Vector3d(1, 0, 0)};
    CHECK_THROWS_AS(inner(g, ex, other), std::invalid_argument);

    std::mt19937_64 rng(5);
    std::normal_distribution<double> n01;
    const AmbientSpace amb(0.7);
    const CylinderPoint p(0.2, 0.6, -1);
    const auto gp = metric_cylinder(amb, p);
    for (int i = 0; i < 50; ++i) {
      const TangentVector a{p, Eigen::Vector3d(n01(rng), n01(rng), n01(rng))};
      const TangentVector b{p, Eigen::Vector3d(n01(rng), n01(rng), n01(rng))};
      CHECK(inner(gp, a, b) == doctest::Approx(inner(gp, b, a)));
      CHECK(inner(gp, a, b) * inner(gp, a, b) <= inner(gp, a, a) * inner(gp, b, b) * (1 + 1e-12));
      CHECK(inner(gp, a, a) > 0);
    }
  }

  TEST_CASE("model change") {
    for (double tau : {0.0, 0.4, 1.0}) {
      const AmbientSpace amb(tau);
      const auto o = to_disk_model(amb, HalfSpacePoint(0, 1, 0));
      CHECK(std::abs(o.x()) < 1e-15);
      CHECK(std::abs(o.y()) < 1e-15);
      CHECK(std::abs(o.t()) < 1e-15);
      const auto back = to_halfspace_model(amb, CylinderPoint(0, 0, 0));
      CHECK(back.x() == doctest::Approx(0.0));
      CHECK(back.y() == doctest::Approx(1.0));
      CHECK(back.t() == doctest::Approx(0.0));
    }
    // Fiber sign: t - 4 tau arctan(x / (y + 1)), the sign under which the
    // map pulls one metric back to the other.
    const auto p = to_disk_model(AmbientSpace(1.0), HalfSpacePoint(1, 1, 0));
    CHECK(p.x() == doctest::Approx(0.2));
    CHECK(p.y() == doctest::Approx(-0.4));
    CHECK(p.t() == doctest::Approx(-4 * std::atan(0.5)));

    const auto h = to_halfspace_model(AmbientSpace(0.0), CylinderPoint(0.5, 0, 0.7));
    const std::complex<double> z(h.x(), h.y());
    const auto phi = (z - std::complex<double>(0, 1)) / (z + std::complex<double>(0, 1));
    CHECK(std::abs(phi - 0.5) < 1e-14);
    CHECK(h.t() == 0.7);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ux(-3, 3), uy(0.05, 4);
    for (double tau : {0.0, 0.1, 0.5, 1.0}) {
      const AmbientSpace amb(tau);
      for (int i = 0; i < 200; ++i) {
        const HalfSpacePoint q(ux(rng), uy(rng), ux(rng));
        const auto c = to_disk_model(amb, q);
        const auto r = to_halfspace_model(amb, c);
        CHECK(std::abs(r.x() - q.x()) < 1e-12 * (1 + std::abs(q.x())));
        CHECK(std::abs(r.y() - q.y()) < 1e-12 * (1 + std::abs(q.y())));
        CHECK(std::abs(r.t() - q.t()) < 1e-12);
        const Eigen::Matrix3d pb = pullback(metric_cylinder(amb, c).g, to_disk_jacobian(amb, q));
        const Eigen::Matrix3d gh = metric_halfspace(amb, q).g;
        CHECK((pb - gh).cwiseAbs().maxCoeff() < 1e-8 * std::max(1.0, gh.cwiseAbs().maxCoeff()));
      }
    }
  }

  TEST_CASE("model change jacobian vs central differences") {
    const AmbientSpace amb(0.6);
    const HalfSpacePoint q(0.7, 1.3, 0.2);
    const Eigen::Matrix3d J = to_disk_jacobian(amb, q);
    const double h = 1e-6;
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d a = q.coords(), b = q.coords();
      a[k] += h;
      b[k] -= h;
      const Eigen::Vector3d fa = to_disk_model(amb, HalfSpacePoint(a.x(), a.y(), a.z())).coords();
      const Eigen::Vector3d fb = to_disk_model(amb, HalfSpacePoint(b.x(), b.y(), b.z())).coords();
      CHECK(((fa - fb) / (2 * h) - J.col(k)).cwiseAbs().maxCoeff() < 1e-6);
    }
  }

  TEST_CASE("patch area oracles") {
    const double R = 1.5;
    const double rho = std::tanh(R / 2);
    const Immersion disk = [rho](double u, double w) {
      return Eigen::Vector3d(rho * u * std::cos(w), rho * u * std::sin(w), 0.0);
    };
    const auto a0 = patch_area(AmbientSpace(0.0), disk, 0, 1, 0, 2 * pi, 24);
    CHECK(std::abs(a0.area / (2 * pi * (std::cosh(R) - 1)) - 1) < 5e-3);
    for (double tau : {0.3, 1.0}) {
      const AmbientSpace amb(tau);
      const auto a = patch_area(amb, disk, 0, 1, 0, 2 * pi, 24);
      CHECK(std::abs(a.area / area_disk_closed_form(amb, R) - 1) < 1e-2);
    }
    // Vertical strip over the geodesic segment [0, a] of the real axis.
    const double a = 0.6, H = 2.5;
    const Immersion strip = [](double u, double w) { return Eigen::Vector3d(u, 0, w); };
    const auto s = patch_area(AmbientSpace(0.0), strip, 0, a, 0, H, 16);
    CHECK(s.area == doctest::Approx(2 * std::atanh(a) * H).epsilon(1e-6));
    CHECK_FALSE(s.degenerate);
    const Immersion line = [](double u, double) { return Eigen::Vector3d(0.5 * u, 0, 0); };
    CHECK(patch_area(AmbientSpace(0.0), line, 0, 1, 0, 1, 4).degenerate);
  }
}
