#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "etau/barriers.hpp"

using namespace etau::cli;

namespace {

struct Out {
  int rc;
  std::string summary, csv;
};

template <class Opts>
Out run(int (*cmd)(const Opts&, std::ostream&, std::ostream*), const Opts& o) {
  std::ostringstream s, c;
  const int rc = cmd(o, s, &c);
  return {rc, s.str(), c.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string header(const std::string& schema) { return "# etau-csv schema=" + schema + " version=1\n"; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("catenoid-height") {
    CatenoidHeightOptions o;
    o.height = 1.5708;
    auto r = run(cmd_catenoid_height, o);
    CHECK(r.rc == 2);
    CHECK(has(r.summary, "error: height must lie in the open interval (0, 1.570796)"));

    o = {};
    o.tau = 0.5;
    o.d = 1e6;
    r = run(cmd_catenoid_height, o);
    CHECK(r.rc == 0);
    CHECK(has(r.summary, "asymptotic half-height 2.2214"));
    CHECK(r.csv.rfind(header("catenoid-profile") + "r,u_d\n", 0) == 0);

    o = {};
    o.height = 1.0;
    r = run(cmd_catenoid_height, o);
    CHECK(r.rc == 0);
    CHECK(has(r.summary, "height=1 -> d="));
    CHECK(run(cmd_catenoid_height, CatenoidHeightOptions{}).rc == 2);
  }

  TEST_CASE("lemmas") {
    LemmasOptions o;
    o.d_count = 12;
    const auto r = run(cmd_lemmas, o);
    CHECK(r.rc == 0);
    CHECK(has(r.summary, "crossover d~ = 8"));
    CHECK(r.csv.rfind(header("lemma-sweep") +
                          "d,R,area_catenoid,area_two_disks,upper_bound,upper_holds,lower_bound,lower_holds,"
                          "connected_wins,beyond_crossover,u_d_R,sup_gap\n",
                      0) == 0);
    o.d_start = 2;
    CHECK(run(cmd_lemmas, o).rc == 2);
  }

  TEST_CASE("isometry-bound") {
    IsometryBoundOptions o;
    o.angles = 100;
    o.radii = 10;
    o.random = 3;
    o.seed = 7;
    const auto r = run(cmd_isometry_bound, o);
    CHECK(r.rc == 0);
    CHECK(has(r.summary, "all below: true"));
    CHECK(r.csv.rfind(header("isometry-bound") + "f0_abs,sup_abs_delta_t,bound,ratio,below_bound\n", 0) == 0);
    CHECK(std::count(r.csv.begin(), r.csv.end(), '\n') == 2 + 3 + 3);
    o.f0 = {1.0};
    CHECK(run(cmd_isometry_bound, o).rc == 2);
  }

  TEST_CASE("classify") {
    ClassifyOptions o;
    o.circles = {0, 3.2};
    CHECK(has(run(cmd_classify, o).summary, "verdict: Tall"));
    o.circles = {0, 3.0};
    auto r = run(cmd_classify, o);
    CHECK(has(r.summary, "verdict: NonexistenceCondition"));
    CHECK(has(r.summary, "witness arc [0, 6.28318531]"));
    CHECK(r.csv.rfind(header("height-profile") + "angle,height,crossings,indeterminate\n", 0) == 0);
    o.tau = 0.5;
    o.circles = {0, 1};
    CHECK(has(run(cmd_classify, o).summary, "verdict: Short"));
    o.circles = {1, 0};
    CHECK(run(cmd_classify, o).rc == 2);
    o.circles.clear();
    o.curve_file = "/nonexistent.csv";
    CHECK(run(cmd_classify, o).rc == 2);
  }

  TEST_CASE("rectangle") {
    RectangleOptions o;
    o.tau = 0.5;
    o.t1 = 0;
    o.t2 = 6;
    auto r = run(cmd_rectangle, o);
    CHECK(r.rc == 0);
    CHECK(has(r.summary, "delta = 0.3892"));
    CHECK(has(r.summary, "simple: true"));
    CHECK(r.csv.rfind(header("boundary-curve") + "component_id,sample_index,theta,t\n", 0) == 0);
    o.t2 = 4;
    CHECK(run(cmd_rectangle, o).rc == 2);
    o = {};
    o.h = 4;
    o.r = 1;
    CHECK(run(cmd_rectangle, o).rc == 0);
    o.h = 3;
    CHECK(run(cmd_rectangle, o).rc == 2);
  }

  TEST_CASE("plateau") {
    PlateauOptions o;
    o.circle = 1.0;
    o.level = 1;
    auto r = run(cmd_plateau, o);
    CHECK(r.rc == 0);
    CHECK(has(r.summary, "flat disk reference"));
    CHECK(r.csv.rfind(header("plateau-report") + "quantity,value\n", 0) == 0);

    const auto dir = std::filesystem::temp_directory_path() / "etau_cli_test";
    std::filesystem::create_directories(dir);
    const auto curve = (dir / "two.csv").string();
    {
      std::ofstream f(curve);
      etau::write_curves_csv(f, {etau::horizontal_circle(-0.3, 90), etau::horizontal_circle(0.3, 90)});
    }
    o = {};
    o.curve_file = curve;
    o.level = 0;
    o.theta = 48;
    o.mesh_out = (dir / "two.off").string();
    r = run(cmd_plateau, o);
    CHECK(r.rc == 0);
    CHECK(std::filesystem::exists(o.mesh_out));
    o.circle = 1.0;
    CHECK(run(cmd_plateau, o).rc == 2);
  }

  TEST_CASE("outputs are byte-identical across runs") {
    IsometryBoundOptions ib;
    ib.angles = 60;
    ib.radii = 8;
    ib.random = 4;
    ib.seed = 99;
    CHECK(run(cmd_isometry_bound, ib).csv == run(cmd_isometry_bound, ib).csv);
    PlateauOptions pl;
    pl.circle = 1.5;
    pl.level = 1;
    CHECK(run(cmd_plateau, pl).csv == run(cmd_plateau, pl).csv);
    LemmasOptions lm;
    lm.d_count = 5;
    CHECK(run(cmd_lemmas, lm).csv == run(cmd_lemmas, lm).csv);
  }
}
