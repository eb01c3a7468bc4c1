#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace etau::cli {

// Every command writes a short human summary to `summary` and, when `csv` is
// non-null, one schema-tagged CSV table. Return value is the process exit
// code: 0 ok, 2 for a rejected input (message already in the summary).

struct CatenoidHeightOptions {
  double tau = 0.0;
  std::optional<double> d;
  std::optional<double> height;
  int samples = 50;   // profile rows written to the CSV
  double r_span = 6;  // profile covers [neck, neck + r_span]
};
int cmd_catenoid_height(const CatenoidHeightOptions& o, std::ostream& summary, std::ostream* csv);

struct LemmasOptions {
  double tau = 0.0;
  double d_start = 8.0;
  double d_stop = 1e5;
  int d_count = 40;
};
int cmd_lemmas(const LemmasOptions& o, std::ostream& summary, std::ostream* csv);

struct IsometryBoundOptions {
  double tau = 0.5;
  std::vector<double> f0 = {0.5, 0.9, 0.999};
  int angles = 400;
  int radii = 26;
  int random = 0;  // extra rows from seeded random isometries
  std::uint64_t seed = 0;
};
int cmd_isometry_bound(const IsometryBoundOptions& o, std::ostream& summary, std::ostream* csv);

struct ClassifyOptions {
  double tau = 0.0;
  std::string curve_file;
  std::vector<double> circles;  // used when curve_file is empty
  int grid = 720;
};
int cmd_classify(const ClassifyOptions& o, std::ostream& summary, std::ostream* csv);

struct PlateauOptions {
  double tau = 0.0;
  std::optional<double> height;  // connected annulus vs two disks
  std::optional<double> circle;  // single horizontal circle of hyperbolic radius R at t = 0
  std::string curve_file;        // two-component curve, radially projected
  double projection_radius = 2.0;  // n in tanh(n)
  double projection_cap = 50.0;    // T
  int level = 4;
  int half_rings = 24;
  int theta = 256;
  int max_iterations = 2000;
  double gradient_tol = 1e-7;
  int refinement_levels = 0;
  std::string mesh_out;  // OFF export of the optimized surface
};
int cmd_plateau(const PlateauOptions& o, std::ostream& summary, std::ostream* csv);

struct RectangleOptions {
  double tau = 0.0;
  std::optional<double> t1, t2;
  double theta1 = -0.1;
  std::optional<double> theta2;  // default: theta1 + delta / 2
  std::optional<double> h, r;
  double rotation = 0.0;
  double offset = 0.0;
  int samples = 180;
};
int cmd_rectangle(const RectangleOptions& o, std::ostream& summary, std::ostream* csv);

}  // namespace etau::cli
