#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "commands.hpp"

using namespace etau::cli;

namespace {

// Runs a command with the CSV going to `out` (or nowhere when empty).
template <class Opts>
int run(int (*cmd)(const Opts&, std::ostream&, std::ostream*), const Opts& opts, const std::string& out) {
  std::unique_ptr<std::ofstream> file;
  if (!out.empty()) {
    file = std::make_unique<std::ofstream>(out);
    if (!*file) {
      std::cerr << "error: cannot open " << out << '\n';
      return 2;
    }
  }
  return cmd(opts, std::cout, file.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"etau: geometry of E(-1, tau) in the cylinder model"};
  app.set_config("--config", "", "key = value configuration file (sections per subcommand)");
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  std::uint64_t seed = 0;
  app.add_option("--out", out, "CSV output path");
  app.add_option("--seed", seed, "seed for randomized sweeps");

  CatenoidHeightOptions ch;
  auto* c_height = app.add_subcommand("catenoid-height", "asymptotic half-height of M_d, or d for a height");
  c_height->add_option("--tau", ch.tau)->check(CLI::NonNegativeNumber);
  auto* opt_d = c_height->add_option("--d", ch.d, "neck parameter");
  auto* opt_h = c_height->add_option("--height", ch.height, "target height, inverted to d");
  opt_d->excludes(opt_h);
  c_height->add_option("--samples", ch.samples, "profile rows in the CSV");
  c_height->add_option("--r-span", ch.r_span, "profile radius span past the neck");

  LemmasOptions lm;
  auto* c_lemmas = app.add_subcommand("lemmas", "area estimates and crossover on a log d-grid");
  c_lemmas->add_option("--tau", lm.tau)->check(CLI::NonNegativeNumber);
  c_lemmas->add_option("--d-start", lm.d_start);
  c_lemmas->add_option("--d-stop", lm.d_stop);
  c_lemmas->add_option("--d-count", lm.d_count);

  IsometryBoundOptions ib;
  auto* c_iso = app.add_subcommand("isometry-bound", "sampled vertical displacement of lifted translations");
  c_iso->add_option("--tau", ib.tau)->check(CLI::NonNegativeNumber);
  c_iso->add_option("--f0", ib.f0, "values of |f(0)|")->delimiter(',');
  c_iso->add_option("--angles", ib.angles);
  c_iso->add_option("--radii", ib.radii);
  c_iso->add_option("--random", ib.random, "additional seeded random isometries");

  ClassifyOptions cl;
  auto* c_classify = app.add_subcommand("classify", "tall/short verdict for an asymptotic curve");
  c_classify->add_option("--tau", cl.tau)->check(CLI::NonNegativeNumber);
  auto* opt_curve = c_classify->add_option("--curve", cl.curve_file, "boundary-curve CSV");
  auto* opt_circles = c_classify->add_option("--circles", cl.circles, "heights of parallel circles")->delimiter(',');
  opt_curve->excludes(opt_circles);
  c_classify->add_option("--grid", cl.grid);

  PlateauOptions pl;
  auto* c_plateau = app.add_subcommand("plateau", "discrete area minimization");
  c_plateau->add_option("--tau", pl.tau)->check(CLI::NonNegativeNumber);
  c_plateau->add_option("--height", pl.height, "connected annulus vs two disks with circles at +-h");
  c_plateau->add_option("--circle", pl.circle, "single circle of hyperbolic radius R");
  c_plateau->add_option("--curve", pl.curve_file, "two-component boundary-curve CSV");
  c_plateau->add_option("--projection-radius", pl.projection_radius);
  c_plateau->add_option("--projection-cap", pl.projection_cap);
  c_plateau->add_option("--level", pl.level);
  c_plateau->add_option("--half-rings", pl.half_rings);
  c_plateau->add_option("--theta", pl.theta);
  c_plateau->add_option("--max-iterations", pl.max_iterations);
  c_plateau->add_option("--gradient-tol", pl.gradient_tol);
  c_plateau->add_option("--refine", pl.refinement_levels);
  c_plateau->add_option("--mesh-out", pl.mesh_out, "OFF export of the optimized surface");

  RectangleOptions rc;
  auto* c_rect = app.add_subcommand("rectangle", "tall rectangle boundary and slab delta");
  c_rect->add_option("--tau", rc.tau)->check(CLI::NonNegativeNumber);
  c_rect->add_option("--t1", rc.t1);
  c_rect->add_option("--t2", rc.t2);
  c_rect->add_option("--theta1", rc.theta1);
  c_rect->add_option("--theta2", rc.theta2);
  c_rect->add_option("--height", rc.h, "rectangle height");
  c_rect->add_option("--half-width", rc.r, "angular half-width r");
  c_rect->add_option("--rotation", rc.rotation);
  c_rect->add_option("--offset", rc.offset);
  c_rect->add_option("--samples", rc.samples);

  CLI11_PARSE(app, argc, argv);
  ib.seed = seed;

  if (*c_height) return run(cmd_catenoid_height, ch, out);
  if (*c_lemmas) return run(cmd_lemmas, lm, out);
  if (*c_iso) return run(cmd_isometry_bound, ib, out);
  if (*c_classify) return run(cmd_classify, cl, out);
  if (*c_plateau) return run(cmd_plateau, pl, out);
  if (*c_rect) return run(cmd_rectangle, rc, out);
  return 1;
}
