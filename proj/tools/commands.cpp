#include "commands.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "etau/barriers.hpp"
#include "etau/catenoid.hpp"
#include "etau/csv.hpp"
#include "etau/curves.hpp"
#include "etau/isometries.hpp"
#include "etau/plateau.hpp"

namespace etau::cli {

namespace {

using csv::num;

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Smallest grid value from which a predicate holds through the end of the
// grid; nullopt if it fails at the last point.
std::optional<double> threshold_from(const std::vector<double>& grid, const std::vector<bool>& holds) {
  std::optional<double> out;
  for (std::size_t i = grid.size(); i-- > 0;) {
    if (!holds[i]) break;
    out = grid[i];
  }
  return out;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt::format("{:.6g}", *v) : "none"; }

}  // namespace

int cmd_catenoid_height(const CatenoidHeightOptions& o, std::ostream& summary, std::ostream* csv) {
  try {
    const AmbientSpace amb(o.tau);
    double d = 0.0;
    if (o.height) {
      d = d_for_height(amb, *o.height);
      fmt::print(summary, "tau={} height={} -> d={:.12g}\n", o.tau, *o.height, d);
    } else if (o.d) {
      d = *o.d;
    } else {
      throw std::invalid_argument("give --d or --height");
    }
    const CatenoidProfile profile(amb, d);
    const QuadratureResult h = asymptotic_height(profile);
    fmt::print(summary, "tau={} d={:.12g} asymptotic half-height {:.15g} (error estimate {:.2g}, sup {:.15g})\n",
               o.tau, d, h.value, h.error_estimate, height_supremum(amb));
    if (csv) {
      csv::write_header(*csv, "catenoid-profile", {"r", "u_d"});
      const int n = std::max(2, o.samples);
      for (int i = 0; i < n; ++i) {
        const double r = profile.neck() + o.r_span * i / (n - 1);
        *csv << num(r) << ',' << num(u_d(profile, r)) << '\n';
      }
    }
    return h.converged ? 0 : 1;
  } catch (const std::domain_error& e) {
    fmt::print(summary, "error: {}\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    fmt::print(summary, "error: {}\n", e.what());
    return 2;
  }
}

int cmd_lemmas(const LemmasOptions& o, std::ostream& summary, std::ostream* csv) {
  try {
    const AmbientSpace amb(o.tau);
    if (o.d_count < 2) throw std::invalid_argument("d grid needs at least two points");
    const std::vector<double> grid = log_grid(o.d_start, o.d_stop, static_cast<std::size_t>(o.d_count));
    const CrossoverResult cross = find_crossover(amb, grid);
    const double sup = height_supremum(amb);
    const std::vector<double> heights = parallel_map<double>(grid.size(), [&](std::size_t i) {
      return u_d(CatenoidProfile(amb, grid[i]), R_of_d(grid[i]));
    });
    std::vector<bool> upper(grid.size()), lower(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& row = cross.rows[i];
      upper[i] = row.area_catenoid < row.upper_bound_lemma;
      lower[i] = row.area_two_disks > row.lower_bound_lemma;
    }
    if (csv) {
      csv::write_header(*csv, "lemma-sweep",
                        {"d", "R", "area_catenoid", "area_two_disks", "upper_bound", "upper_holds", "lower_bound",
                         "lower_holds", "connected_wins", "beyond_crossover", "u_d_R", "sup_gap"});
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& row = cross.rows[i];
        *csv << num(row.d) << ',' << num(row.R) << ',' << num(row.area_catenoid) << ',' << num(row.area_two_disks)
             << ',' << num(row.upper_bound_lemma) << ',' << (upper[i] ? 1 : 0) << ',' << num(row.lower_bound_lemma)
             << ',' << (lower[i] ? 1 : 0) << ',' << (row.connected_wins ? 1 : 0) << ','
             << (cross.found && i >= cross.index ? 1 : 0) << ',' << num(heights[i]) << ','
             << num(sup - heights[i]) << '\n';
      }
    }
    fmt::print(summary, "tau={} grid [{:g}, {:g}] x {}\n", o.tau, o.d_start, o.d_stop, o.d_count);
    fmt::print(summary, "upper estimate holds from d = {}; lower estimate holds from d = {}\n",
               fmt_opt(threshold_from(grid, upper)), fmt_opt(threshold_from(grid, lower)));
    if (cross.found)
      fmt::print(summary, "crossover d~ = {:.6g}{}\n", cross.d_tilde, cross.non_monotone ? " (comparison flips on grid)" : "");
    else
      fmt::print(summary, "crossover not found on grid\n");
    fmt::print(summary, "u_d(R(d)) at d = {:g}: {:.12g}, gap to sup {:.6g}\n", grid.back(), heights.back(),
               sup - heights.back());
    return 0;
  } catch (const std::exception& e) {
    fmt::print(summary, "error: {}\n", e.what());
    return 2;
  }
}

int cmd_isometry_bound(const IsometryBoundOptions& o, std::ostream& summary, std::ostream* csv) {
  try {
    const AmbientSpace amb(o.tau);
    const auto samples = disk_sample(o.angles, o.radii);
    const double bound = 2.0 * o.tau * std::numbers::pi;
    std::vector<MobiusIsometry> maps;
    for (double f0 : o.f0) {
      if (!(f0 >= 0.0 && f0 < 1.0)) throw std::invalid_argument("|f(0)| must lie in [0, 1)");
      maps.push_back(MobiusIsometry::real_translation(std::atanh(f0)));
    }
    for (int i = 0; i < o.random; ++i) maps.push_back(random_mobius(o.seed + static_cast<std::uint64_t>(i), 0.999));
    const auto sups = parallel_map<DeltaTSup>(maps.size(), [&](std::size_t i) {
      return sampled_delta_t(bounded_lift(amb, maps[i]), samples);
    });
    if (csv) csv::write_header(*csv, "isometry-bound", {"f0_abs", "sup_abs_delta_t", "bound", "ratio", "below_bound"});
    bool all_below = true;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const double f0 = std::abs(mobius_apply(maps[i], 0.0));
      const bool below = sups[i].sup_abs < bound || (bound == 0.0 && sups[i].sup_abs == 0.0);
      all_below = all_below && below;
      if (csv)
        *csv << num(f0) << ',' << num(sups[i].sup_abs) << ',' << num(bound) << ','
             << num(bound > 0.0 ? sups[i].sup_abs / bound : 0.0) << ',' << (below ? 1 : 0) << '\n';
    }
    fmt::print(summary, "tau={} bound 2 tau pi = {:.12g}; {} isometries, {} sample points; all below: {}\n", o.tau,
               bound, maps.size(), samples.size(), yes_no(all_below));
    return 0;
  } catch (const std::exception& e) {
    fmt::print(summary, "error: {}\n", e.what());
    return 2;
  }
}

int cmd_classify(const ClassifyOptions& o, std::ostream& summary, std::ostream* csv) {
  try {
    const AmbientSpace amb(o.tau);
    const AsymptoticCurve curve =
        o.curve_file.empty() ? AsymptoticCurve::parallel_circles(o.circles) : AsymptoticCurve::load(o.curve_file);
    const Classification c = classify(amb, curve, o.grid);
    fmt::print(summary, "verdict: {}\n", to_string(c.verdict));
    fmt::print(summary, "tall threshold {:.12g}, nonexistence threshold {:.12g}\n", tall_threshold(amb),
               nonexistence_threshold(amb));
    fmt::print(summary, "min height over footprint {}, global min {}\n", num(c.min_height_footprint),
               num(c.global_min_height));
    if (c.witness_arc)
      fmt::print(summary, "witness arc [{:.9g}, {:.9g}]\n", c.witness_arc->first, c.witness_arc->second);
    if (c.witness_angle) fmt::print(summary, "witness angle {:.9g}\n", *c.witness_angle);
    if (csv) {
      csv::write_header(*csv, "height-profile", {"angle", "height", "crossings", "indeterminate"});
      for (const auto& s : c.profile)
        *csv << num(s.angle) << ',' << num(s.height.value) << ',' << s.height.crossings << ','
             << (s.height.indeterminate ? 1 : 0) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    fmt::print(summary, "error: {}\n", e.what());
    return 2;
  }
}

namespace {

void write_report(std::ostream& out, const std::vector<std::pair<std::string, double>>& rows) {
  csv::write_header(out, "plateau-report", {"quantity", "value"});
  for (const auto& [k, v] : rows) out << k << ',' << num(v) << '\n';
}

void export_mesh(const std::string& path, const TriMesh& mesh) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write_off(f, mesh);
}

// Resamples a closed polyline to n points equispaced in parameter index.
std::vector<Eigen::Vector3d> resample_loop(const std::vector<Eigen::Vector3d>& loop, int n) {
  std::vector<Eigen::Vector3d> out;
  const double m = static_cast<double>(loop.size());
  for (int j = 0; j < n; ++j) {
    const double u = m * j / n;
    const std::size_t i = static_cast<std::size_t>(u);
    const double a = u - static_cast<double>(i);
    const Eigen::Vector3d& p = loop[i % loop.size()];
    const Eigen::Vector3d& q = loop[(i + 1) % loop.size()];
    Eigen::Vector3d v = (1.0 - a) * p + a * q;
    // Keep samples on the projection circle.
    const double rho = std::hypot(p.x(), p.y());
    const double rv = std::hypot(v.x(), v.y());
    if (rv > 0.0) v.head<2>() *= rho / rv;
    out.push_back(v);
  }
  return out;
}

}  // namespace

int cmd_plateau(const PlateauOptions& o, std::ostream& summary, std::ostream* csv) {
  try {
    const AmbientSpace amb(o.tau);
    SolverConfig cfg;
    cfg.max_iterations = o.max_iterations;
    cfg.gradient_tol = o.gradient_tol;
    cfg.refinement_levels = o.refinement_levels;
    cfg.validate();
    const int modes = (o.height ? 1 : 0) + (o.circle ? 1 : 0) + (o.curve_file.empty() ? 0 : 1);
    if (modes != 1) throw std::invalid_argument("give exactly one of --height, --circle, --curve");

    if (o.height) {
      PlateauResolution res;
      res.disk_level = o.level;
      res.annulus_half_rings = o.half_rings;
      res.annulus_theta = o.theta;
      const ConnectedExperiment e = compare_connected_vs_disks(amb, *o.height, cfg, res);
      fmt::print(summary, "tau={} h={}: d={:.9g} R={:.9g}\n", o.tau, *o.height, e.boundary.d, e.boundary.R);
      fmt::print(summary, "annulus {:.9g} -> {:.9g} ({}), analytic {:.9g}\n", e.annulus_initial, e.annulus_optimized,
                 e.annulus_report.status, e.area_catenoid);
      fmt::print(summary, "two disks {:.9g} ({}), analytic {:.9g}\n", e.disks_optimized, e.disk_report.status,
                 e.area_two_disks);
      fmt::print(summary, "connected_wins={} margin {:.6g} vs tolerance {:.6g}\n", yes_no(e.connected_wins),
                 e.disks_optimized - e.annulus_optimized, e.tolerance);
      if (csv)
        write_report(*csv, {{"tau", o.tau},
                            {"height", *o.height},
                            {"d", e.boundary.d},
                            {"R", e.boundary.R},
                            {"annulus_initial", e.annulus_initial},
                            {"annulus_optimized", e.annulus_optimized},
                            {"annulus_iterations", e.annulus_report.iterations},
                            {"area_catenoid", e.area_catenoid},
                            {"disks_optimized", e.disks_optimized},
                            {"disk_iterations", e.disk_report.iterations},
                            {"area_two_disks", e.area_two_disks},
                            {"tolerance", e.tolerance},
                            {"connected_wins", e.connected_wins ? 1.0 : 0.0},
                            {"margin_exceeds_tolerance", e.margin_exceeds_tolerance ? 1.0 : 0.0}});
      export_mesh(o.mesh_out, e.annulus_mesh);
      return 0;
    }

    TriMesh mesh;
    double reference = std::numeric_limits<double>::quiet_NaN();
    if (o.circle) {
      mesh = mesh_disk(*o.circle, 0.0, 4 << o.level, 16 << o.level);
      reference = area_disk_closed_form(amb, *o.circle);
    } else {
      const AsymptoticCurve curve = AsymptoticCurve::load(o.curve_file);
      const auto loops = radial_projection(curve, o.projection_radius, o.projection_cap);
      if (loops.size() != 2) throw std::invalid_argument("curve file for plateau must have exactly two components");
      mesh = mesh_annulus(resample_loop(loops[0], o.theta), resample_loop(loops[1], o.theta), 4 << o.level);
      const double rho = std::tanh(o.projection_radius);
      mesh.projector = [rho](const Eigen::Vector3d& p) {
        const double r = std::hypot(p.x(), p.y());
        return r > 0.0 ? Eigen::Vector3d(rho * p.x() / r, rho * p.y() / r, p.z()) : p;
      };
    }
    const auto [opt, rep] = minimize(amb, mesh, cfg);
    fmt::print(summary, "area {:.9g} -> {:.9g} after {} iterations ({})\n", rep.initial_area, rep.final_area,
               rep.iterations, rep.status);
    if (!std::isnan(reference))
      fmt::print(summary, "flat disk reference {:.9g}, relative error {:.3g}\n", reference,
                 rep.final_area / reference - 1.0);
    if (csv)
      write_report(*csv, {{"tau", o.tau},
                          {"initial_area", rep.initial_area},
                          {"final_area", rep.final_area},
                          {"iterations", rep.iterations},
                          {"converged", rep.converged ? 1.0 : 0.0},
                          {"gradient_norm", rep.gradient_norm},
                          {"reference_area", reference}});
    export_mesh(o.mesh_out, opt);
    return 0;
  } catch (const std::exception& e) {
    fmt::print(summary, "error: {}\n", e.what());
    return 2;
  }
}

int cmd_rectangle(const RectangleOptions& o, std::ostream& summary, std::ostream* csv) {
  try {
    const AmbientSpace amb(o.tau);
    std::optional<TallRectangleBoundary> rect;
    if (o.t1 && o.t2) {
      const double delta = delta_for_slab(amb, *o.t1, *o.t2);
      const double theta2 = o.theta2 ? *o.theta2 : o.theta1 + 0.5 * delta;
      fmt::print(summary, "slab ({}, {}): delta = {:.12g}\n", *o.t1, *o.t2, delta);
      rect.emplace(place_rectangle(amb, o.theta1, theta2, *o.t1, *o.t2));
    } else if (o.h && o.r) {
      rect.emplace(amb, *o.h, *o.r, o.rotation, o.offset);
    } else {
      throw std::invalid_argument("give --t1/--t2 or --height/--half-width");
    }
    const BoundaryCurve curve = rectangle_boundary(*rect, o.samples);
    curve.validate();
    fmt::print(summary, "rectangle h={:.12g} r={:.12g} rotation={:.12g} offset={:.12g}; {} samples, simple: {}\n",
               rect->h(), rect->r(), rect->rotation(), rect->vertical_offset(), curve.samples.size(),
               yes_no(is_simple(curve)));
    if (csv) write_curves_csv(*csv, {curve});
    return 0;
  } catch (const std::exception& e) {
    fmt::print(summary, "error: {}\n", e.what());
    return 2;
  }
}

}  // namespace etau::cli
