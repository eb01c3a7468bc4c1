#include "etau/plateau.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "etau/csv.hpp"

namespace etau {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRimMargin = 1e-9;

bool inside_disk(const Eigen::Vector3d& p) { return p.x() * p.x() + p.y() * p.y() < 1.0 - kRimMargin; }

BoundaryProjector circle_projector(double rho) {
  return [rho](const Eigen::Vector3d& p) {
    const double r = std::hypot(p.x(), p.y());
    if (r == 0.0) return p;
    return Eigen::Vector3d(rho * p.x() / r, rho * p.y() / r, p.z());
  };
}

struct TriangleTerms {
  double area;
  bool degenerate;
  Eigen::Vector3d grad[3];
};

TriangleTerms triangle_terms(double tau, const Eigen::Vector3d& p0, const Eigen::Vector3d& p1,
                             const Eigen::Vector3d& p2, bool with_gradient) {
  TriangleTerms out{};
  const Eigen::Vector3d e1 = p1 - p0;
  const Eigen::Vector3d e2 = p2 - p0;
  const Eigen::Vector3d b = (p0 + p1 + p2) / 3.0;
  const Eigen::Matrix3d g = metric_cylinder_raw(tau, b.x(), b.y());
  const Eigen::Vector3d ge1 = g * e1;
  const Eigen::Vector3d ge2 = g * e2;
  const double g11 = e1.dot(ge1);
  const double g12 = e1.dot(ge2);
  const double g22 = e2.dot(ge2);
  const double det = g11 * g22 - g12 * g12;
  if (!(det > 1e-24 * g11 * g22) || !(det > 0.0)) {
    out.area = 0.5 * std::sqrt(std::max(det, 0.0));
    out.degenerate = true;
    return out;
  }
  out.area = 0.5 * std::sqrt(det);
  if (!with_gradient) return out;
  const double scale = 1.0 / (8.0 * out.area);
  const Eigen::Vector3d dd_e1 = 2.0 * g22 * ge1 - 2.0 * g12 * ge2;
  const Eigen::Vector3d dd_e2 = 2.0 * g11 * ge2 - 2.0 * g12 * ge1;
  const auto dg = metric_cylinder_gradient(tau, b.x(), b.y());
  Eigen::Vector3d dd_b = Eigen::Vector3d::Zero();
  for (int k = 0; k < 2; ++k) {
    const Eigen::Vector3d he1 = dg[k] * e1;
    const Eigen::Vector3d he2 = dg[k] * e2;
    dd_b[k] = g22 * e1.dot(he1) + g11 * e2.dot(he2) - 2.0 * g12 * e1.dot(he2);
  }
  out.grad[0] = scale * (-dd_e1 - dd_e2 + dd_b / 3.0);
  out.grad[1] = scale * (dd_e1 + dd_b / 3.0);
  out.grad[2] = scale * (dd_e2 + dd_b / 3.0);
  return out;
}

// Triangles between closed rings a and b, zipping by angle. Every triangle
// is oriented like (a_i, b_j, b_{j+1}).
void zip_rings(const std::vector<int>& a, const std::vector<double>& ang_a, const std::vector<int>& b,
               const std::vector<double>& ang_b, std::vector<std::array<int, 3>>& tris) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::size_t i = 0;
  std::size_t j = 0;
  auto next_angle = [](const std::vector<double>& ang, std::size_t k) {
    return k + 1 < ang.size() ? ang[k + 1] : ang[0] + 2.0 * kPi;
  };
  while (i < na || j < nb) {
    const bool advance_b = (i == na) || (j < nb && next_angle(ang_b, j) <= next_angle(ang_a, i));
    if (advance_b) {
      tris.push_back({a[i % na], b[j % nb], b[(j + 1) % nb]});
      ++j;
    } else {
      tris.push_back({a[i % na], b[j % nb], a[(i + 1) % na]});
      ++i;
    }
  }
}

}  // namespace

void TriMesh::validate() const {
  if (boundary.size() != vertices.size()) throw std::invalid_argument("boundary mask size differs from vertex count");
  for (const auto& v : vertices)
    if (!inside_disk(v) || !v.allFinite()) throw std::invalid_argument("mesh vertex outside x^2 + y^2 < 1 - 1e-9");
  std::map<std::pair<int, int>, int> directed;
  const int n = static_cast<int>(vertices.size());
  for (const auto& t : triangles) {
    for (int k = 0; k < 3; ++k) {
      if (t[k] < 0 || t[k] >= n) throw std::invalid_argument("triangle references a missing vertex");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw std::invalid_argument("triangle repeats a vertex");
    for (int k = 0; k < 3; ++k) {
      const int u = t[k];
      const int v = t[(k + 1) % 3];
      if (++directed[{u, v}] > 1) throw std::invalid_argument("mesh is not consistently oriented");
      if (directed.count({v, u}) && directed[{v, u}] > 1) throw std::invalid_argument("edge in more than two triangles");
    }
  }
}

int TriMesh::euler_characteristic() const {
  std::map<std::pair<int, int>, int> edges;
  for (const auto& t : triangles)
    for (int k = 0; k < 3; ++k) {
      const int u = t[k];
      const int v = t[(k + 1) % 3];
      edges[{std::min(u, v), std::max(u, v)}]++;
    }
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + static_cast<int>(triangles.size());
}

std::size_t TriMesh::interior_count() const {
  return static_cast<std::size_t>(std::count(boundary.begin(), boundary.end(), 0));
}

AreaEvaluation discrete_area(const AmbientSpace& amb, const TriMesh& mesh) {
  AreaEvaluation out;
  for (const auto& t : mesh.triangles) {
    const TriangleTerms tt =
        triangle_terms(amb.tau, mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]], false);
    out.area += tt.area;
    out.degenerate = out.degenerate || tt.degenerate;
  }
  return out;
}

std::vector<Eigen::Vector3d> area_gradient(const AmbientSpace& amb, const TriMesh& mesh) {
  std::vector<Eigen::Vector3d> grad(mesh.vertices.size(), Eigen::Vector3d::Zero());
  for (const auto& t : mesh.triangles) {
    const TriangleTerms tt =
        triangle_terms(amb.tau, mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]], true);
    if (tt.degenerate) continue;
    for (int k = 0; k < 3; ++k) grad[t[k]] += tt.grad[k];
  }
  for (std::size_t i = 0; i < grad.size(); ++i)
    if (mesh.boundary[i]) grad[i].setZero();
  return grad;
}

void SolverConfig::validate() const {
  if (max_iterations <= 0 || !(gradient_tol > 0.0) || !(initial_step > 0.0) || refinement_levels < 0 ||
      !(line_search_shrink > 0.0 && line_search_shrink < 1.0) || memory < 0)
    throw std::invalid_argument("invalid solver configuration");
}

namespace {

struct LevelResult {
  int iterations = 0;
  bool converged = false;
  double gradient_norm = 0.0;
  std::vector<double> history;
  std::string status;
};

using Vec = Eigen::VectorXd;

// Each interior vertex moves along its coordinate-space vertex normal,
// frozen for an epoch; the solve is L-BFGS in those scalar offsets. Free
// tangential motion lets vertices slide until the barycentric quadrature
// undercounts (folded triangles, area below the true minimum).
constexpr int kEpochLength = 200;

std::vector<Eigen::Vector3d> vertex_normals(const TriMesh& mesh) {
  std::vector<Eigen::Vector3d> n(mesh.vertices.size(), Eigen::Vector3d::Zero());
  for (const auto& t : mesh.triangles) {
    const Eigen::Vector3d c =
        (mesh.vertices[t[1]] - mesh.vertices[t[0]]).cross(mesh.vertices[t[2]] - mesh.vertices[t[0]]);
    for (int k = 0; k < 3; ++k) n[t[k]] += c;
  }
  for (auto& v : n) {
    const double len = v.norm();
    if (len > 0.0) v /= len;
  }
  return n;
}

LevelResult optimize_level(const AmbientSpace& amb, TriMesh& mesh, const SolverConfig& cfg) {
  LevelResult res;
  std::vector<int> free;
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    if (!mesh.boundary[i]) free.push_back(static_cast<int>(i));
  const Eigen::Index m = static_cast<Eigen::Index>(free.size());
  if (m == 0) throw std::invalid_argument("mesh has no interior vertices");

  double f = discrete_area(amb, mesh).area;
  res.history.push_back(f);
  const double c1 = 1e-4;
  int stall = 0;
  int it = 0;
  bool done = false;

  while (!done && it < cfg.max_iterations) {
    // New epoch: base positions, directions and diagonal preconditioner.
    std::vector<Eigen::Vector3d> base(m);
    std::vector<Eigen::Vector3d> dir(m);
    Vec precond(m);
    {
      const auto normals = vertex_normals(mesh);
      for (Eigen::Index k = 0; k < m; ++k) {
        base[k] = mesh.vertices[free[k]];
        dir[k] = normals[free[k]];
        const double gn = dir[k].dot(metric_cylinder_raw(amb.tau, base[k].x(), base[k].y()) * dir[k]);
        precond[k] = gn > 0.0 ? 1.0 / gn : 0.0;
      }
    }
    auto place = [&](const Vec& s) {
      for (Eigen::Index k = 0; k < m; ++k) mesh.vertices[free[k]] = base[k] + s[k] * dir[k];
    };
    auto feasible = [&](const Vec& s) {
      for (Eigen::Index k = 0; k < m; ++k)
        if (!inside_disk(base[k] + s[k] * dir[k])) return false;
      return true;
    };
    auto reduced_gradient = [&]() {
      const auto g3 = area_gradient(amb, mesh);
      Vec out(m);
      for (Eigen::Index k = 0; k < m; ++k) out[k] = g3[free[k]].dot(dir[k]);
      return out;
    };

    Vec s = Vec::Zero(m);
    Vec g = reduced_gradient();
    std::deque<Vec> S;
    std::deque<Vec> Y;
    std::deque<double> rho;
    bool epoch_fresh = true;

    for (int local = 0; local < kEpochLength && it < cfg.max_iterations; ++local) {
      const Vec pg = precond.cwiseProduct(g);
      res.gradient_norm = std::sqrt(std::max(0.0, g.dot(pg)));
      if (res.gradient_norm < cfg.gradient_tol) {
        res.converged = true;
        res.status = "gradient tolerance reached";
        done = true;
        break;
      }
      // Two-loop recursion, diagonal preconditioner as initial inverse Hessian.
      Vec q = g;
      std::vector<double> alpha(S.size());
      for (int k = static_cast<int>(S.size()) - 1; k >= 0; --k) {
        alpha[k] = rho[k] * S[k].dot(q);
        q -= alpha[k] * Y[k];
      }
      Vec r = precond.cwiseProduct(q);
      if (!S.empty()) r *= S.back().dot(Y.back()) / Y.back().dot(precond.cwiseProduct(Y.back()));
      for (std::size_t k = 0; k < S.size(); ++k) {
        const double beta = rho[k] * Y[k].dot(r);
        r += S[k] * (alpha[k] - beta);
      }
      Vec d = -r;
      double slope = g.dot(d);
      double step = S.empty() ? cfg.initial_step : 1.0;
      if (!(slope < 0.0)) {
        S.clear();
        Y.clear();
        rho.clear();
        d = -pg;
        slope = g.dot(d);
        step = cfg.initial_step;
      }

      bool accepted = false;
      Vec s_new;
      double f_new = f;
      for (int ls = 0; ls < 60; ++ls) {
        s_new = s + step * d;
        if (feasible(s_new)) {
          place(s_new);
          f_new = discrete_area(amb, mesh).area;
          if (f_new <= f + c1 * step * slope) {
            accepted = true;
            break;
          }
        }
        step *= cfg.line_search_shrink;
      }
      if (!accepted) {
        place(s);
        if (!S.empty()) {
          S.clear();
          Y.clear();
          rho.clear();
          continue;
        }
        // Plain preconditioned step failed too; a fresh frame may still help.
        if (!epoch_fresh) break;
        res.status = "line search failed";
        done = true;
        break;
      }
      epoch_fresh = false;
      const Vec g_new = reduced_gradient();
      const Vec sd = s_new - s;
      const Vec yd = g_new - g;
      const double sy = sd.dot(yd);
      if (cfg.memory > 0 && sy > 1e-16 * std::sqrt(sd.squaredNorm() * yd.squaredNorm())) {
        S.push_back(sd);
        Y.push_back(yd);
        rho.push_back(1.0 / sy);
        if (static_cast<int>(S.size()) > cfg.memory) {
          S.pop_front();
          Y.pop_front();
          rho.pop_front();
        }
      }
      const double decrease = f - f_new;
      s = s_new;
      f = f_new;
      g = g_new;
      res.history.push_back(f);
      res.iterations = ++it;
      stall = (decrease <= 1e-14 * std::abs(f)) ? stall + 1 : 0;
      if (stall >= 20) {
        res.status = "area stationary to machine precision";
        done = true;
        break;
      }
    }
    place(s);
  }
  if (res.status.empty()) res.status = "iteration limit";
  return res;
}

}  // namespace

std::pair<TriMesh, SolveReport> minimize(const AmbientSpace& amb, TriMesh mesh, const SolverConfig& config) {
  config.validate();
  mesh.validate();
  SolveReport report;
  report.initial_area = discrete_area(amb, mesh).area;
  int total_iterations = 0;
  LevelResult last;
  for (int level = 0; level <= config.refinement_levels; ++level) {
    if (level > 0) mesh = subdivide(mesh);
    last = optimize_level(amb, mesh, config);
    total_iterations += last.iterations;
  }
  report.levels = config.refinement_levels + 1;
  report.iterations = total_iterations;
  report.converged = last.converged;
  report.gradient_norm = last.gradient_norm;
  report.area_history = std::move(last.history);
  report.final_area = report.area_history.back();
  report.status = last.status;
  return {std::move(mesh), report};
}

TriMesh subdivide(const TriMesh& mesh) {
  TriMesh out;
  out.vertices = mesh.vertices;
  out.boundary = mesh.boundary;
  out.projector = mesh.projector;
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      const int u = t[k];
      const int v = t[(k + 1) % 3];
      edge_count[{std::min(u, v), std::max(u, v)}]++;
    }
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int u, int v) {
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    Eigen::Vector3d p = 0.5 * (mesh.vertices[u] + mesh.vertices[v]);
    const bool on_boundary = edge_count[key] == 1;
    if (on_boundary && mesh.projector) p = mesh.projector(p);
    const int id = static_cast<int>(out.vertices.size());
    out.vertices.push_back(p);
    out.boundary.push_back(on_boundary ? 1 : 0);
    midpoint.emplace(key, id);
    return id;
  };
  for (const auto& t : mesh.triangles) {
    const int a = mid(t[0], t[1]);
    const int b = mid(t[1], t[2]);
    const int c = mid(t[2], t[0]);
    out.triangles.push_back({t[0], a, c});
    out.triangles.push_back({a, t[1], b});
    out.triangles.push_back({c, b, t[2]});
    out.triangles.push_back({a, b, c});
  }
  return out;
}

TriMesh mesh_disk(double R, double height, int n_r, int n_theta) {
  if (!(R > 0.0) || n_r < 1 || n_theta < 6) throw std::invalid_argument("mesh_disk needs R > 0, n_r >= 1, n_theta >= 6");
  TriMesh mesh;
  mesh.vertices.emplace_back(0.0, 0.0, height);
  mesh.boundary.push_back(0);
  const double dr = R / n_r;
  std::vector<int> prev{0};
  std::vector<double> prev_ang{0.0};
  int prev_count = 1;
  for (int i = 1; i <= n_r; ++i) {
    const double rho_h = dr * i;
    const int want = static_cast<int>(std::lround(2.0 * kPi * std::sinh(rho_h) / dr));
    const int count = std::max(prev_count, std::clamp(want, 6, n_theta));
    const double rho = std::tanh(0.5 * rho_h);
    std::vector<int> ring;
    std::vector<double> ang;
    for (int j = 0; j < count; ++j) {
      const double a = 2.0 * kPi * j / count;
      ring.push_back(static_cast<int>(mesh.vertices.size()));
      ang.push_back(a);
      mesh.vertices.emplace_back(rho * std::cos(a), rho * std::sin(a), height);
      mesh.boundary.push_back(i == n_r ? 1 : 0);
    }
    if (i == 1) {
      for (int j = 0; j < count; ++j) mesh.triangles.push_back({0, ring[j], ring[(j + 1) % count]});
    } else {
      zip_rings(prev, prev_ang, ring, ang, mesh.triangles);
    }
    mesh.rings.push_back(ring);
    prev = std::move(ring);
    prev_ang = std::move(ang);
    prev_count = count;
  }
  mesh.projector = circle_projector(std::tanh(0.5 * R));
  return mesh;
}

TriMesh mesh_tube(const std::vector<std::vector<Eigen::Vector3d>>& rings) {
  if (rings.size() < 3) throw std::invalid_argument("mesh_tube needs at least three rings");
  const std::size_t n = rings.front().size();
  if (n < 3) throw std::invalid_argument("mesh_tube rings need at least three vertices");
  TriMesh mesh;
  std::vector<double> ang(n);
  for (std::size_t j = 0; j < n; ++j) ang[j] = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
  std::vector<int> prev;
  for (std::size_t k = 0; k < rings.size(); ++k) {
    if (rings[k].size() != n) throw std::invalid_argument("mesh_tube rings must have equal size");
    std::vector<int> ring;
    for (const auto& p : rings[k]) {
      ring.push_back(static_cast<int>(mesh.vertices.size()));
      mesh.vertices.push_back(p);
      mesh.boundary.push_back(k == 0 || k + 1 == rings.size() ? 1 : 0);
    }
    if (k > 0) zip_rings(prev, ang, ring, ang, mesh.triangles);
    mesh.rings.push_back(ring);
    prev = std::move(ring);
  }
  return mesh;
}

TriMesh mesh_annulus(const std::vector<Eigen::Vector3d>& c1, const std::vector<Eigen::Vector3d>& c2, int n_v) {
  if (c1.size() != c2.size()) throw std::invalid_argument("mesh_annulus loops need equal sample counts");
  if (n_v < 3) throw std::invalid_argument("mesh_annulus needs n_v >= 3");
  std::vector<std::vector<Eigen::Vector3d>> rings(n_v);
  for (int k = 0; k < n_v; ++k) {
    const double s = static_cast<double>(k) / (n_v - 1);
    for (std::size_t j = 0; j < c1.size(); ++j) rings[k].push_back((1.0 - s) * c1[j] + s * c2[j]);
  }
  return mesh_tube(rings);
}

TriMesh mesh_catenoid(const CatenoidTruncation& truncation, int n_half, int n_theta) {
  const auto rings = catenoid_rings(truncation, n_half);
  std::vector<std::vector<Eigen::Vector3d>> loops;
  auto loop = [&](const CatenoidRing& ring, double sign) {
    std::vector<Eigen::Vector3d> l;
    for (int j = 0; j < n_theta; ++j) {
      const double a = 2.0 * kPi * j / n_theta;
      l.emplace_back(ring.radius * std::cos(a), ring.radius * std::sin(a), sign * ring.height);
    }
    return l;
  };
  for (int i = n_half - 1; i >= 1; --i) loops.push_back(loop(rings[i], -1.0));
  for (int i = 0; i < n_half; ++i) loops.push_back(loop(rings[i], 1.0));
  TriMesh mesh = mesh_tube(loops);
  mesh.projector = circle_projector(rings.back().radius);
  return mesh;
}

TriMesh mesh_thin_cylinder(double rho, double t1, double t2, double rho_neck, int n_v, int n_theta) {
  if (!(rho_neck > 0.0 && rho_neck < rho && rho < 1.0) || !(t2 > t1) || n_v < 3)
    throw std::invalid_argument("mesh_thin_cylinder needs 0 < rho_neck < rho < 1, t1 < t2, n_v >= 3");
  std::vector<std::vector<Eigen::Vector3d>> loops;
  auto loop = [&](double r, double t) {
    std::vector<Eigen::Vector3d> l;
    for (int j = 0; j < n_theta; ++j) {
      const double a = 2.0 * kPi * j / n_theta;
      l.emplace_back(r * std::cos(a), r * std::sin(a), t);
    }
    return l;
  };
  const int collar = std::max(2, n_v / 4);
  for (int k = 0; k < collar; ++k) loops.push_back(loop(rho + (rho_neck - rho) * k / collar, t1));
  for (int k = 0; k <= n_v; ++k) loops.push_back(loop(rho_neck, t1 + (t2 - t1) * k / n_v));
  for (int k = collar - 1; k >= 0; --k) loops.push_back(loop(rho + (rho_neck - rho) * k / collar, t2));
  TriMesh mesh = mesh_tube(loops);
  mesh.projector = circle_projector(rho);
  return mesh;
}

double ring_asymmetry(const TriMesh& mesh) {
  double worst = 0.0;
  for (const auto& ring : mesh.rings) {
    if (ring.empty()) continue;
    double sr = 0.0, sr2 = 0.0, st = 0.0, st2 = 0.0;
    for (int id : ring) {
      const auto& p = mesh.vertices[id];
      const double r = std::hypot(p.x(), p.y());
      sr += r;
      sr2 += r * r;
      st += p.z();
      st2 += p.z() * p.z();
    }
    const double n = static_cast<double>(ring.size());
    const double vr = std::max(0.0, sr2 / n - (sr / n) * (sr / n));
    const double vt = std::max(0.0, st2 / n - (st / n) * (st / n));
    worst = std::max({worst, std::sqrt(vr), std::sqrt(vt)});
  }
  return worst;
}

void write_off(std::ostream& out, const TriMesh& mesh) {
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.triangles.size() << " 0\n";
  for (const auto& v : mesh.vertices) out << csv::num(v.x()) << ' ' << csv::num(v.y()) << ' ' << csv::num(v.z()) << '\n';
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_solve_report_csv(std::ostream& out, const SolveReport& report) {
  csv::write_header(out, "solve-history", {"iteration", "area"});
  for (std::size_t i = 0; i < report.area_history.size(); ++i) out << i << ',' << csv::num(report.area_history[i]) << '\n';
}

ConnectedExperiment compare_connected_vs_disks(const AmbientSpace& amb, double h, const SolverConfig& config,
                                               const PlateauResolution& res) {
  ConnectedExperiment out;
  out.boundary = connected_boundary_for_height(amb, h);
  if (!out.boundary.found) throw std::runtime_error("no connected boundary: " + out.boundary.diagnostic);
  const double d = out.boundary.d;
  const double R = out.boundary.R;
  const CatenoidTruncation trunc(CatenoidProfile(amb, d), R);
  out.area_catenoid = out.boundary.comparison.area_catenoid;
  out.area_two_disks = out.boundary.comparison.area_two_disks;

  TriMesh annulus = mesh_catenoid(trunc, res.annulus_half_rings, res.annulus_theta);
  out.annulus_initial = discrete_area(amb, annulus).area;
  auto [ann_opt, ann_report] = minimize(amb, std::move(annulus), config);
  out.annulus_optimized = ann_report.final_area;
  out.annulus_report = ann_report;
  out.annulus_mesh = std::move(ann_opt);

  const int n_r = 4 << res.disk_level;
  const int n_theta = 16 << res.disk_level;
  // The two disks are mirror images under (x, y, t) -> (x, -y, -t), an
  // isometry, so one solve gives both areas.
  auto [disk_opt, disk_report] = minimize(amb, mesh_disk(R, trunc.half_height, n_r, n_theta), config);
  out.disks_optimized = 2.0 * disk_report.final_area;
  out.disk_report = disk_report;

  out.tolerance = 0.02 * out.area_catenoid + 0.01 * out.area_two_disks;
  out.connected_wins = out.annulus_optimized < out.disks_optimized;
  out.margin_exceeds_tolerance = out.disks_optimized - out.annulus_optimized > out.tolerance;
  return out;
}

}  // namespace etau
