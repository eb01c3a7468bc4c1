#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "etau/catenoid.hpp"
#include "etau/models.hpp"

namespace etau {

// Maps a point near the fixed boundary back onto it; used when subdividing
// boundary edges.
using BoundaryProjector = std::function<Eigen::Vector3d(const Eigen::Vector3d&)>;

struct TriMesh {
  std::vector<Eigen::Vector3d> vertices;  // (x, y, t)
  std::vector<std::array<int, 3>> triangles;
  std::vector<char> boundary;            // per vertex; boundary vertices never move
  std::vector<std::vector<int>> rings;   // optional generator metadata (vertex ids per ring)
  BoundaryProjector projector;           // identity when empty

  // Throws std::invalid_argument on out-of-range indices, vertices with
  // x^2 + y^2 >= 1 - 1e-9, mismatched mask size, an edge in more than two
  // triangles, or inconsistent orientation across an interior edge.
  void validate() const;
  int euler_characteristic() const;
  std::size_t interior_count() const;
};

struct AreaEvaluation {
  double area = 0.0;
  bool degenerate = false;  // some triangle had a non-positive Gram determinant
};

// Sum over triangles of sqrt(det G) / 2 with G the Gram matrix of the two
// edge vectors under the cylinder metric at the barycenter.
AreaEvaluation discrete_area(const AmbientSpace& amb, const TriMesh& mesh);

// d(area)/d(vertex); zero rows for boundary vertices. Degenerate triangles
// contribute nothing.
std::vector<Eigen::Vector3d> area_gradient(const AmbientSpace& amb, const TriMesh& mesh);

struct SolverConfig {
  int max_iterations = 2000;
  double gradient_tol = 1e-7;
  double initial_step = 1.0;
  int refinement_levels = 0;
  double line_search_shrink = 0.5;
  int memory = 8;  // L-BFGS history; 0 gives preconditioned gradient descent

  void validate() const;
};

struct SolveReport {
  double initial_area = 0.0;
  double final_area = 0.0;
  int iterations = 0;
  bool converged = false;
  double gradient_norm = 0.0;
  std::vector<double> area_history;  // accepted iterates of the last refinement level
  int levels = 1;
  std::string status;
};

// Preconditioned L-BFGS with Armijo backtracking on the interior vertices.
// Steps that would leave x^2 + y^2 < 1 - 1e-9 are shrunk. After convergence
// (or the iteration cap) the mesh is subdivided refinement_levels times and
// re-optimized.
std::pair<TriMesh, SolveReport> minimize(const AmbientSpace& amb, TriMesh mesh, const SolverConfig& config);

// 1-to-4 split; new boundary midpoints go through mesh.projector.
TriMesh subdivide(const TriMesh& mesh);

// Horizontal disk t = height bounded by the circle of euclidean radius
// tanh(R/2). Rings are equispaced in hyperbolic radius; ring sizes grow with
// the circumference up to n_theta.
TriMesh mesh_disk(double R, double height, int n_r, int n_theta);

// Strip of triangles between consecutive rings of equal size; first and last
// rings are the fixed boundary.
TriMesh mesh_tube(const std::vector<std::vector<Eigen::Vector3d>>& rings);

// Annulus between two loops with the same sample count, n_v rows by linear
// interpolation in (x, y, t).
TriMesh mesh_annulus(const std::vector<Eigen::Vector3d>& c1, const std::vector<Eigen::Vector3d>& c2, int n_v);

// Sampled M_d(R): 2 n_half - 1 rings through the neck, n_theta per ring.
TriMesh mesh_catenoid(const CatenoidTruncation& truncation, int n_half, int n_theta);

// Circle boundaries of euclidean radius rho at heights t1 < t2, joined by a
// tube of euclidean radius rho_neck (flat collars at the two ends).
TriMesh mesh_thin_cylinder(double rho, double t1, double t2, double rho_neck, int n_v, int n_theta);

// Rotational symmetry measure: max over rings of the standard deviation of
// the euclidean radius and of t.
double ring_asymmetry(const TriMesh& mesh);

void write_off(std::ostream& out, const TriMesh& mesh);
void write_solve_report_csv(std::ostream& out, const SolveReport& report);

struct PlateauResolution {
  int disk_level = 4;         // mesh_disk(R, t, 4 * 2^level, 16 * 2^level)
  int annulus_half_rings = 24;
  int annulus_theta = 256;
};

struct ConnectedExperiment {
  ConnectedBoundary boundary;
  double annulus_initial = 0.0;
  double annulus_optimized = 0.0;
  double disks_optimized = 0.0;  // both disks
  double area_catenoid = 0.0;    // quadrature
  double area_two_disks = 0.0;   // closed form
  double tolerance = 0.0;        // 2% of the catenoid area + 1% of the disk area
  bool connected_wins = false;   // annulus_optimized < disks_optimized
  bool margin_exceeds_tolerance = false;  // disks_optimized - annulus_optimized > tolerance
  SolveReport annulus_report;
  SolveReport disk_report;
  TriMesh annulus_mesh;
};

ConnectedExperiment compare_connected_vs_disks(const AmbientSpace& amb, double h, const SolverConfig& config,
                                               const PlateauResolution& res = {});

}  // namespace etau
