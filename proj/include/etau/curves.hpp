#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "etau/barriers.hpp"
#include "etau/models.hpp"

namespace etau {

// One closed loop on S^1 x R. Angles are stored unwrapped along the loop
// (consecutive differences in (-pi, pi]); the loop closes back to sample 0.
struct CurveComponent {
  std::vector<double> theta;
  std::vector<double> t;
};

class AsymptoticCurve {
 public:
  AsymptoticCurve() = default;
  // Throws std::invalid_argument for an empty component, a component with
  // fewer than 3 samples, or a loop whose closing step is not short.
  explicit AsymptoticCurve(std::vector<CurveComponent> components);

  static AsymptoticCurve parallel_circles(const std::vector<double>& heights, int n = 720);
  static AsymptoticCurve from_graph(const std::function<double(double)>& f, int n = 720);
  static AsymptoticCurve from_boundary_curves(const std::vector<BoundaryCurve>& curves);
  // Records (component_id, sample_index, theta, t) as written by
  // write_curves_csv. Throws std::runtime_error on malformed input.
  static AsymptoticCurve load(const std::string& path);
  static AsymptoticCurve parse(const std::string& text);

  const std::vector<CurveComponent>& components() const { return components_; }
  AsymptoticCurve with_component(const CurveComponent& c) const;
  AsymptoticCurve translated(double dt) const;
  AsymptoticCurve rotated(double dtheta) const;

  // Angles (in [0, 2pi)) where some vertical line is not transversal: local
  // extrema of the unwrapped angle, including vertical pieces.
  const std::vector<double>& critical_angles() const { return critical_; }

  // Minimum sampled distance between different components (in (theta, t),
  // angles compared modulo 2pi); +inf with a single component.
  double min_component_distance() const;

  // Throws std::invalid_argument if two segments (of one component or of two
  // different ones) cross.
  void validate() const;

 private:
  void index_critical_angles();
  std::vector<CurveComponent> components_;
  std::vector<double> critical_;
};

struct Crossings {
  std::vector<double> t;  // sorted ascending
  bool indeterminate = false;
};

inline constexpr double kDefaultTangencyTol = 1e-9;

Crossings vertical_line_crossings(const AsymptoticCurve& curve, double p, double tangency_tol = kDefaultTangencyTol);

struct HeightValue {
  double value = std::numeric_limits<double>::infinity();
  bool indeterminate = false;
  std::size_t crossings = 0;
};

HeightValue height_at(const AsymptoticCurve& curve, double p, double tangency_tol = kDefaultTangencyTol);

struct GlobalHeight {
  double value = std::numeric_limits<double>::infinity();
  double argmin = 0.0;
  double final_step = 0.0;
  bool flagged = false;  // an indeterminate angle next to the minimizer
};

// Uniform grid of n angles, then repeated halving around the minimizer until
// the minimum moves by less than 1e-4.
GlobalHeight global_height(const AsymptoticCurve& curve, int n);

enum class Verdict { Tall, Short, NonexistenceCondition, Indeterminate };
std::string to_string(Verdict v);

struct HeightSample {
  double angle;
  HeightValue height;
};

struct Classification {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<std::pair<double, double>> witness_arc;  // [start, end] in radians, end may exceed 2pi
  std::optional<double> witness_angle;                   // a footprint angle violating tallness
  double min_height_footprint = std::numeric_limits<double>::infinity();
  double global_min_height = std::numeric_limits<double>::infinity();
  std::vector<HeightSample> profile;
};

// n equispaced angles; a tangent angle is retried once at a nearby angle.
Classification classify(const AmbientSpace& amb, const AsymptoticCurve& curve, int n = 720);

double nonexistence_threshold(const AmbientSpace& amb);  // (sqrt(1 + 4 tau^2) - 4 tau) pi

// Loops (x, y, t) on the lateral face of radius tanh(n); throws
// std::domain_error if some sample has |t| >= T.
std::vector<std::vector<Eigen::Vector3d>> radial_projection(const AsymptoticCurve& curve, double n, double T);

}  // namespace etau
