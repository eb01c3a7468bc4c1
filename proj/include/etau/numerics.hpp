#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace etau {

struct ToleranceConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  long max_evals = 2'000'000;

  // Throws std::invalid_argument unless every field is positive.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). Integrands must be
/// finite on [a, b]; endpoint singularities have to be removed by the caller
/// with a change of variables. A non-finite sample throws std::domain_error.
/// Exceeding max_evals returns the current sum with converged = false.
QuadratureResult integrate(const RealFunction& f, double a, double b, const ToleranceConfig& tol = {});

/// Integral over [a, inf) for integrands with a known tail majorant.
///
/// tail_bound(T) must bound |int_T^inf f|. The truncation point is the
/// smallest T (found by bisection) with tail_bound(T) < abs_tol / 2; the bound
/// at T is added to the reported error estimate.
QuadratureResult integrate_to_infinity(const RealFunction& f, double a, const ToleranceConfig& tol,
                                       const RealFunction& tail_bound);

/// Solves g(x) = target for g monotone on [lo, hi].
///
/// Returns as soon as |g(x) - target| <= tol or the bracket is narrower than
/// tol. Throws std::invalid_argument if target is not bracketed.
double bisect_monotone(const RealFunction& g, double lo, double hi, double target, double tol);

struct Bracket {
  double lo;
  double hi;
};

/// Grows a bracket for an increasing g on (0, inf) geometrically from `start`
/// (multiplying or dividing by `factor`) until g(lo) <= target <= g(hi).
/// Returns nullopt once the search leaves [min_x, max_x].
std::optional<Bracket> grow_bracket_increasing(const RealFunction& g, double target, double start, double factor,
                                               double min_x, double max_x);

/// n log-spaced points from start to stop inclusive.
std::vector<double> log_grid(double start, double stop, std::size_t count);

/// Evaluates fn(i) for i in [0, n) on a small thread pool. Results are stored
/// by index, so the output order does not depend on scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace etau
