#pragma once

// Grid certification of monotonicity, convexity, convex-concavity, gradient
// structure and skew-affinity.
//
// A passing certificate is numerical evidence at sampled points: every claim
// is checked on the lattice (and random pairs) recorded in the certificate,
// at the recorded tolerances. It is falsifiable, not a proof.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monocert/field.hpp"
#include "monocert/grid.hpp"

namespace monocert {

inline constexpr double kJetTolerance = 1e-9;
inline constexpr double kQuadratureTolerance = 1e-6;

enum class Status { Pass, Fail, Indeterminate };

std::string_view to_string(Status s) noexcept;

struct Check {
  std::string id;
  std::string metric;
  double observed = 0.0;
  double threshold = 0.0;
  std::string comparison;  // ">=", "<=" or ">"
  bool pass = false;
  std::optional<Vec2> witness;
  std::optional<Vec2> witness_secondary;
  std::string details;
};

struct Certificate {
  std::string property;
  std::string subject;
  std::string criterion;
  Region region;
  GridSpec grid;
  std::vector<Check> checks;
  /// Independent routes to the same claim; reported, not part of the verdict.
  std::vector<Check> crosschecks;
  std::vector<std::pair<std::string, double>> tolerances;
  std::uint64_t seed = 0;
  std::size_t pair_samples = 0;
  Status status = Status::Indeterminate;
  std::string error;
  std::optional<Vec2> error_point;

  /// Per-grid-point values of the primary metric (row-major, k = j*nx + i),
  /// kept for CSV dumps. Empty if the sweep did not complete.
  std::string grid_metric_name;
  std::vector<double> grid_metric;

  bool passed() const noexcept { return status == Status::Pass; }
  const Check* find(std::string_view id) const noexcept;
};

struct CertifyOptions {
  /// Unset: 1e-9 for fields with exact Jacobians, 1e-6 for finite differences.
  std::optional<double> tol;
  std::size_t pair_samples = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

double default_tolerance(const VectorField2& f) noexcept;

/// Jacobian criterion (grid min of the smallest symmetric-part eigenvalue
/// >= -tol) and the pairwise definition on seeded random pairs
/// (<F(z) - F(z'), z - z'> >= -tol * |z - z'|^2).
Certificate certify_monotone(const VectorField2& f, const Region& region, const GridSpec& grid,
                             const CertifyOptions& opts = {});

/// Hessian criterion; cross-checked against certify_monotone(gradient_field(f)).
Certificate certify_convex(const ScalarField2& f, const Region& region, const GridSpec& grid,
                           const CertifyOptions& opts = {});

/// Separable sufficient criterion: min f_xx >= -tol and max f_yy <= tol.
Certificate certify_convex_concave(const ScalarField2& f, const Region& region,
                                   const GridSpec& grid, const CertifyOptions& opts = {});

/// max |J12 - J21| <= tol over the grid.
Certificate certify_gradient(const VectorField2& f, const Region& region, const GridSpec& grid,
                             const CertifyOptions& opts = {});

struct SkewAffineFit {
  double a = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double rms_residual = 0.0;
  double max_residual = 0.0;
  Vec2 max_residual_point;
};

/// Least-squares fit of z -> (a*y + b1, -a*x + b2) over the grid.
SkewAffineFit fit_skew_affine(const VectorField2& f, const Region& region, const GridSpec& grid,
                              unsigned threads = 0);

struct RefuteOptions {
  /// Unset: [-(Amax + 1), Amax + 1] with Amax = max |J12| on the grid.
  std::optional<std::pair<double, double>> a_interval;
  /// Unset: default_tolerance(f).
  std::optional<double> threshold;
  std::size_t coarse_samples = 2001;
  unsigned threads = 0;
};

struct RefutationWitness {
  double best_a = 0.0;
  double min_sup_residual = 0.0;
  Vec2 p_lo;  // grid point of minimal J12 - J21
  Vec2 p_hi;  // grid point of maximal J12 - J21
  double asymmetry_lo = 0.0;
  double asymmetry_hi = 0.0;
  double a_lo = 0.0;
  double a_hi = 0.0;
  double threshold = 0.0;
  bool refuted = false;
};

/// Residual of the candidate skew map with parameter a: the integrability
/// gap of F - skew(a), sup over the grid of |J12 - J21 - 2a|. Minimized over
/// a by a coarse scan followed by golden-section refinement. Throws
/// std::invalid_argument for an empty interval.
RefutationWitness refute_skew_affine(const VectorField2& f, const Region& region,
                                     const GridSpec& grid, const RefuteOptions& opts = {});

struct PotentialTable {
  Region region;
  GridSpec grid;
  Vec2 anchor;
  double quad_step = 0.0;       // requested
  double effective_step = 0.0;  // largest step actually used
  bool step_adjusted = false;
  std::vector<double> values;   // row-major, k = j*nx + i
  /// Max over interior points of |grad Phi - F|_inf with fourth-order central
  /// differences on the lattice; NaN when the grid is smaller than 5x5.
  double gradient_mismatch = 0.0;

  double at(std::size_t i, std::size_t j) const { return values.at(j * grid.nx + i); }
};

/// Line integral of f along anchor -> (p.x, anchor.y) -> p with composite
/// Simpson. Requires certify_gradient(f) to pass; throws PreconditionError
/// otherwise and DomainError when the gradient check is indeterminate.
PotentialTable reconstruct_potential(const VectorField2& f, const Region& region,
                                     const GridSpec& grid, Vec2 anchor, double quad_step,
                                     const CertifyOptions& opts = {});

struct AffinityClassification {
  bool affine = true;
  double spread_x = 0.0;
  double spread_y = 0.0;
  double tol = 0.0;
  int component = 0;  // 0 = x, 1 = y: component with the larger spread
  Vec2 witness_max;
  Vec2 witness_min;
};

/// Non-affine iff some component of f varies by more than tol over the
/// table's grid; the witness pair attains that component's extremes.
AffinityClassification classify_affinity(const PotentialTable& table, const VectorField2& f,
                                         double tol, unsigned threads = 0);

}  // namespace monocert
