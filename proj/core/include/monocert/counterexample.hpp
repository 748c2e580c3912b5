#pragma once

// The coupled family f± = x^2/2 ± u(x,y) - y^2/2 and the pipeline that checks,
// on a grid, every computable step of the argument that the acyclic parts of
// their saddle operators do not sum to an acyclic operator.
//
// The acyclic parts themselves are never formed. What the pipeline verifies:
//   - the coupling u satisfies |u_xx|, |u_yy| <= 1 with nonconstant u_xy,
//   - f± pass the separable convex-concave criterion and F± are monotone,
//   - F+ + F- is curl-free, its potential is x^2 + y^2, and it is not constant,
//   - neither F+ nor F- is skew-affine (integrability gap stays bounded away
//     from zero for every skew parameter).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monocert/certify.hpp"
#include "monocert/expr.hpp"
#include "monocert/field.hpp"

namespace monocert {

struct FamilyPair {
  std::string u_text;
  ScalarField2 u;
  ScalarField2 f_plus;
  ScalarField2 f_minus;
  VectorField2 F_plus;
  VectorField2 F_minus;
};

/// Parses u and builds the pair; throws ParseError.
FamilyPair make_pair(std::string_view u_text);
FamilyPair make_pair(const Expr& u);

/// max |u_xx| <= 1 + tol, max |u_yy| <= 1 + tol and spread(u_xy) > tol.
Certificate check_remark_bounds(const ScalarField2& u, const Region& region, const GridSpec& grid,
                                const CertifyOptions& opts = {});

struct CounterexampleConfig {
  CertifyOptions certify;
  Vec2 anchor{0.0, 0.0};
  double quad_step = 1e-3;
  /// Sup-norm tolerance for Phi against x^2 + y^2 (anchored) and for the
  /// non-constancy spread of the sum.
  double potential_tol = kQuadratureTolerance;
  std::optional<double> refutation_threshold;
};

enum class Verdict { Certified, NotCertified, Indeterminate };

std::string_view to_string(Verdict v) noexcept;

struct CounterexampleCertificate {
  std::string u_text;
  Region region;
  GridSpec grid;

  Certificate remark_bounds;
  Certificate convex_concave_plus;
  Certificate convex_concave_minus;
  Certificate monotone_plus;
  Certificate monotone_minus;
  Certificate gradient_sum;
  std::optional<PotentialTable> potential;
  /// max over the grid of |Phi(p) - (|p|^2 - |anchor|^2)|.
  double potential_error = 0.0;
  bool potential_matches = false;
  std::optional<AffinityClassification> affinity;
  std::optional<RefutationWitness> refute_plus;
  std::optional<RefutationWitness> refute_minus;

  Verdict verdict = Verdict::Indeterminate;
  /// "<stage>/<check>" of the first failing check in pipeline order.
  std::string first_failure;
  std::vector<std::string> failures;
  std::string error;

  bool certified() const noexcept { return verdict == Verdict::Certified; }
};

/// Runs bounds, convex-concavity, monotonicity, gradient + potential +
/// affinity of the sum, and skew refutation of both members, in that order.
CounterexampleCertificate refute_additivity(std::string_view u_text, const Region& region = {},
                                            const GridSpec& grid = {},
                                            const CounterexampleConfig& config = {});

}  // namespace monocert
