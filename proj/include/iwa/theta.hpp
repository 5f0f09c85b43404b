#pragma once
/* Theta-element towers and their invariants.
 *
 * A family holds theta_0 .. theta_{n_max} tied together by the three-term
 * relation  project(theta_{n+1}) = a_p * theta_n - norm_xi(theta_{n-1}).
 * Two constructions are provided:
 *
 *  - non-ordinary (valuation(a_p) >= 1): theta_n is the first component of
 *    the sharp/flat logarithm matrix applied to a pair of truncated series;
 *    the relation then holds by the matrix recursion.
 *  - ordinary (a_p a unit): theta_{n+1} is a random lift of the right-hand
 *    side, the lift ambiguity being a multiple of omega_n drawn from a
 *    seeded generator.
 *
 * For ordinary families the stabilized elements
 *   L_n = alpha^{-(n+1)} (theta_n - alpha^{-1} norm_xi(theta_{n-1}))
 * are norm-compatible (project(L_{n+1}) = L_n), and the level-n p-adic
 * L approximation is L_n * involution(L_n).  The verifiers measure mu/lambda
 * along the tower and check the expected identities, reporting pass,
 * hypothesis-not-met, or fail with the offending level.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "iwa/invariants.hpp"
#include "iwa/lambda_algebra.hpp"
#include "iwa/sprung.hpp"

namespace iwa {

enum class Provenance { nonordinary_sharp_flat, ordinary_random };

struct ThetaFamily {
  PAdicScalar a_p;
  int n_max = 0;
  std::vector<FiniteLevelElt> thetas;  // levels 0 .. n_max
  Provenance provenance = Provenance::ordinary_random;

  std::uint64_t prime() const noexcept { return a_p.prime(); }
  int precision() const noexcept { return a_p.precision(); }
};

struct StabilizedFamily {
  PAdicScalar alpha;
  std::vector<FiniteLevelElt> elements;  // index k holds level k+1
};

ThetaFamily build_nonordinary_family(const SeriesElt& l_sharp,
                                     const SeriesElt& l_flat,
                                     const PAdicScalar& a_p, int n_max);

ThetaFamily build_ordinary_family(const FiniteLevelElt& theta0,
                                  const FiniteLevelElt& theta1,
                                  const PAdicScalar& a_p, int n_max,
                                  std::uint64_t seed);

// Stabilized element at level n, 1 <= n <= n_max; ordinary families only.
FiniteLevelElt stabilize(const ThetaFamily& fam, int n);
StabilizedFamily stabilized_family(const ThetaFamily& fam);

// stabilize(fam, n) * involution(stabilize(fam, n)).
FiniteLevelElt ordinary_lp_approx(const ThetaFamily& fam, int n);

// L * involution(L) for a truncated series.
SeriesElt sharp_flat_lp(const SeriesElt& l_star);

struct ThreeTermReport {
  bool pass = false;
  int first_failure_level = -1;  // the n whose relation fails
  std::string detail;
};

ThreeTermReport verify_three_term(const ThetaFamily& fam);

enum class Verdict { pass, hypothesis_not_met, fail };

std::string verdict_name(Verdict v);

struct OrdinaryLevelRow {
  int n = 0;
  InvariantResult stab;
  InvariantResult theta;
  InvariantResult lp;
  bool asserted = false;  // row lies at or past the stabilization level
  bool ok = true;
};

struct OrdinaryReport {
  Verdict verdict = Verdict::hypothesis_not_met;
  int stabilization_level = -1;
  std::vector<OrdinaryLevelRow> rows;
  std::string detail;
};

// Measures the stabilized tower of an ordinary family.  The stabilization
// level is the smallest n whose stabilized invariants repeat at n+1 with
// 2*lambda < p^n; from there on the report asserts mu(theta_n) = 0 and
// 2*lambda(theta_n) = lambda of the level-n L approximation.  The mu = 0
// hypothesis is screened on the approximation at the top level.
OrdinaryReport verify_ordinary_theorem(const ThetaFamily& fam);

struct NonordinaryLevelRow {
  int n = 0;
  std::string parity;  // "sharp" (n even) or "flat" (n odd)
  long long q_n = 0;
  InvariantResult theta;
  InvariantResult lstar;
  InvariantResult lp_level;   // theta_n * involution(theta_n)
  InvariantResult lp_series;  // sharp_flat_lp of the matching series
  bool below_threshold = false;
  bool ok = true;
  std::string detail;
};

struct NonordinaryReport {
  Verdict verdict = Verdict::hypothesis_not_met;
  std::vector<NonordinaryLevelRow> rows;
  std::string detail;
};

// Builds the non-ordinary family of the pair and checks, for every n >= 2
// whose matching series satisfies lambda(L) < p^n - q_n:
//   mu(theta_n) = mu(L),  lambda(theta_n) = lambda(L) + q_n,
// plus the doubled identities of the two L products: the level-n product
// theta_n * involution(theta_n) doubles the theta invariants, and the series
// product L * involution(L) doubles the series invariants.
NonordinaryReport verify_nonordinary_theorem(const SeriesElt& l_sharp,
                                             const SeriesElt& l_flat,
                                             const PAdicScalar& a_p,
                                             int n_max);

}  // namespace iwa
