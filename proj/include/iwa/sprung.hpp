#pragma once
/* Sharp/flat logarithm matrices.
 *
 * The level-n building block is C_n = [[a_p, 1], [-Phi_n, 0]]; the running
 * product H_n = C_n C_{n-1} ... C_1 (new factor on the left) has polynomial
 * entries of degree < p^n, so the series form below p^n is exact and the
 * level-n reduction is faithful.  For a_p = 0 the product collapses to the
 * signed diagonal/antidiagonal of omega_n^± factors; for valuation(a_p) >= 1
 * the same shape survives mod p.
 */

#include <cstdint>
#include <utility>

#include "iwa/lambda_algebra.hpp"

namespace iwa {

struct SeriesMatrix2x2 {
  SeriesElt a, b, c, d;  // [[a, b], [c, d]]
};

struct LambdaMatrix2x2 {
  FiniteLevelElt a, b, c, d;

  int level() const noexcept { return a.level(); }
  bool operator==(const LambdaMatrix2x2& o) const noexcept {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

LambdaMatrix2x2 mat_mul(const LambdaMatrix2x2& x, const LambdaMatrix2x2& y);
FiniteLevelElt mat_det(const LambdaMatrix2x2& x);

// Single factor [[a_p, 1], [-Phi_n, 0]] with entries reduced to level n.
LambdaMatrix2x2 c_matrix(int n, const PAdicScalar& a_p);

// Exact polynomial form of C_n ... C_1; entries have degree < p^n.
SeriesMatrix2x2 h_matrix_series(int n, const PAdicScalar& a_p);

// H_n = C_n ... C_1 reduced to level n; n >= 1.
LambdaMatrix2x2 h_matrix(int n, const PAdicScalar& a_p);

// Reduces the pair to level n and applies h_matrix; returns the two
// components.  The first is the level-n theta element of the pair, the
// second equals minus the norm of the level-(n-1) first component.
std::pair<FiniteLevelElt, FiniteLevelElt> apply_h(int n,
                                                  const PAdicScalar& a_p,
                                                  const SeriesElt& l_sharp,
                                                  const SeriesElt& l_flat);

}  // namespace iwa
