#pragma once
/* mu/lambda invariants.
 *
 * mu is the minimal p-adic valuation over the coefficients (on either basis:
 * the polynomial/group basis change is unipotent with integer entries, so the
 * minimum is basis independent).  lambda is the lowest degree whose
 * coefficient attains valuation mu, which equals the order of vanishing of
 * the mod-p reduction: at level n the reduction ring is F_p[T]/(T^{p^n}).
 *
 * Working at absolute precision N, an element that vanishes mod p^N carries
 * no invariants; a truncated series certifies lambda only strictly below its
 * truncation degree.  Both states are first-class results, not exceptions.
 */

#include <cstdint>

#include "iwa/lambda_algebra.hpp"
#include "iwa/rng.hpp"

namespace iwa {

struct InvariantResult {
  enum class Status { ok, zero_at_precision, lambda_exceeds_truncation };

  Status status = Status::zero_at_precision;
  long long mu = -1;      // valid unless zero_at_precision
  long long lambda = -1;  // valid only when status == ok

  bool is_ok() const noexcept { return status == Status::ok; }
  bool has_mu() const noexcept { return status != Status::zero_at_precision; }

  static InvariantResult ok_result(long long m, long long l) {
    return {Status::ok, m, l};
  }
  static InvariantResult zero_at_precision() {
    return {Status::zero_at_precision, -1, -1};
  }
  static InvariantResult exceeds_truncation(long long m) {
    return {Status::lambda_exceeds_truncation, m, -1};
  }

  bool operator==(const InvariantResult& o) const noexcept {
    if (status != o.status) return false;
    if (status == Status::zero_at_precision) return true;
    if (status == Status::lambda_exceeds_truncation) return mu == o.mu;
    return mu == o.mu && lambda == o.lambda;
  }
  bool operator!=(const InvariantResult& o) const noexcept {
    return !(*this == o);
  }
};

InvariantResult invariants(const FiniteLevelElt& x);
InvariantResult invariants_series(const SeriesElt& a);

// Forced lambda growth along the tower: the alternating sums
//   q_n = p^{n-1} - p^{n-2} + ... + p - 1    (n even)
//   q_n = p^{n-1} - p^{n-2} + ... + p^2 - p  (n odd)
// with q_0 = q_1 = 0.  Equals lambda of omega_n^- (n even) / omega_n^+ (n odd).
long long q_growth(std::uint64_t p, int n);

// Random truncated series with prescribed invariants:
// p^mu * (T^lambda + p*r(T)) * u(T) for random r of degree < lambda and a
// random unit series u.  Requires mu < N and lambda <= D.
SeriesElt make_with_invariants(std::uint64_t p, int N, int degree_bound,
                               int mu, int lambda, Rng& rng);

}  // namespace iwa
