#include "iwa/invariants.hpp"

namespace iwa {
namespace {

int val_of(std::uint64_t v, std::uint64_t p, int N) {
  if (v == 0) return N;
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

// (mu, lambda) over a raw coefficient vector; mu == N marks vanishing.
std::pair<int, long long> scan(const std::vector<std::uint64_t>& c,
                               std::uint64_t p, int N) {
  int mu = N;
  for (std::uint64_t v : c) {
    int w = val_of(v, p, N);
    if (w < mu) mu = w;
  }
  if (mu == N) return {N, -1};
  for (std::size_t k = 0; k < c.size(); ++k)
    if (val_of(c[k], p, N) == mu) return {mu, static_cast<long long>(k)};
  return {N, -1};  // unreachable
}

}  // namespace

InvariantResult invariants(const FiniteLevelElt& x) {
  auto [mu, lambda] = scan(x.raw_coeffs(), x.prime(), x.precision());
  if (mu == x.precision()) return InvariantResult::zero_at_precision();
  return InvariantResult::ok_result(mu, lambda);
}

InvariantResult invariants_series(const SeriesElt& a) {
  auto [mu, lambda] = scan(a.raw_coeffs(), a.prime(), a.precision());
  if (mu == a.precision()) return InvariantResult::zero_at_precision();
  if (lambda >= a.degree_bound())
    return InvariantResult::exceeds_truncation(mu);
  return InvariantResult::ok_result(mu, lambda);
}

long long q_growth(std::uint64_t p, int n) {
  if (n < 0) throw std::invalid_argument("q_growth: n must be >= 0");
  if (n <= 1) return 0;
  // Alternating sum p^{n-1} - p^{n-2} + ..., stopping at p^0 for even n and
  // at p^1 for odd n; the lowest term always enters with a minus sign.
  long long acc = 0, sign = 1;
  for (int k = n - 1; k >= (n % 2 == 0 ? 0 : 1); --k) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= static_cast<long long>(p);
    acc += sign * pk;
    sign = -sign;
  }
  return acc;
}

SeriesElt make_with_invariants(std::uint64_t p, int N, int degree_bound,
                               int mu, int lambda, Rng& rng) {
  if (mu < 0 || mu >= N)
    throw std::invalid_argument("make_with_invariants: need 0 <= mu < N");
  if (lambda < 0 || lambda > degree_bound)
    throw std::invalid_argument("make_with_invariants: need 0 <= lambda <= D");
  const std::uint64_t q = prime_power(p, N);
  // core = T^lambda + p * r(T) with deg r < lambda.
  std::vector<std::uint64_t> core(static_cast<std::size_t>(lambda) + 1, 0);
  core[static_cast<std::size_t>(lambda)] = 1;
  for (int k = 0; k < lambda; ++k)
    core[static_cast<std::size_t>(k)] =
        detail::mul_mod(p % q, draw_below(rng, q), q);
  SeriesElt core_series(p, N, degree_bound, std::move(core));
  // u = random unit series.
  std::vector<std::uint64_t> u(static_cast<std::size_t>(degree_bound) + 1, 0);
  u[0] = draw_unit(rng, p, N).value();
  for (int k = 1; k <= degree_bound; ++k)
    u[static_cast<std::size_t>(k)] = draw_below(rng, q);
  SeriesElt unit_series(p, N, degree_bound, std::move(u));
  std::uint64_t pmu = 1;
  for (int i = 0; i < mu; ++i) pmu *= p;
  return core_series * unit_series * PAdicScalar(p, N, pmu);
}

}  // namespace iwa
