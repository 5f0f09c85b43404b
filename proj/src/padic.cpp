#include "iwa/padic.hpp"

namespace iwa {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t prime_power(std::uint64_t p, int N) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("prime_power: p must be an odd prime >= 3");
  if (N < 1) throw std::invalid_argument("prime_power: precision must be >= 1");
  const std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t q = 1;
  for (int i = 0; i < N; ++i) {
    if (q > cap / p)
      throw std::invalid_argument("prime_power: p^N exceeds the 2^62 cap");
    q *= p;
  }
  return q;
}

PAdicScalar::PAdicScalar(std::uint64_t p, int N, std::uint64_t value)
    : p_(p), q_(prime_power(p, N)), v_(value % q_), n_(N) {}

PAdicScalar PAdicScalar::from_int(std::uint64_t p, int N, long long value) {
  std::uint64_t q = prime_power(p, N);
  if (value >= 0) return {p, N, static_cast<std::uint64_t>(value) % q};
  std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
  std::uint64_t r = mag % q;
  return {p, N, r ? q - r : 0};
}

int PAdicScalar::valuation() const noexcept {
  if (v_ == 0) return n_;
  int k = 0;
  std::uint64_t v = v_;
  while (v % p_ == 0) {
    v /= p_;
    ++k;
  }
  return k;
}

void PAdicScalar::check_same_ring(const PAdicScalar& o) const {
  if (p_ != o.p_ || n_ != o.n_)
    throw std::invalid_argument("PAdicScalar: mismatched prime or precision");
}

PAdicScalar PAdicScalar::operator+(const PAdicScalar& o) const {
  check_same_ring(o);
  return {p_, n_, detail::add_mod(v_, o.v_, q_)};
}

PAdicScalar PAdicScalar::operator-(const PAdicScalar& o) const {
  check_same_ring(o);
  return {p_, n_, detail::sub_mod(v_, o.v_, q_)};
}

PAdicScalar PAdicScalar::operator*(const PAdicScalar& o) const {
  check_same_ring(o);
  return {p_, n_, detail::mul_mod(v_, o.v_, q_)};
}

PAdicScalar PAdicScalar::invert_unit() const {
  if (!is_unit()) throw std::domain_error("invert_unit: argument is not a unit");
  // Inverse mod p by Fermat, then Hensel doubling up to precision N.
  std::uint64_t y = detail::pow_mod(v_ % p_, p_ - 2, p_);
  for (std::uint64_t prec = 1; prec < static_cast<std::uint64_t>(n_); prec *= 2) {
    // y <- y * (2 - v * y) mod p^N; each pass doubles the valid precision.
    std::uint64_t t = detail::sub_mod(2 % q_, detail::mul_mod(v_, y, q_), q_);
    y = detail::mul_mod(y, t, q_);
  }
  return {p_, n_, y};
}

PAdicScalar pow_scalar(const PAdicScalar& a, std::uint64_t e) {
  return {a.prime(), a.precision(), detail::pow_mod(a.value(), e, a.modulus())};
}

PAdicScalar unit_root(const PAdicScalar& a_p) {
  if (!a_p.is_unit())
    throw std::domain_error("unit_root: a_p must be a unit (ordinary case)");
  const std::uint64_t p = a_p.prime(), q = a_p.modulus(), a = a_p.value();
  const int N = a_p.precision();
  // Newton for f(x) = x^2 - a x + p starting from x = a mod p; f'(x) stays a
  // unit because x = a mod p and p is odd.
  std::uint64_t x = a % p;
  for (int i = 0; i < 2 * N + 4; ++i) {
    std::uint64_t fx = detail::add_mod(
        detail::sub_mod(detail::mul_mod(x, x, q), detail::mul_mod(a, x, q), q),
        p % q, q);
    if (fx == 0) break;
    std::uint64_t dfx = detail::sub_mod(detail::mul_mod(2 % q, x, q), a, q);
    PAdicScalar inv = PAdicScalar(p, N, dfx).invert_unit();
    x = detail::sub_mod(x, detail::mul_mod(fx, inv.value(), q), q);
  }
  PAdicScalar alpha(p, N, x);
  PAdicScalar resid = alpha * alpha - a_p * alpha + PAdicScalar(p, N, p % q);
  if (!resid.is_zero() || !alpha.is_unit())
    throw std::domain_error("unit_root: Newton iteration failed to converge");
  return alpha;
}

}  // namespace iwa
