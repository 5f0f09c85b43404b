#pragma once
/* Exact arithmetic in Z/p^N for an odd prime p, viewed as Z_p truncated at
 * absolute precision N.  Residues live in [0, p^N) inside a single 64-bit
 * word; products go through 128-bit intermediates, so p^N is capped at 2^62.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iwa {
namespace detail {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  std::uint64_t s = a + b;
  return s >= q ? s - q : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + (q - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mul_mod(r, a, q);
    a = mul_mod(a, a, q);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

bool is_odd_prime(std::uint64_t p);

// p^N with an overflow guard; throws std::invalid_argument when p^N > 2^62.
std::uint64_t prime_power(std::uint64_t p, int N);

class PAdicScalar {
 public:
  PAdicScalar(std::uint64_t p, int N, std::uint64_t value);

  // Signed constructor; negative inputs are reduced into [0, p^N).
  static PAdicScalar from_int(std::uint64_t p, int N, long long value);
  static PAdicScalar zero(std::uint64_t p, int N) { return {p, N, 0}; }
  static PAdicScalar one(std::uint64_t p, int N) { return {p, N, 1}; }

  std::uint64_t prime() const noexcept { return p_; }
  int precision() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return q_; }
  std::uint64_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_unit() const noexcept { return v_ % p_ != 0; }

  // ord_p of the residue; the zero residue reports N.
  int valuation() const noexcept;

  // Hensel-lifted inverse; throws std::domain_error on non-units.
  PAdicScalar invert_unit() const;

  PAdicScalar operator+(const PAdicScalar& o) const;
  PAdicScalar operator-(const PAdicScalar& o) const;
  PAdicScalar operator*(const PAdicScalar& o) const;
  PAdicScalar operator-() const { return {p_, n_, v_ ? q_ - v_ : 0}; }

  bool operator==(const PAdicScalar& o) const noexcept {
    return p_ == o.p_ && n_ == o.n_ && v_ == o.v_;
  }
  bool operator!=(const PAdicScalar& o) const noexcept { return !(*this == o); }

 private:
  void check_same_ring(const PAdicScalar& o) const;

  std::uint64_t p_;
  std::uint64_t q_;  // p^N
  std::uint64_t v_;  // residue in [0, q_)
  int n_;
};

PAdicScalar pow_scalar(const PAdicScalar& a, std::uint64_t e);

// Unit root of x^2 - a_p x + p for ordinary a_p (a unit), computed by Newton
// iteration from the seed a_p mod p.  The root alpha satisfies
// alpha = a_p mod p and alpha * (a_p - alpha) = p at full precision.
// Throws std::domain_error when a_p is not a unit.
PAdicScalar unit_root(const PAdicScalar& a_p);

}  // namespace iwa
