#pragma once
/* Finite-level Iwasawa algebras over Z/p^N.
 *
 * Lambda_n = (Z/p^N)[G_n] for G_n cyclic of order p^n, presented as
 * (Z/p^N)[T] / (omega_n) with omega_n = (1+T)^{p^n} - 1 under gamma = 1+T.
 * FiniteLevelElt holds the canonical representative of degree < p^n;
 * SeriesElt holds a power series truncated at degree D (D+1 coefficients).
 *
 * The tower maps: project is reduction mod omega_n one level down; norm_xi
 * sends level n to level n+1 by multiplying the canonical lift with the
 * cyclotomic factor Phi_{n+1} = omega_{n+1}/omega_n; involution inverts the
 * group, i.e. substitutes (1+T) -> (1+T)^{p^n - 1}.
 */

#include <cstdint>
#include <vector>

#include "iwa/padic.hpp"

namespace iwa {

enum class Sign { plus, minus };

namespace detail {

// Coefficient row of (1+T)^m mod p^N, ascending degree, length m+1.
std::vector<std::uint64_t> binomial_row(std::uint64_t m, std::uint64_t q);

// Schoolbook product of coefficient vectors mod q.
std::vector<std::uint64_t> poly_mul(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b,
                                    std::uint64_t q);

// In-place remainder of a by the monic divisor d (d.back() == 1).
void poly_rem_monic(std::vector<std::uint64_t>& a,
                    const std::vector<std::uint64_t>& d, std::uint64_t q);

}  // namespace detail

class SeriesElt {
 public:
  // Zero series with truncation degree D >= 0.
  SeriesElt(std::uint64_t p, int N, int degree_bound);
  // Coefficients in ascending degree; size at most D+1, padded with zeros.
  SeriesElt(std::uint64_t p, int N, int degree_bound,
            std::vector<std::uint64_t> coeffs);

  static SeriesElt constant(std::uint64_t p, int N, int degree_bound,
                            std::uint64_t c);
  static SeriesElt monomial(std::uint64_t p, int N, int degree_bound, int k,
                            std::uint64_t c = 1);

  std::uint64_t prime() const noexcept { return p_; }
  int precision() const noexcept { return nprec_; }
  std::uint64_t modulus() const noexcept { return q_; }
  int degree_bound() const noexcept { return static_cast<int>(c_.size()) - 1; }
  PAdicScalar coeff(int k) const;
  std::uint64_t raw(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<std::uint64_t>& raw_coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;

  // Copy with a different truncation degree (drops or pads coefficients).
  SeriesElt truncated(int degree_bound) const;

  SeriesElt operator+(const SeriesElt& o) const;
  SeriesElt operator-(const SeriesElt& o) const;
  // Product re-truncated at min(D_a, D_b).
  SeriesElt operator*(const SeriesElt& o) const;
  SeriesElt operator*(const PAdicScalar& s) const;
  SeriesElt operator-() const;

  // Ring equality: same p, N and identical coefficients up to the longer
  // bound (the shorter operand is read as zero-padded).
  bool operator==(const SeriesElt& o) const noexcept;
  bool operator!=(const SeriesElt& o) const noexcept { return !(*this == o); }

 private:
  void check_compatible(const SeriesElt& o) const;

  std::uint64_t p_;
  std::uint64_t q_;
  int nprec_;
  std::vector<std::uint64_t> c_;  // ascending degree, size D+1
};

class FiniteLevelElt {
 public:
  // Zero element of Lambda_level.
  FiniteLevelElt(std::uint64_t p, int N, int level);
  // Canonical representative: exactly p^level coefficients, ascending degree.
  FiniteLevelElt(std::uint64_t p, int N, int level,
                 std::vector<std::uint64_t> coeffs);

  static FiniteLevelElt constant(std::uint64_t p, int N, int level,
                                 std::uint64_t c);

  std::uint64_t prime() const noexcept { return p_; }
  int precision() const noexcept { return nprec_; }
  std::uint64_t modulus() const noexcept { return q_; }
  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return c_.size(); }  // p^level
  PAdicScalar coeff(int k) const;
  std::uint64_t raw(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<std::uint64_t>& raw_coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;

  FiniteLevelElt operator+(const FiniteLevelElt& o) const;
  FiniteLevelElt operator-(const FiniteLevelElt& o) const;
  // Ring product in Lambda_level: convolution reduced mod omega_level.
  FiniteLevelElt operator*(const FiniteLevelElt& o) const;
  FiniteLevelElt operator*(const PAdicScalar& s) const;
  FiniteLevelElt operator-() const;

  bool operator==(const FiniteLevelElt& o) const noexcept;
  bool operator!=(const FiniteLevelElt& o) const noexcept {
    return !(*this == o);
  }

 private:
  void check_same_algebra(const FiniteLevelElt& o) const;

  std::uint64_t p_;
  std::uint64_t q_;
  int nprec_;
  int level_;
  std::vector<std::uint64_t> c_;  // size p^level
};

// omega_n = (1+T)^{p^n} - 1 as a polynomial of degree p^n; needs p^n <= D.
SeriesElt omega(std::uint64_t p, int N, int degree_bound, int n);

// Phi_n = omega_n / omega_{n-1}, the exact quotient, degree p^n - p^{n-1};
// requires n >= 1 and p^n <= D.
SeriesElt cyclo_phi(std::uint64_t p, int N, int degree_bound, int n);

// Product of Phi_j over even j (plus) or odd j (minus) with 1 <= j <= n.
// Empty products give the constant 1.
SeriesElt omega_pm(std::uint64_t p, int N, int degree_bound, int n, Sign s);

// Truncated inverse of a series with unit constant term.
SeriesElt invert_series(const SeriesElt& a);

// Substitutes T -> (1+T)^{-1} - 1 = -T + T^2 - T^3 + ..., exactly to the
// truncation degree.
SeriesElt involution_series(const SeriesElt& a);

// Remainder of the series mod omega_level, as an element of Lambda_level.
FiniteLevelElt reduce_to_level(const SeriesElt& a, int level);

// Canonical lift: the degree < p^level representative read as a series.
SeriesElt lift_to_series(const FiniteLevelElt& x, int degree_bound);

// Reduction Lambda_n -> Lambda_{n-1}; throws on level 0.
FiniteLevelElt project(const FiniteLevelElt& x);

// Norm map Lambda_n -> Lambda_{n+1}: Phi_{n+1} times the canonical lift.
// project(norm_xi(x)) = p * x.
FiniteLevelElt norm_xi(const FiniteLevelElt& x);

// Group inversion gamma -> gamma^{-1}; an involutive ring automorphism.
FiniteLevelElt involution(const FiniteLevelElt& x);

// Coordinates on the group basis gamma^i, i = 0..p^level - 1.
std::vector<PAdicScalar> to_group_coeffs(const FiniteLevelElt& x);
FiniteLevelElt from_group_coeffs(std::uint64_t p, int N, int level,
                                 const std::vector<std::uint64_t>& coeffs);

}  // namespace iwa
