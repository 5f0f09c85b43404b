#include "iwa/lambda_algebra.hpp"

#include <algorithm>

namespace iwa {
namespace detail {

std::vector<std::uint64_t> binomial_row(std::uint64_t m, std::uint64_t q) {
  std::vector<std::uint64_t> row(m + 1, 0);
  row[0] = 1 % q;
  for (std::uint64_t i = 1; i <= m; ++i)
    for (std::uint64_t k = i; k >= 1; --k)
      row[k] = add_mod(row[k], row[k - 1], q);
  return row;
}

std::vector<std::uint64_t> poly_mul(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b,
                                    std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], q), q);
    }
  }
  return out;
}

void poly_rem_monic(std::vector<std::uint64_t>& a,
                    const std::vector<std::uint64_t>& d, std::uint64_t q) {
  const std::size_t m = d.size() - 1;  // divisor degree, d[m] == 1
  if (a.size() <= m) {
    a.resize(m, 0);
    return;
  }
  for (std::size_t j = a.size(); j-- > m;) {
    std::uint64_t c = a[j];
    if (c == 0) continue;
    a[j] = 0;
    for (std::size_t k = 0; k < m; ++k)
      a[j - m + k] = sub_mod(a[j - m + k], mul_mod(c, d[k], q), q);
  }
  a.resize(m, 0);
}

namespace {

constexpr std::size_t kMaxAlgebraSize = std::size_t{1} << 22;

std::size_t level_size(std::uint64_t p, int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  std::size_t s = 1;
  for (int i = 0; i < level; ++i) {
    if (s > kMaxAlgebraSize / p)
      throw std::invalid_argument("level too large for this build");
    s *= static_cast<std::size_t>(p);
  }
  return s;
}

// Quotient and in-place remainder of a by monic d; returns the quotient.
std::vector<std::uint64_t> poly_divmod_monic(std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& d,
                                             std::uint64_t q) {
  const std::size_t m = d.size() - 1;
  std::vector<std::uint64_t> quot;
  if (a.size() > m) quot.assign(a.size() - m, 0);
  for (std::size_t j = a.size(); j-- > m;) {
    std::uint64_t c = a[j];
    if (c != 0) {
      a[j] = 0;
      for (std::size_t k = 0; k < m; ++k)
        a[j - m + k] = sub_mod(a[j - m + k], mul_mod(c, d[k], q), q);
    }
    quot[j - m] = c;
  }
  a.resize(std::max(m, std::size_t{1}), 0);
  return quot;
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------- SeriesElt

SeriesElt::SeriesElt(std::uint64_t p, int N, int degree_bound)
    : p_(p), q_(prime_power(p, N)), nprec_(N) {
  if (degree_bound < 0)
    throw std::invalid_argument("SeriesElt: degree bound must be >= 0");
  c_.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
}

SeriesElt::SeriesElt(std::uint64_t p, int N, int degree_bound,
                     std::vector<std::uint64_t> coeffs)
    : SeriesElt(p, N, degree_bound) {
  if (coeffs.size() > c_.size())
    throw std::invalid_argument("SeriesElt: more coefficients than the bound");
  for (std::size_t k = 0; k < coeffs.size(); ++k) c_[k] = coeffs[k] % q_;
}

SeriesElt SeriesElt::constant(std::uint64_t p, int N, int degree_bound,
                              std::uint64_t c) {
  return {p, N, degree_bound, std::vector<std::uint64_t>{c}};
}

SeriesElt SeriesElt::monomial(std::uint64_t p, int N, int degree_bound, int k,
                              std::uint64_t c) {
  if (k < 0 || k > degree_bound)
    throw std::invalid_argument("SeriesElt::monomial: degree out of range");
  SeriesElt out(p, N, degree_bound);
  out.c_[static_cast<std::size_t>(k)] = c % out.q_;
  return out;
}

PAdicScalar SeriesElt::coeff(int k) const {
  return {p_, nprec_, c_.at(static_cast<std::size_t>(k))};
}

bool SeriesElt::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(),
                     [](std::uint64_t v) { return v == 0; });
}

SeriesElt SeriesElt::truncated(int degree_bound) const {
  SeriesElt out(p_, nprec_, degree_bound);
  std::size_t n = std::min(c_.size(), out.c_.size());
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n),
            out.c_.begin());
  return out;
}

void SeriesElt::check_compatible(const SeriesElt& o) const {
  if (p_ != o.p_ || nprec_ != o.nprec_)
    throw std::invalid_argument("SeriesElt: mismatched prime or precision");
}

SeriesElt SeriesElt::operator+(const SeriesElt& o) const {
  check_compatible(o);
  SeriesElt out(p_, nprec_, std::min(degree_bound(), o.degree_bound()));
  for (std::size_t k = 0; k < out.c_.size(); ++k)
    out.c_[k] = detail::add_mod(c_[k], o.c_[k], q_);
  return out;
}

SeriesElt SeriesElt::operator-(const SeriesElt& o) const {
  check_compatible(o);
  SeriesElt out(p_, nprec_, std::min(degree_bound(), o.degree_bound()));
  for (std::size_t k = 0; k < out.c_.size(); ++k)
    out.c_[k] = detail::sub_mod(c_[k], o.c_[k], q_);
  return out;
}

SeriesElt SeriesElt::operator*(const SeriesElt& o) const {
  check_compatible(o);
  SeriesElt out(p_, nprec_, std::min(degree_bound(), o.degree_bound()));
  // Truncated convolution.
  for (std::size_t i = 0; i < c_.size() && i < out.c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::size_t jmax = std::min(o.c_.size(), out.c_.size() - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (o.c_[j] == 0) continue;
      out.c_[i + j] =
          detail::add_mod(out.c_[i + j], detail::mul_mod(c_[i], o.c_[j], q_), q_);
    }
  }
  return out;
}

SeriesElt SeriesElt::operator*(const PAdicScalar& s) const {
  if (s.prime() != p_ || s.precision() != nprec_)
    throw std::invalid_argument("SeriesElt: scalar from a different ring");
  SeriesElt out(p_, nprec_, degree_bound());
  for (std::size_t k = 0; k < c_.size(); ++k)
    out.c_[k] = detail::mul_mod(c_[k], s.value(), q_);
  return out;
}

SeriesElt SeriesElt::operator-() const {
  SeriesElt out(p_, nprec_, degree_bound());
  for (std::size_t k = 0; k < c_.size(); ++k)
    out.c_[k] = c_[k] ? q_ - c_[k] : 0;
  return out;
}

bool SeriesElt::operator==(const SeriesElt& o) const noexcept {
  if (p_ != o.p_ || nprec_ != o.nprec_) return false;
  std::size_t n = std::max(c_.size(), o.c_.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t a = k < c_.size() ? c_[k] : 0;
    std::uint64_t b = k < o.c_.size() ? o.c_[k] : 0;
    if (a != b) return false;
  }
  return true;
}

// ----------------------------------------------------------- FiniteLevelElt

FiniteLevelElt::FiniteLevelElt(std::uint64_t p, int N, int level)
    : p_(p), q_(prime_power(p, N)), nprec_(N), level_(level) {
  c_.assign(detail::level_size(p, level), 0);
}

FiniteLevelElt::FiniteLevelElt(std::uint64_t p, int N, int level,
                               std::vector<std::uint64_t> coeffs)
    : FiniteLevelElt(p, N, level) {
  if (coeffs.size() != c_.size())
    throw std::invalid_argument(
        "FiniteLevelElt: need exactly p^level coefficients");
  for (std::size_t k = 0; k < coeffs.size(); ++k) c_[k] = coeffs[k] % q_;
}

FiniteLevelElt FiniteLevelElt::constant(std::uint64_t p, int N, int level,
                                        std::uint64_t c) {
  FiniteLevelElt out(p, N, level);
  out.c_[0] = c % out.q_;
  return out;
}

PAdicScalar FiniteLevelElt::coeff(int k) const {
  return {p_, nprec_, c_.at(static_cast<std::size_t>(k))};
}

bool FiniteLevelElt::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(),
                     [](std::uint64_t v) { return v == 0; });
}

void FiniteLevelElt::check_same_algebra(const FiniteLevelElt& o) const {
  if (p_ != o.p_ || nprec_ != o.nprec_ || level_ != o.level_)
    throw std::invalid_argument("FiniteLevelElt: mismatched algebra");
}

FiniteLevelElt FiniteLevelElt::operator+(const FiniteLevelElt& o) const {
  check_same_algebra(o);
  FiniteLevelElt out(p_, nprec_, level_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    out.c_[k] = detail::add_mod(c_[k], o.c_[k], q_);
  return out;
}

FiniteLevelElt FiniteLevelElt::operator-(const FiniteLevelElt& o) const {
  check_same_algebra(o);
  FiniteLevelElt out(p_, nprec_, level_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    out.c_[k] = detail::sub_mod(c_[k], o.c_[k], q_);
  return out;
}

FiniteLevelElt FiniteLevelElt::operator*(const FiniteLevelElt& o) const {
  check_same_algebra(o);
  std::vector<std::uint64_t> prod = detail::poly_mul(c_, o.c_, q_);
  std::vector<std::uint64_t> om =
      detail::binomial_row(c_.size(), q_);  // (1+T)^{p^level}
  om[0] = detail::sub_mod(om[0], 1 % q_, q_);
  detail::poly_rem_monic(prod, om, q_);
  prod.resize(c_.size(), 0);
  FiniteLevelElt out(p_, nprec_, level_);
  out.c_ = std::move(prod);
  return out;
}

FiniteLevelElt FiniteLevelElt::operator*(const PAdicScalar& s) const {
  if (s.prime() != p_ || s.precision() != nprec_)
    throw std::invalid_argument("FiniteLevelElt: scalar from a different ring");
  FiniteLevelElt out(p_, nprec_, level_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    out.c_[k] = detail::mul_mod(c_[k], s.value(), q_);
  return out;
}

FiniteLevelElt FiniteLevelElt::operator-() const {
  FiniteLevelElt out(p_, nprec_, level_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    out.c_[k] = c_[k] ? q_ - c_[k] : 0;
  return out;
}

bool FiniteLevelElt::operator==(const FiniteLevelElt& o) const noexcept {
  return p_ == o.p_ && nprec_ == o.nprec_ && level_ == o.level_ && c_ == o.c_;
}

// ------------------------------------------------------------- tower maps

SeriesElt omega(std::uint64_t p, int N, int degree_bound, int n) {
  if (n < 0) throw std::invalid_argument("omega: n must be >= 0");
  std::uint64_t q = prime_power(p, N);
  std::size_t pn = detail::level_size(p, n);
  if (static_cast<std::size_t>(degree_bound) < pn)
    throw std::invalid_argument("omega: truncation degree below p^n");
  std::vector<std::uint64_t> row = detail::binomial_row(pn, q);
  row[0] = detail::sub_mod(row[0], 1 % q, q);
  return {p, N, degree_bound, std::move(row)};
}

SeriesElt cyclo_phi(std::uint64_t p, int N, int degree_bound, int n) {
  if (n < 1) throw std::invalid_argument("cyclo_phi: n must be >= 1");
  std::uint64_t q = prime_power(p, N);
  std::size_t pn = detail::level_size(p, n);
  if (static_cast<std::size_t>(degree_bound) < pn)
    throw std::invalid_argument("cyclo_phi: truncation degree below p^n");
  std::vector<std::uint64_t> num = detail::binomial_row(pn, q);
  num[0] = detail::sub_mod(num[0], 1 % q, q);
  std::vector<std::uint64_t> den = detail::binomial_row(pn / p, q);
  den[0] = detail::sub_mod(den[0], 1 % q, q);
  std::vector<std::uint64_t> quot = detail::poly_divmod_monic(num, den, q);
  // omega_{n-1} divides omega_n exactly.
  for (std::uint64_t v : num)
    if (v != 0) throw std::logic_error("cyclo_phi: division was not exact");
  return {p, N, degree_bound, std::move(quot)};
}

SeriesElt omega_pm(std::uint64_t p, int N, int degree_bound, int n, Sign s) {
  if (n < 0) throw std::invalid_argument("omega_pm: n must be >= 0");
  SeriesElt acc = SeriesElt::constant(p, N, degree_bound, 1);
  for (int j = s == Sign::plus ? 2 : 1; j <= n; j += 2)
    acc = acc * cyclo_phi(p, N, degree_bound, j);
  return acc;
}

SeriesElt invert_series(const SeriesElt& a) {
  if (!a.coeff(0).is_unit())
    throw std::domain_error("invert_series: constant term is not a unit");
  const std::uint64_t q = a.modulus();
  const std::size_t n = a.raw_coeffs().size();
  std::uint64_t c0 = a.coeff(0).invert_unit().value();
  std::vector<std::uint64_t> inv(n, 0);
  inv[0] = c0;
  for (std::size_t k = 1; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (a.raw(static_cast<int>(i)) == 0) continue;
      acc = detail::add_mod(
          acc, detail::mul_mod(a.raw(static_cast<int>(i)), inv[k - i], q), q);
    }
    inv[k] = detail::mul_mod(c0, acc ? q - acc : 0, q);
  }
  return {a.prime(), a.precision(), a.degree_bound(), std::move(inv)};
}

SeriesElt involution_series(const SeriesElt& a) {
  // a((1+T)^{-1} - 1) = [ sum_j a_j (-T)^j (1+T)^{D-j} ] * (1+T)^{-D};
  // the bracket is an exact polynomial of degree D, computed with a running
  // power of (1+T) peeled down by synthetic division.
  const std::uint64_t q = a.modulus();
  const int D = a.degree_bound();
  const std::size_t n = static_cast<std::size_t>(D) + 1;
  std::vector<std::uint64_t> pw =
      detail::binomial_row(static_cast<std::uint64_t>(D), q);
  std::vector<std::uint64_t> bracket(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t aj = a.raw(static_cast<int>(j));
    if (aj != 0) {
      bool neg = j % 2 == 1;
      for (std::size_t k = 0; k + j < n && k < pw.size(); ++k) {
        std::uint64_t t = detail::mul_mod(aj, pw[k], q);
        bracket[j + k] = neg ? detail::sub_mod(bracket[j + k], t, q)
                             : detail::add_mod(bracket[j + k], t, q);
      }
    }
    // pw <- pw / (1+T), exact while the exponent stays >= 0.
    if (pw.size() > 1) {
      std::vector<std::uint64_t> next(pw.size() - 1, 0);
      next[0] = pw[0];
      for (std::size_t k = 1; k + 1 < pw.size(); ++k)
        next[k] = detail::sub_mod(pw[k], next[k - 1], q);
      pw = std::move(next);
    }
  }
  SeriesElt bracket_series(a.prime(), a.precision(), D, std::move(bracket));
  std::vector<std::uint64_t> up =
      detail::binomial_row(static_cast<std::uint64_t>(D), q);
  up.resize(n);
  SeriesElt denom(a.prime(), a.precision(), D, std::move(up));
  return bracket_series * invert_series(denom);
}

FiniteLevelElt reduce_to_level(const SeriesElt& a, int level) {
  std::uint64_t q = a.modulus();
  std::size_t pn = detail::level_size(a.prime(), level);
  std::vector<std::uint64_t> rem = a.raw_coeffs();
  std::vector<std::uint64_t> om = detail::binomial_row(pn, q);
  om[0] = detail::sub_mod(om[0], 1 % q, q);
  detail::poly_rem_monic(rem, om, q);
  rem.resize(pn, 0);
  return {a.prime(), a.precision(), level, std::move(rem)};
}

SeriesElt lift_to_series(const FiniteLevelElt& x, int degree_bound) {
  if (static_cast<std::size_t>(degree_bound) + 1 < x.size())
    throw std::invalid_argument("lift_to_series: truncation degree too small");
  return {x.prime(), x.precision(), degree_bound, x.raw_coeffs()};
}

FiniteLevelElt project(const FiniteLevelElt& x) {
  if (x.level() == 0)
    throw std::invalid_argument("project: already at level 0");
  std::uint64_t q = x.modulus();
  std::size_t pm = x.size() / x.prime();
  std::vector<std::uint64_t> rem = x.raw_coeffs();
  std::vector<std::uint64_t> om = detail::binomial_row(pm, q);
  om[0] = detail::sub_mod(om[0], 1 % q, q);
  detail::poly_rem_monic(rem, om, q);
  rem.resize(pm, 0);
  return {x.prime(), x.precision(), x.level() - 1, std::move(rem)};
}

FiniteLevelElt norm_xi(const FiniteLevelElt& x) {
  const std::uint64_t q = x.modulus();
  const int up = x.level() + 1;
  std::size_t target = detail::level_size(x.prime(), up);
  SeriesElt phi = cyclo_phi(x.prime(), x.precision(),
                            static_cast<int>(target), up);
  std::vector<std::uint64_t> phic = phi.raw_coeffs();
  phic.resize(target - x.size() + 1);  // exact degree p^{n+1} - p^n
  // deg(lift) + deg(Phi_{n+1}) = p^{n+1} - 1, so no reduction is needed.
  std::vector<std::uint64_t> prod = detail::poly_mul(x.raw_coeffs(), phic, q);
  prod.resize(target, 0);
  return {x.prime(), x.precision(), up, std::move(prod)};
}

FiniteLevelElt involution(const FiniteLevelElt& x) {
  // gamma^i -> gamma^{-i} permutes the group coordinates.
  std::vector<PAdicScalar> g = to_group_coeffs(x);
  const std::size_t d = g.size();
  std::vector<std::uint64_t> flipped(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    flipped[i == 0 ? 0 : d - i] = g[i].value();
  return from_group_coeffs(x.prime(), x.precision(), x.level(), flipped);
}

std::vector<PAdicScalar> to_group_coeffs(const FiniteLevelElt& x) {
  // Repeated synthetic division by (1+T): remainders are the coordinates on
  // 1, (1+T), (1+T)^2, ...
  const std::uint64_t q = x.modulus();
  std::vector<std::uint64_t> b = x.raw_coeffs();
  std::vector<PAdicScalar> out;
  out.reserve(b.size());
  for (std::size_t rounds = b.size(); rounds-- > 0;) {
    std::size_t m = b.size() - 1;
    std::vector<std::uint64_t> quot(m, 0);
    if (m > 0) {
      quot[m - 1] = b[m];
      for (std::size_t k = m - 1; k >= 1; --k)
        quot[k - 1] = detail::sub_mod(b[k], quot[k], q);
    }
    std::uint64_t rem = detail::sub_mod(b[0], m > 0 ? quot[0] : 0, q);
    out.emplace_back(x.prime(), x.precision(), rem);
    if (m == 0) break;
    b = std::move(quot);
  }
  while (out.size() < x.size())
    out.emplace_back(x.prime(), x.precision(), 0);
  return out;
}

FiniteLevelElt from_group_coeffs(std::uint64_t p, int N, int level,
                                 const std::vector<std::uint64_t>& coeffs) {
  std::size_t d = detail::level_size(p, level);
  if (coeffs.size() != d)
    throw std::invalid_argument(
        "from_group_coeffs: need exactly p^level coordinates");
  std::uint64_t q = prime_power(p, N);
  // Horner in (1+T): c_0 + (1+T)(c_1 + (1+T)(...)).
  std::vector<std::uint64_t> acc(d, 0);
  for (std::size_t i = d; i-- > 0;) {
    // acc <- acc * (1+T) + c_i, degree stays below d.
    for (std::size_t k = d - 1; k >= 1; --k)
      acc[k] = detail::add_mod(acc[k], acc[k - 1], q);
    acc[0] = detail::add_mod(acc[0], coeffs[i] % q, q);
  }
  return {p, N, level, std::move(acc)};
}

}  // namespace iwa
