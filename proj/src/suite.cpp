#include "iwa/suite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "iwa/invariants.hpp"
#include "iwa/lambda_algebra.hpp"
#include "iwa/rng.hpp"

namespace iwa {

namespace {

enum class Outcome { ok, fail, skip };

struct Trial {
  Outcome outcome = Outcome::ok;
  std::string note;
};

Trial pass() { return {Outcome::ok, {}}; }
Trial fail(std::string note) { return {Outcome::fail, std::move(note)}; }
Trial skip() { return {Outcome::skip, {}}; }

Trial expect(bool ok, const char* note) {
  return ok ? pass() : fail(note);
}

SeriesElt random_series(const SuiteConfig& cfg, int degree, Rng& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
  const std::uint64_t q = prime_power(cfg.p, cfg.precision);
  for (auto& v : c) v = draw_below(rng, q);
  return SeriesElt(cfg.p, cfg.precision, cfg.degree_bound, c);
}

FiniteLevelElt random_elt(const SuiteConfig& cfg, int level, Rng& rng) {
  std::size_t size = 1;
  for (int i = 0; i < level; ++i) size *= cfg.p;
  std::vector<std::uint64_t> c(size);
  const std::uint64_t q = prime_power(cfg.p, cfg.precision);
  for (auto& v : c) v = draw_below(rng, q);
  return FiniteLevelElt(cfg.p, cfg.precision, level, c);
}

int draw_level(const SuiteConfig& cfg, Rng& rng) {
  return 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(cfg.n_max)));
}

long long pow_ll(std::uint64_t p, int n) {
  long long v = 1;
  for (int i = 0; i < n; ++i) v *= static_cast<long long>(p);
  return v;
}

Trial omega_factorization(const SuiteConfig& cfg, Rng& rng) {
  const int n = draw_level(cfg, rng);
  const SeriesElt w = omega(cfg.p, cfg.precision, cfg.degree_bound, n);
  const SeriesElt below = omega(cfg.p, cfg.precision, cfg.degree_bound, n - 1);
  const SeriesElt phi = cyclo_phi(cfg.p, cfg.precision, cfg.degree_bound, n);
  if (!(below * phi == w)) return fail("omega_n != omega_{n-1} * phi_n");
  if (!(phi.coeff(0) == PAdicScalar(cfg.p, cfg.precision, cfg.p)))
    return fail("phi_n(0) != p");
  return pass();
}

Trial omega_pm_completion(const SuiteConfig& cfg, Rng& rng) {
  const int n = draw_level(cfg, rng);
  const SeriesElt plus = omega_pm(cfg.p, cfg.precision, cfg.degree_bound, n, Sign::plus);
  const SeriesElt minus = omega_pm(cfg.p, cfg.precision, cfg.degree_bound, n, Sign::minus);
  const SeriesElt t = SeriesElt::monomial(cfg.p, cfg.precision, cfg.degree_bound, 1, 1);
  return expect(plus * minus * t == omega(cfg.p, cfg.precision, cfg.degree_bound, n),
                "omega_n^+ * omega_n^- * T != omega_n");
}

Trial project_after_norm(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng) - 1;
  const FiniteLevelElt x = random_elt(cfg, level, rng);
  const PAdicScalar p_scalar(cfg.p, cfg.precision, cfg.p);
  return expect(project(norm_xi(x)) == x * p_scalar,
                "project(norm(x)) != p * x");
}

Trial norm_after_project(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng);
  const FiniteLevelElt x = random_elt(cfg, level, rng);
  const FiniteLevelElt phi = reduce_to_level(
      cyclo_phi(cfg.p, cfg.precision, cfg.degree_bound, level), level);
  return expect(norm_xi(project(x)) == x * phi,
                "norm(project(x)) != phi_n * x");
}

Trial involution_automorphism(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng);
  const FiniteLevelElt x = random_elt(cfg, level, rng);
  const FiniteLevelElt y = random_elt(cfg, level, rng);
  if (!(involution(x * y) == involution(x) * involution(y)))
    return fail("involution is not multiplicative");
  if (!(involution(involution(x)) == x)) return fail("involution is not an involution");
  const FiniteLevelElt one = FiniteLevelElt::constant(cfg.p, cfg.precision, level, 1);
  if (!(involution(one) == one)) return fail("involution moves 1");
  return pass();
}

Trial reduction_ring_hom(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng);
  const SeriesElt a = random_series(cfg, cfg.degree_bound / 2, rng);
  const SeriesElt b = random_series(cfg, cfg.degree_bound / 2, rng);
  return expect(reduce_to_level(a * b, level) ==
                    reduce_to_level(a, level) * reduce_to_level(b, level),
                "reduction does not respect products");
}

Trial mu_basis_invariance(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng);
  const FiniteLevelElt x = random_elt(cfg, level, rng);
  const InvariantResult inv = invariants(x);
  if (!inv.has_mu()) return skip();
  long long group_mu = cfg.precision;
  for (const PAdicScalar& c : to_group_coeffs(x)) {
    if (c.valuation() < group_mu) group_mu = c.valuation();
  }
  return expect(group_mu == inv.mu, "mu differs between coefficient bases");
}

Trial product_invariants(const SuiteConfig& cfg, Rng& rng) {
  const int level = cfg.n_max;
  const long long pn = pow_ll(cfg.p, level);
  const int lambda_cap = static_cast<int>(std::min<long long>(6, (pn - 1) / 2));
  const int mu_a = static_cast<int>(draw_below(rng, 3));
  const int mu_b = static_cast<int>(draw_below(rng, 3));
  const int la = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(lambda_cap) + 1));
  const int lb = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(lambda_cap) + 1));
  const FiniteLevelElt x = reduce_to_level(
      make_with_invariants(cfg.p, cfg.precision, cfg.degree_bound, mu_a, la, rng), level);
  const FiniteLevelElt y = reduce_to_level(
      make_with_invariants(cfg.p, cfg.precision, cfg.degree_bound, mu_b, lb, rng), level);
  return expect(invariants(x * y) ==
                    InvariantResult::ok_result(mu_a + mu_b, la + lb),
                "product invariants are not additive in the guarded range");
}

Trial norm_map_shift(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng) - 1;
  const FiniteLevelElt x = random_elt(cfg, level, rng);
  const InvariantResult before = invariants(x);
  if (!before.is_ok()) return skip();
  const InvariantResult after = invariants(norm_xi(x));
  const long long shift = pow_ll(cfg.p, level + 1) - pow_ll(cfg.p, level);
  return expect(after == InvariantResult::ok_result(before.mu, before.lambda + shift),
                "norm does not shift lambda by p^{n+1} - p^n");
}

Trial projection_invariants(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng);
  const FiniteLevelElt x = random_elt(cfg, level, rng);
  const InvariantResult full = invariants(x);
  const InvariantResult proj = invariants(project(x));
  if (!full.is_ok() || !proj.is_ok()) return skip();
  if (proj.mu < full.mu) return fail("projection lowered mu");
  if (proj.mu != full.mu) return skip();
  return expect(proj.lambda == full.lambda,
                "equal mu after projection but lambda moved");
}

Trial reduction_stability(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng);
  const long long pn = pow_ll(cfg.p, level);
  const int lambda_cap = static_cast<int>(std::min<long long>(6, pn - 1));
  const int mu = static_cast<int>(draw_below(rng, 3));
  const int lambda =
      static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(lambda_cap) + 1));
  const SeriesElt a =
      make_with_invariants(cfg.p, cfg.precision, cfg.degree_bound, mu, lambda, rng);
  return expect(invariants(reduce_to_level(a, level)) ==
                    InvariantResult::ok_result(mu, lambda),
                "reduction changed certified invariants");
}

Trial mod_p_polynomial_agreement(const SuiteConfig& cfg, Rng& rng) {
  const int level = draw_level(cfg, rng);
  const SeriesElt a = random_series(cfg, cfg.degree_bound, rng);
  const FiniteLevelElt x = reduce_to_level(a, level);
  // mod p the level polynomial is T^{p^n}, so reduction becomes truncation
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x.raw(k) % cfg.p != a.raw(k) % cfg.p)
      return fail("mod-p reduction is not plain truncation");
  }
  return pass();
}

Trial omega_pm_staircase(const SuiteConfig& cfg, Rng&) {
  int top = 0;
  long long pn = 1;
  while (top < 5 && pn * static_cast<long long>(cfg.p) <= 4000) {
    pn *= static_cast<long long>(cfg.p);
    ++top;
  }
  const int d = static_cast<int>(pn);
  for (int n = 0; n <= top; ++n) {
    const Sign grow = n % 2 == 0 ? Sign::minus : Sign::plus;
    const InvariantResult inv =
        invariants_series(omega_pm(cfg.p, cfg.precision, d, n, grow));
    if (!inv.is_ok() || inv.mu != 0 || inv.lambda != q_growth(cfg.p, n))
      return fail("lambda of the growth-side layer product misses q_n at n=" +
                  std::to_string(n));
  }
  return pass();
}

Trial involution_invariance(const SuiteConfig& cfg, Rng& rng) {
  const int mu = static_cast<int>(draw_below(rng, 3));
  const int lambda =
      static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(cfg.degree_bound) / 2));
  const SeriesElt a =
      make_with_invariants(cfg.p, cfg.precision, cfg.degree_bound, mu, lambda, rng);
  if (!(invariants_series(involution_series(a)) ==
        InvariantResult::ok_result(mu, lambda)))
    return fail("series involution changed the invariants");
  const int level = draw_level(cfg, rng);
  const FiniteLevelElt x = random_elt(cfg, level, rng);
  return expect(invariants(involution(x)) == invariants(x),
                "level involution changed the invariants");
}

struct Property {
  const char* name;
  int multiplier;  // trial count = multiplier * config.trials, or 1 if fixed
  bool single_shot;
  Trial (*run)(const SuiteConfig&, Rng&);
};

constexpr Property kProperties[] = {
    {"omega_factorization", 1, false, omega_factorization},
    {"omega_pm_completion", 1, false, omega_pm_completion},
    {"project_after_norm", 1, false, project_after_norm},
    {"norm_after_project", 1, false, norm_after_project},
    {"involution_automorphism", 1, false, involution_automorphism},
    {"reduction_ring_hom", 1, false, reduction_ring_hom},
    {"mu_basis_invariance", 5, false, mu_basis_invariance},
    {"product_invariants", 1, false, product_invariants},
    {"norm_map_shift", 1, false, norm_map_shift},
    {"projection_invariants", 1, false, projection_invariants},
    {"reduction_stability", 1, false, reduction_stability},
    {"mod_p_polynomial_agreement", 1, false, mod_p_polynomial_agreement},
    {"omega_pm_staircase", 1, true, omega_pm_staircase},
    {"involution_invariance", 2, false, involution_invariance},
};

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  if (!is_odd_prime(config.p))
    throw std::invalid_argument("run_suite: p must be an odd prime");
  if (config.precision < 8)
    throw std::invalid_argument("run_suite: precision must be at least 8");
  if (config.n_max < 1) throw std::invalid_argument("run_suite: n_max must be positive");
  if (config.trials < 1) throw std::invalid_argument("run_suite: trials must be positive");
  if (pow_ll(config.p, config.n_max) > config.degree_bound)
    throw std::invalid_argument("run_suite: degree bound below p^n_max");
  if (config.degree_bound < 16)
    throw std::invalid_argument("run_suite: degree bound too small");
  prime_power(config.p, config.precision);  // rejects moduli past the word cap

  SuiteReport report;
  report.config = config;
  std::uint64_t index = 0;
  for (const Property& prop : kProperties) {
    PropertyResult res;
    res.name = prop.name;
    const int count = prop.single_shot ? 1 : prop.multiplier * config.trials;
    const std::uint64_t stream = mix64(config.seed + 0x1000 * (index + 1));
    for (int t = 0; t < count; ++t) {
      Rng rng = trial_rng(stream, static_cast<std::uint64_t>(t));
      const Trial outcome = prop.run(config, rng);
      ++res.trials;
      if (outcome.outcome == Outcome::skip) {
        ++res.skipped;
      } else if (outcome.outcome == Outcome::fail) {
        ++res.failures;
        if (res.first_failure.empty()) {
          res.first_failure = "trial " + std::to_string(t) + ": " + outcome.note;
        }
      }
    }
    report.properties.push_back(std::move(res));
    ++index;
  }
  return report;
}

}  // namespace iwa
