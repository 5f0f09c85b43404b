#include "iwa/theta.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iwa/rng.hpp"

namespace iwa {

namespace {

void check_family_ring(const SeriesElt& l_sharp, const SeriesElt& l_flat,
                       const PAdicScalar& a_p) {
  if (l_sharp.prime() != a_p.prime() || l_sharp.precision() != a_p.precision() ||
      l_flat.prime() != a_p.prime() || l_flat.precision() != a_p.precision()) {
    throw std::invalid_argument("theta family: mixed rings");
  }
}

}  // namespace

ThetaFamily build_nonordinary_family(const SeriesElt& l_sharp,
                                     const SeriesElt& l_flat,
                                     const PAdicScalar& a_p, int n_max) {
  check_family_ring(l_sharp, l_flat, a_p);
  if (a_p.valuation() < 1) {
    throw std::domain_error("build_nonordinary_family: a_p must be divisible by p");
  }
  if (n_max < 1) {
    throw std::invalid_argument("build_nonordinary_family: n_max must be positive");
  }
  ThetaFamily fam{a_p, n_max, {}, Provenance::nonordinary_sharp_flat};
  fam.thetas.reserve(static_cast<std::size_t>(n_max) + 1);
  fam.thetas.push_back(reduce_to_level(l_sharp, 0));
  for (int n = 1; n <= n_max; ++n) {
    fam.thetas.push_back(apply_h(n, a_p, l_sharp, l_flat).first);
  }
  return fam;
}

ThetaFamily build_ordinary_family(const FiniteLevelElt& theta0,
                                  const FiniteLevelElt& theta1,
                                  const PAdicScalar& a_p, int n_max,
                                  std::uint64_t seed) {
  if (theta0.prime() != a_p.prime() || theta0.precision() != a_p.precision() ||
      theta1.prime() != a_p.prime() || theta1.precision() != a_p.precision()) {
    throw std::invalid_argument("build_ordinary_family: mixed rings");
  }
  if (theta0.level() != 0 || theta1.level() != 1) {
    throw std::invalid_argument("build_ordinary_family: seeds must live at levels 0 and 1");
  }
  if (!a_p.is_unit()) {
    throw std::domain_error("build_ordinary_family: a_p must be a unit");
  }
  if (n_max < 1) {
    throw std::invalid_argument("build_ordinary_family: n_max must be positive");
  }
  const std::uint64_t p = a_p.prime();
  const std::uint64_t q = a_p.modulus();
  ThetaFamily fam{a_p, n_max, {}, Provenance::ordinary_random};
  fam.thetas.reserve(static_cast<std::size_t>(n_max) + 1);
  fam.thetas.push_back(theta0);
  fam.thetas.push_back(theta1);
  Rng rng = seeded_rng(seed);
  for (int n = 1; n < n_max; ++n) {
    FiniteLevelElt base = fam.thetas[static_cast<std::size_t>(n)] * a_p -
                          norm_xi(fam.thetas[static_cast<std::size_t>(n - 1)]);
    std::vector<std::uint64_t> lifted = base.raw_coeffs();
    const std::size_t size_up = lifted.size() * static_cast<std::size_t>(p);
    lifted.resize(size_up, 0);
    // lift ambiguity: omega_n times a random polynomial of the complementary size
    std::vector<std::uint64_t> r(size_up - base.size());
    for (auto& c : r) c = draw_below(rng, q);
    const SeriesElt om = omega(p, a_p.precision(), static_cast<int>(base.size()), n);
    std::vector<std::uint64_t> bump = detail::poly_mul(om.raw_coeffs(), r, q);
    bump.resize(size_up, 0);
    for (std::size_t i = 0; i < size_up; ++i) {
      lifted[i] = detail::add_mod(lifted[i], bump[i], q);
    }
    fam.thetas.emplace_back(p, a_p.precision(), n + 1, lifted);
  }
  return fam;
}

FiniteLevelElt stabilize(const ThetaFamily& fam, int n) {
  if (!fam.a_p.is_unit()) {
    throw std::domain_error("stabilize: family is not ordinary");
  }
  if (n < 1 || n > fam.n_max) {
    throw std::invalid_argument("stabilize: level out of range");
  }
  const PAdicScalar alpha = unit_root(fam.a_p);
  const PAdicScalar ainv = alpha.invert_unit();
  const FiniteLevelElt& here = fam.thetas[static_cast<std::size_t>(n)];
  const FiniteLevelElt below = norm_xi(fam.thetas[static_cast<std::size_t>(n - 1)]);
  return (here - below * ainv) * pow_scalar(ainv, static_cast<std::uint64_t>(n) + 1);
}

StabilizedFamily stabilized_family(const ThetaFamily& fam) {
  StabilizedFamily out{unit_root(fam.a_p), {}};
  out.elements.reserve(static_cast<std::size_t>(fam.n_max));
  for (int n = 1; n <= fam.n_max; ++n) out.elements.push_back(stabilize(fam, n));
  return out;
}

FiniteLevelElt ordinary_lp_approx(const ThetaFamily& fam, int n) {
  FiniteLevelElt s = stabilize(fam, n);
  return s * involution(s);
}

SeriesElt sharp_flat_lp(const SeriesElt& l_star) {
  return l_star * involution_series(l_star);
}

ThreeTermReport verify_three_term(const ThetaFamily& fam) {
  ThreeTermReport rep;
  for (int n = 1; n + 1 <= fam.n_max; ++n) {
    const FiniteLevelElt lhs = project(fam.thetas[static_cast<std::size_t>(n + 1)]);
    const FiniteLevelElt rhs = fam.thetas[static_cast<std::size_t>(n)] * fam.a_p -
                               norm_xi(fam.thetas[static_cast<std::size_t>(n - 1)]);
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.first_failure_level = n;
      rep.detail = "three-term relation fails at n=" + std::to_string(n);
      return rep;
    }
  }
  rep.pass = true;
  rep.detail = fam.n_max < 2 ? "no interior levels to check" : "all levels consistent";
  return rep;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
    case Verdict::fail: return "fail";
  }
  return "fail";
}

OrdinaryReport verify_ordinary_theorem(const ThetaFamily& fam) {
  if (!fam.a_p.is_unit()) {
    throw std::domain_error("verify_ordinary_theorem: family is not ordinary");
  }
  OrdinaryReport rep;
  if (fam.n_max < 2) {
    rep.detail = "need at least two levels to compare stabilized invariants";
    return rep;
  }
  const StabilizedFamily stabs = stabilized_family(fam);
  std::vector<FiniteLevelElt> approx;
  approx.reserve(stabs.elements.size());
  for (const auto& s : stabs.elements) approx.push_back(s * involution(s));

  rep.rows.resize(static_cast<std::size_t>(fam.n_max));
  for (int n = 1; n <= fam.n_max; ++n) {
    OrdinaryLevelRow& row = rep.rows[static_cast<std::size_t>(n - 1)];
    row.n = n;
    row.stab = invariants(stabs.elements[static_cast<std::size_t>(n - 1)]);
    row.theta = invariants(fam.thetas[static_cast<std::size_t>(n)]);
    row.lp = invariants(approx[static_cast<std::size_t>(n - 1)]);
  }

  const InvariantResult& top = rep.rows.back().lp;
  if (!top.is_ok() || top.mu != 0) {
    rep.detail = "top-level L approximation is zero or has positive mu";
    return rep;
  }

  int n0 = -1;
  for (int n = 1; n < fam.n_max; ++n) {
    const InvariantResult& a = rep.rows[static_cast<std::size_t>(n - 1)].stab;
    const InvariantResult& b = rep.rows[static_cast<std::size_t>(n)].stab;
    if (a.is_ok() && b.is_ok() && a.mu == b.mu && a.lambda == b.lambda &&
        2 * a.lambda < static_cast<long long>(prime_power(fam.prime(), n))) {
      n0 = n;
      break;
    }
  }
  if (n0 < 0) {
    rep.detail = "stabilized invariants never repeat within the certified range";
    return rep;
  }
  rep.stabilization_level = n0;

  bool any_bad = false;
  for (int n = n0; n <= fam.n_max; ++n) {
    OrdinaryLevelRow& row = rep.rows[static_cast<std::size_t>(n - 1)];
    row.asserted = true;
    row.ok = row.theta.is_ok() && row.theta.mu == 0 && row.lp.is_ok() &&
             row.lp.mu == 0 && row.lp.lambda == 2 * row.theta.lambda;
    if (!row.ok && !any_bad) {
      any_bad = true;
      rep.detail = "identity fails at n=" + std::to_string(n);
    }
  }
  rep.verdict = any_bad ? Verdict::fail : Verdict::pass;
  if (!any_bad) {
    rep.detail = "stabilized from n=" + std::to_string(n0);
  }
  return rep;
}

NonordinaryReport verify_nonordinary_theorem(const SeriesElt& l_sharp,
                                             const SeriesElt& l_flat,
                                             const PAdicScalar& a_p,
                                             int n_max) {
  check_family_ring(l_sharp, l_flat, a_p);
  if (a_p.valuation() < 1) {
    throw std::domain_error("verify_nonordinary_theorem: a_p must be divisible by p");
  }
  if (n_max < 2) {
    throw std::invalid_argument("verify_nonordinary_theorem: n_max must be at least 2");
  }
  NonordinaryReport rep;
  const InvariantResult inv_sharp = invariants_series(l_sharp);
  const InvariantResult inv_flat = invariants_series(l_flat);
  if (!inv_sharp.is_ok() || !inv_flat.is_ok()) {
    rep.detail = "input series zero at precision or lambda not below the degree bound";
    return rep;
  }
  if (inv_sharp.mu != inv_flat.mu) {
    rep.detail = "sharp and flat inputs have different mu";
    return rep;
  }

  const ThetaFamily fam = build_nonordinary_family(l_sharp, l_flat, a_p, n_max);
  const SeriesElt lp_sharp = sharp_flat_lp(l_sharp);
  const SeriesElt lp_flat = sharp_flat_lp(l_flat);
  const InvariantResult inv_lp_sharp = invariants_series(lp_sharp);
  const InvariantResult inv_lp_flat = invariants_series(lp_flat);
  const long long precision = a_p.precision();

  bool any_bad = false;
  bool any_asserted = false;
  for (int n = 2; n <= n_max; ++n) {
    NonordinaryLevelRow row;
    row.n = n;
    const bool even = n % 2 == 0;
    row.parity = even ? "sharp" : "flat";
    row.q_n = q_growth(a_p.prime(), n);
    row.lstar = even ? inv_sharp : inv_flat;
    row.lp_series = even ? inv_lp_sharp : inv_lp_flat;
    const long long pn = static_cast<long long>(prime_power(a_p.prime(), n));
    if (row.lstar.lambda >= pn - row.q_n) {
      row.below_threshold = true;
      row.detail = "lambda of the input reaches p^n - q_n; level skipped";
      rep.rows.push_back(row);
      continue;
    }
    any_asserted = true;
    const FiniteLevelElt& theta = fam.thetas[static_cast<std::size_t>(n)];
    row.theta = invariants(theta);
    std::string why;
    bool ok = row.theta.is_ok();
    if (!ok) {
      why = "theta vanishes at working precision";
    } else {
      if (row.theta.mu != row.lstar.mu) {
        ok = false;
        why = "mu(theta) differs from mu of the input";
      } else if (row.theta.lambda != row.lstar.lambda + row.q_n) {
        ok = false;
        why = "lambda(theta) is not lambda(input) + q_n";
      }
    }
    if (ok) {
      if (2 * row.theta.lambda < pn && 2 * row.theta.mu < precision) {
        const FiniteLevelElt z = theta * involution(theta);
        row.lp_level = invariants(z);
        if (!row.lp_level.is_ok() || row.lp_level.mu != 2 * row.theta.mu ||
            row.lp_level.lambda != 2 * row.theta.lambda) {
          ok = false;
          why = "level product does not double the theta invariants";
        }
      } else {
        row.detail = "level product outside certified range; doubled check skipped";
      }
    }
    if (ok) {
      if (row.lp_series.is_ok()) {
        if (row.lp_series.mu != 2 * row.lstar.mu ||
            row.lp_series.lambda != 2 * row.lstar.lambda) {
          ok = false;
          why = "series product does not double the input invariants";
        }
      } else if (row.detail.empty()) {
        row.detail = "series product not certified at this degree bound";
      }
    }
    row.ok = ok;
    if (!ok) {
      row.detail = why;
      if (!any_bad) {
        any_bad = true;
        rep.detail = why + " at n=" + std::to_string(n);
      }
    }
    rep.rows.push_back(row);
  }

  if (any_bad) {
    rep.verdict = Verdict::fail;
  } else if (!any_asserted) {
    rep.verdict = Verdict::hypothesis_not_met;
    rep.detail = "every level fell below the lambda threshold";
  } else {
    rep.verdict = Verdict::pass;
    if (rep.detail.empty()) rep.detail = "all asserted levels consistent";
  }
  return rep;
}

}  // namespace iwa
