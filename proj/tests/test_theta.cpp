#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "iwa/invariants.hpp"
#include "iwa/lambda_algebra.hpp"
#include "iwa/rng.hpp"
#include "iwa/theta.hpp"

using namespace iwa;

namespace {

SeriesElt random_series(std::uint64_t p, int N, int D, Rng& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(D) + 1);
  for (auto& v : c) v = draw_below(rng, prime_power(p, N));
  return SeriesElt(p, N, D, c);
}

FiniteLevelElt random_elt(std::uint64_t p, int N, int level, Rng& rng) {
  std::size_t size = 1;
  for (int i = 0; i < level; ++i) size *= p;
  std::vector<std::uint64_t> c(size);
  for (auto& v : c) v = draw_below(rng, prime_power(p, N));
  return FiniteLevelElt(p, N, level, c);
}

FiniteLevelElt bump_coeff(const FiniteLevelElt& x, std::size_t k) {
  std::vector<std::uint64_t> c = x.raw_coeffs();
  c[k] = (c[k] + 1) % x.modulus();
  return FiniteLevelElt(x.prime(), x.precision(), x.level(), c);
}

}  // namespace

TEST_CASE("supersingular family at a_p = 0 from constant inputs") {
  const SeriesElt one = SeriesElt::constant(3, 4, 30, 1);
  const PAdicScalar ap(3, 4, 0);
  const ThetaFamily fam = build_nonordinary_family(one, one, ap, 3);

  REQUIRE(fam.thetas.size() == 4);
  CHECK(fam.provenance == Provenance::nonordinary_sharp_flat);
  CHECK(fam.thetas[0] == FiniteLevelElt::constant(3, 4, 0, 1));
  CHECK(fam.thetas[1] == FiniteLevelElt::constant(3, 4, 1, 1));

  // level 2 element is minus the first layer polynomial: -(3 + 3T + T^2)
  const FiniteLevelElt frozen(3, 4, 2, {78, 78, 80, 0, 0, 0, 0, 0, 0});
  CHECK(fam.thetas[2] == frozen);

  const ThreeTermReport rep = verify_three_term(fam);
  CHECK(rep.pass);
  CHECK(rep.first_failure_level == -1);
}

TEST_CASE("three-term relation holds for random supersingular inputs") {
  Rng rng = seeded_rng(101);
  for (std::uint64_t apv : {0ull, 3ull, 6ull}) {
    const SeriesElt ls = random_series(3, 6, 90, rng);
    const SeriesElt lf = random_series(3, 6, 90, rng);
    const ThetaFamily fam =
        build_nonordinary_family(ls, lf, PAdicScalar(3, 6, apv), 4);
    CHECK(verify_three_term(fam).pass);
  }
}

TEST_CASE("perturbing one coefficient breaks the three-term relation") {
  const SeriesElt one = SeriesElt::constant(3, 4, 30, 1);
  ThetaFamily fam = build_nonordinary_family(one, one, PAdicScalar(3, 4, 0), 3);
  fam.thetas[2] = bump_coeff(fam.thetas[2], 1);
  const ThreeTermReport rep = verify_three_term(fam);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_failure_level == 1);
}

TEST_CASE("family builder input validation") {
  const SeriesElt one = SeriesElt::constant(3, 4, 30, 1);
  CHECK_THROWS_AS(build_nonordinary_family(one, one, PAdicScalar(3, 4, 2), 3),
                  std::domain_error);
  CHECK_THROWS_AS(build_nonordinary_family(one, one, PAdicScalar(3, 4, 0), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_nonordinary_family(one, SeriesElt::constant(5, 4, 30, 1),
                               PAdicScalar(3, 4, 0), 3),
      std::invalid_argument);

  Rng rng = seeded_rng(5);
  const FiniteLevelElt t0 = random_elt(5, 8, 0, rng);
  const FiniteLevelElt t1 = random_elt(5, 8, 1, rng);
  CHECK_THROWS_AS(build_ordinary_family(t0, t1, PAdicScalar(5, 8, 5), 3, 1),
                  std::domain_error);
  CHECK_THROWS_AS(build_ordinary_family(t1, t1, PAdicScalar(5, 8, 2), 3, 1),
                  std::invalid_argument);
}

TEST_CASE("ordinary builder satisfies the relation and is seed determined") {
  Rng rng = seeded_rng(42);
  const FiniteLevelElt t0 = random_elt(5, 8, 0, rng);
  const FiniteLevelElt t1 = random_elt(5, 8, 1, rng);
  const PAdicScalar ap(5, 8, 2);

  const ThetaFamily a = build_ordinary_family(t0, t1, ap, 4, 42);
  REQUIRE(a.thetas.size() == 5);
  CHECK(a.provenance == Provenance::ordinary_random);
  CHECK(verify_three_term(a).pass);

  const ThetaFamily b = build_ordinary_family(t0, t1, ap, 4, 42);
  for (std::size_t i = 0; i < a.thetas.size(); ++i) {
    CHECK(a.thetas[i] == b.thetas[i]);
  }

  const ThetaFamily c = build_ordinary_family(t0, t1, ap, 4, 43);
  bool differs = false;
  for (std::size_t i = 2; i < a.thetas.size(); ++i) {
    if (!(a.thetas[i] == c.thetas[i])) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("stabilized elements are norm compatible") {
  for (std::uint64_t trial = 0; trial < 6; ++trial) {
    Rng rng = trial_rng(777, trial);
    const std::uint64_t p = trial % 2 == 0 ? 5 : 3;
    const FiniteLevelElt t0 = random_elt(p, 10, 0, rng);
    const FiniteLevelElt t1 = random_elt(p, 10, 1, rng);
    const PAdicScalar ap = draw_unit(rng, p, 10);
    const ThetaFamily fam = build_ordinary_family(t0, t1, ap, 4, 1000 + trial);
    for (int n = 1; n < 4; ++n) {
      CHECK(project(stabilize(fam, n + 1)) == stabilize(fam, n));
    }
  }
}

TEST_CASE("stabilize rejects non-ordinary families and bad levels") {
  const SeriesElt one = SeriesElt::constant(3, 4, 30, 1);
  const ThetaFamily ss = build_nonordinary_family(one, one, PAdicScalar(3, 4, 0), 3);
  CHECK_THROWS_AS(stabilize(ss, 1), std::domain_error);

  Rng rng = seeded_rng(8);
  const ThetaFamily ord = build_ordinary_family(
      random_elt(5, 6, 0, rng), random_elt(5, 6, 1, rng), PAdicScalar(5, 6, 3), 3, 8);
  CHECK_THROWS_AS(stabilize(ord, 0), std::invalid_argument);
  CHECK_THROWS_AS(stabilize(ord, 4), std::invalid_argument);
  CHECK(stabilized_family(ord).elements.size() == 3);
}

TEST_CASE("level L approximations are projection compatible") {
  Rng rng = seeded_rng(19);
  const ThetaFamily fam = build_ordinary_family(
      random_elt(5, 10, 0, rng), random_elt(5, 10, 1, rng),
      draw_unit(rng, 5, 10), 4, 19);
  for (int n = 1; n < 4; ++n) {
    CHECK(project(ordinary_lp_approx(fam, n + 1)) == ordinary_lp_approx(fam, n));
  }
}

TEST_CASE("series L product doubles both invariants") {
  Rng rng = seeded_rng(23);
  CHECK(sharp_flat_lp(SeriesElt::constant(3, 8, 40, 1)) ==
        SeriesElt::constant(3, 8, 40, 1));
  for (int mu = 0; mu <= 2; ++mu) {
    for (int lambda : {0, 1, 5}) {
      const SeriesElt l = make_with_invariants(3, 8, 81, mu, lambda, rng);
      const InvariantResult r = invariants_series(sharp_flat_lp(l));
      REQUIRE(r.is_ok());
      CHECK(r.mu == 2 * mu);
      CHECK(r.lambda == 2 * lambda);
    }
  }
}

TEST_CASE("ordinary theorem verifier passes on random families") {
  int stabilized_early = 0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng = trial_rng(4242, trial);
    const FiniteLevelElt t0 = random_elt(5, 20, 0, rng);
    const FiniteLevelElt t1 = random_elt(5, 20, 1, rng);
    const PAdicScalar ap = draw_unit(rng, 5, 20);
    const ThetaFamily fam = build_ordinary_family(t0, t1, ap, 4, 5000 + trial);
    const OrdinaryReport rep = verify_ordinary_theorem(fam);
    CHECK(rep.verdict == Verdict::pass);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.stabilization_level >= 1);
    if (rep.stabilization_level == 1) ++stabilized_early;
    for (const auto& row : rep.rows) {
      if (row.asserted) {
        CHECK(row.ok);
        CHECK(row.lp.lambda == 2 * row.theta.lambda);
      }
    }
  }
  CHECK(stabilized_early > 0);
}

TEST_CASE("ordinary verifier reports unmet hypotheses") {
  const FiniteLevelElt z0 = FiniteLevelElt::constant(5, 6, 0, 0);
  const FiniteLevelElt z1 = FiniteLevelElt::constant(5, 6, 1, 0);
  const ThetaFamily zero = build_ordinary_family(z0, z1, PAdicScalar(5, 6, 2), 3, 1);
  // random lifts keep the tail nonzero, but the verdict only needs the screen
  const OrdinaryReport rep = verify_ordinary_theorem(zero);
  CHECK(rep.verdict != Verdict::fail);

  Rng rng = seeded_rng(31);
  ThetaFamily fam = build_ordinary_family(
      random_elt(5, 12, 0, rng), random_elt(5, 12, 1, rng), PAdicScalar(5, 12, 3), 3, 31);
  const PAdicScalar p_scalar(5, 12, 5);
  for (auto& t : fam.thetas) t = t * p_scalar;
  CHECK(verify_three_term(fam).pass);
  const OrdinaryReport scaled = verify_ordinary_theorem(fam);
  CHECK(scaled.verdict == Verdict::hypothesis_not_met);

  const ThetaFamily shallow = build_ordinary_family(
      random_elt(5, 12, 0, rng), random_elt(5, 12, 1, rng), PAdicScalar(5, 12, 2), 1, 7);
  CHECK(verify_ordinary_theorem(shallow).verdict == Verdict::hypothesis_not_met);
  CHECK_THROWS_AS(
      verify_ordinary_theorem(build_nonordinary_family(
          SeriesElt::constant(3, 4, 30, 1), SeriesElt::constant(3, 4, 30, 1),
          PAdicScalar(3, 4, 0), 2)),
      std::domain_error);
}

TEST_CASE("supersingular verifier on the constant pair") {
  const SeriesElt one = SeriesElt::constant(3, 8, 81, 1);
  const NonordinaryReport rep =
      verify_nonordinary_theorem(one, one, PAdicScalar(3, 8, 0), 4);
  CHECK(rep.verdict == Verdict::pass);
  REQUIRE(rep.rows.size() == 3);

  CHECK(rep.rows[0].n == 2);
  CHECK(rep.rows[0].parity == "sharp");
  CHECK(rep.rows[0].q_n == 2);
  CHECK(rep.rows[0].theta == InvariantResult::ok_result(0, 2));
  CHECK(rep.rows[0].lp_level == InvariantResult::ok_result(0, 4));
  CHECK(rep.rows[0].lp_series == InvariantResult::ok_result(0, 0));

  CHECK(rep.rows[1].n == 3);
  CHECK(rep.rows[1].parity == "flat");
  CHECK(rep.rows[1].q_n == 6);
  CHECK(rep.rows[1].theta == InvariantResult::ok_result(0, 6));

  CHECK(rep.rows[2].n == 4);
  CHECK(rep.rows[2].q_n == 20);
  CHECK(rep.rows[2].theta == InvariantResult::ok_result(0, 20));
  for (const auto& row : rep.rows) {
    CHECK(row.ok);
    CHECK_FALSE(row.below_threshold);
  }
}

TEST_CASE("supersingular verifier over an invariant grid") {
  Rng rng = seeded_rng(57);
  for (std::uint64_t apv : {0ull, 3ull}) {
    for (int mu = 0; mu <= 1; ++mu) {
      for (int lambda = 0; lambda <= 2; ++lambda) {
        const SeriesElt ls = make_with_invariants(3, 8, 81, mu, lambda, rng);
        const SeriesElt lf = make_with_invariants(3, 8, 81, mu, lambda, rng);
        const NonordinaryReport rep =
            verify_nonordinary_theorem(ls, lf, PAdicScalar(3, 8, apv), 4);
        CHECK(rep.verdict == Verdict::pass);
        for (const auto& row : rep.rows) {
          CHECK(row.ok);
          CHECK(row.theta.lambda == lambda + row.q_n);
          CHECK(row.theta.mu == mu);
        }
      }
    }
  }
}

TEST_CASE("levels below the lambda threshold are skipped, not failed") {
  Rng rng = seeded_rng(61);
  // lambda 7 reaches 3^2 - q_2 = 7, so the n = 2 row cannot be asserted
  const SeriesElt ls = make_with_invariants(3, 8, 81, 0, 7, rng);
  const SeriesElt lf = make_with_invariants(3, 8, 81, 0, 1, rng);
  const NonordinaryReport rep =
      verify_nonordinary_theorem(ls, lf, PAdicScalar(3, 8, 0), 4);
  CHECK(rep.verdict == Verdict::pass);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].below_threshold);
  CHECK_FALSE(rep.rows[1].below_threshold);
  CHECK(rep.rows[1].theta.lambda == 1 + 6);
  CHECK_FALSE(rep.rows[2].below_threshold);
  CHECK(rep.rows[2].theta.lambda == 7 + 20);
}

TEST_CASE("supersingular verifier reports unmet hypotheses and bad inputs") {
  Rng rng = seeded_rng(67);
  const SeriesElt zero(3, 6, 40);
  const SeriesElt unit = make_with_invariants(3, 6, 40, 0, 1, rng);
  const SeriesElt deep = make_with_invariants(3, 6, 40, 1, 1, rng);
  CHECK(verify_nonordinary_theorem(zero, unit, PAdicScalar(3, 6, 0), 3).verdict ==
        Verdict::hypothesis_not_met);
  CHECK(verify_nonordinary_theorem(unit, deep, PAdicScalar(3, 6, 0), 3).verdict ==
        Verdict::hypothesis_not_met);
  CHECK_THROWS_AS(verify_nonordinary_theorem(unit, unit, PAdicScalar(3, 6, 1), 3),
                  std::domain_error);
  CHECK_THROWS_AS(verify_nonordinary_theorem(unit, unit, PAdicScalar(3, 6, 0), 1),
                  std::invalid_argument);
}

TEST_CASE("at a_p = 0 the theta elements are signed layer products of the inputs") {
  Rng rng = seeded_rng(71);
  const SeriesElt ls = random_series(3, 6, 90, rng);
  const SeriesElt lf = random_series(3, 6, 90, rng);
  const ThetaFamily fam =
      build_nonordinary_family(ls, lf, PAdicScalar(3, 6, 0), 4);

  // even n: (-1)^{n/2} omega_n^- times the sharp input
  // odd n:  (-1)^{(n+1)/2} omega_n^+ times the flat input
  // reduce both factors first: the series product would truncate above the
  // degree bound, while the quotient ring multiplication is exact
  const auto expect = [&](int n, Sign s, const SeriesElt& src, bool negate) {
    FiniteLevelElt red = reduce_to_level(omega_pm(3, 6, 90, n, s), n) *
                         reduce_to_level(src, n);
    return negate ? -red : red;
  };
  CHECK(fam.thetas[2] == expect(2, Sign::minus, ls, true));
  CHECK(fam.thetas[3] == expect(3, Sign::plus, lf, true));
  CHECK(fam.thetas[4] == expect(4, Sign::minus, ls, false));
}
