#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <variant>

#include "iwa/json_io.hpp"
#include "iwa/rng.hpp"

using namespace iwa;

TEST_CASE("scalar serialization is canonical and round trips") {
  const PAdicScalar s(5, 3, 7);
  CHECK(to_json(s).dump() == R"({"N":3,"p":5,"value":"7"})");
  CHECK(scalar_from_json(to_json(s)) == s);
}

TEST_CASE("series and finite elements round trip") {
  Rng rng = seeded_rng(3);
  std::vector<std::uint64_t> c(28);
  for (auto& v : c) v = draw_below(rng, prime_power(3, 6));
  const SeriesElt a(3, 6, 27, c);
  CHECK(series_from_json(to_json(a)) == a);

  const FiniteLevelElt x(3, 6, 2, std::vector<std::uint64_t>(c.begin(), c.begin() + 9));
  CHECK(finite_from_json(to_json(x)) == x);

  auto var_a = element_from_json(to_json(a));
  REQUIRE(std::holds_alternative<SeriesElt>(var_a));
  CHECK(std::get<SeriesElt>(var_a) == a);
  auto var_x = element_from_json(to_json(x));
  REQUIRE(std::holds_alternative<FiniteLevelElt>(var_x));
  CHECK(std::get<FiniteLevelElt>(var_x) == x);
}

TEST_CASE("parsers accept plain integers and reduce modulo p^N") {
  const Json j{{"p", 3}, {"N", 6}, {"level", 0}, {"coeffs", {1000}}};
  const FiniteLevelElt x = finite_from_json(j);
  CHECK(x.raw(0) == 271);  // 1000 mod 729
}

TEST_CASE("malformed element files are rejected with the offending field") {
  const Json good{{"p", 3}, {"N", 6}, {"deg", 4}, {"coeffs", {"1", "2"}}};
  CHECK_NOTHROW(series_from_json(good));

  auto expect_throw = [](Json j) {
    CHECK_THROWS_AS(element_from_json(j), std::invalid_argument);
  };
  Json j = good;
  j.erase("p");
  expect_throw(j);
  j = good;
  j["p"] = 4;
  expect_throw(j);
  j = good;
  j["N"] = 0;
  expect_throw(j);
  j = good;
  j["coeffs"] = {"-3"};
  expect_throw(j);
  j = good;
  j["coeffs"] = {"12x"};
  expect_throw(j);
  j = good;
  j["coeffs"] = "1";
  expect_throw(j);
  j = good;
  j["coeffs"] = {"1", "2", "3", "4", "5", "6"};  // more than deg + 1
  expect_throw(j);
  j = good;
  j["level"] = 1;  // both shape keys present
  expect_throw(j);
  j = good;
  j.erase("deg");  // neither shape key
  expect_throw(j);
  j = Json{{"p", 3}, {"N", 6}, {"level", 2}, {"coeffs", {"1"}}};  // needs 9
  expect_throw(j);
  expect_throw(Json::array());
}

TEST_CASE("invariant results serialize by status") {
  CHECK(to_json(InvariantResult::ok_result(1, 4)).dump() ==
        R"({"lambda":4,"mu":1,"status":"ok"})");
  CHECK(to_json(InvariantResult::zero_at_precision()).dump() ==
        R"({"status":"zero_at_precision"})");
  CHECK(to_json(InvariantResult::exceeds_truncation(2)).dump() ==
        R"({"mu":2,"status":"lambda_exceeds_truncation"})");
}

TEST_CASE("supersingular report serializes with stable keys and a flat table") {
  const SeriesElt one = SeriesElt::constant(3, 8, 81, 1);
  const NonordinaryReport rep =
      verify_nonordinary_theorem(one, one, PAdicScalar(3, 8, 0), 4);
  const Json j = to_json(rep);
  CHECK(j["verdict"] == "pass");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["parity"] == "sharp");
  CHECK(j["rows"][0]["theta"]["lambda"] == 2);
  CHECK(j["rows"][0]["lp_level"]["lambda"] == 4);
  CHECK(j.dump() == to_json(rep).dump());

  CHECK(render_csv(rep) ==
        "n,parity,mu_theta,lambda_theta,q_n,expected_lambda,verdict\n"
        "2,sharp,0,2,2,2,pass\n"
        "3,flat,0,6,6,6,pass\n"
        "4,sharp,0,20,20,20,pass\n");
}

TEST_CASE("skipped levels render as skipped rows") {
  Rng rng = seeded_rng(61);
  const SeriesElt ls = make_with_invariants(3, 8, 81, 0, 7, rng);
  const SeriesElt lf = make_with_invariants(3, 8, 81, 0, 1, rng);
  const NonordinaryReport rep =
      verify_nonordinary_theorem(ls, lf, PAdicScalar(3, 8, 0), 4);
  const std::string csv = render_csv(rep);
  CHECK(csv.find("2,sharp,,,2,9,skipped\n") != std::string::npos);
  CHECK(csv.find("3,flat,0,7,6,7,pass\n") != std::string::npos);
}

TEST_CASE("ordinary report serializes rows and a flat table") {
  Rng rng = seeded_rng(11);
  std::vector<std::uint64_t> c0{draw_below(rng, prime_power(5, 12))};
  std::vector<std::uint64_t> c1(5);
  for (auto& v : c1) v = draw_below(rng, prime_power(5, 12));
  const ThetaFamily fam = build_ordinary_family(
      FiniteLevelElt(5, 12, 0, c0), FiniteLevelElt(5, 12, 1, c1),
      PAdicScalar(5, 12, 2), 3, 11);
  const OrdinaryReport rep = verify_ordinary_theorem(fam);
  const Json j = to_json(rep);
  CHECK(j["verdict"] == "pass");
  CHECK(j["rows"].size() == 3);
  CHECK(j["stabilization_level"] == rep.stabilization_level);
  const std::string csv = render_csv(rep);
  CHECK(csv.rfind("n,mu_stab,lambda_stab,mu_theta,lambda_theta,lambda_lp,asserted,verdict\n", 0) == 0);
  CHECK(csv.find(",true,pass\n") != std::string::npos);

  const Json three = to_json(verify_three_term(fam));
  CHECK(three["pass"] == true);
  CHECK(three["first_failure_level"] == -1);
}

TEST_CASE("suite report serialization carries config and totals") {
  SuiteConfig cfg;
  cfg.trials = 5;
  cfg.seed = 13;
  const SuiteReport rep = run_suite(cfg);
  const Json j = to_json(rep);
  CHECK(j["pass"] == true);
  CHECK(j["config"]["p"] == 5);
  CHECK(j["config"]["trials"] == 5);
  CHECK(j["properties"].size() == 14);
  CHECK(j["properties"][0]["name"] == "omega_factorization");
  CHECK(j["properties"][0]["failures"] == 0);
}
