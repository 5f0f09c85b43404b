#include "iwa/json_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwa {

namespace {

std::uint64_t parse_u64(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v < 0) throw std::invalid_argument(where + ": negative value");
    return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.size() > 20)
      throw std::invalid_argument(where + ": not a decimal integer");
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument(where + ": not a decimal integer");
    }
    try {
      return std::stoull(s);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument(where + ": value does not fit in 64 bits");
    }
  }
  throw std::invalid_argument(where + ": expected an integer or decimal string");
}

int parse_int(const Json& j, const std::string& where, long long lo, long long hi) {
  if (!j.is_number_integer())
    throw std::invalid_argument(where + ": expected an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi)
    throw std::invalid_argument(where + ": out of range");
  return static_cast<int>(v);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object())
    throw std::invalid_argument("element: expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string("element: missing field '") + key + "'");
  return *it;
}

std::vector<std::uint64_t> parse_coeffs(const Json& j) {
  const Json& arr = field(j, "coeffs");
  if (!arr.is_array())
    throw std::invalid_argument("element: 'coeffs' must be an array");
  std::vector<std::uint64_t> out;
  out.reserve(arr.size());
  std::size_t k = 0;
  for (const Json& c : arr) {
    out.push_back(parse_u64(c, "coeffs[" + std::to_string(k) + "]"));
    ++k;
  }
  return out;
}

std::pair<std::uint64_t, int> parse_ring(const Json& j) {
  const std::uint64_t p = parse_u64(field(j, "p"), "p");
  const int nprec = parse_int(field(j, "N"), "N", 1, 4096);
  if (!is_odd_prime(p))
    throw std::invalid_argument("p: must be an odd prime");
  prime_power(p, nprec);  // rejects moduli past the word cap
  return {p, nprec};
}

Json coeffs_to_json(const std::vector<std::uint64_t>& c) {
  Json arr = Json::array();
  for (std::uint64_t v : c) arr.push_back(std::to_string(v));
  return arr;
}

const char* status_name(InvariantResult::Status s) {
  switch (s) {
    case InvariantResult::Status::ok: return "ok";
    case InvariantResult::Status::zero_at_precision: return "zero_at_precision";
    case InvariantResult::Status::lambda_exceeds_truncation:
      return "lambda_exceeds_truncation";
  }
  return "zero_at_precision";
}

}  // namespace

Json to_json(const PAdicScalar& s) {
  return Json{{"p", s.prime()}, {"N", s.precision()}, {"value", std::to_string(s.value())}};
}

Json to_json(const SeriesElt& a) {
  return Json{{"p", a.prime()},
              {"N", a.precision()},
              {"deg", a.degree_bound()},
              {"coeffs", coeffs_to_json(a.raw_coeffs())}};
}

Json to_json(const FiniteLevelElt& x) {
  return Json{{"p", x.prime()},
              {"N", x.precision()},
              {"level", x.level()},
              {"coeffs", coeffs_to_json(x.raw_coeffs())}};
}

Json to_json(const InvariantResult& r) {
  Json j{{"status", status_name(r.status)}};
  if (r.has_mu()) j["mu"] = r.mu;
  if (r.is_ok()) j["lambda"] = r.lambda;
  return j;
}

Json to_json(const ThreeTermReport& r) {
  return Json{{"pass", r.pass},
              {"first_failure_level", r.first_failure_level},
              {"detail", r.detail}};
}

Json to_json(const OrdinaryReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"stab", to_json(row.stab)},
                        {"theta", to_json(row.theta)},
                        {"lp", to_json(row.lp)},
                        {"asserted", row.asserted},
                        {"ok", row.ok}});
  }
  return Json{{"verdict", verdict_name(r.verdict)},
              {"stabilization_level", r.stabilization_level},
              {"detail", r.detail},
              {"rows", rows}};
}

Json to_json(const NonordinaryReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"parity", row.parity},
                        {"q_n", row.q_n},
                        {"theta", to_json(row.theta)},
                        {"lstar", to_json(row.lstar)},
                        {"lp_level", to_json(row.lp_level)},
                        {"lp_series", to_json(row.lp_series)},
                        {"below_threshold", row.below_threshold},
                        {"ok", row.ok},
                        {"detail", row.detail}});
  }
  return Json{{"verdict", verdict_name(r.verdict)},
              {"detail", r.detail},
              {"rows", rows}};
}

Json to_json(const PropertyResult& r) {
  return Json{{"name", r.name},
              {"trials", r.trials},
              {"failures", r.failures},
              {"skipped", r.skipped},
              {"first_failure", r.first_failure}};
}

Json to_json(const SuiteReport& r) {
  Json props = Json::array();
  for (const auto& prop : r.properties) props.push_back(to_json(prop));
  return Json{{"config", Json{{"p", r.config.p},
                              {"precision", r.config.precision},
                              {"n_max", r.config.n_max},
                              {"degree_bound", r.config.degree_bound},
                              {"trials", r.config.trials},
                              {"seed", r.config.seed}}},
              {"pass", r.all_pass()},
              {"properties", props}};
}

PAdicScalar scalar_from_json(const Json& j) {
  auto [p, nprec] = parse_ring(j);
  return {p, nprec, parse_u64(field(j, "value"), "value")};
}

SeriesElt series_from_json(const Json& j) {
  auto [p, nprec] = parse_ring(j);
  const int deg = parse_int(field(j, "deg"), "deg", 0, 1 << 22);
  std::vector<std::uint64_t> coeffs = parse_coeffs(j);
  if (coeffs.size() > static_cast<std::size_t>(deg) + 1)
    throw std::invalid_argument("coeffs: more entries than deg + 1");
  return {p, nprec, deg, std::move(coeffs)};
}

FiniteLevelElt finite_from_json(const Json& j) {
  auto [p, nprec] = parse_ring(j);
  const int level = parse_int(field(j, "level"), "level", 0, 64);
  if (level > 0 && p > (std::size_t{1} << 22))
    throw std::invalid_argument("level: p^level too large");
  std::size_t expected = 1;
  for (int i = 0; i < level; ++i) {
    expected *= p;
    if (expected > (std::size_t{1} << 22))
      throw std::invalid_argument("level: p^level too large");
  }
  std::vector<std::uint64_t> coeffs = parse_coeffs(j);
  if (coeffs.size() != expected)
    throw std::invalid_argument("coeffs: expected exactly p^level entries");
  return {p, nprec, level, std::move(coeffs)};
}

std::variant<SeriesElt, FiniteLevelElt> element_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("element: expected a JSON object");
  const bool has_level = j.contains("level");
  const bool has_deg = j.contains("deg");
  if (has_level == has_deg)
    throw std::invalid_argument("element: need exactly one of 'level' or 'deg'");
  if (has_level) return finite_from_json(j);
  return series_from_json(j);
}

namespace {

std::string csv_or_empty(bool present, long long v) {
  return present ? std::to_string(v) : std::string{};
}

}  // namespace

std::string render_csv(const NonordinaryReport& r) {
  std::string out = "n,parity,mu_theta,lambda_theta,q_n,expected_lambda,verdict\n";
  for (const auto& row : r.rows) {
    const bool have = !row.below_threshold && row.theta.is_ok();
    out += std::to_string(row.n);
    out += ',';
    out += row.parity;
    out += ',';
    out += csv_or_empty(have, row.theta.mu);
    out += ',';
    out += csv_or_empty(have, row.theta.lambda);
    out += ',';
    out += std::to_string(row.q_n);
    out += ',';
    out += csv_or_empty(row.lstar.is_ok(), row.lstar.lambda + row.q_n);
    out += ',';
    out += row.below_threshold ? "skipped" : (row.ok ? "pass" : "fail");
    out += '\n';
  }
  return out;
}

std::string render_csv(const OrdinaryReport& r) {
  std::string out = "n,mu_stab,lambda_stab,mu_theta,lambda_theta,lambda_lp,asserted,verdict\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += csv_or_empty(row.stab.is_ok(), row.stab.mu);
    out += ',';
    out += csv_or_empty(row.stab.is_ok(), row.stab.lambda);
    out += ',';
    out += csv_or_empty(row.theta.is_ok(), row.theta.mu);
    out += ',';
    out += csv_or_empty(row.theta.is_ok(), row.theta.lambda);
    out += ',';
    out += csv_or_empty(row.lp.is_ok(), row.lp.lambda);
    out += ',';
    out += row.asserted ? "true" : "false";
    out += ',';
    out += row.asserted ? (row.ok ? "pass" : "fail") : "skipped";
    out += '\n';
  }
  return out;
}

}  // namespace iwa
