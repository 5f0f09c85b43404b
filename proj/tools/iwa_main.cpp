// Experiment driver.  Subcommands:
//   invariants <file>   mu/lambda of a JSON-encoded element
//   verify-lemmas       randomized property suite over the group algebras
//   ordinary            random unit-a_p towers, stabilized invariant check
//   nonordinary         sharp/flat towers with prescribed input invariants
//
// Exit codes: 0 success, 1 failure (including fail verdicts), 2 element is
// zero at working precision, 3 input parse error, 4 lambda not certified at
// the truncation degree.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "iwa/invariants.hpp"
#include "iwa/json_io.hpp"
#include "iwa/lambda_algebra.hpp"
#include "iwa/padic.hpp"
#include "iwa/rng.hpp"
#include "iwa/suite.hpp"
#include "iwa/theta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitZero = 2;
constexpr int kExitParse = 3;
constexpr int kExitTruncation = 4;

struct Options {
  std::uint64_t p = 5;
  int precision = 20;
  int n_max = 4;
  int trunc = 0;  // 0 = pick per command
  int trials = 1;
  std::uint64_t seed = 2024;
  std::uint64_t a_p = 0;
  bool a_p_given = false;
  int mu = 0;
  int lambda = 1;
  std::string out;
  std::string format = "json";
};

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitFail;
  }
  f << text;
  return f.good() ? kExitOk : kExitFail;
}

int check_common(const Options& opt, int min_n_max) {
  if (!iwa::is_odd_prime(opt.p)) {
    std::cerr << "error: --p must be an odd prime\n";
    return kExitFail;
  }
  if (opt.trials < 1) {
    std::cerr << "error: --trials must be at least 1\n";
    return kExitFail;
  }
  if (opt.n_max < min_n_max) {
    std::cerr << "error: --n-max must be at least " << min_n_max << "\n";
    return kExitFail;
  }
  if (opt.format != "json" && opt.format != "csv") {
    std::cerr << "error: --format must be json or csv\n";
    return kExitFail;
  }
  if (opt.format == "csv" && opt.trials != 1) {
    std::cerr << "error: csv output covers a single trial; rerun with --trials 1\n";
    return kExitFail;
  }
  try {
    iwa::prime_power(opt.p, opt.precision);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitOk;
}

long long pow_ll(std::uint64_t p, int n) {
  long long v = 1;
  for (int i = 0; i < n; ++i) v *= static_cast<long long>(p);
  return v;
}

int run_invariants(const std::string& path) {
  iwa::Json doc;
  std::variant<iwa::SeriesElt, iwa::FiniteLevelElt> elt =
      iwa::SeriesElt::constant(3, 1, 0, 0);
  try {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open file '" + path + "'");
    doc = iwa::Json::parse(f);
    elt = iwa::element_from_json(doc);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  const iwa::InvariantResult inv =
      std::holds_alternative<iwa::FiniteLevelElt>(elt)
          ? iwa::invariants(std::get<iwa::FiniteLevelElt>(elt))
          : iwa::invariants_series(std::get<iwa::SeriesElt>(elt));
  switch (inv.status) {
    case iwa::InvariantResult::Status::ok:
      std::cout << "mu=" << inv.mu << " lambda=" << inv.lambda << "\n";
      return kExitOk;
    case iwa::InvariantResult::Status::zero_at_precision:
      std::cout << "zero_at_precision\n";
      return kExitZero;
    case iwa::InvariantResult::Status::lambda_exceeds_truncation:
      std::cout << "lambda_exceeds_truncation mu=" << inv.mu << "\n";
      return kExitTruncation;
  }
  return kExitFail;
}

int run_verify_lemmas(const Options& opt) {
  if (int rc = check_common(opt, 1); rc != kExitOk) return rc;
  if (opt.format == "csv") {
    std::cerr << "error: verify-lemmas reports only as json\n";
    return kExitFail;
  }
  iwa::SuiteConfig cfg;
  cfg.p = opt.p;
  cfg.precision = opt.precision;
  cfg.n_max = opt.n_max;
  cfg.degree_bound = opt.trunc > 0 ? opt.trunc : 256;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  iwa::SuiteReport rep;
  try {
    rep = iwa::run_suite(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  if (int rc = emit(iwa::to_json(rep).dump(2) + "\n", opt.out); rc != kExitOk)
    return rc;
  return rep.all_pass() ? kExitOk : kExitFail;
}

int run_ordinary(const Options& opt) {
  if (int rc = check_common(opt, 2); rc != kExitOk) return rc;
  if (opt.a_p_given && opt.a_p % opt.p == 0) {
    std::cerr << "error: ordinary towers need a unit --a-p\n";
    return kExitFail;
  }
  const std::uint64_t q = iwa::prime_power(opt.p, opt.precision);

  iwa::Json trials = iwa::Json::array();
  int counts[3] = {0, 0, 0};
  std::string csv;
  for (int t = 0; t < opt.trials; ++t) {
    iwa::Rng rng = iwa::trial_rng(opt.seed, static_cast<std::uint64_t>(t));
    std::vector<std::uint64_t> c0{iwa::draw_below(rng, q)};
    std::vector<std::uint64_t> c1(opt.p);
    for (auto& v : c1) v = iwa::draw_below(rng, q);
    const iwa::PAdicScalar a_p =
        opt.a_p_given ? iwa::PAdicScalar(opt.p, opt.precision, opt.a_p)
                      : iwa::draw_unit(rng, opt.p, opt.precision);
    const iwa::ThetaFamily fam = iwa::build_ordinary_family(
        iwa::FiniteLevelElt(opt.p, opt.precision, 0, c0),
        iwa::FiniteLevelElt(opt.p, opt.precision, 1, c1), a_p, opt.n_max,
        iwa::mix64(opt.seed ^ iwa::mix64(static_cast<std::uint64_t>(t) + 0x51)));
    const iwa::OrdinaryReport rep = iwa::verify_ordinary_theorem(fam);
    ++counts[static_cast<int>(rep.verdict)];
    trials.push_back(iwa::Json{{"trial", t},
                               {"a_p", std::to_string(a_p.value())},
                               {"verdict", iwa::verdict_name(rep.verdict)},
                               {"stabilization_level", rep.stabilization_level},
                               {"detail", rep.detail}});
    if (opt.format == "csv") csv = iwa::render_csv(rep);
  }
  const iwa::Json out{
      {"command", "ordinary"},
      {"config", iwa::Json{{"p", opt.p},
                           {"precision", opt.precision},
                           {"n_max", opt.n_max},
                           {"trials", opt.trials},
                           {"seed", opt.seed}}},
      {"verdicts", iwa::Json{{"pass", counts[0]},
                             {"hypothesis_not_met", counts[1]},
                             {"fail", counts[2]}}},
      {"trials", trials}};
  const std::string text = opt.format == "csv" ? csv : out.dump(2) + "\n";
  if (int rc = emit(text, opt.out); rc != kExitOk) return rc;
  return counts[2] == 0 ? kExitOk : kExitFail;
}

int run_nonordinary(const Options& opt) {
  if (int rc = check_common(opt, 2); rc != kExitOk) return rc;
  if (opt.a_p % opt.p != 0) {
    std::cerr << "error: sharp/flat towers need --a-p divisible by p\n";
    return kExitFail;
  }
  if (opt.mu < 0 || opt.precision < 2 + opt.mu) {
    std::cerr << "error: need --precision at least 2 + --mu\n";
    return kExitFail;
  }
  const long long pn = pow_ll(opt.p, opt.n_max);
  const int trunc = opt.trunc > 0 ? opt.trunc : static_cast<int>(pn);
  if (trunc < pn) {
    std::cerr << "error: --trunc must be at least p^n_max\n";
    return kExitFail;
  }
  if (opt.lambda < 0 || opt.lambda > trunc) {
    std::cerr << "error: --lambda must lie in [0, trunc]\n";
    return kExitFail;
  }

  const iwa::PAdicScalar a_p(opt.p, opt.precision, opt.a_p);
  iwa::Json trials = iwa::Json::array();
  int counts[3] = {0, 0, 0};
  std::string csv;
  for (int t = 0; t < opt.trials; ++t) {
    iwa::Rng rng = iwa::trial_rng(opt.seed, static_cast<std::uint64_t>(t));
    const iwa::SeriesElt ls = iwa::make_with_invariants(
        opt.p, opt.precision, trunc, opt.mu, opt.lambda, rng);
    const iwa::SeriesElt lf = iwa::make_with_invariants(
        opt.p, opt.precision, trunc, opt.mu, opt.lambda, rng);
    const iwa::NonordinaryReport rep =
        iwa::verify_nonordinary_theorem(ls, lf, a_p, opt.n_max);
    ++counts[static_cast<int>(rep.verdict)];
    trials.push_back(iwa::Json{{"trial", t}, {"report", iwa::to_json(rep)}});
    if (opt.format == "csv") csv = iwa::render_csv(rep);
  }
  const iwa::Json out{
      {"command", "nonordinary"},
      {"config", iwa::Json{{"p", opt.p},
                           {"precision", opt.precision},
                           {"n_max", opt.n_max},
                           {"trunc", trunc},
                           {"trials", opt.trials},
                           {"seed", opt.seed},
                           {"a_p", std::to_string(opt.a_p)},
                           {"mu", opt.mu},
                           {"lambda", opt.lambda}}},
      {"verdicts", iwa::Json{{"pass", counts[0]},
                             {"hypothesis_not_met", counts[1]},
                             {"fail", counts[2]}}},
      {"trials", trials}};
  const std::string text = opt.format == "csv" ? csv : out.dump(2) + "\n";
  if (int rc = emit(text, opt.out); rc != kExitOk) return rc;
  return counts[2] == 0 ? kExitOk : kExitFail;
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--p", opt.p, "odd prime");
  cmd->add_option("--precision", opt.precision, "coefficient precision N (ring Z/p^N)");
  cmd->add_option("--n-max", opt.n_max, "deepest tower level");
  cmd->add_option("--trunc", opt.trunc, "series truncation degree (0 = automatic)");
  cmd->add_option("--trials", opt.trials, "independent trials");
  cmd->add_option("--seed", opt.seed, "master seed");
  cmd->add_option("--out", opt.out, "write the report here instead of stdout");
  cmd->add_option("--format", opt.format, "json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-level Iwasawa invariant experiments"};
  app.require_subcommand(1);

  std::string element_path;
  CLI::App* inv = app.add_subcommand("invariants", "mu/lambda of a JSON element file");
  inv->add_option("file", element_path, "element file")->required();

  Options lemmas_opt;
  lemmas_opt.n_max = 3;
  CLI::App* lemmas = app.add_subcommand("verify-lemmas", "randomized property suite");
  add_common_flags(lemmas, lemmas_opt);
  lemmas->get_option("--trials")->default_val(100);
  lemmas_opt.trials = 100;

  Options ord_opt;
  CLI::App* ord = app.add_subcommand("ordinary", "random unit-a_p towers");
  add_common_flags(ord, ord_opt);
  ord->add_option("--a-p", ord_opt.a_p, "fixed a_p value (default: random unit per trial)")
      ->each([&](const std::string&) { ord_opt.a_p_given = true; });

  Options non_opt;
  CLI::App* non = app.add_subcommand("nonordinary", "sharp/flat towers");
  add_common_flags(non, non_opt);
  non->add_option("--a-p", non_opt.a_p, "a_p value, must be divisible by p");
  non->add_option("--mu", non_opt.mu, "target mu of the drawn inputs");
  non->add_option("--lambda", non_opt.lambda, "target lambda of the drawn inputs");

  CLI11_PARSE(app, argc, argv);

  if (inv->parsed()) return run_invariants(element_path);
  if (lemmas->parsed()) return run_verify_lemmas(lemmas_opt);
  if (ord->parsed()) return run_ordinary(ord_opt);
  if (non->parsed()) return run_nonordinary(non_opt);
  return kExitFail;
}
