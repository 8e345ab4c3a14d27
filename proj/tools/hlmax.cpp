// hlmax: exact second-derivative bounds for the discrete maximal function.
//
// Exit codes: 0 clean run, 2 usage or input error, 3 contract violation found.

#include "hlmax/cli.hpp"
#include "hlmax/search.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <mutex>

namespace {

using namespace hlmax;

struct Common {
  std::string format = "text";
  unsigned workers = 1;
  bool fast = false;
  bool paper_accounting = false;
};

void emit(const nlohmann::json& json) { std::cout << json.dump(2) << "\n"; }

SweepOptions sweep_options(const Common& common, const std::string& label) {
  SweepOptions options;
  options.workers = common.workers;
  options.method = common.fast ? MaximalMethod::fast : MaximalMethod::naive;
  options.spot_check_every = common.fast ? 64 : 0;
  auto mutex = std::make_shared<std::mutex>();
  options.progress = [mutex, label](std::uint64_t done, std::uint64_t total) {
    std::lock_guard lock(*mutex);
    std::cerr << "[" << label << "] " << done << "/" << total << "\n";
  };
  return options;
}

int finish(const SearchSummary& summary, const Common& common) {
  if (common.format == "json") {
    emit(cli::to_json(summary));
  } else {
    std::cout << cli::to_text(summary);
  }
  return summary.violations.empty() ? cli::kExitOk : cli::kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact discrete maximal function: second-derivative norms, decomposition, sweeps"};
  app.set_version_flag("--version", std::string("hlmax ") + cli::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--workers", common.workers, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
  app.add_flag("--fast", common.fast, "Use the fast maximal path, spot-checked against enumeration");
  app.add_flag("--paper-accounting", common.paper_accounting,
               "Lead with the funeq bound that counts each limit term as 1");

  std::string set_text;
  auto* report = app.add_subcommand("report", "Full report for one set");
  report->add_option("set", set_text, "Set literal, e.g. 0,2,5-9")->required();

  int length = 0;
  auto* exhaust = app.add_subcommand("exhaust", "All nonempty subsets of [0, L)");
  exhaust->add_option("--length,length", length, "L")->required();

  std::uint64_t trials = 0;
  std::string density_text = "1/2";
  std::uint64_t seed = 0;
  bool functions = false;
  std::int64_t value_bound = 4;
  auto* random = app.add_subcommand("random", "Seeded random sets or functions in [0, L)");
  random->add_option("--trials", trials, "Number of draws")->required();
  random->add_option("--length", length, "L")->required();
  random->add_option("--density", density_text, "Inclusion probability p/q (sets)");
  random->add_option("--seed", seed, "Seed")->required();
  random->add_flag("--functions", functions, "Draw integer-valued functions instead of sets");
  random->add_option("--value-bound", value_bound, "|f(n)| <= bound (functions)");

  int order = 3;
  std::int64_t truncation = 100;
  auto* scan = app.add_subcommand("scan", "Truncated higher-derivative norm of M chi_A");
  scan->add_option("set", set_text, "Set literal")->required();
  scan->add_option("--order,-k", order, "Derivative order k >= 3");
  scan->add_option("--truncation,-T", truncation, "Truncation T");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (common.format == "csv" && !report->parsed()) {
      throw std::invalid_argument("--format csv is only available for report");
    }
    if (report->parsed()) {
      const auto set = cli::parse_set_literal(set_text);
      const auto r = cli::make_report(set, common.fast ? MaximalMethod::fast : MaximalMethod::naive);
      if (common.format == "json") {
        emit(cli::to_json(r));
      } else if (common.format == "csv") {
        std::cout << cli::to_csv(r);
      } else {
        std::cout << cli::to_text(r, common.paper_accounting);
      }
      return r.lemma1_violations.empty() && r.record.ratio <= 3 ? cli::kExitOk : cli::kExitViolation;
    }
    if (exhaust->parsed()) {
      return finish(hlmax::exhaustive(length, sweep_options(common, "exhaust")), common);
    }
    if (random->parsed()) {
      const auto options = sweep_options(common, "random");
      if (functions) return finish(random_functions(trials, length, value_bound, seed, options), common);
      return finish(random_sets(trials, length, parse_rational(density_text), seed, options), common);
    }
    if (scan->parsed()) {
      const auto set = cli::parse_set_literal(set_text);
      const auto result = higher_derivative_scan(set, order, truncation);
      if (common.format == "json") {
        emit(cli::to_json(set, result));
      } else {
        std::cout << cli::to_text(set, result);
      }
      return cli::kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "hlmax: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hlmax: internal error: " << e.what() << "\n";
    return cli::kExitViolation;
  }
  return cli::kExitUsage;
}
