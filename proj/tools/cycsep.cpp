// cycsep: exact counting of k-subsets of Z_n avoiding the circular
// differences {m, 2m, ..., pm}, with cross-checking oracles.
//
// Subcommands: count, enumerate, bijection, sweep, rothe.
// Exit codes: 0 success/verified, 1 cross-check failed, 2 usage error,
//             3 counting-hypothesis violation, 4 enumeration budget exceeded.

#include <cstdint>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cycsep/bijection.hpp"
#include "cycsep/count.hpp"
#include "cycsep/errors.hpp"
#include "cycsep/identity.hpp"
#include "cycsep/model.hpp"
#include "cycsep/numth.hpp"
#include "cycsep/serialize.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitBudget = 4;

struct GlobalOptions {
  bool no_meta = false;
  cycsep::Budget budget;
};

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void attach_meta(json& j, const GlobalOptions& opts) {
  if (!opts.no_meta) j["meta"] = {{"generated_at", utc_timestamp()}};
}

std::string instance_human(const cycsep::SeparationInstance& inst) {
  return "n=" + std::to_string(inst.n) + " m=" + std::to_string(inst.m) +
         " p=" + std::to_string(inst.p) + " k=" + std::to_string(inst.k);
}

// ---------------------------------------------------------------------------
// count

int run_count(const cycsep::SeparationInstance& inst, bool oracle, const std::string& format,
              const GlobalOptions& opts) {
  const bool with_convolution = oracle && inst.n % inst.m == 0;
  const cycsep::CountReport report =
      cycsep::count_report(inst, oracle, with_convolution, opts.budget);
  if (format == "human") {
    std::cout << "instance: " << instance_human(inst) << "\n";
    std::cout << "closed_form: " << cycsep::to_decimal(report.closed_form) << "\n";
    if (report.brute_force)
      std::cout << "brute_force: " << cycsep::to_decimal(*report.brute_force) << "\n";
    if (report.convolution)
      std::cout << "convolution: " << cycsep::to_decimal(*report.convolution) << "\n";
    std::cout << "agree: " << (report.agree ? "true" : "false") << "\n";
  } else {
    json j = report;
    attach_meta(j, opts);
    std::cout << j.dump() << "\n";
  }
  return report.agree ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// enumerate

int run_enumerate(const cycsep::SeparationInstance& inst, const std::string& format,
                  const GlobalOptions& opts) {
  std::uint64_t total = 0;
  cycsep::for_each_admissible(inst, opts.budget, [&](const cycsep::KSubset& X) {
    ++total;
    if (format == "json") {
      std::cout << json(X).dump() << "\n";
    } else {
      const auto& e = X.elements();
      for (std::size_t i = 0; i < e.size(); ++i)
        std::cout << e[i] << (i + 1 < e.size() ? "," : "");
      std::cout << "\n";
    }
  });
  if (format == "json") {
    std::cout << json{{"total", std::to_string(total)}}.dump() << "\n";
  } else {
    std::cout << "# total " << total << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bijection

int run_bijection(std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t k, bool verify,
                  const GlobalOptions& opts) {
  const cycsep::UnitMap map = cycsep::build_unit_map(m, n);
  json j = map;
  bool verified = true;
  if (verify) {
    const cycsep::SeparationInstance inst{n, m, p, k};
    verified = cycsep::verify_bijection(inst, opts.budget);
    j["verified"] = verified;
  }
  attach_meta(j, opts);
  std::cout << j.dump() << "\n";
  return verified ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepConfig {
  std::int64_t n_min = 1, n_max = 12;
  std::int64_t m_min = 1, m_max = 3;
  std::int64_t p_min = 1, p_max = 2;
  std::int64_t k_min = 1, k_max = 3;
  std::string format = "json";
};

struct SweepRow {
  cycsep::SeparationInstance instance;
  bool hypothesis = false;
  std::string closed_form;     // brute force vs closed form: pass | fail | skip | na
  std::string gcd_invariance;  // brute force vs reduced-step brute force: pass | fail | skip
  std::string convolution;     // convolution vs closed form: pass | fail | na
  std::string status;          // pass | fail | skip
};

SweepRow run_sweep_instance(const cycsep::SeparationInstance& inst, const cycsep::Budget& budget) {
  SweepRow row;
  row.instance = inst;
  row.hypothesis = inst.satisfies_hypothesis();

  std::optional<cycsep::BigInt> brute;
  try {
    brute = cycsep::brute_force_count(inst, budget);
  } catch (const cycsep::BudgetError&) {
  }

  if (!row.hypothesis) {
    row.closed_form = "na";
  } else if (!brute) {
    row.closed_form = "skip";
  } else {
    row.closed_form = (*brute == cycsep::closed_form(inst)) ? "pass" : "fail";
  }

  const std::int64_t d =
      static_cast<std::int64_t>(cycsep::gcd(cycsep::BigInt(inst.m), cycsep::BigInt(inst.n)));
  const cycsep::SeparationInstance reduced{inst.n, d, inst.p, inst.k};
  if (!brute) {
    row.gcd_invariance = "skip";
  } else {
    row.gcd_invariance = (*brute == cycsep::brute_force_count(reduced, budget)) ? "pass" : "fail";
  }

  if (!row.hypothesis || inst.n % inst.m != 0) {
    row.convolution = "na";
  } else {
    row.convolution = (cycsep::convolution_count(inst) == cycsep::closed_form(inst))
                          ? "pass"
                          : "fail";
  }

  const bool any_fail = row.closed_form == "fail" || row.gcd_invariance == "fail" ||
                        row.convolution == "fail";
  const bool any_skip = row.closed_form == "skip" || row.gcd_invariance == "skip";
  row.status = any_fail ? "fail" : (any_skip ? "skip" : "pass");
  return row;
}

void print_sweep_row(const SweepRow& row, const std::string& format) {
  if (format == "json") {
    json j{{"instance", row.instance},
           {"hypothesis", row.hypothesis},
           {"checks",
            {{"closed_form", row.closed_form},
             {"gcd_invariance", row.gcd_invariance},
             {"convolution", row.convolution}}},
           {"status", row.status}};
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << row.instance.n << "," << row.instance.m << "," << row.instance.p << ","
              << row.instance.k << "," << (row.hypothesis ? "1" : "0") << "," << row.closed_form
              << "," << row.gcd_invariance << "," << row.convolution << "," << row.status
              << "\n";
  } else {
    std::cout << instance_human(row.instance) << (row.hypothesis ? "  " : " !")
              << " closed=" << row.closed_form << " gcd=" << row.gcd_invariance
              << " conv=" << row.convolution << " -> " << row.status << "\n";
  }
}

int run_sweep(const SweepConfig& cfg, const GlobalOptions& opts) {
  if (cfg.n_min > cfg.n_max || cfg.m_min > cfg.m_max || cfg.p_min > cfg.p_max ||
      cfg.k_min > cfg.k_max)
    throw std::domain_error("sweep: empty or inverted range");
  if (cfg.format == "csv")
    std::cout << "n,m,p,k,hypothesis,closed_form,gcd_invariance,convolution,status\n";

  std::uint64_t instances = 0, passed = 0, failed = 0, skipped = 0;
  for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n)
    for (std::int64_t m = cfg.m_min; m <= cfg.m_max; ++m)
      for (std::int64_t p = cfg.p_min; p <= cfg.p_max; ++p)
        for (std::int64_t k = cfg.k_min; k <= cfg.k_max; ++k) {
          const cycsep::SeparationInstance inst{n, m, p, k};
          const SweepRow row = run_sweep_instance(inst, opts.budget);
          print_sweep_row(row, cfg.format);
          ++instances;
          if (row.status == "fail")
            ++failed;
          else if (row.status == "skip")
            ++skipped;
          else
            ++passed;
        }

  if (cfg.format == "json") {
    json agg{{"instances", instances},
             {"passed", passed},
             {"failed", failed},
             {"skipped", skipped}};
    attach_meta(agg, opts);
    std::cout << agg.dump() << "\n";
  } else {
    std::cout << (cfg.format == "csv" ? "# " : "") << "instances=" << instances
              << " passed=" << passed << " failed=" << failed << " skipped=" << skipped << "\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// rothe

json rothe_point_json(const cycsep::RotheParams& params) {
  const cycsep::BigRational lhs = cycsep::rothe_lhs(params);
  const cycsep::BigRational rhs = cycsep::rothe_rhs(params);
  return json{{"params", params},
              {"lhs", lhs.str()},
              {"rhs", rhs.str()},
              {"equal", lhs == rhs}};
}

int run_rothe_point(const cycsep::RotheParams& params, const GlobalOptions& opts) {
  json j = rothe_point_json(params);
  const bool equal = j.at("equal").get<bool>();
  attach_meta(j, opts);
  std::cout << j.dump() << "\n";
  return equal ? kExitOk : kExitCheckFailed;
}

struct RotheGrid {
  std::int64_t x_min = 1, x_max = 4;
  std::int64_t y_min = 1, y_max = 4;
  std::int64_t z_min = 0, z_max = 2;
  std::int64_t N_min = 0, N_max = 3;
};

int run_rothe_grid(const RotheGrid& grid, const GlobalOptions& opts) {
  std::uint64_t points = 0, unequal = 0;
  for (std::int64_t x = grid.x_min; x <= grid.x_max; ++x)
    for (std::int64_t y = grid.y_min; y <= grid.y_max; ++y)
      for (std::int64_t z = grid.z_min; z <= grid.z_max; ++z)
        for (std::int64_t N = grid.N_min; N <= grid.N_max; ++N) {
          const cycsep::RotheParams params{x, y, z, N};
          json j = rothe_point_json(params);
          if (!j.at("equal").get<bool>()) ++unequal;
          ++points;
          std::cout << j.dump() << "\n";
        }
  json agg{{"points", points}, {"unequal", unequal}};
  attach_meta(agg, opts);
  std::cout << agg.dump() << "\n";
  return unequal == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of k-subsets of Z_n with forbidden circular differences"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --no-meta and the budget flags follow a subcommand

  GlobalOptions opts;
  std::int64_t max_subsets = 10'000'000;
  app.add_flag("--no-meta", opts.no_meta, "omit the timestamp field from JSON output");
  app.add_option("--max-subsets", max_subsets,
                 "enumeration budget: largest C(n, k) that will be enumerated")
      ->envname("CYCSEP_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", opts.budget.max_n, "enumeration budget: largest cycle size n")
      ->check(CLI::PositiveNumber);

  cycsep::SeparationInstance inst;
  bool oracle = false;
  std::string count_format = "json";
  CLI::App* cmd_count = app.add_subcommand("count", "evaluate the closed-form count");
  cmd_count->add_option("--n", inst.n, "cycle size")->required()->check(CLI::PositiveNumber);
  cmd_count->add_option("--m", inst.m, "difference step")->required()->check(CLI::PositiveNumber);
  cmd_count->add_option("--p", inst.p, "multiple bound")->required()->check(CLI::PositiveNumber);
  cmd_count->add_option("--k", inst.k, "subset size")->required()->check(CLI::NonNegativeNumber);
  cmd_count->add_flag("--oracle", oracle,
                      "cross-check against brute force (and the convolution when m | n)");
  cmd_count->add_option("--format", count_format)->check(CLI::IsMember({"json", "human"}));

  std::string enum_format = "csv";
  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list admissible subsets");
  cmd_enum->add_option("--n", inst.n, "cycle size")->required()->check(CLI::PositiveNumber);
  cmd_enum->add_option("--m", inst.m, "difference step")->required()->check(CLI::PositiveNumber);
  cmd_enum->add_option("--p", inst.p, "multiple bound")->required()->check(CLI::PositiveNumber);
  cmd_enum->add_option("--k", inst.k, "subset size")->required()->check(CLI::NonNegativeNumber);
  cmd_enum->add_option("--format", enum_format)->check(CLI::IsMember({"csv", "json"}));

  std::int64_t bij_m = 1, bij_n = 1, bij_p = 1, bij_k = 1;
  bool bij_verify = false;
  CLI::App* cmd_bij = app.add_subcommand("bijection", "construct the unit-multiplier map");
  cmd_bij->add_option("--m", bij_m, "source difference step")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_bij->add_option("--n", bij_n, "cycle size")->required()->check(CLI::PositiveNumber);
  CLI::Option* bij_p_opt =
      cmd_bij->add_option("--p", bij_p, "multiple bound")->check(CLI::PositiveNumber);
  CLI::Option* bij_k_opt =
      cmd_bij->add_option("--k", bij_k, "subset size")->check(CLI::NonNegativeNumber);
  cmd_bij->add_flag("--verify", bij_verify, "exhaustively verify the family bijection")
      ->needs(bij_p_opt)
      ->needs(bij_k_opt);

  SweepConfig sweep;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "cross-check a parameter grid");
  cmd_sweep->add_option("--n-min", sweep.n_min)->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--n-max", sweep.n_max)->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--m-min", sweep.m_min)->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--m-max", sweep.m_max)->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--p-min", sweep.p_min)->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--p-max", sweep.p_max)->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--k-min", sweep.k_min)->check(CLI::NonNegativeNumber);
  cmd_sweep->add_option("--k-max", sweep.k_max)->check(CLI::NonNegativeNumber);
  cmd_sweep->add_option("--format", sweep.format)
      ->check(CLI::IsMember({"json", "csv", "human"}));

  cycsep::RotheParams rothe;
  RotheGrid rothe_grid;
  bool rothe_use_grid = false;
  CLI::App* cmd_rothe = app.add_subcommand("rothe", "verify the convolution identity");
  CLI::Option* rx = cmd_rothe->add_option("--x", rothe.x)->check(CLI::PositiveNumber);
  CLI::Option* ry = cmd_rothe->add_option("--y", rothe.y)->check(CLI::PositiveNumber);
  CLI::Option* rz = cmd_rothe->add_option("--z", rothe.z)->check(CLI::NonNegativeNumber);
  CLI::Option* rN = cmd_rothe->add_option("--N", rothe.N)->check(CLI::NonNegativeNumber);
  CLI::Option* grid_flag =
      cmd_rothe->add_flag("--grid", rothe_use_grid, "sweep a grid instead of one point");
  cmd_rothe->add_option("--x-min", rothe_grid.x_min)->needs(grid_flag);
  cmd_rothe->add_option("--x-max", rothe_grid.x_max)->needs(grid_flag);
  cmd_rothe->add_option("--y-min", rothe_grid.y_min)->needs(grid_flag);
  cmd_rothe->add_option("--y-max", rothe_grid.y_max)->needs(grid_flag);
  cmd_rothe->add_option("--z-min", rothe_grid.z_min)->needs(grid_flag);
  cmd_rothe->add_option("--z-max", rothe_grid.z_max)->needs(grid_flag);
  cmd_rothe->add_option("--N-min", rothe_grid.N_min)->needs(grid_flag);
  cmd_rothe->add_option("--N-max", rothe_grid.N_max)->needs(grid_flag);
  grid_flag->excludes(rx)->excludes(ry)->excludes(rz)->excludes(rN);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  opts.budget.max_subsets = max_subsets;

  try {
    if (cmd_count->parsed()) return run_count(inst, oracle, count_format, opts);
    if (cmd_enum->parsed()) return run_enumerate(inst, enum_format, opts);
    if (cmd_bij->parsed()) return run_bijection(bij_m, bij_n, bij_p, bij_k, bij_verify, opts);
    if (cmd_sweep->parsed()) return run_sweep(sweep, opts);
    if (cmd_rothe->parsed()) {
      if (rothe_use_grid) return run_rothe_grid(rothe_grid, opts);
      if (rx->count() == 0 || ry->count() == 0 || rz->count() == 0 || rN->count() == 0)
        throw std::domain_error("rothe: provide --x --y --z --N, or --grid with bounds");
      return run_rothe_point(rothe, opts);
    }
  } catch (const cycsep::HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const cycsep::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
