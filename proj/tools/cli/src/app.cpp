#include "sortcut/cli/app.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "sortcut/analysis.hpp"
#include "sortcut/cli/instance_file.hpp"
#include "sortcut/cli/report.hpp"
#include "sortcut/clock.hpp"
#include "sortcut/dynamics.hpp"
#include "sortcut/errors.hpp"
#include "sortcut/sortcut.hpp"

namespace sortcut::cli {

namespace {

struct Options {
  std::string command;
  std::string file;
  std::optional<std::uint64_t> seed;
  std::string delta = "1/100";
  std::size_t max_rounds = 100000;
  std::size_t grid_size = 25;
  bool json = false;
};

struct Result {
  Json report;
  bool ok = true;
};

Json verdict(bool holds, const std::string& detail = {}) {
  Json j;
  j["holds"] = holds;
  if (!detail.empty()) j["witness"] = detail;
  return j;
}

Json header(const Options& o, const BidProfile& p) {
  Json j;
  j["command"] = o.command;
  j["instance"] = instance_json(p);
  return j;
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("SORTCUT_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      if (text.front() == '-') throw std::invalid_argument(text);
      const std::uint64_t s = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return s;
    } catch (const std::logic_error&) {
      throw InputError(std::string("SORTCUT_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

Result solve(const Options& o, const BidProfile& p) {
  Result r{header(o, p)};
  r.report["outcome"] = outcome_json(p, allocate_divisible(p));
  return r;
}

Result solve_indivisible(const Options& o, const BidProfile& p) {
  Result r{header(o, p)};
  try {
    r.report["outcome"] = outcome_json(p, allocate_indivisible(p));
  } catch (const IndivisibleClearingError& e) {
    Json fail;
    fail["holds"] = false;
    fail["witness"] = e.what();
    fail["x_low"] = rational_json(e.x_low);
    fail["x_high"] = rational_json(e.x_high);
    r.report["clears"] = std::move(fail);
    r.ok = false;
  }
  return r;
}

Result apa(const Options& o, const BidProfile& p) {
  Result r{header(o, p)};
  const ClockResult c = clearing_price(p);
  r.report["v_star"] = rational_json(c.clearing_price);
  r.report["r_star"] = rational_json(c.r_star);
  r.report["marginal"] = p.truth().bidders[c.marginal_index].id;
  r.report["partial"] = c.partial;
  r.report["outcome"] = outcome_json(p, c.outcome);
  return r;
}

Json pareto_json(const BidProfile& p, const Outcome& o, const ParetoReport& rep) {
  Json j = verdict(rep.is_pareto, rep.witness ? describe(*rep.witness) : std::string{});
  j["outcome"] = outcome_json(p, o);
  return j;
}

Result check_pareto(const Options& o, const BidProfile& p) {
  Result r{header(o, p)};
  const Outcome div = allocate_divisible(p);
  const ParetoReport d = is_pareto_divisible(p, div);
  r.report["divisible"] = pareto_json(p, div, d);
  r.ok = d.is_pareto;
  if (p.supply().is_integer()) {
    try {
      const Outcome ind = allocate_indivisible(p);
      const ParetoReport i = is_pareto_indivisible(p, ind);
      r.report["indivisible"] = pareto_json(p, ind, i);
      r.ok = r.ok && i.is_pareto;
    } catch (const IndivisibleClearingError& e) {
      r.report["indivisible"] = verdict(false, e.what());
      r.ok = false;
    }
  }
  return r;
}

Result check_revenue(const Options& o, const BidProfile& p) {
  if (!p.is_truthful()) throw InputError("check-revenue compares truthful outcomes; drop the stated overrides");
  Result r{header(o, p)};
  const RevenueGap g = revenue_gap(p.truth());
  r.report["revenue"] = rational_json(g.revenue);
  r.report["r_star"] = rational_json(g.r_star);
  r.report["b_max"] = rational_json(g.b_max);
  r.report["lower_bound"] = rational_json(g.r_star - g.b_max);
  const bool lower = g.revenue >= g.r_star - g.b_max;
  const bool upper = g.revenue <= g.r_star;
  r.report["at_least_r_star_minus_b_max"] = verdict(lower, lower ? "" : "revenue below R* - b_max");
  r.report["at_most_r_star"] = verdict(upper, upper ? "" : "revenue above R*");
  r.ok = lower && upper;
  return r;
}

Result check_truthful(const Options& o, const BidProfile& p) {
  Result r{header(o, p)};
  r.report["grid_size"] = o.grid_size;
  r.report["bidders"] = Json::array();
  std::string first_failure;
  for (std::size_t i = 0; i < p.truth().dummy_index(); ++i) {
    const DeviationSearch s = search_deviations(p, i, default_grid(p.truth(), i, o.grid_size));
    Json row;
    row["id"] = p.truth().bidders[i].id;
    row["utility"] = utility_json(s.best.utility_truthful);
    row["deviations"] = Json::array();
    for (const auto c : kDeviationClasses) {
      const auto& best = s.of(c);
      if (!best) continue;
      Json d;
      d["class"] = to_string(c);
      d["value"] = rational_json(best->best_deviation.value);
      d["budget"] = rational_json(best->best_deviation.budget);
      d["gain"] = utility_json(best->gain);
      d["profitable"] = best->gain > Utility::finite({});
      row["deviations"].push_back(std::move(d));
      if (c != DeviationClass::kValueOver && best->gain > Utility::finite({}) && first_failure.empty()) {
        first_failure = row["id"].get<std::string>() + " gains " + best->gain.to_string() + " by " + to_string(c) +
                        " to value " + best->best_deviation.value.to_string() + ", budget " +
                        best->best_deviation.budget.to_string();
      }
    }
    r.report["bidders"].push_back(std::move(row));
  }
  r.report["semi_truthful"] = verdict(first_failure.empty(), first_failure);
  r.ok = first_failure.empty();
  return r;
}

Result dynamics(const Options& o, const BidProfile& p) {
  DynamicsConfig config;
  try {
    config.step = Rational::parse(o.delta);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--delta: ") + e.what());
  }
  config.max_rounds = o.max_rounds;
  config.record_every = o.max_rounds;
  try {
    check_config(config);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  Result r{header(o, p)};
  const DynamicsTrace t = run_dynamics(p.truth(), config, p);
  const ClockResult c = clearing_price(BidProfile::truthful(p.truth()));
  r.report["delta"] = rational_json(config.step);
  r.report["max_rounds"] = config.max_rounds;
  r.report["rounds_used"] = t.rounds_used;
  r.report["v_star"] = rational_json(c.clearing_price);
  r.report["r_star"] = rational_json(c.r_star);
  r.report["final_bids"] = Json::array();
  for (std::size_t i = 0; i < t.final_bids.size(); ++i) {
    Json row;
    row["id"] = p.truth().bidders[i].id;
    row["bid"] = rational_json(t.final_bids[i]);
    r.report["final_bids"].push_back(std::move(row));
  }
  r.report["outcome"] = outcome_json(p, t.final_outcome);
  r.report["converged"] = verdict(t.converged, t.converged ? "" : "no quiescent round within max_rounds");
  r.ok = t.converged;
  return r;
}

Result lottery(const Options& o, const BidProfile& p) {
  Result r{header(o, p)};
  const std::uint64_t seed = resolve_seed(o);
  const Outcome out = allocate_divisible(p);
  const ChargeDraw draw = charge_lottery(out, p, seed);
  r.report["seed"] = seed;
  r.report["charges"] = Json::array();
  Rational total;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json row;
    row["id"] = p.truth().bidders[i].id;
    row["expected_payment"] = rational_json(out.payments[i]);
    row["stated_budget"] = rational_json(p.stated(i).budget);
    row["realized"] = rational_json(draw.realized[i]);
    total += draw.realized[i];
    r.report["charges"].push_back(std::move(row));
  }
  r.report["expected_revenue"] = rational_json(out.revenue);
  r.report["realized_revenue"] = rational_json(total);
  return r;
}

Result dispatch(const Options& o, const BidProfile& p) {
  if (o.command == "solve") return solve(o, p);
  if (o.command == "solve-indivisible") return solve_indivisible(o, p);
  if (o.command == "apa") return apa(o, p);
  if (o.command == "check-pareto") return check_pareto(o, p);
  if (o.command == "check-revenue") return check_revenue(o, p);
  if (o.command == "check-truthful") return check_truthful(o, p);
  if (o.command == "dynamics") return dynamics(o, p);
  return lottery(o, p);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Sort-Cut multi-unit auctions with budgets", "sortcut"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Lottery seed (default: SORTCUT_SEED, else 0)");
  app.add_option("--delta", o.delta, "Dynamics bid step, integer or p/q")->capture_default_str();
  app.add_option("--max-rounds", o.max_rounds, "Dynamics activation budget")->capture_default_str();
  app.add_option("--grid-size", o.grid_size, "Deviation grid points per axis")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
  app.add_flag("--json", o.json, "Print the report as JSON");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"solve", "Divisible Sort-Cut allocation"},
      {"solve-indivisible", "Indivisible Sort-Cut allocation"},
      {"apa", "Ascending price auction"},
      {"check-pareto", "Pareto-optimality of the Sort-Cut outcomes"},
      {"check-revenue", "Sort-Cut revenue against R* - b_max and R*"},
      {"check-truthful", "Grid search for profitable budget and value lies"},
      {"dynamics", "Greedy bidding from the stated bids"},
      {"lottery", "Draw realized charges for the divisible outcome"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Instance file")->required();
    sub->callback([&o, name = std::string(name)] { o.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    const BidProfile profile = load_instance(o.file);
    const Result r = dispatch(o, profile);
    Json report = r.report;
    report["ok"] = r.ok;
    if (o.json) {
      out << report.dump(2) << '\n';
    } else {
      out << render_text(report);
    }
    return r.ok ? kExitOk : kExitVerdictFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SortCutError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace sortcut::cli
