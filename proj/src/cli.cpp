#include "evpsim/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "evpsim/io.hpp"

namespace evpsim {

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  unsigned workers = 0;
  std::string out_path;
  std::string format = "json";
  bool per_view = false;
};

std::string short_num(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

ExperimentSpec load_spec(const CommonOptions& o) {
  ExperimentSpec spec = load_experiment(o.config_path);
  if (o.seed) spec.config.seed = *o.seed;
  if (o.trials) {
    if (*o.trials == 0) throw ConfigError("trials must be >= 1");
    spec.trials = *o.trials;
  }
  return spec;
}

unsigned workers_of(const CommonOptions& o) { return o.workers > 0 ? o.workers : default_workers(); }

/// Writes the document to --out (summary on stdout) or to stdout (summary on stderr).
void emit(const CommonOptions& o, const std::string& document, const std::string& summary, std::ostream& out,
          std::ostream& err) {
  if (o.out_path.empty()) {
    out << document;
    err << summary << "\n";
  } else {
    write_file(o.out_path, document);
    out << summary << "\n";
  }
}

std::string csv_header(const ExperimentSpec& spec) {
  std::ostringstream os;
  os << "# " << kToolName << " " << kToolVersion << "\n";
  std::istringstream echo(echo_experiment(spec));
  for (std::string line; std::getline(echo, line);)
    if (!line.empty() && line[0] != '#') os << "# " << line << "\n";
  return os.str();
}

void add_common(CLI::App* cmd, CommonOptions& o, bool with_trials, bool with_format) {
  cmd->add_option("--config", o.config_path, "experiment file (key = value lines)")->required();
  cmd->add_option("--seed", o.seed, "seed (overrides the config's seed)");
  cmd->add_option("--out", o.out_path, "output file (default: stdout)");
  if (with_trials) {
    cmd->add_option("--trials", o.trials, "number of trials (overrides the config)");
    cmd->add_option("--workers", o.workers, "worker threads (default: EVPSIM_WORKERS or 1)");
  }
  if (with_format) cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

int cmd_simulate(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const ExperimentSpec spec = load_spec(o);
  const ExecutionTrace trace = run_execution(spec.config, spec.strategy, spec.config.seed);
  Json doc = output_header(spec);
  doc["trace"] = trace_summary_json(trace);
  std::ostringstream summary;
  summary << "simulate: rounds=" << trace.config.rounds << " strategy=" << to_string(spec.strategy.kind)
          << " successful_rounds=" << trace.successful_rounds
          << " coalition_successful_rounds=" << trace.coalition_successful_rounds
          << " honest_chain_length=" << trace.final_views.front().length();
  emit(o, doc.dump(2) + "\n", summary.str(), out, err);
  return kExitOk;
}

std::string evp_summary(const EvpVerdict& v) {
  std::ostringstream s;
  s << "evp: strategy=" << to_string(v.strategy.kind) << " utility=" << to_string(v.kind)
    << " epsilon=" << short_num(v.epsilon) << " epsilon_prime=" << short_num(v.epsilon_prime)
    << " trials=" << v.trials << " violations=" << v.violations << " rate=" << short_num(v.violation_rate)
    << " ci99=[" << short_num(v.confidence_interval.lo) << "," << short_num(v.confidence_interval.hi) << "]"
    << " mean_U_max_A=" << short_num(v.mean_u_max_deviating) << " mean_U_min_H=" << short_num(v.mean_u_min_protocol);
  return s.str();
}

int cmd_evp(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const ExperimentSpec spec = load_spec(o);
  const auto [eps, eps_prime] = resolve_epsilons(spec);
  const EvpVerdict v = estimate_evp(spec.config, spec.strategy, spec.utility, eps, eps_prime, spec.trials,
                                    spec.config.seed, workers_of(o));
  std::string doc;
  if (o.format == "csv") {
    doc = csv_header(spec) + verdict_csv(v, o.per_view);
  } else {
    Json j = output_header(spec);
    j["verdict"] = verdict_json(v);
    doc = j.dump(2) + "\n";
  }
  emit(o, doc, evp_summary(v), out, err);
  return kExitOk;
}

int cmd_fairness(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const ExperimentSpec spec = load_spec(o);
  const FairnessReport r = weak_fairness_check(spec.config, spec.strategy, spec.fairness_delta, spec.trials,
                                               spec.subset_budget, spec.config.seed, workers_of(o));
  std::string doc;
  if (o.format == "csv") {
    doc = csv_header(spec) + fairness_csv(r);
  } else {
    Json j = output_header(spec);
    j["fairness"] = fairness_json(r);
    doc = j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "fairness: strategy=" << to_string(spec.strategy.kind) << " delta=" << short_num(r.delta)
    << " trials=" << r.trials << " condition1_rate=" << short_num(r.condition1_rate)
    << " condition2_rate=" << short_num(r.condition2_rate) << " share_band_rate=" << short_num(r.share_band_rate);
  emit(o, doc, s.str(), out, err);
  return kExitOk;
}

int cmd_oracle(const CommonOptions& o, std::uint64_t max_outcomes, std::ostream& out, std::ostream& err) {
  const ExperimentSpec spec = load_spec(o);
  const ExactDistribution d = brute_force_oracle(spec.config, spec.strategy, spec.utility, max_outcomes);
  Json j = output_header(spec);
  j["exact"] = exact_json(d);
  std::ostringstream s;
  s << "oracle: outcomes=" << d.outcomes << " E[U_min]=" << short_num(d.expected_min)
    << " E[U_max]=" << short_num(d.expected_max);
  emit(o, j.dump(2) + "\n", s.str(), out, err);
  return kExitOk;
}

int cmd_sweep(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const ExperimentSpec base = load_spec(o);
  if (base.sweep.empty()) throw ConfigError("sweep needs a 'sweep' key in the config");
  std::ostringstream csv;
  csv << csv_header(base);
  for (const SweepAxis& a : base.sweep) csv << a.key << ",";
  csv << "trials,violations,violation_rate,ci_lo,ci_hi,mean_U_max_A,mean_U_min_H,epsilon,epsilon_prime\n";

  std::vector<std::size_t> idx(base.sweep.size(), 0);
  std::size_t rows = 0;
  for (;;) {
    auto entries = base.entries;
    std::erase_if(entries, [](const auto& kv) { return kv.first == "sweep"; });
    for (std::size_t a = 0; a < base.sweep.size(); ++a) {
      const std::string& key = base.sweep[a].key;
      std::erase_if(entries, [&](const auto& kv) { return kv.first == key; });
      entries.emplace_back(key, base.sweep[a].values[idx[a]]);
    }
    ExperimentSpec point = parse_experiment(entries);
    if (o.seed) point.config.seed = *o.seed;
    if (o.trials) point.trials = *o.trials;
    const auto [eps, eps_prime] = resolve_epsilons(point);
    const EvpVerdict v = estimate_evp(point.config, point.strategy, point.utility, eps, eps_prime, point.trials,
                                      point.config.seed, workers_of(o));
    for (std::size_t a = 0; a < base.sweep.size(); ++a) csv << base.sweep[a].values[idx[a]] << ",";
    csv << v.trials << "," << v.violations << "," << format_double17(v.violation_rate) << ","
        << format_double17(v.confidence_interval.lo) << "," << format_double17(v.confidence_interval.hi) << ","
        << format_double17(v.mean_u_max_deviating) << "," << format_double17(v.mean_u_min_protocol) << ","
        << format_double17(eps) << "," << format_double17(eps_prime) << "\n";
    ++rows;

    std::size_t a = 0;
    while (a < idx.size() && ++idx[a] == base.sweep[a].values.size()) idx[a++] = 0;
    if (a == idx.size()) break;
  }
  emit(o, csv.str(), "sweep: grid_points=" + std::to_string(rows), out, err);
  return kExitOk;
}

struct BoundOptions {
  std::string theorem;
  std::string config_path;
  std::string out_path;
  std::optional<double> delta1, s, phi, c, p, p_fruit, q, n, t, t_prime, delta_prime, delta_double_prime, delta,
      t0, min_epoch_rounds;
  std::vector<double> rewards, epoch_lengths;
};

int cmd_bounds(const BoundOptions& b, std::ostream& out) {
  BoundParams prm;
  if (!b.config_path.empty()) prm = bound_params_for(load_experiment(b.config_path));
  auto set = [](std::optional<double>& dst, const std::optional<double>& src) {
    if (src) dst = src;
  };
  set(prm.delta1, b.delta1);
  set(prm.solutions_per_round, b.s);
  set(prm.phi, b.phi);
  set(prm.cost_per_query, b.c);
  set(prm.p, b.p);
  set(prm.p_fruit, b.p_fruit);
  set(prm.queries_per_round, b.q);
  set(prm.n, b.n);
  set(prm.coalition_bound, b.t);
  set(prm.coalition_size, b.t_prime);
  set(prm.delta_prime, b.delta_prime);
  set(prm.delta_double_prime, b.delta_double_prime);
  set(prm.delta, b.delta);
  set(prm.fairness_window, b.t0);
  set(prm.min_epoch_rounds, b.min_epoch_rounds);
  if (!b.rewards.empty()) prm.rewards = b.rewards;
  if (!b.epoch_lengths.empty()) prm.epoch_lengths = b.epoch_lengths;

  const BoundResult r = theorem_epsilon(parse_bound_kind(b.theorem), prm);
  std::ostringstream line;
  line << to_string(r.kind) << ":";
  auto show = [&](const char* key, const std::optional<double>& v) {
    if (v) line << " " << key << "=" << short_num(*v);
  };
  show("coalition_bound", r.coalition_bound);
  show("epsilon", r.epsilon);
  show("epsilon_prime", r.epsilon_prime);
  show("gap", r.gap);
  show("min_rounds", r.min_rounds);
  if (!b.out_path.empty()) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["result"] = bound_json(r);
    write_file(b.out_path, j.dump(2) + "\n");
  }
  out << line.str() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Round-based proof-of-work simulator and equilibrium checker", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  CommonOptions sim_o, evp_o, fair_o, oracle_o, sweep_o;
  auto* sim = app.add_subcommand("simulate", "run one execution and write a trace summary");
  add_common(sim, sim_o, false, false);
  auto* evp = app.add_subcommand("evp", "estimate the equilibrium violation rate over paired trials");
  add_common(evp, evp_o, true, true);
  evp->add_flag("--per-view", evp_o.per_view, "include per-observer utilities in CSV output");
  auto* fair = app.add_subcommand("fairness", "measure both weak-fairness conditions");
  add_common(fair, fair_o, true, true);
  auto* orc = app.add_subcommand("oracle", "exact utilities of a tiny instance by enumeration");
  add_common(orc, oracle_o, false, false);
  std::uint64_t max_outcomes = kDefaultOutcomeLimit;
  orc->add_option("--max-outcomes", max_outcomes, "refuse instances with more outcome sequences");
  auto* sweep = app.add_subcommand("sweep", "violation rates over the config's sweep axes (CSV)");
  add_common(sweep, sweep_o, true, false);

  BoundOptions bo;
  auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound");
  bounds->add_option("--theorem", bo.theorem, "bound name or numeric id")->required();
  bounds->add_option("--config", bo.config_path, "take parameters from an experiment file");
  bounds->add_option("--out", bo.out_path, "also write JSON here");
  bounds->add_option("--delta1", bo.delta1);
  bounds->add_option("--s", bo.s, "expected solutions per round (default p*q*n)");
  bounds->add_option("--phi", bo.phi);
  bounds->add_option("--c", bo.c, "cost per query");
  bounds->add_option("--p", bo.p);
  bounds->add_option("--p-fruit", bo.p_fruit);
  bounds->add_option("--q", bo.q);
  bounds->add_option("--n", bo.n);
  bounds->add_option("--t", bo.t, "largest coalition covered");
  bounds->add_option("--t-prime", bo.t_prime, "coalition size");
  bounds->add_option("--delta-prime", bo.delta_prime);
  bounds->add_option("--delta-double-prime", bo.delta_double_prime);
  bounds->add_option("--delta", bo.delta);
  bounds->add_option("--t0", bo.t0, "rounds needed by the protocol's own fairness property");
  bounds->add_option("--min-epoch-rounds", bo.min_epoch_rounds);
  bounds->add_option("--w", bo.rewards, "reward per epoch")->delimiter(',');
  bounds->add_option("--epoch-lengths", bo.epoch_lengths)->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << " " << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_o, out, err);
    if (evp->parsed()) return cmd_evp(evp_o, out, err);
    if (fair->parsed()) return cmd_fairness(fair_o, out, err);
    if (orc->parsed()) return cmd_oracle(oracle_o, max_outcomes, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_o, out, err);
    if (bounds->parsed()) return cmd_bounds(bo, out);
  } catch (const SideConditionError& e) {
    err << "SideConditionError: " << e.what() << "\n";
    return kExitSideCondition;
  } catch (const IoError& e) {
    err << "IoError: " << e.what() << "\n";
    return kExitIo;
  } catch (const InstanceTooLarge& e) {
    err << "InstanceTooLarge: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "ConfigError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace evpsim
