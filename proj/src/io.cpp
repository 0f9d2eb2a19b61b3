#include "evpsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace evpsim {

namespace {

const std::vector<std::string> kKeys = {
    "n", "coalition_size", "queries_per_round", "p", "p_fruit", "cost_per_query",
    "reward", "reward_schedule", "reward_values", "reward_epoch_rounds", "rounds", "rounds_per_kappa",
    "security_parameter", "protocol", "withheld_queries", "seed", "fruit_recency_window", "sampling",
    "strategy", "utility", "epsilon", "epsilon_prime", "bound", "delta1", "phi", "delta_prime",
    "delta_double_prime", "fairness_window", "min_epoch_rounds", "fairness_delta", "trials", "subset_budget",
    "sweep",
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    const std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError("key '" + key + "': '" + v + "' is not a number");
  return x;
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  std::int64_t x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec == std::errc() && ptr == v.data() + v.size()) return x;
  // Accept integral values written in floating notation, e.g. 2e5.
  const double d = to_double(key, v);
  if (d != static_cast<double>(static_cast<std::int64_t>(d))) throw ConfigError("key '" + key + "': '" + v + "' is not an integer");
  return static_cast<std::int64_t>(d);
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError("key '" + key + "': '" + v + "' is not an unsigned integer");
  return x;
}

int to_small_int(const std::string& key, const std::string& v) {
  const std::int64_t x = to_int(key, v);
  if (x < -1000000000 || x > 1000000000) throw ConfigError("key '" + key + "' is out of range");
  return static_cast<int>(x);
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string protocol_name(ProtocolKind k) { return k == ProtocolKind::fruitchain ? "fruitchain" : "bitcoin"; }
std::string sampling_name(SamplingMode m) { return m == SamplingMode::sequential ? "sequential" : "binomial"; }

class EntryMap {
 public:
  explicit EntryMap(const std::vector<std::pair<std::string, std::string>>& entries) {
    const std::set<std::string> known(kKeys.begin(), kKeys.end());
    for (const auto& [k, v] : entries) {
      if (!known.count(k)) throw ConfigError("unknown key '" + k + "'");
      if (!map_.emplace(k, v).second) throw ConfigError("key '" + k + "' given more than once");
    }
  }
  bool has(const std::string& k) const { return map_.count(k) > 0; }
  const std::string& get(const std::string& k) const { return map_.at(k); }

 private:
  std::map<std::string, std::string> map_;
};

}  // namespace

const std::vector<std::string>& experiment_keys() { return kKeys; }

std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, r.ptr);
}

std::string format_double17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ExperimentSpec parse_experiment(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    entries.emplace_back(std::move(key), std::move(value));
    if (end == text.size()) break;
  }
  return parse_experiment(entries);
}

ExperimentSpec parse_experiment(const std::vector<std::pair<std::string, std::string>>& entries) {
  const EntryMap m(entries);
  ExperimentSpec spec;
  spec.entries = entries;
  SimulationConfig& c = spec.config;

  if (m.has("n")) c.n = to_small_int("n", m.get("n"));
  if (m.has("coalition_size")) c.coalition_size = to_small_int("coalition_size", m.get("coalition_size"));
  if (m.has("queries_per_round")) c.queries_per_round = to_small_int("queries_per_round", m.get("queries_per_round"));
  if (m.has("p")) c.p = to_double("p", m.get("p"));
  if (m.has("p_fruit")) c.p_fruit = to_double("p_fruit", m.get("p_fruit"));
  if (m.has("cost_per_query")) c.cost_per_query = to_double("cost_per_query", m.get("cost_per_query"));
  if (m.has("security_parameter")) c.security_parameter = to_int("security_parameter", m.get("security_parameter"));
  if (m.has("seed")) c.seed = to_u64("seed", m.get("seed"));

  if (m.has("protocol")) {
    const std::string& v = m.get("protocol");
    if (v == "bitcoin" || v == "bitcoin_fixed_target") c.protocol = ProtocolKind::bitcoin_fixed_target;
    else if (v == "fruitchain") c.protocol = ProtocolKind::fruitchain;
    else throw ConfigError("unknown protocol '" + v + "' (expected bitcoin, fruitchain)");
  }
  if (m.has("sampling")) {
    const std::string& v = m.get("sampling");
    if (v == "binomial") c.sampling = SamplingMode::binomial;
    else if (v == "sequential") c.sampling = SamplingMode::sequential;
    else throw ConfigError("unknown sampling '" + v + "' (expected binomial, sequential)");
  }

  const std::int64_t kappa = c.security_parameter;
  if (m.has("rounds")) {
    c.rounds = to_int("rounds", m.get("rounds"));
  } else if (kappa > 0) {
    const std::int64_t per = m.has("rounds_per_kappa") ? to_int("rounds_per_kappa", m.get("rounds_per_kappa")) : 1;
    c.rounds = per * kappa;
  } else if (m.has("rounds_per_kappa")) {
    throw ConfigError("rounds_per_kappa needs security_parameter > 0");
  }

  const int reward_forms = int(m.has("reward")) + int(m.has("reward_schedule")) + int(m.has("reward_values"));
  if (reward_forms > 1) throw ConfigError("give only one of reward, reward_schedule, reward_values");
  if (m.has("reward")) {
    c.reward_schedule = {RewardEpoch{1, to_double("reward", m.get("reward"))}};
  } else if (m.has("reward_schedule")) {
    c.reward_schedule.clear();
    for (const std::string& item : split(m.get("reward_schedule"), ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw ConfigError("reward_schedule entries are start_round:reward");
      c.reward_schedule.push_back({to_int("reward_schedule", trim(item.substr(0, colon))),
                                   to_double("reward_schedule", trim(item.substr(colon + 1)))});
    }
  } else if (m.has("reward_values")) {
    std::int64_t len = kappa;
    if (m.has("reward_epoch_rounds")) len = to_int("reward_epoch_rounds", m.get("reward_epoch_rounds"));
    if (len < 1) throw ConfigError("reward_values needs reward_epoch_rounds or security_parameter > 0");
    c.reward_schedule.clear();
    Round start = 1;
    for (const std::string& item : split(m.get("reward_values"), ',')) {
      c.reward_schedule.push_back({start, to_double("reward_values", item)});
      start += len;
    }
  }
  if (m.has("reward_epoch_rounds") && !m.has("reward_values"))
    throw ConfigError("reward_epoch_rounds only applies with reward_values");

  if (m.has("withheld_queries")) {
    std::vector<int> x;
    for (const std::string& item : split(m.get("withheld_queries"), ',')) x.push_back(to_small_int("withheld_queries", item));
    if (x.size() == 1 && c.coalition_size > 1) x.assign(static_cast<std::size_t>(c.coalition_size), x.front());
    c.withheld_queries = std::move(x);
  }
  if (m.has("fruit_recency_window"))
    c.fruit_recency_window = to_int("fruit_recency_window", m.get("fruit_recency_window"));

  if (m.has("strategy")) spec.strategy.kind = parse_strategy_kind(m.get("strategy"));
  if (m.has("utility")) spec.utility = parse_utility_kind(m.get("utility"));
  if (m.has("epsilon")) spec.epsilon = to_double("epsilon", m.get("epsilon"));
  if (m.has("epsilon_prime")) spec.epsilon_prime = to_double("epsilon_prime", m.get("epsilon_prime"));
  if (m.has("bound")) spec.bound = parse_bound_kind(m.get("bound"));
  if (m.has("delta1")) spec.delta1 = to_double("delta1", m.get("delta1"));
  if (m.has("phi")) spec.phi = to_double("phi", m.get("phi"));
  if (m.has("delta_prime")) spec.delta_prime = to_double("delta_prime", m.get("delta_prime"));
  if (m.has("delta_double_prime")) spec.delta_double_prime = to_double("delta_double_prime", m.get("delta_double_prime"));
  if (m.has("fairness_window")) spec.fairness_window = to_double("fairness_window", m.get("fairness_window"));
  if (m.has("min_epoch_rounds")) spec.min_epoch_rounds = to_double("min_epoch_rounds", m.get("min_epoch_rounds"));
  if (m.has("fairness_delta")) spec.fairness_delta = to_double("fairness_delta", m.get("fairness_delta"));
  if (m.has("trials")) {
    const std::int64_t t = to_int("trials", m.get("trials"));
    if (t < 1) throw ConfigError("trials must be >= 1");
    spec.trials = static_cast<std::size_t>(t);
  }
  if (m.has("subset_budget")) {
    const std::int64_t b = to_int("subset_budget", m.get("subset_budget"));
    if (b < 0) throw ConfigError("subset_budget must be >= 0");
    spec.subset_budget = static_cast<std::size_t>(b);
  }
  if (m.has("sweep")) {
    const std::set<std::string> known(kKeys.begin(), kKeys.end());
    for (const std::string& axis : split(m.get("sweep"), ';')) {
      const auto eq = axis.find('=');
      if (eq == std::string::npos) throw ConfigError("sweep axes are key=v1,v2,...");
      SweepAxis a{trim(axis.substr(0, eq)), split(axis.substr(eq + 1), ',')};
      if (!known.count(a.key) || a.key == "sweep") throw ConfigError("sweep axis '" + a.key + "' is not a config key");
      if (a.values.empty()) throw ConfigError("sweep axis '" + a.key + "' has no values");
      spec.sweep.push_back(std::move(a));
    }
  }

  c.validate();
  spec.strategy.committed_withheld(c);
  return spec;
}

ExperimentSpec load_experiment(const std::string& path) { return parse_experiment(read_file(path)); }

std::string echo_experiment(const ExperimentSpec& spec) {
  const SimulationConfig& c = spec.config;
  std::ostringstream os;
  os << "# " << kToolName << " " << kToolVersion << " resolved experiment\n";
  os << "n = " << c.n << "\n";
  os << "coalition_size = " << c.coalition_size << "\n";
  os << "queries_per_round = " << c.queries_per_round << "\n";
  os << "p = " << format_double(c.p) << "\n";
  os << "p_fruit = " << format_double(c.p_fruit) << "\n";
  os << "cost_per_query = " << format_double(c.cost_per_query) << "\n";
  os << "reward_schedule = ";
  for (std::size_t e = 0; e < c.reward_schedule.size(); ++e)
    os << (e ? "," : "") << c.reward_schedule[e].start_round << ":" << format_double(c.reward_schedule[e].reward);
  os << "\n";
  os << "rounds = " << c.rounds << "\n";
  os << "security_parameter = " << c.security_parameter << "\n";
  os << "protocol = " << protocol_name(c.protocol) << "\n";
  if (!c.withheld_queries.empty()) os << "withheld_queries = " << join_ints(c.withheld_queries) << "\n";
  os << "seed = " << c.seed << "\n";
  if (c.fruit_recency_window) os << "fruit_recency_window = " << *c.fruit_recency_window << "\n";
  os << "sampling = " << sampling_name(c.sampling) << "\n";
  os << "strategy = " << to_string(spec.strategy.kind) << "\n";
  os << "utility = " << to_string(spec.utility) << "\n";
  os << "epsilon = " << format_double(spec.epsilon) << "\n";
  os << "epsilon_prime = " << format_double(spec.epsilon_prime) << "\n";
  if (spec.bound) os << "bound = " << to_string(*spec.bound) << "\n";
  auto opt = [&](const char* key, const std::optional<double>& v) {
    if (v) os << key << " = " << format_double(*v) << "\n";
  };
  opt("delta1", spec.delta1);
  opt("phi", spec.phi);
  opt("delta_prime", spec.delta_prime);
  opt("delta_double_prime", spec.delta_double_prime);
  opt("fairness_window", spec.fairness_window);
  opt("min_epoch_rounds", spec.min_epoch_rounds);
  os << "fairness_delta = " << format_double(spec.fairness_delta) << "\n";
  os << "trials = " << spec.trials << "\n";
  os << "subset_budget = " << spec.subset_budget << "\n";
  if (!spec.sweep.empty()) {
    os << "sweep = ";
    for (std::size_t a = 0; a < spec.sweep.size(); ++a) {
      os << (a ? "; " : "") << spec.sweep[a].key << "=";
      for (std::size_t v = 0; v < spec.sweep[a].values.size(); ++v) os << (v ? "," : "") << spec.sweep[a].values[v];
    }
    os << "\n";
  }
  return os.str();
}

BoundParams bound_params_for(const ExperimentSpec& spec) {
  const SimulationConfig& c = spec.config;
  BoundParams b;
  b.delta1 = spec.delta1;
  b.phi = spec.phi;
  b.cost_per_query = c.cost_per_query;
  b.p = c.p;
  b.p_fruit = c.p_fruit;
  b.queries_per_round = c.queries_per_round;
  b.n = c.n;
  b.coalition_size = c.coalition_size;
  b.coalition_bound = c.coalition_size;
  b.delta_prime = spec.delta_prime;
  b.delta_double_prime = spec.delta_double_prime;
  b.delta = spec.fairness_delta;
  b.fairness_window = spec.fairness_window;
  b.min_epoch_rounds = spec.min_epoch_rounds;
  for (std::size_t e = 0; e < c.reward_schedule.size(); ++e) {
    b.rewards.push_back(c.reward_schedule[e].reward);
    const Round end = e + 1 < c.reward_schedule.size() ? c.reward_schedule[e + 1].start_round : c.rounds + 1;
    b.epoch_lengths.push_back(static_cast<double>(end - c.reward_schedule[e].start_round));
  }
  return b;
}

std::pair<double, double> resolve_epsilons(const ExperimentSpec& spec) {
  if (!spec.bound) return {spec.epsilon, spec.epsilon_prime};
  const BoundResult r = theorem_epsilon(*spec.bound, bound_params_for(spec));
  if (r.epsilon && r.epsilon_prime) return {*r.epsilon, *r.epsilon_prime};
  return {spec.epsilon, spec.epsilon_prime};
}

Json config_json(const SimulationConfig& c) {
  Json j;
  j["n"] = c.n;
  j["coalition_size"] = c.coalition_size;
  j["queries_per_round"] = c.queries_per_round;
  j["p"] = c.p;
  j["p_fruit"] = c.p_fruit;
  j["cost_per_query"] = c.cost_per_query;
  Json sched = Json::array();
  for (const auto& e : c.reward_schedule) sched.push_back({{"start_round", e.start_round}, {"reward", e.reward}});
  j["reward_schedule"] = sched;
  j["rounds"] = c.rounds;
  j["protocol"] = protocol_name(c.protocol);
  j["withheld_queries"] = c.withheld_queries;
  j["security_parameter"] = c.security_parameter;
  j["seed"] = c.seed;
  j["fruit_recency_window"] = c.recency_window();
  j["sampling"] = sampling_name(c.sampling);
  return j;
}

Json strategy_json(const AdversaryStrategy& s, const SimulationConfig& c) {
  return Json{{"kind", to_string(s.kind)}, {"withheld", s.committed_withheld(c)}};
}

Json output_header(const ExperimentSpec& spec) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["config"] = config_json(spec.config);
  j["strategy"] = strategy_json(spec.strategy, spec.config);
  j["utility"] = to_string(spec.utility);
  j["resolved_experiment"] = echo_experiment(spec);
  return j;
}

namespace {

std::uint64_t chain_digest(const std::vector<BlockId>& chain) {
  std::uint64_t h = 1469598103934665603ULL;
  for (BlockId b : chain) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Json trace_summary_json(const ExecutionTrace& tr) {
  Json j;
  j["seed"] = tr.seed;
  j["rounds"] = tr.config.rounds;
  j["strategy"] = strategy_json(tr.strategy, tr.config);
  j["successful_rounds"] = tr.successful_rounds;
  j["coalition_successful_rounds"] = tr.coalition_successful_rounds;
  j["honest_successful_rounds"] = tr.honest_successful_rounds;
  j["blocks_found"] = {{"coalition", tr.coalition_blocks_found}, {"honest", tr.honest_blocks_found}};
  j["fruits_produced"] = {{"coalition", tr.coalition_fruits}, {"honest", tr.honest_fruits}};
  j["blocks_in_ledger"] = tr.ledger.block_count() - 1;
  j["unpublished_coalition_blocks"] = tr.unpublished_coalition_blocks;
  j["query_counts"] = tr.query_counts;
  const ParticipantSet coalition = tr.config.coalition();
  const ParticipantSet honest = tr.config.honest();
  Json views = Json::array();
  for (const LocalView& v : tr.final_views) {
    const ViewRewards rw(tr, v.owner);
    std::int64_t cb = 0;
    for (BlockId b : v.chain)
      if (b != kGenesis && coalition.contains(tr.ledger.block(b).creator)) ++cb;
    std::int64_t cf = 0;
    for (FruitId f : v.included_fruits)
      if (coalition.contains(tr.ledger.fruit(f).creator)) ++cf;
    Json vj;
    vj["observer"] = v.owner;
    vj["chain_length"] = v.length();
    vj["chain_digest"] = chain_digest(v.chain);
    vj["blocks"] = {{"coalition", cb}, {"honest", v.length() - cb}};
    vj["fruits"] = {{"coalition", cf},
                    {"honest", static_cast<std::int64_t>(v.included_fruits.size()) - cf},
                    {"known", v.known_fruits.size()}};
    vj["rewards"] = {{"coalition", rw.of(coalition)}, {"honest", rw.of(honest)}, {"total", rw.total()}};
    views.push_back(vj);
  }
  j["views"] = views;
  j["adversary_view"] = {{"chain_length", tr.adversary_view.length()},
                         {"chain_digest", chain_digest(tr.adversary_view.chain)}};
  return j;
}

Json verdict_json(const EvpVerdict& v) {
  Json j;
  j["utility"] = to_string(v.kind);
  j["strategy"] = to_string(v.strategy.kind);
  j["epsilon"] = v.epsilon;
  j["epsilon_prime"] = v.epsilon_prime;
  j["trials"] = v.trials;
  j["violations"] = v.violations;
  j["violation_rate"] = v.violation_rate;
  j["confidence_interval"] = {{"lo", v.confidence_interval.lo},
                              {"hi", v.confidence_interval.hi},
                              {"level", v.confidence_interval.level},
                              {"method", v.confidence_interval.method}};
  j["mean_U_max_A"] = v.mean_u_max_deviating;
  j["mean_U_min_H"] = v.mean_u_min_protocol;
  j["mean_U_min_A"] = v.mean_u_min_deviating;
  j["mean_U_max_H"] = v.mean_u_max_protocol;
  Json rows = Json::array();
  for (const EvpTrial& r : v.rows) {
    rows.push_back({{"trial", r.trial},
                    {"seed_H", r.seed_protocol},
                    {"seed_A", r.seed_deviating},
                    {"U_min_H", r.u_min_protocol},
                    {"U_max_A", r.u_max_deviating},
                    {"violated", r.violated},
                    {"U_max_H", r.u_max_protocol},
                    {"U_min_A", r.u_min_deviating}});
  }
  j["rows"] = rows;
  return j;
}

Json fairness_json(const FairnessReport& r) {
  Json j;
  j["delta"] = r.delta;
  j["trials"] = r.trials;
  j["condition1_rate"] = r.condition1_rate;
  j["condition2_rate"] = r.condition2_rate;
  j["share_band_rate"] = r.share_band_rate;
  Json subsets = Json::array();
  for (const auto& s : r.subsets) subsets.push_back({{"members", s.members}, {"holds", s.holds}, {"rate", s.rate}});
  j["subsets"] = subsets;
  Json rows = Json::array();
  for (const auto& t : r.rows) {
    rows.push_back({{"trial", t.trial},
                    {"seed_H", t.seed_protocol},
                    {"seed_A", t.seed_deviating},
                    {"condition1", t.condition1},
                    {"condition2", t.condition2},
                    {"in_share_band", t.in_share_band},
                    {"honest_cost_share", t.honest_cost_share},
                    {"min_honest_share", t.min_honest_share},
                    {"min_coalition_share", t.min_coalition_share},
                    {"max_coalition_share", t.max_coalition_share}});
  }
  j["rows"] = rows;
  return j;
}

Json exact_json(const ExactDistribution& d) {
  Json j;
  j["outcomes"] = d.outcomes;
  j["draws"] = d.draws;
  j["observers"] = d.observers;
  j["expected_per_view"] = d.expected_per_view;
  j["expected_min"] = d.expected_min;
  j["expected_max"] = d.expected_max;
  j["total_probability"] = d.total_probability;
  auto dist = [](const std::map<double, double>& m) {
    Json a = Json::array();
    for (const auto& [value, prob] : m) a.push_back({{"value", value}, {"probability", prob}});
    return a;
  };
  j["min_distribution"] = dist(d.min_distribution);
  j["max_distribution"] = dist(d.max_distribution);
  return j;
}

Json bound_json(const BoundResult& r) {
  Json j;
  j["bound"] = to_string(r.kind);
  auto opt = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
  };
  opt("coalition_bound", r.coalition_bound);
  opt("epsilon", r.epsilon);
  opt("epsilon_prime", r.epsilon_prime);
  opt("gap", r.gap);
  opt("min_rounds", r.min_rounds);
  j["conditions_checked"] = r.conditions;
  return j;
}

std::string verdict_csv(const EvpVerdict& v, bool per_view) {
  std::ostringstream os;
  os << "trial,seed_H,seed_A,U_min_H,U_max_A,violated,U_max_H,U_min_A";
  const std::size_t views = v.rows.empty() ? 0 : v.rows.front().per_view_protocol.size();
  if (per_view) {
    for (std::size_t k = 0; k < views; ++k) os << ",U_H_" << k;
    for (std::size_t k = 0; k < views; ++k) os << ",U_A_" << k;
  }
  os << "\n";
  for (const EvpTrial& r : v.rows) {
    os << r.trial << "," << r.seed_protocol << "," << r.seed_deviating << "," << format_double17(r.u_min_protocol)
       << "," << format_double17(r.u_max_deviating) << "," << (r.violated ? 1 : 0) << ","
       << format_double17(r.u_max_protocol) << "," << format_double17(r.u_min_deviating);
    if (per_view) {
      for (double u : r.per_view_protocol) os << "," << format_double17(u);
      for (double u : r.per_view_deviating) os << "," << format_double17(u);
    }
    os << "\n";
  }
  return os.str();
}

std::string fairness_csv(const FairnessReport& r) {
  std::ostringstream os;
  os << "trial,seed_H,seed_A,condition1,condition2,in_share_band,honest_cost_share,min_honest_share,"
        "min_coalition_share,max_coalition_share\n";
  for (const auto& t : r.rows) {
    os << t.trial << "," << t.seed_protocol << "," << t.seed_deviating << "," << int(t.condition1) << ","
       << int(t.condition2) << "," << int(t.in_share_band) << "," << format_double17(t.honest_cost_share) << ","
       << format_double17(t.min_honest_share) << "," << format_double17(t.min_coalition_share) << ","
       << format_double17(t.max_coalition_share) << "\n";
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace evpsim
