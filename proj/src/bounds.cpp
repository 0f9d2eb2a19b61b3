#include "evpsim/bounds.hpp"

#include <cmath>
#include <sstream>

#include "evpsim/types.hpp"

namespace evpsim {

namespace {

void check_chernoff_domain(double mu, double delta) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw UsageError("chernoff bound needs mu > 0");
  if (!(delta > 0.0 && delta <= 1.0)) throw UsageError("chernoff bound needs delta in (0,1]");
}

double need(const std::optional<double>& v, const char* name) {
  if (!v) throw UsageError(std::string("bound needs parameter ") + name);
  return *v;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require(BoundResult& out, bool ok, const std::string& condition, const std::string& detail) {
  if (!ok) throw SideConditionError(condition, detail);
  out.conditions.push_back(condition);
}

double solutions(const BoundParams& prm) {
  if (prm.solutions_per_round) return *prm.solutions_per_round;
  if (prm.p && prm.queries_per_round && prm.n) return *prm.p * *prm.queries_per_round * *prm.n;
  throw UsageError("bound needs solutions_per_round, or p, queries_per_round and n");
}

std::optional<double> all_but_one(const BoundParams& prm) {
  if (prm.n) return *prm.n - 1.0;
  return std::nullopt;
}

double check_delta1(BoundResult& out, const BoundParams& prm) {
  const double d1 = need(prm.delta1, "delta1");
  require(out, d1 > 0.0 && d1 < 0.25, "0 < delta1 < 0.25", "delta1=" + num(d1));
  return d1;
}

void check_schedule(BoundResult& out, const BoundParams& prm) {
  const double min_len = need(prm.min_epoch_rounds, "min_epoch_rounds");
  if (prm.epoch_lengths.empty()) throw UsageError("bound needs epoch_lengths");
  for (std::size_t e = 0; e + 1 < prm.epoch_lengths.size(); ++e)
    require(out, prm.epoch_lengths[e] >= min_len, "every reward epoch lasts >= min_epoch_rounds",
            "epoch " + std::to_string(e) + " has " + num(prm.epoch_lengths[e]) + " rounds");
  require(out, prm.epoch_lengths.back() >= min_len, "execution runs >= min_epoch_rounds after the last change",
          "final epoch has " + num(prm.epoch_lengths.back()) + " rounds");
}

BoundResult absolute(BoundKind kind, const BoundParams& prm) {
  BoundResult out;
  out.kind = kind;
  const double d1 = check_delta1(out, prm);
  const double s = solutions(prm);
  const double eps = 4.0 * d1 * (1.0 + s) + s;
  require(out, eps < 1.0, "4*delta1*(1+s)+s < 1", "value " + num(eps));
  if (kind == BoundKind::bitcoin_absolute_schedule) check_schedule(out, prm);
  out.coalition_bound = all_but_one(prm);
  out.epsilon = eps;
  out.epsilon_prime = 0.0;
  return out;
}

BoundResult profit(BoundKind kind, const BoundParams& prm) {
  BoundResult out;
  out.kind = kind;
  const double d1 = check_delta1(out, prm);
  const double s = solutions(prm);
  const double phi = need(prm.phi, "phi");
  const double c = need(prm.cost_per_query, "cost_per_query");
  const double p = need(prm.p, "p");
  const double q = need(prm.queries_per_round, "queries_per_round");
  const double n = need(prm.n, "n");
  if (prm.rewards.empty()) throw UsageError("bound needs rewards");
  if (kind == BoundKind::bitcoin_profit && prm.rewards.size() != 1)
    throw UsageError("constant-reward bound takes exactly one reward; use the schedule variant");
  require(out, phi > 0.0 && phi < 1.0 - s, "0 < phi < 1-s", "phi=" + num(phi) + ", s=" + num(s));
  const double scale = 1.0 + p * q * (n - 1.0);
  for (double w : prm.rewards) {
    const double cap = p * w * phi / scale;
    require(out, c < cap, "c < p*w*phi/(1+p*q*(n-1))", "c=" + num(c) + ", bound=" + num(cap) + " at w=" + num(w));
    const double cap2 = cap * (1.0 - d1);
    require(out, c <= cap2, "c <= p*w*(1-delta1)*phi/(1+p*q*(n-1))",
            "c=" + num(c) + ", bound=" + num(cap2) + " at w=" + num(w));
  }
  const double core = 4.0 * d1 * (1.0 + s) + s;
  require(out, core < 1.0 - phi, "4*delta1*(1+s)+s < 1-phi", "value " + num(core) + ", 1-phi=" + num(1.0 - phi));
  if (kind == BoundKind::bitcoin_profit_schedule) check_schedule(out, prm);
  out.coalition_bound = n - 1.0;
  out.epsilon = core / (1.0 - phi);
  out.epsilon_prime = 0.0;
  return out;
}

BoundResult relative_gap(const BoundParams& prm) {
  BoundResult out;
  out.kind = BoundKind::bitcoin_relative_gap;
  const double n = need(prm.n, "n");
  const double tc = need(prm.coalition_size, "coalition_size");
  const double t = prm.coalition_bound.value_or(n - 1.0);
  const double s = solutions(prm);
  const double dp = prm.delta_prime.value_or(0.0);
  const double dpp = prm.delta_double_prime.value_or(0.0);
  require(out, t >= 1.0 && t <= n - 1.0, "1 <= t <= n-1", "t=" + num(t));
  require(out, tc >= 1.0 && tc < n / 2.0 && tc < t + 1.0, "t' < min(n/2, t+1)",
          "t'=" + num(tc) + ", n=" + num(n) + ", t=" + num(t));
  require(out, dp >= 0.0 && dpp >= 0.0, "delta', delta'' >= 0", "delta'=" + num(dp) + ", delta''=" + num(dpp));
  out.coalition_bound = t;
  out.gap = tc / (n - tc) * (1.0 - dp) - tc / n * (1.0 + dpp) * (1.0 + s);
  return out;
}

BoundResult fairness_relative(const BoundParams& prm) {
  BoundResult out;
  out.kind = BoundKind::fairness_relative;
  const double t = need(prm.coalition_bound, "coalition_bound");
  const double d = need(prm.delta, "delta");
  require(out, d >= 0.0 && d < 1.0, "0 <= delta < 1", "delta=" + num(d));
  out.coalition_bound = t;
  out.epsilon = 0.0;
  out.epsilon_prime = d;
  return out;
}

BoundResult fruitchain_relative(const BoundParams& prm) {
  BoundResult out;
  out.kind = BoundKind::fruitchain_relative;
  const double n = need(prm.n, "n");
  const double d = need(prm.delta, "delta");
  require(out, d > 0.0 && d < 1.0, "0 < delta < 1", "delta=" + num(d));
  out.coalition_bound = std::floor(n / 2.0 - 1.0);
  out.epsilon = 0.0;
  out.epsilon_prime = d;
  if (prm.fairness_window && prm.p_fruit && prm.queries_per_round)
    out.min_rounds = *prm.fairness_window / (*prm.p_fruit * (n / 2.0 + 1.0) * (1.0 - d) * *prm.queries_per_round);
  return out;
}

BoundResult fruitchain_profit(const BoundParams& prm) {
  BoundResult out;
  out.kind = BoundKind::fruitchain_profit;
  const double d1 = check_delta1(out, prm);
  const double phi = need(prm.phi, "phi");
  const double c = need(prm.cost_per_query, "cost_per_query");
  const double pf = need(prm.p_fruit, "p_fruit");
  if (prm.rewards.size() != 1) throw UsageError("bound needs exactly one fruit reward");
  const double wf = prm.rewards.front();
  require(out, phi > 0.0 && phi < 1.0, "0 < phi < 1", "phi=" + num(phi));
  require(out, c < pf * wf * phi, "c < p_f*w_f*phi", "c=" + num(c) + ", bound=" + num(pf * wf * phi));
  require(out, c <= pf * wf * (1.0 - d1) * phi, "c <= p_f*w_f*(1-delta1)*phi",
          "c=" + num(c) + ", bound=" + num(pf * wf * (1.0 - d1) * phi));
  require(out, 4.0 * d1 < 1.0 - phi, "4*delta1 < 1-phi", "4*delta1=" + num(4.0 * d1) + ", 1-phi=" + num(1.0 - phi));
  out.coalition_bound = all_but_one(prm);
  out.epsilon = 4.0 * d1 / (1.0 - phi);
  out.epsilon_prime = 0.0;
  return out;
}

}  // namespace

double chernoff_lower(double mu, double delta) {
  check_chernoff_domain(mu, delta);
  return std::exp(-delta * delta * mu / 2.0);
}

double chernoff_upper(double mu, double delta) {
  check_chernoff_domain(mu, delta);
  return std::exp(-delta * delta * mu / 3.0);
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::bitcoin_absolute: return "bitcoin_absolute";
    case BoundKind::bitcoin_absolute_schedule: return "bitcoin_absolute_schedule";
    case BoundKind::bitcoin_profit: return "bitcoin_profit";
    case BoundKind::bitcoin_relative_gap: return "bitcoin_relative_gap";
    case BoundKind::bitcoin_profit_schedule: return "bitcoin_profit_schedule";
    case BoundKind::fairness_relative: return "fairness_relative";
    case BoundKind::fruitchain_relative: return "fruitchain_relative";
    case BoundKind::fruitchain_profit: return "fruitchain_profit";
  }
  return "?";
}

BoundKind parse_bound_kind(const std::string& name) {
  for (BoundKind k : {BoundKind::bitcoin_absolute, BoundKind::bitcoin_absolute_schedule, BoundKind::bitcoin_profit,
                      BoundKind::bitcoin_relative_gap, BoundKind::bitcoin_profit_schedule,
                      BoundKind::fairness_relative, BoundKind::fruitchain_relative, BoundKind::fruitchain_profit}) {
    if (name == to_string(k) || name == std::to_string(static_cast<int>(k))) return k;
  }
  throw ConfigError("unknown bound '" + name + "'");
}

BoundResult theorem_epsilon(BoundKind kind, const BoundParams& params) {
  switch (kind) {
    case BoundKind::bitcoin_absolute:
    case BoundKind::bitcoin_absolute_schedule: return absolute(kind, params);
    case BoundKind::bitcoin_profit:
    case BoundKind::bitcoin_profit_schedule: return profit(kind, params);
    case BoundKind::bitcoin_relative_gap: return relative_gap(params);
    case BoundKind::fairness_relative: return fairness_relative(params);
    case BoundKind::fruitchain_relative: return fruitchain_relative(params);
    case BoundKind::fruitchain_profit: return fruitchain_profit(params);
  }
  throw UsageError("unknown bound");
}

}  // namespace evpsim
