#include "evpsim/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace evpsim {

QueryOutcome oracle_query(CounterRng& rng, double p, double p_fruit) {
  if (p + p_fruit > 1.0) throw ConfigError("p + p_fruit must be <= 1");
  const double u = rng.uniform();
  if (u < p) return QueryOutcome::block;
  if (u < p + p_fruit) return QueryOutcome::fruit;
  return QueryOutcome::none;
}

BinomialTable::BinomialTable(int trials, double prob) {
  cdf_.assign(static_cast<std::size_t>(trials) + 1, 0.0);
  if (prob <= 0.0) {
    cdf_[0] = 2.0;
    for (auto& c : cdf_) c = 2.0;
    return;
  }
  if (prob >= 1.0) {
    // Every draw maps to `trials`.
    for (int k = 0; k < trials; ++k) cdf_[static_cast<std::size_t>(k)] = 0.0;
    cdf_.back() = 2.0;
    return;
  }
  const double log_q = std::log1p(-prob);
  const double log_p = std::log(prob);
  double acc = 0.0;
  for (int k = 0; k <= trials; ++k) {
    const double log_pmf = std::lgamma(trials + 1.0) - std::lgamma(k + 1.0) - std::lgamma(trials - k + 1.0) +
                           k * log_p + (trials - k) * log_q;
    acc += std::exp(log_pmf);
    cdf_[static_cast<std::size_t>(k)] = acc;
  }
  // Guard the top against rounding so sample() always terminates in range.
  cdf_.back() = 2.0;
}

RandomOracle::RandomOracle() = default;

RandomOracle::RandomOracle(double p, double p_fruit, SamplingMode mode, std::uint64_t seed, int max_batch)
    : p_(p), p_fruit_(p_fruit), mode_(mode), rng_(seed) {
  if (p + p_fruit > 1.0) throw ConfigError("p + p_fruit must be <= 1");
  if (mode_ == SamplingMode::binomial) {
    const double fruit_given_no_block = p >= 1.0 ? 0.0 : std::min(1.0, p_fruit / (1.0 - p));
    block_tables_.reserve(static_cast<std::size_t>(max_batch) + 1);
    fruit_tables_.reserve(static_cast<std::size_t>(max_batch) + 1);
    for (int k = 0; k <= max_batch; ++k) {
      block_tables_.emplace_back(k, p);
      fruit_tables_.emplace_back(k, fruit_given_no_block);
    }
  }
}

RandomOracle RandomOracle::scripted(std::vector<QueryOutcome> script) {
  RandomOracle o;
  o.scripted_ = true;
  o.script_ = std::move(script);
  return o;
}

QueryOutcome RandomOracle::query() {
  ++answered_;
  if (scripted_) {
    if (script_pos_ >= script_.size()) throw UsageError("scripted oracle exhausted");
    return script_[script_pos_++];
  }
  return oracle_query(rng_, p_, p_fruit_);
}

QueryTally RandomOracle::query_batch(int count) {
  QueryTally t;
  if (count <= 0) return t;
  if (scripted_ || mode_ == SamplingMode::sequential ||
      static_cast<std::size_t>(count) >= block_tables_.size()) {
    for (int i = 0; i < count; ++i) {
      const QueryOutcome o = query();
      t.blocks += o == QueryOutcome::block;
      t.fruits += o == QueryOutcome::fruit;
    }
    return t;
  }
  answered_ += static_cast<std::uint64_t>(count);
  t.blocks = block_tables_[static_cast<std::size_t>(count)].sample(rng_.uniform());
  const int rest = count - t.blocks;
  if (p_fruit_ > 0.0 && rest > 0) t.fruits = fruit_tables_[static_cast<std::size_t>(rest)].sample(rng_.uniform());
  return t;
}

}  // namespace evpsim
