#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "evpsim/rng.hpp"
#include "evpsim/types.hpp"

namespace evpsim {

enum class QueryOutcome : std::uint8_t { none, block, fruit };

/// One query: a single uniform draw split as [0,p) block, [p,p+p_fruit) fruit, rest none.
QueryOutcome oracle_query(CounterRng& rng, double p, double p_fruit);

struct QueryTally {
  int blocks = 0;
  int fruits = 0;
};

/// Inverse-CDF sampler for Binomial(trials, prob) from one uniform.
class BinomialTable {
 public:
  BinomialTable() = default;
  BinomialTable(int trials, double prob);
  int sample(double u) const {
    int k = 0;
    while (u >= cdf_[static_cast<std::size_t>(k)]) ++k;
    return k;
  }

 private:
  std::vector<double> cdf_{2.0};
};

/// The random oracle as seen by one execution.
///
/// Sequential mode answers every query with its own draw. Binomial mode answers a batch of k
/// queries with two draws (block count, then fruit count among the rest), which has the same
/// distribution over counts. A scripted oracle replays a fixed outcome list and is used for
/// exact enumeration and hand-built scenarios.
class RandomOracle {
 public:
  RandomOracle(double p, double p_fruit, SamplingMode mode, std::uint64_t seed, int max_batch);
  static RandomOracle scripted(std::vector<QueryOutcome> script);

  QueryOutcome query();
  QueryTally query_batch(int count);

  std::uint64_t queries_answered() const { return answered_; }
  std::uint64_t rng_draws() const { return rng_.draws(); }
  bool is_scripted() const { return scripted_; }
  std::size_t script_remaining() const { return script_.size() - script_pos_; }

 private:
  RandomOracle();

  double p_ = 0.0;
  double p_fruit_ = 0.0;
  SamplingMode mode_ = SamplingMode::sequential;
  CounterRng rng_{0};
  bool scripted_ = false;
  std::vector<QueryOutcome> script_;
  std::size_t script_pos_ = 0;
  std::uint64_t answered_ = 0;
  std::vector<BinomialTable> block_tables_;
  std::vector<BinomialTable> fruit_tables_;
};

}  // namespace evpsim
