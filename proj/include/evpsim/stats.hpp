#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace evpsim {

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 1.0;
  double level = 0.99;
  std::string method;
};

/// Jeffreys interval for a binomial proportion: equal-tailed quantiles of Beta(x+1/2, n-x+1/2),
/// with the lower end pinned to 0 when x = 0 and the upper end to 1 when x = n.
ConfidenceInterval binomial_interval(std::size_t successes, std::size_t trials, double level = 0.99);

/// Welford accumulator.
class RunningMoments {
 public:
  void add(double x);
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;  // unbiased; 0 when fewer than two samples
  double standard_error() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Worker count from EVPSIM_WORKERS, else 1.
unsigned default_workers();

/// Runs body(i) for i in [0, count) on `workers` threads. Callers store results by index, so the
/// outcome does not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace evpsim
