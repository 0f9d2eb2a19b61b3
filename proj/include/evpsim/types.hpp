#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace evpsim {

using ParticipantId = int;
using BlockId = std::uint32_t;
using FruitId = std::uint32_t;
using Round = std::int64_t;

inline constexpr BlockId kGenesis = 0;
inline constexpr ParticipantId kNoCreator = -1;

enum class ProtocolKind { bitcoin_fixed_target, fruitchain };
enum class SamplingMode { binomial, sequential };

/// Invalid configuration detected before any round runs.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller asked for something the model does not define (e.g. a dishonest observer).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A theorem's hypothesis does not hold for the supplied parameters.
class SideConditionError : public std::domain_error {
 public:
  SideConditionError(std::string condition, const std::string& detail)
      : std::domain_error("side condition violated: " + condition + " (" + detail + ")"),
        condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact enumeration refused because the outcome space is too large.
class InstanceTooLarge : public std::length_error {
 public:
  InstanceTooLarge(long double outcomes, std::uint64_t limit);
  long double outcomes() const noexcept { return outcomes_; }

 private:
  long double outcomes_;
};

/// Subset of the participants {0, ..., universe-1}.
class ParticipantSet {
 public:
  ParticipantSet() = default;
  explicit ParticipantSet(int universe) : bits_(static_cast<std::size_t>(universe), false) {}

  static ParticipantSet all(int universe);
  static ParticipantSet range(int universe, int first, int last_exclusive);
  static ParticipantSet of(int universe, std::initializer_list<ParticipantId> members);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(ParticipantId i) const {
    return i >= 0 && i < universe() && bits_[static_cast<std::size_t>(i)];
  }
  void insert(ParticipantId i);
  void erase(ParticipantId i);
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<ParticipantId> members() const;
  ParticipantSet complement() const;

  friend bool operator==(const ParticipantSet&, const ParticipantSet&) = default;

 private:
  std::vector<bool> bits_;
};

}  // namespace evpsim
