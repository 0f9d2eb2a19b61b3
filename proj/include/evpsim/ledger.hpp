#pragma once

#include <cstdint>
#include <vector>

#include "evpsim/config.hpp"
#include "evpsim/types.hpp"

namespace evpsim {

struct Block {
  BlockId id = kGenesis;
  ParticipantId creator = kNoCreator;
  BlockId parent = kGenesis;
  std::int64_t height = 0;
  Round round_created = 0;
  std::size_t reward_epoch = 0;
  std::vector<FruitId> fruit_refs;
  // Coalition-created blocks on the path genesis..this block, inclusive.
  std::int64_t coalition_blocks_on_path = 0;
};

struct Fruit {
  FruitId id = 0;
  ParticipantId creator = kNoCreator;
  Round round_created = 0;
  std::size_t reward_epoch = 0;
};

/// Every block and fruit created during one execution. Views refer to entries by id.
class Ledger {
 public:
  explicit Ledger(const SimulationConfig& config);

  BlockId add_block(ParticipantId creator, BlockId parent, Round round, std::vector<FruitId> fruit_refs = {});
  FruitId add_fruit(ParticipantId creator, Round round);

  const Block& block(BlockId id) const { return blocks_.at(id); }
  const Fruit& fruit(FruitId id) const { return fruits_.at(id); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t fruit_count() const { return fruits_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Fruit>& fruits() const { return fruits_; }

  /// Block ids from genesis to `tip`, inclusive.
  std::vector<BlockId> chain_to(BlockId tip) const;

 private:
  std::vector<RewardEpoch> schedule_;
  int coalition_size_ = 0;
  std::vector<Block> blocks_;
  std::vector<Fruit> fruits_;
};

}  // namespace evpsim
