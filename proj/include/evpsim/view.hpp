#pragma once

#include <cstdint>
#include <vector>

#include "evpsim/ledger.hpp"

namespace evpsim {

/// One participant's chain and fruit knowledge at the end of an execution.
struct LocalView {
  ParticipantId owner = kNoCreator;
  std::vector<BlockId> chain;           // genesis first
  std::vector<FruitId> known_fruits;    // ascending
  std::vector<FruitId> included_fruits; // ascending, distinct

  std::int64_t length() const { return static_cast<std::int64_t>(chain.size()) - 1; }
  BlockId tip() const { return chain.back(); }
};

/// Mutable per-participant state used while an execution runs.
///
/// Tracks which blocks and fruits the owner has received, the adopted tip, and how many times
/// each fruit is referenced by the adopted chain. Moving the tip walks back to the common
/// ancestor so the included-fruit counts stay exact across reorganisations.
class ViewState {
 public:
  explicit ViewState(ParticipantId owner = kNoCreator) : owner_(owner) {}

  ParticipantId owner() const { return owner_; }
  BlockId tip() const { return tip_; }
  std::int64_t height() const { return height_; }

  bool knows_block(BlockId b) const { return b == kGenesis || (b < known_blocks_.size() && known_blocks_[b]); }
  void learn_block(BlockId b);
  bool knows_fruit(FruitId f) const { return f < known_fruits_.size() && known_fruits_[f]; }
  void learn_fruit(FruitId f);
  bool includes_fruit(FruitId f) const { return f < included_.size() && included_[f] > 0; }

  /// Adopt `new_tip` (which must already be known) as the head of the chain.
  void move_tip(BlockId new_tip, const Ledger& ledger);

  /// Known fruits that are recent at `current_round` and not referenced by the adopted chain.
  std::vector<FruitId> pending_fruits(const Ledger& ledger, Round current_round, Round window) const;

  LocalView snapshot(const Ledger& ledger) const;

 private:
  void add_refs(const Block& b);
  void drop_refs(const Block& b);

  ParticipantId owner_;
  BlockId tip_ = kGenesis;
  std::int64_t height_ = 0;
  std::vector<char> known_blocks_;
  std::vector<char> known_fruits_;
  std::vector<std::uint32_t> included_;
  // Cache: every fruit below this id is already included or expired.
  mutable FruitId scan_from_ = 0;
};

}  // namespace evpsim
