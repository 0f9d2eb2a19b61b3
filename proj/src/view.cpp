#include "evpsim/view.hpp"

#include <algorithm>

#include "evpsim/protocols.hpp"

namespace evpsim {

void ViewState::learn_block(BlockId b) {
  if (b >= known_blocks_.size()) known_blocks_.resize(std::max<std::size_t>(b + 1, known_blocks_.size() * 2), 0);
  known_blocks_[b] = 1;
}

void ViewState::learn_fruit(FruitId f) {
  if (f >= known_fruits_.size()) known_fruits_.resize(std::max<std::size_t>(f + 1, known_fruits_.size() * 2), 0);
  known_fruits_[f] = 1;
}

void ViewState::add_refs(const Block& b) {
  for (FruitId f : b.fruit_refs) {
    if (f >= included_.size()) included_.resize(std::max<std::size_t>(f + 1, included_.size() * 2), 0);
    ++included_[f];
    learn_fruit(f);  // a block carries the fruits it references
  }
}

void ViewState::drop_refs(const Block& b) {
  for (FruitId f : b.fruit_refs) {
    if (--included_[f] == 0) scan_from_ = std::min(scan_from_, f);
  }
}

void ViewState::move_tip(BlockId new_tip, const Ledger& ledger) {
  if (!knows_block(new_tip)) throw UsageError("cannot adopt an unknown block");
  BlockId old_side = tip_;
  BlockId new_side = new_tip;
  std::vector<BlockId> attach;
  while (ledger.block(old_side).height > ledger.block(new_side).height) {
    drop_refs(ledger.block(old_side));
    old_side = ledger.block(old_side).parent;
  }
  while (ledger.block(new_side).height > ledger.block(old_side).height) {
    attach.push_back(new_side);
    new_side = ledger.block(new_side).parent;
  }
  while (old_side != new_side) {
    drop_refs(ledger.block(old_side));
    attach.push_back(new_side);
    old_side = ledger.block(old_side).parent;
    new_side = ledger.block(new_side).parent;
  }
  for (BlockId b : attach) add_refs(ledger.block(b));
  tip_ = new_tip;
  height_ = ledger.block(new_tip).height;
}

std::vector<FruitId> ViewState::pending_fruits(const Ledger& ledger, Round current_round, Round window) const {
  std::vector<FruitId> out;
  const FruitId end = static_cast<FruitId>(std::min(known_fruits_.size(), ledger.fruit_count()));
  while (scan_from_ < end && includes_fruit(scan_from_)) ++scan_from_;
  for (FruitId f = scan_from_; f < end; ++f) {
    if (known_fruits_[f] && !includes_fruit(f) && fruit_recency_valid(ledger.fruit(f), current_round, window))
      out.push_back(f);
  }
  return out;
}

LocalView ViewState::snapshot(const Ledger& ledger) const {
  LocalView v;
  v.owner = owner_;
  v.chain = ledger.chain_to(tip_);
  for (FruitId f = 0; f < known_fruits_.size(); ++f)
    if (known_fruits_[f]) v.known_fruits.push_back(f);
  for (FruitId f = 0; f < included_.size(); ++f)
    if (included_[f] > 0) v.included_fruits.push_back(f);
  return v;
}

}  // namespace evpsim
