#include "evpsim/diffuse.hpp"

#include <algorithm>

namespace evpsim {

void DiffuseBuffer::begin_round(Round round) {
  round_ = round;
  flushed_ = false;
  honest_.clear();
  adversarial_.clear();
  recipients_.clear();
}

void DiffuseBuffer::send_honest(Message m) {
  if (flushed_) throw UsageError("message sent after the round was flushed");
  m.from_adversary = false;
  honest_.push_back(m);
}

void DiffuseBuffer::send_adversarial(Message m, std::optional<ParticipantSet> recipients) {
  if (flushed_) throw UsageError("message sent after the round was flushed");
  m.from_adversary = true;
  adversarial_.push_back(m);
  recipients_.push_back(std::move(recipients));
}

void diffuse_flush_into(DiffuseBuffer& buffer, Round round, const ParticipantSet& honest, DeliveryLists& out) {
  if (buffer.flushed_ || buffer.round_ != round) throw UsageError("diffuse buffer must be flushed once per round");
  buffer.flushed_ = true;
  out.resize(static_cast<std::size_t>(honest.universe()));
  for (auto& list : out) list.clear();
  if (buffer.empty()) return;

  std::stable_sort(buffer.honest_.begin(), buffer.honest_.end(),
                   [](const Message& a, const Message& b) { return a.producer < b.producer; });
  for (ParticipantId j = 0; j < honest.universe(); ++j) {
    if (!honest.contains(j)) continue;
    auto& list = out[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < buffer.adversarial_.size(); ++k) {
      const auto& to = buffer.recipients_[k];
      if (!to || to->contains(j)) list.push_back(buffer.adversarial_[k]);
    }
    list.insert(list.end(), buffer.honest_.begin(), buffer.honest_.end());
  }
}

DeliveryLists diffuse_flush(DiffuseBuffer& buffer, Round round, const ParticipantSet& honest) {
  DeliveryLists out;
  diffuse_flush_into(buffer, round, honest, out);
  return out;
}

}  // namespace evpsim
