#pragma once

#include <optional>
#include <vector>

#include "evpsim/types.hpp"

namespace evpsim {

enum class MessageKind : std::uint8_t { block, fruit };

struct Message {
  MessageKind kind = MessageKind::block;
  std::uint32_t object = 0;  // BlockId or FruitId
  ParticipantId producer = kNoCreator;
  bool from_adversary = false;

  friend bool operator==(const Message&, const Message&) = default;
};

/// Messages sent during one round, held back until the round ends.
class DiffuseBuffer {
 public:
  void begin_round(Round round);
  Round round() const { return round_; }

  void send_honest(Message m);
  /// `recipients` restricts delivery to a subset of honest participants; unset means all.
  void send_adversarial(Message m, std::optional<ParticipantSet> recipients = std::nullopt);

  const std::vector<Message>& honest() const { return honest_; }
  const std::vector<Message>& adversarial() const { return adversarial_; }
  bool empty() const { return honest_.empty() && adversarial_.empty(); }
  bool flushed() const { return flushed_; }

 private:
  friend void diffuse_flush_into(DiffuseBuffer&, Round, const ParticipantSet&, std::vector<std::vector<Message>>&);

  Round round_ = 0;
  bool flushed_ = false;
  std::vector<Message> honest_;
  std::vector<Message> adversarial_;
  std::vector<std::optional<ParticipantSet>> recipients_;
};

using DeliveryLists = std::vector<std::vector<Message>>;

/// End-of-round delivery. Each honest participant gets the adversary's messages first, in the
/// order the adversary sent them, then every honest message ordered by producer index. Entries
/// for participants outside `honest` are left empty.
DeliveryLists diffuse_flush(DiffuseBuffer& buffer, Round round, const ParticipantSet& honest);
void diffuse_flush_into(DiffuseBuffer& buffer, Round round, const ParticipantSet& honest, DeliveryLists& out);

}  // namespace evpsim
