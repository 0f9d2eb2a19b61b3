#include <doctest.h>

#include <algorithm>

#include "evpsim/engine.hpp"
#include "evpsim/protocols.hpp"

using namespace evpsim;

namespace {

SimulationConfig fruit_config() {
  SimulationConfig c;
  c.n = 5;
  c.coalition_size = 2;
  c.queries_per_round = 4;
  c.protocol = ProtocolKind::fruitchain;
  c.p = 0.01;
  c.p_fruit = 0.1;
  c.rounds = 50;
  return c;
}

// Extends `from` by `count` blocks of `creator`, one per round starting at `round`.
std::vector<BlockId> grow(Ledger& l, BlockId from, int count, ParticipantId creator, Round round) {
  std::vector<BlockId> out;
  for (int k = 0; k < count; ++k) {
    from = l.add_block(creator, from, round + k);
    out.push_back(from);
  }
  return out;
}

ViewState view_at(const Ledger& l, const std::vector<BlockId>& chain, ParticipantId owner) {
  ViewState v(owner);
  for (BlockId b : chain) v.learn_block(b);
  if (!chain.empty()) v.move_tip(chain.back(), l);
  return v;
}

Message block_msg(const Ledger& l, BlockId b, bool adversarial) {
  return {MessageKind::block, b, l.block(b).creator, adversarial};
}

}  // namespace

TEST_CASE("strictly longer delivered chain is adopted") {
  SimulationConfig c;
  Ledger l(c);
  const auto mine = grow(l, kGenesis, 5, 5, 1);
  const auto theirs = grow(l, kGenesis, 6, 0, 1);
  ChainSelectionInput in{view_at(l, mine, 5), {}};
  for (BlockId b : theirs) in.deliveries.push_back(block_msg(l, b, true));
  const LocalView out = select_chain(in, l);
  CHECK(out.length() == 6);
  CHECK(out.tip() == theirs.back());
}

TEST_CASE("equal-height candidates: first delivered wins") {
  SimulationConfig c;
  Ledger l(c);
  const auto base = grow(l, kGenesis, 5, 5, 1);
  const BlockId adv = l.add_block(0, base.back(), 6);
  const BlockId hon = l.add_block(6, base.back(), 6);
  ViewState v = view_at(l, base, 5);
  const std::vector<Message> msgs{block_msg(l, adv, true), block_msg(l, hon, false)};
  select_chain(v, msgs, l);
  CHECK(v.tip() == adv);
  CHECK(v.knows_block(hon));
}

TEST_CASE("no deliveries leaves the view unchanged") {
  SimulationConfig c;
  Ledger l(c);
  const auto base = grow(l, kGenesis, 3, 5, 1);
  ViewState v = view_at(l, base, 5);
  select_chain(v, std::span<const Message>{}, l);
  CHECK(v.tip() == base.back());
  CHECK(v.height() == 3);
}

TEST_CASE("blocks with an unknown parent are ignored") {
  SimulationConfig c;
  Ledger l(c);
  const auto hidden = grow(l, kGenesis, 4, 0, 1);
  ViewState v(5);
  const std::vector<Message> msgs{block_msg(l, hidden.back(), true)};
  select_chain(v, msgs, l);
  CHECK(v.height() == 0);
  CHECK_FALSE(v.knows_block(hidden.back()));
}

TEST_CASE("bitcoin round broadcasts only the first block found") {
  SimulationConfig c;
  Ledger l(c);
  ViewState v(5);
  RandomOracle o = RandomOracle::scripted({QueryOutcome::block, QueryOutcome::none, QueryOutcome::block});
  const HonestRoundResult r = honest_round_bitcoin(v, 3, o, l, 5, 1);
  REQUIRE(r.block.has_value());
  CHECK(r.blocks_found == 2);
  CHECK(l.block_count() == 2);
  CHECK(l.block(*r.block).parent == kGenesis);
  CHECK(v.tip() == kGenesis);
}

TEST_CASE("bitcoin round without success broadcasts nothing") {
  SimulationConfig c;
  Ledger l(c);
  ViewState v(5);
  RandomOracle o = RandomOracle::scripted(std::vector<QueryOutcome>(4, QueryOutcome::none));
  const HonestRoundResult r = honest_round_bitcoin(v, 4, o, l, 5, 1);
  CHECK_FALSE(r.block.has_value());
  CHECK(r.blocks_found == 0);
  CHECK(l.block_count() == 1);
}

TEST_CASE("certain success still yields one block per round") {
  SimulationConfig c;
  Ledger l(c);
  ViewState v(5);
  RandomOracle o(1.0, 0.0, SamplingMode::binomial, 1, 5);
  const HonestRoundResult r = honest_round_bitcoin(v, 5, o, l, 5, 1);
  CHECK(r.block.has_value());
  CHECK(r.blocks_found == 5);
  CHECK(l.block_count() == 2);
}

TEST_CASE("fruitchain round broadcasts every fruit") {
  const SimulationConfig c = fruit_config();
  Ledger l(c);
  ViewState v(3);
  RandomOracle o = RandomOracle::scripted(
      {QueryOutcome::fruit, QueryOutcome::fruit, QueryOutcome::none, QueryOutcome::fruit});
  const HonestRoundResult r = honest_round_fruitchain(v, 4, o, l, 3, 1, 50);
  CHECK(r.fruits.size() == 3);
  CHECK_FALSE(r.block.has_value());
}

TEST_CASE("fruitchain block references every pending fruit") {
  const SimulationConfig c = fruit_config();
  Ledger l(c);
  ViewState v(3);
  for (int k = 0; k < 4; ++k) v.learn_fruit(l.add_fruit(4, 1));
  RandomOracle o = RandomOracle::scripted({QueryOutcome::block});
  const HonestRoundResult r = honest_round_fruitchain(v, 1, o, l, 3, 2, 50);
  REQUIRE(r.block.has_value());
  CHECK(l.block(*r.block).fruit_refs == std::vector<FruitId>{0, 1, 2, 3});
}

TEST_CASE("stale fruits are not referenced") {
  const SimulationConfig c = fruit_config();
  Ledger l(c);
  ViewState v(3);
  const FruitId old = l.add_fruit(4, 1);
  const FruitId fresh = l.add_fruit(4, 10);
  v.learn_fruit(old);
  v.learn_fruit(fresh);
  CHECK(v.pending_fruits(l, 12, 5) == std::vector<FruitId>{fresh});
}

TEST_CASE("zero recency window keeps every chain free of fruits") {
  SimulationConfig c = fruit_config();
  c.fruit_recency_window = 0;
  c.rounds = 300;
  for (const auto& s : {AdversaryStrategy::front_runner(), AdversaryStrategy::selfish()}) {
    const ExecutionTrace t = run_execution(c, s, 4);
    CHECK(t.honest_fruits > 0);
    for (const LocalView& v : t.final_views) CHECK(v.included_fruits.empty());
  }
}

TEST_CASE("fruit recency rule") {
  CHECK(fruit_recency_valid(Fruit{0, 1, 20, 0}, 20, 0));
  CHECK(fruit_recency_valid(Fruit{0, 1, 20, 0}, 20, 7));
  CHECK_FALSE(fruit_recency_valid(Fruit{0, 1, 9, 0}, 20, 10));
  CHECK(fruit_recency_valid(Fruit{0, 1, 10, 0}, 20, 10));
  const Round r = 1000;
  for (Round created = 1; created <= r; created += 37) CHECK(fruit_recency_valid(Fruit{0, 1, created, 0}, r, r));
}

TEST_CASE("front runner: every fruit older than the tip block is included everywhere") {
  SimulationConfig c = fruit_config();
  c.rounds = 400;
  c.p = 0.02;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ExecutionTrace t = run_execution(c, AdversaryStrategy::front_runner(), seed);
    for (const LocalView& v : t.final_views) {
      REQUIRE(v.length() > 0);
      const Round tip_round = t.ledger.block(v.tip()).round_created;
      std::size_t expected = 0;
      for (const Fruit& f : t.ledger.fruits()) expected += f.round_created < tip_round;
      CHECK(v.included_fruits.size() >= expected);
      std::size_t older = 0;
      for (FruitId f : v.included_fruits) older += t.ledger.fruit(f).round_created < tip_round;
      CHECK(older == expected);
      // Anything missing was found in the rounds after the last block.
      const std::size_t missing = t.ledger.fruit_count() - v.included_fruits.size();
      std::size_t late = 0;
      for (const Fruit& f : t.ledger.fruits()) late += f.round_created >= tip_round;
      CHECK(missing <= late);
    }
  }
}

TEST_CASE("included fruits are always known fruits") {
  SimulationConfig c = fruit_config();
  c.rounds = 300;
  for (const auto& s : {AdversaryStrategy::front_runner(), AdversaryStrategy::selfish()}) {
    const ExecutionTrace t = run_execution(c, s, 8);
    for (const LocalView& v : t.final_views)
      CHECK(std::includes(v.known_fruits.begin(), v.known_fruits.end(), v.included_fruits.begin(),
                          v.included_fruits.end()));
  }
}
