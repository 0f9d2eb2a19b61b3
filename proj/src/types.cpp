#include "evpsim/types.hpp"

#include <algorithm>
#include <sstream>

namespace evpsim {

namespace {

std::string describe_too_large(long double outcomes, std::uint64_t limit) {
  std::ostringstream os;
  os.precision(6);
  os << "instance has " << outcomes << " outcome sequences; enumeration limit is " << limit;
  return os.str();
}

}  // namespace

InstanceTooLarge::InstanceTooLarge(long double outcomes, std::uint64_t limit)
    : std::length_error(describe_too_large(outcomes, limit)), outcomes_(outcomes) {}

ParticipantSet ParticipantSet::all(int universe) {
  ParticipantSet s(universe);
  s.bits_.assign(s.bits_.size(), true);
  return s;
}

ParticipantSet ParticipantSet::range(int universe, int first, int last_exclusive) {
  ParticipantSet s(universe);
  for (int i = std::max(first, 0); i < std::min(last_exclusive, universe); ++i) s.insert(i);
  return s;
}

ParticipantSet ParticipantSet::of(int universe, std::initializer_list<ParticipantId> members) {
  ParticipantSet s(universe);
  for (ParticipantId i : members) s.insert(i);
  return s;
}

void ParticipantSet::insert(ParticipantId i) {
  if (i < 0 || i >= universe()) throw UsageError("participant index out of range");
  bits_[static_cast<std::size_t>(i)] = true;
}

void ParticipantSet::erase(ParticipantId i) {
  if (i < 0 || i >= universe()) throw UsageError("participant index out of range");
  bits_[static_cast<std::size_t>(i)] = false;
}

int ParticipantSet::size() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<ParticipantId> ParticipantSet::members() const {
  std::vector<ParticipantId> out;
  for (int i = 0; i < universe(); ++i)
    if (bits_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

ParticipantSet ParticipantSet::complement() const {
  ParticipantSet s(universe());
  for (int i = 0; i < universe(); ++i) s.bits_[static_cast<std::size_t>(i)] = !bits_[static_cast<std::size_t>(i)];
  return s;
}

}  // namespace evpsim
