#include "hh/misra_gries.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hh {

CounterTable::CounterTable(const CounterTable& other)
    : capacity_(other.capacity_), base_(other.base_), total_(other.total_), groups_(other.groups_) {
  slots_.reserve(other.slots_.size());
  for (auto g = groups_.begin(); g != groups_.end(); ++g) {
    for (std::size_t i = 0; i < g->keys.size(); ++i) slots_.emplace(g->keys[i], Slot{g, i});
  }
}

CounterTable& CounterTable::operator=(const CounterTable& other) {
  if (this != &other) {
    CounterTable copy(other);
    *this = std::move(copy);
  }
  return *this;
}

CounterTable::CounterTable(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("CounterTable: capacity must be positive");
  slots_.reserve(capacity * 2);
}

void CounterTable::detach(Key key, Slot& slot) {
  auto& keys = slot.group->keys;
  const Key last = keys.back();
  keys[slot.pos] = last;
  keys.pop_back();
  if (last != key) slots_.find(last)->second.pos = slot.pos;
}

void CounterTable::attach(Key key, GroupIt group) {
  auto& slot = slots_[key];
  slot.group = group;
  slot.pos = group->keys.size();
  group->keys.push_back(key);
}

CounterTable::InsertResult CounterTable::insert(Key key) {
  ++total_;
  auto found = slots_.find(key);
  if (found != slots_.end()) {
    Slot& slot = found->second;
    GroupIt from = slot.group;
    const std::uint64_t target = from->stored + 1;
    GroupIt to = std::next(from);
    if (to == groups_.end() || to->stored != target) to = groups_.insert(to, Group{target, {}});
    detach(key, slot);
    slot.group = to;
    slot.pos = to->keys.size();
    to->keys.push_back(key);
    if (from->keys.empty()) groups_.erase(from);
    return InsertResult::kIncremented;
  }

  if (slots_.size() < capacity_) {
    const std::uint64_t target = base_ + 1;
    GroupIt to = groups_.begin();
    if (to == groups_.end() || to->stored != target) to = groups_.insert(to, Group{target, {}});
    attach(key, to);
    return InsertResult::kAdded;
  }

  // Full table: every counter loses one, the incoming key is not stored.
  ++base_;
  if (!groups_.empty() && groups_.front().stored == base_) {
    for (Key k : groups_.front().keys) slots_.erase(k);
    groups_.pop_front();
  }
  return InsertResult::kDecrementedAll;
}

std::uint64_t CounterTable::estimate(Key key) const {
  auto found = slots_.find(key);
  if (found == slots_.end()) return 0;
  return found->second.group->stored - base_;
}

std::vector<CounterTable::Entry> CounterTable::top(std::size_t j) const {
  if (j > capacity_) throw std::invalid_argument("CounterTable::top: j exceeds capacity");
  std::vector<Entry> out;
  out.reserve(std::min(j, slots_.size()));
  std::vector<Key> keys;
  for (auto g = groups_.rbegin(); g != groups_.rend() && out.size() < j; ++g) {
    keys.assign(g->keys.begin(), g->keys.end());
    std::sort(keys.begin(), keys.end());
    for (Key k : keys) {
      if (out.size() == j) break;
      out.emplace_back(k, g->stored - base_);
    }
  }
  return out;
}

std::ptrdiff_t CounterTable::rank(Key key, std::size_t limit) const {
  auto found = slots_.find(key);
  if (found == slots_.end()) return -1;
  const GroupIt group = found->second.group;
  std::size_t above = 0;
  for (auto g = groups_.rbegin(); &*g != &*group; ++g) {
    above += g->keys.size();
    if (above >= limit) return -1;
  }
  for (Key k : group->keys) {
    if (k < key) ++above;
  }
  return above < limit ? static_cast<std::ptrdiff_t>(above) : -1;
}

std::uint64_t CounterTable::sum_values() const {
  std::uint64_t sum = 0;
  for (const auto& g : groups_) sum += (g.stored - base_) * g.keys.size();
  return sum;
}

bool CounterTable::check_invariants() const {
  if (slots_.size() > capacity_) return false;
  std::size_t counted = 0;
  std::uint64_t prev = base_;
  for (auto g = groups_.begin(); g != groups_.end(); ++g) {
    if (g->keys.empty() || g->stored <= prev) return false;
    prev = g->stored;
    for (std::size_t i = 0; i < g->keys.size(); ++i) {
      auto s = slots_.find(g->keys[i]);
      if (s == slots_.end() || &*s->second.group != &*g || s->second.pos != i) return false;
    }
    counted += g->keys.size();
  }
  if (counted != slots_.size()) return false;
  return sum_values() + (capacity_ + 1) * base_ == total_;
}

}  // namespace hh
