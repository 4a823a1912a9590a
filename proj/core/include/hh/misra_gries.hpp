#pragma once

#include <cstdint>
#include <list>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hh {

/// Misra-Gries summary with at most `capacity` positive counters.
///
/// Keys with equal values share a group; groups form a list sorted by value,
/// and a global offset turns "decrement every counter" into a single add.
/// Inserts are amortized O(1) and value-ordered traversal starts from the
/// largest group.
///
/// For every key x with true count f(x) among the inserted keys:
///   0 <= f(x) - estimate(x) <= decrements() <= total_inserted() / (capacity + 1).
class CounterTable {
 public:
  using Key = std::uint64_t;
  using Entry = std::pair<Key, std::uint64_t>;

  explicit CounterTable(std::size_t capacity);

  CounterTable(const CounterTable& other);
  CounterTable& operator=(const CounterTable& other);
  CounterTable(CounterTable&&) noexcept = default;
  CounterTable& operator=(CounterTable&&) noexcept = default;

  enum class InsertResult { kIncremented, kAdded, kDecrementedAll };

  /// Increments `key` if present, else adds it with value 1 if a slot is
  /// free, else decrements every counter by one (zeroed keys are dropped).
  InsertResult insert(Key key);

  /// Stored value, 0 if absent.
  std::uint64_t estimate(Key key) const;
  bool contains(Key key) const { return slots_.count(key) != 0; }

  /// The j largest entries by value, ties by smaller key. j <= capacity.
  std::vector<Entry> top(std::size_t j) const;

  /// 0-based position of `key` in the top() order, or -1 when the key is
  /// absent or its position is >= limit.
  std::ptrdiff_t rank(Key key, std::size_t limit) const;

  /// All entries, value-descending, ties by smaller key.
  std::vector<Entry> entries() const { return top(slots_.size()); }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }
  std::uint64_t total_inserted() const { return total_; }
  /// Number of decrement-all steps so far; bounds every key's undercount.
  std::uint64_t decrements() const { return base_; }
  std::uint64_t sum_values() const;

  /// Checks the internal group/slot layout; for tests.
  bool check_invariants() const;

 private:
  struct Group {
    std::uint64_t stored;  // true value = stored - base_
    std::vector<Key> keys;
  };
  using GroupIt = std::list<Group>::iterator;
  struct Slot {
    GroupIt group;
    std::size_t pos;
  };

  void detach(Key key, Slot& slot);
  void attach(Key key, GroupIt group);

  std::size_t capacity_;
  std::uint64_t base_ = 0;
  std::uint64_t total_ = 0;
  std::list<Group> groups_;  // ascending by stored value
  std::unordered_map<Key, Slot> slots_;
};

}  // namespace hh
