#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "hh/misra_gries.hpp"
#include "hh/rng.hpp"

namespace hh {
namespace {

// Textbook Misra-Gries on an ordered map, used as the reference.
class NaiveMisraGries {
 public:
  explicit NaiveMisraGries(std::size_t k) : k_(k) {}

  void insert(std::uint64_t x) {
    auto it = counts_.find(x);
    if (it != counts_.end()) {
      ++it->second;
    } else if (counts_.size() < k_) {
      counts_[x] = 1;
    } else {
      for (auto jt = counts_.begin(); jt != counts_.end();) {
        if (--jt->second == 0) {
          jt = counts_.erase(jt);
        } else {
          ++jt;
        }
      }
    }
  }

  std::uint64_t estimate(std::uint64_t x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }

  std::vector<CounterTable::Entry> sorted() const {
    std::vector<CounterTable::Entry> out(counts_.begin(), counts_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return out;
  }

 private:
  std::size_t k_;
  std::map<std::uint64_t, std::uint64_t> counts_;
};

TEST(CounterTable, CapacityOneHandSimulation) {
  CounterTable t(1);
  for (std::uint64_t x : {1, 1, 2, 3}) t.insert(x);
  // 1 reaches 2, then two decrement-all steps bring it to 0.
  EXPECT_EQ(t.estimate(1), 0u);
  EXPECT_EQ(t.estimate(2), 0u);
  EXPECT_EQ(t.estimate(3), 0u);
  EXPECT_EQ(t.sum_values(), 0u);
  EXPECT_EQ(t.decrements(), 2u);
}

TEST(CounterTable, NoEvictionIsExact) {
  CounterTable t(4);
  for (int i = 0; i < 7; ++i) t.insert(9);
  EXPECT_EQ(t.estimate(9), 7u);
  EXPECT_EQ(t.entries(), (std::vector<CounterTable::Entry>{{9, 7}}));
}

TEST(CounterTable, AbsentAndSingle) {
  CounterTable t(3);
  EXPECT_EQ(t.estimate(5), 0u);
  EXPECT_EQ(t.insert(5), CounterTable::InsertResult::kAdded);
  EXPECT_EQ(t.estimate(5), 1u);
  EXPECT_EQ(t.insert(5), CounterTable::InsertResult::kIncremented);
}

TEST(CounterTable, TopBreaksTiesBySmallerKey) {
  CounterTable t(3);
  const std::uint64_t a = 1, b = 2, c = 3;
  for (int i = 0; i < 3; ++i) t.insert(c);
  for (int i = 0; i < 5; ++i) t.insert(a);
  for (int i = 0; i < 3; ++i) t.insert(b);
  EXPECT_EQ(t.top(2), (std::vector<CounterTable::Entry>{{a, 5}, {b, 3}}));
  EXPECT_EQ(t.rank(b, 2), 1);
  EXPECT_EQ(t.rank(c, 2), -1);
}

TEST(CounterTable, TopOfEmpty) {
  CounterTable t(2);
  EXPECT_TRUE(t.top(1).empty());
  EXPECT_THROW(t.top(3), std::invalid_argument);
  EXPECT_THROW(CounterTable(0), std::invalid_argument);
}

TEST(CounterTable, RoundRobinReachesWorstCaseError) {
  const std::size_t k = 4;
  CounterTable t(k);
  const std::uint64_t rounds = 50;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    for (std::uint64_t x = 0; x <= k; ++x) t.insert(x);
  }
  const std::uint64_t s = rounds * (k + 1);
  std::uint64_t worst = 0;
  for (std::uint64_t x = 0; x <= k; ++x) worst = std::max(worst, rounds - t.estimate(x));
  EXPECT_EQ(worst, s / (k + 1));
}

TEST(CounterTable, MatchesReferenceOnRandomStreams) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + rng.below(64);
    const std::uint64_t n = 1 + rng.below(1000);
    const std::uint64_t s = rng.below(5000);
    CounterTable t(k);
    NaiveMisraGries ref(k);
    std::vector<std::uint64_t> f(n, 0);
    for (std::uint64_t i = 0; i < s; ++i) {
      // Skewed ids so that heavy keys survive.
      const std::uint64_t x = rng.below(2) ? rng.below(std::min<std::uint64_t>(n, 8)) : rng.below(n);
      t.insert(x);
      ref.insert(x);
      ++f[x];
    }
    ASSERT_TRUE(t.check_invariants());
    ASSERT_EQ(t.entries(), ref.sorted()) << "trial " << trial;
    ASSERT_LE(t.size(), k);
    ASSERT_LE(t.sum_values(), t.total_inserted());
    ASSERT_EQ(t.sum_values() + (k + 1) * t.decrements(), s);
    for (std::uint64_t x = 0; x < n; ++x) {
      ASSERT_LE(t.estimate(x), f[x]);
      ASSERT_LE(f[x] - t.estimate(x), s / (k + 1));
    }
  }
}

TEST(CounterTable, TopAgreesWithFullSort) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + rng.below(32);
    CounterTable t(k);
    for (int i = 0; i < 2000; ++i) t.insert(rng.below(3 * k));
    auto all = t.entries();
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    for (std::size_t j = 1; j <= k; ++j) {
      std::vector<CounterTable::Entry> expect(all.begin(), all.begin() + std::min(j, all.size()));
      ASSERT_EQ(t.top(j), expect);
      for (std::size_t pos = 0; pos < expect.size(); ++pos) {
        ASSERT_EQ(t.rank(expect[pos].first, j), static_cast<std::ptrdiff_t>(pos));
      }
    }
  }
}

TEST(CounterTable, CopyIsIndependent) {
  CounterTable a(3);
  for (std::uint64_t x : {1, 2, 2, 3, 3, 3}) a.insert(x);
  CounterTable b = a;
  b.insert(4);
  b.insert(1);
  EXPECT_TRUE(a.check_invariants());
  EXPECT_TRUE(b.check_invariants());
  EXPECT_EQ(a.entries(), (std::vector<CounterTable::Entry>{{3, 3}, {2, 2}, {1, 1}}));
  EXPECT_EQ(b.entries(), (std::vector<CounterTable::Entry>{{3, 2}, {1, 1}, {2, 1}}));
  a = b;
  EXPECT_EQ(a.entries(), b.entries());
  EXPECT_TRUE(a.check_invariants());
}

}  // namespace
}  // namespace hh
