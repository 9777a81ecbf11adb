#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace virwalk;

TEST(PartitionTest, ConstructionAndFormat) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, -1}), DomainError);
  EXPECT_EQ(parse_partition("7,6,6,4,1,1"), Partition({7, 6, 6, 4, 1, 1}));
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_THROW(parse_partition("1,,2"), DomainError);
  EXPECT_THROW(parse_partition("1,2"), DomainError);
  EXPECT_THROW(parse_partition("a"), DomainError);
  EXPECT_EQ(Partition({4, 2}).to_string(), "4,2");
  EXPECT_EQ(Partition({4, 2}).size(), 6);
  EXPECT_EQ(Partition({2, 2}).shifted(2, 1), std::nullopt);
  EXPECT_EQ(Partition({2, 2}).shifted(3, 1), Partition({2, 2, 1}));
  EXPECT_EQ(Partition({2, 1}).shifted(2, -1), Partition({2}));
}

TEST(PartitionTest, Conjugate) {
  EXPECT_EQ(conjugate(Partition()), Partition());
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition({2, 1})), Partition({2, 1}));
  for (const auto& p : partitions_up_to(8)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(PartitionTest, PartitionCounts) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), static_cast<std::size_t>(expected[n]));
  EXPECT_EQ(partitions_of(4, 2).size(), 3u);
}

TEST(BorderStrips, SpecExamples) {
  auto r = removable_border_strips(Partition({1}), 1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].first, Partition());
  EXPECT_EQ(r[0].second.height, 0);
  // the only two-cell sub-diagram difference of (2,1) is disconnected
  EXPECT_TRUE(removable_border_strips(Partition({2, 1}), 2).empty());
  EXPECT_TRUE(oracle::removable(Partition({2, 1}), 2).empty());

  auto a = addable_border_strips(Partition(), 2);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].first, Partition({1, 1}));
  EXPECT_EQ(a[0].second.height, 1);
  EXPECT_EQ(a[1].first, Partition({2}));
  EXPECT_EQ(a[1].second.height, 0);

  auto b = addable_border_strips(Partition({1}), 1);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].first, Partition({1, 1}));
  EXPECT_EQ(b[1].first, Partition({2}));
  EXPECT_EQ(b[0].second.height, 0);

  EXPECT_EQ(addable_border_strips(Partition({7, 6, 6, 4, 1, 1}), 1).size(), 5u);
  EXPECT_EQ(addable_border_strips(Partition({1}), 1, 1).size(), 1u);
}

TEST(BorderStrips, MatchBruteForceFilter) {
  for (const auto& lambda : partitions_up_to(8))
    for (int s = 1; s <= 5; ++s) {
      std::vector<std::pair<Partition, int>> fast;
      for (const auto& [mu, strip] : removable_border_strips(lambda, s)) {
        EXPECT_EQ(strip.size, s);
        EXPECT_EQ(strip.shape, SkewShape(lambda, mu));
        EXPECT_EQ(oracle::strip_height(strip.shape), strip.height);
        fast.push_back({mu, strip.height});
      }
      EXPECT_EQ(fast, oracle::removable(lambda, s)) << lambda.to_string() << " size " << s;
      std::vector<std::pair<Partition, int>> up;
      for (const auto& [mu, strip] : addable_border_strips(lambda, s)) up.push_back({mu, strip.height});
      EXPECT_EQ(up, oracle::addable(lambda, s)) << lambda.to_string() << " size " << s;
    }
}

TEST(BorderStrips, PredicateMatchesBruteForce) {
  for (const auto& outer : partitions_up_to(7))
    for (const auto& inner : partitions_up_to(outer.size()))
      if (outer.contains(inner)) {
        const SkewShape s(outer, inner);
        EXPECT_EQ(border_strip_height(s), oracle::strip_height(s));
      }
}

// Two strips of (7,6,6,...)-type sizes whose heights combine as in the
// proof of the Virasoro coefficient formula.
TEST(BorderStrips, HeightBookkeepingRegression) {
  const Partition lambda{4, 3, 3, 3, 2, 2, 2, 2};
  const Partition mu{6, 5, 4, 3, 2, 2, 1, 1};
  const Partition nu{4, 3, 2, 1, 1, 1, 1, 1};
  const Partition nu2{4, 3, 3, 3, 2, 2, 1, 1};
  const SkewShape h7(lambda, nu), h10(mu, nu), h2(lambda, nu2), h5(mu, nu2), b(nu2, nu);
  EXPECT_EQ(h7.size(), 7);
  EXPECT_EQ(h10.size(), 10);
  EXPECT_EQ(h2.size(), 2);
  EXPECT_EQ(h5.size(), 5);
  for (const auto& s : {h7, h10, h2, h5, b}) {
    ASSERT_TRUE(is_border_strip(s));
    EXPECT_EQ(border_strip_height(s), oracle::strip_height(s));
  }
  const int ht7 = *border_strip_height(h7), ht10 = *border_strip_height(h10);
  const int ht2 = *border_strip_height(h2), ht5 = *border_strip_height(h5), htb = *border_strip_height(b);
  EXPECT_EQ(ht2, 1);  // vertical domino
  EXPECT_EQ((ht7 + ht10) - (ht2 + ht5), 7);
  EXPECT_EQ(2 * htb + 1, 7);
}

TEST(Walkers, PartitionBijection) {
  EXPECT_EQ(walkers_from_partition(Partition(), 3), WalkerConfig({0, 1, 2}));
  EXPECT_EQ(walkers_from_partition(Partition({2, 1}), 2), WalkerConfig({1, 3}));
  EXPECT_EQ(partition_from_walkers(WalkerConfig({0, 1, 2})).first, Partition());
  EXPECT_EQ(partition_from_walkers(WalkerConfig({1, 3})).first, Partition({2, 1}));
  EXPECT_EQ(partition_from_walkers(WalkerConfig({1, 3})).second, 2);
  EXPECT_THROW(walkers_from_partition(Partition({1, 1, 1}), 2), DomainError);
  EXPECT_THROW(partition_from_walkers(WalkerConfig({-1, 3})), DomainError);
  EXPECT_THROW(partition_from_walkers(WalkerConfig({2, 1})), DomainError);
  for (int n = 1; n <= 4; ++n) {
    const auto configs = configs_in_window(n, 0, 7);
    std::set<Partition> seen;
    for (const auto& x : configs) {
      const auto [p, m] = partition_from_walkers(x);
      EXPECT_EQ(m, n);
      EXPECT_EQ(walkers_from_partition(p, n), x);
      seen.insert(p);
    }
    EXPECT_EQ(seen.size(), configs.size());
    for (const auto& p : partitions_up_to(5, n)) EXPECT_EQ(partition_from_walkers(walkers_from_partition(p, n)).first, p);
  }
}

TEST(Walkers, ParseConfig) {
  EXPECT_EQ(parse_config("0,2,3"), WalkerConfig({0, 2, 3}));
  EXPECT_EQ(parse_config("-1,4"), WalkerConfig({-1, 4}));
  EXPECT_THROW(parse_config("1,x"), DomainError);
  EXPECT_THROW(parse_config(""), DomainError);
  EXPECT_TRUE(WalkerConfig({0, 1, 3}).has_adjacent());
  EXPECT_FALSE(WalkerConfig({0, 2, 4}).has_adjacent());
}
