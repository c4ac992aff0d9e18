#include <functional>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nccoop/surjections.hpp"
#include "oracles.hpp"

using namespace nccoop;

namespace {

CanonicalSurjection canon(std::vector<std::uint32_t> one_based) {
  for (auto& v : one_based) --v;
  return CanonicalSurjection::from_assignment(std::move(one_based));
}

/// Calls visit with every family of orders on sets of the given sizes.
void for_each_family(const std::vector<std::size_t>& sizes, const std::function<void(const std::vector<Order>&)>& visit) {
  std::vector<std::vector<Order>> choices;
  for (auto s : sizes) choices.push_back(enumerate_orders(s));
  std::vector<Order> family;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      visit(family);
      return;
    }
    for (const auto& o : choices[i]) {
      family.push_back(o);
      rec(i + 1);
      family.pop_back();
    }
  };
  rec(0);
}

std::vector<std::size_t> block_sizes(const Surjection& f) {
  std::vector<std::size_t> out;
  for (const auto& b : f.blocks()) out.push_back(b.size());
  return out;
}

}  // namespace

TEST(CanonicalSurjections, SmallCounts) {
  EXPECT_EQ(enumerate_canonical_surjections(1).size(), 1u);
  EXPECT_EQ(enumerate_canonical_surjections(3).size(), 5u);
  EXPECT_EQ(enumerate_canonical_surjections(4).size(), 15u);
}

TEST(CanonicalSurjections, BellCountsAndOracleAgreement) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto all = enumerate_canonical_surjections(n);
    EXPECT_EQ(Int(all.size()), oracle::bell(n)) << n;
    if (n <= 6) {
      std::set<oracle::Seq> got;
      for (const auto& f : all) got.emplace(f.assignment().begin(), f.assignment().end());
      EXPECT_EQ(got, oracle::set_partitions_by_functions(n)) << n;
    }
  }
}

TEST(CanonicalSurjections, GroupedByCodomainAndCanonical) {
  const auto all = enumerate_canonical_surjections(5);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(all[i].is_canonical());
    if (i) {
      EXPECT_LE(all[i - 1].codomain_size(), all[i].codomain_size());
    }
  }
  EXPECT_TRUE(all.front().is_constant());
  EXPECT_TRUE(all.back().is_bijective());
  EXPECT_EQ(enumerate_canonical_surjections(5), all);
}

TEST(CanonicalSurjections, ThreeElementListing) {
  std::vector<std::string> got;
  for (const auto& f : enumerate_canonical_surjections(3)) got.push_back(format_blocks(f));
  EXPECT_EQ(got, (std::vector<std::string>{"{1,2,3}", "{1,2}{3}", "{1,3}{2}", "{1}{2,3}", "{1}{2}{3}"}));
}

TEST(CanonicalSurjections, RejectsBadInput) {
  EXPECT_THROW(enumerate_canonical_surjections(0), validation_error);
  EXPECT_THROW(canon({2, 1}), validation_error);
  EXPECT_THROW(Surjection({0, 2}, 3), validation_error);
  EXPECT_THROW(Surjection({0, 3}, 3), validation_error);
}

TEST(CanonicalSurjections, Canonicalize) {
  const Surjection f({2, 0, 2, 1}, 3);
  EXPECT_FALSE(f.is_canonical());
  EXPECT_EQ(canonicalize(f), canon({1, 2, 1, 3}));
  const Surjection g({0, 0}, 1);
  EXPECT_EQ(compose(g, Surjection({1, 0, 1}, 2)), Surjection({0, 0, 0}, 1));
}

TEST(NcPartitions, SmallListings) {
  std::vector<std::string> two;
  for (const auto& p : enumerate_nc_partitions(2)) two.push_back(format_blocks(p.surjection()));
  EXPECT_EQ(two, (std::vector<std::string>{"{1,2}", "{1}{2}"}));
  EXPECT_EQ(enumerate_nc_partitions(3).size(), 5u);
  const auto four = enumerate_nc_partitions(4);
  EXPECT_EQ(four.size(), 14u);
  for (const auto& p : four) EXPECT_NE(format_blocks(p.surjection()), "{1,3}{2,4}");
}

TEST(NcPartitions, CatalanCounts) {
  const std::vector<int> expected{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(enumerate_nc_partitions(n).size(), static_cast<std::size_t>(expected[n - 1]));
    EXPECT_EQ(Int(expected[n - 1]), oracle::catalan(n));
  }
}

TEST(NcPartitions, MatchesIndexCrossingOracle) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for (const auto& a : oracle::set_partitions_by_functions(n)) count += !oracle::crossing_by_indices(a);
    EXPECT_EQ(enumerate_nc_partitions(n).size(), count);
  }
}

TEST(NcPartitions, Predicate) {
  EXPECT_FALSE(is_noncrossing_partition(canon({1, 2, 1, 2})));
  EXPECT_TRUE(is_noncrossing_partition(canon({1, 2, 2, 1})));
  EXPECT_TRUE(is_noncrossing_partition(canon({1, 1, 1, 1, 1})));
  EXPECT_THROW(NonCrossingPartition(canon({1, 2, 1, 2})), validation_error);
  const NonCrossingPartition p(canon({1, 2, 2, 1, 3}));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.n(), 5u);
}

TEST(Orders, Basics) {
  EXPECT_EQ(enumerate_orders(4).size(), 24u);
  EXPECT_THROW(Order({1, 1}), validation_error);
  EXPECT_THROW(Order({0, 1}), validation_error);
  const Order o({2, 3, 1});
  EXPECT_EQ(format_order(o), "(2,3,1)");
  EXPECT_EQ(o.sequence(), (std::vector<std::uint32_t>{2, 0, 1}));
}

TEST(Graft, IdentityAlongIdentity) {
  const auto f = canon({1, 2, 3});
  const std::vector<Order> taus(3, Order::identity(1));
  EXPECT_EQ(graft_orders(f, Order::identity(3), taus), Order::identity(3));
}

TEST(Graft, BlockExamples) {
  const auto f = canon({1, 2, 1});
  const std::vector<Order> taus{Order::identity(2), Order::identity(1)};
  EXPECT_EQ(format_order(graft_orders(f, Order::identity(2), taus)), "(1,3,2)");
  // Block {2} is listed first, then block {1,3}.
  EXPECT_EQ(format_order(graft_orders(f, Order({2, 1}), taus)), "(2,1,3)");
  const std::vector<Order> flipped{Order({2, 1}), Order::identity(1)};
  EXPECT_EQ(format_order(graft_orders(f, Order::identity(2), flipped)), "(2,3,1)");
}

TEST(Graft, RejectsMismatchedShapes) {
  const auto f = canon({1, 2, 1});
  EXPECT_THROW(graft_orders(f, Order::identity(3), std::vector<Order>(3, Order::identity(1))), validation_error);
  EXPECT_THROW(graft_orders(f, Order::identity(2), std::vector<Order>{Order::identity(1), Order::identity(1)}),
               validation_error);
}

TEST(Graft, MatchesListingOracleExhaustively) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : enumerate_canonical_surjections(n))
      for (const auto& rho : enumerate_orders(f.codomain_size()))
        for_each_family(block_sizes(f), [&](const std::vector<Order>& taus) {
          std::vector<oracle::Seq> tau_ranks;
          for (const auto& t : taus) tau_ranks.emplace_back(t.ranking().begin(), t.ranking().end());
          const auto expected = oracle::graft_by_listing(
              oracle::Seq(f.assignment().begin(), f.assignment().end()),
              oracle::Seq(rho.ranking().begin(), rho.ranking().end()), tau_ranks);
          ASSERT_EQ(graft_orders(f, rho, taus), Order(expected));
        });
}

TEST(Graft, Unitality) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto constant = canon(std::vector<std::uint32_t>(n, 1));
    for (const auto& o : enumerate_orders(n)) {
      // Along the constant map the outer order is trivial.
      EXPECT_EQ(graft_orders(constant, Order::identity(1), std::vector<Order>{o}), o);
      // Along the identity all inner orders are trivial.
      const Surjection id = canon([&] {
        std::vector<std::uint32_t> a(n);
        for (std::uint32_t i = 0; i < n; ++i) a[i] = i + 1;
        return a;
      }());
      EXPECT_EQ(graft_orders(id, o, std::vector<Order>(n, Order::identity(1))), o);
    }
  }
}

TEST(Graft, Associativity) {
  // Chains [n] -f-> [m] -g-> [p]. Grafting along g first and then along f
  // must agree with grafting along g.f with inner grafts along f restricted
  // to each fiber of g.f.
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : enumerate_canonical_surjections(n))
      for (const auto& g : enumerate_canonical_surjections(f.codomain_size())) {
        const Surjection gf = compose(g, f);
        const auto g_blocks = g.blocks();
        const auto gf_blocks = gf.blocks();
        // f restricted to the fiber over u, as a map between ascending positions.
        std::vector<Surjection> f_fiber;
        for (std::size_t u = 0; u < g_blocks.size(); ++u) {
          std::vector<std::uint32_t> a;
          for (auto s : gf_blocks[u]) {
            const auto t = f(s);
            a.push_back(static_cast<std::uint32_t>(std::find(g_blocks[u].begin(), g_blocks[u].end(), t) -
                                                   g_blocks[u].begin()));
          }
          f_fiber.emplace_back(std::move(a), g_blocks[u].size());
        }
        for (const auto& rho : enumerate_orders(g.codomain_size()))
          for_each_family(block_sizes(g), [&](const std::vector<Order>& sigmas) {
            const Order middle = graft_orders(g, rho, sigmas);
            for_each_family(block_sizes(f), [&](const std::vector<Order>& taus) {
              const Order left = graft_orders(f, middle, taus);
              std::vector<Order> inner;
              for (std::size_t u = 0; u < g_blocks.size(); ++u) {
                std::vector<Order> taus_u;
                for (auto t : g_blocks[u]) taus_u.push_back(taus[t]);
                inner.push_back(graft_orders(f_fiber[u], sigmas[u], taus_u));
              }
              const Order right = graft_orders(gf, rho, inner);
              ASSERT_EQ(left, right) << "f=" << format_blocks(f) << " g=" << format_blocks(g);
              ++checked;
            });
          });
      }
  EXPECT_GT(checked, 1000u);
}

TEST(Graft, AlwaysBijective) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : enumerate_canonical_surjections(n))
      for (const auto& rho : enumerate_orders(f.codomain_size()))
        for_each_family(block_sizes(f), [&](const std::vector<Order>& taus) {
          const Order o = graft_orders(f, rho, taus);
          std::set<std::uint32_t> ranks(o.ranking().begin(), o.ranking().end());
          ASSERT_EQ(ranks.size(), n);
        });
}
