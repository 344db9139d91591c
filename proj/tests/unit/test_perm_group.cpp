#include <gtest/gtest.h>

#include <random>
#include <set>

#include "latmono/perm_group.hpp"

using namespace latmono;

namespace {

using P = Permutation::Point;

Permutation cycle(std::size_t n, std::vector<P> c) {
  std::vector<P> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<P>(i);
  for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Permutation(img);
}

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<P> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<P>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
  return Permutation(img);
}

std::set<std::vector<P>> closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<std::vector<P>> seen{Permutation::identity(n).images()};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Permutation h = s * g;
        if (seen.insert(h.images()).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(Permutation, Basics) {
  const Permutation a = cycle(4, {0, 1, 2});
  EXPECT_EQ(a[0], 1u);
  EXPECT_EQ((a * a.inverse()), Permutation::identity(4));
  EXPECT_EQ(a.first_moved(), 0u);
  EXPECT_EQ(a.cycle_string(), "(0 1 2)");
  EXPECT_THROW(Permutation(std::vector<P>{0, 0}), std::invalid_argument);
  // (a*b)[x] = a[b[x]]
  const Permutation b = cycle(4, {2, 3});
  EXPECT_EQ((a * b)[2], a[b[2]]);
}

TEST(PermGroup, SymmetricGroups) {
  for (std::size_t n = 2; n <= 9; ++n) {
    std::vector<P> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<P>(i);
    const PermGroup s = PermGroup::from_generators(n, {cycle(n, c), cycle(n, {0, 1})});
    Integer fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
    EXPECT_EQ(s.order(), fact) << n;
    EXPECT_TRUE(s.is_transitive());
  }
}

TEST(PermGroup, Mathieu11) {
  const PermGroup m11 = PermGroup::from_generators(
      11, {cycle(11, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), cycle(11, {2, 6, 10, 7}) * cycle(11, {3, 9, 4, 5})});
  EXPECT_EQ(m11.order(), 7920);
  EXPECT_EQ(m11.stabilizer_order(0), 720);
  EXPECT_FALSE(m11.contains(cycle(11, {0, 1})));
}

TEST(PermGroup, Dihedral) {
  const PermGroup d4 = PermGroup::from_generators(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})});
  EXPECT_EQ(d4.order(), 8);
  EXPECT_TRUE(d4.contains(cycle(4, {0, 2}) * cycle(4, {1, 3})));
  EXPECT_FALSE(d4.contains(cycle(4, {0, 1})));
  const auto z = d4.center_of_transitive();
  EXPECT_EQ(z.size(), 2u);
  EXPECT_TRUE(d4.is_central(cycle(4, {0, 2}) * cycle(4, {1, 3})));
  EXPECT_FALSE(d4.is_central(cycle(4, {1, 3})));
  EXPECT_THROW(d4.is_central(cycle(4, {0, 1})), std::invalid_argument);
}

TEST(PermGroup, CentersOfKnownGroups) {
  const PermGroup s5 = PermGroup::from_generators(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})});
  EXPECT_EQ(s5.center_of_transitive().size(), 1u);
  const PermGroup c6 = PermGroup::from_generators(6, {cycle(6, {0, 1, 2, 3, 4, 5})});
  EXPECT_EQ(c6.center_of_transitive().size(), 6u);
}

TEST(PermGroup, BasePrefixDoesNotChangeOrder) {
  const std::vector<Permutation> gens{cycle(7, {0, 1, 2, 3, 4, 5, 6}), cycle(7, {1, 2, 4}) * cycle(7, {3, 6, 5})};
  const PermGroup a = PermGroup::from_generators(7, gens);
  const PermGroup b = PermGroup::from_generators(7, gens, {5, 3});
  EXPECT_EQ(a.order(), 21);
  EXPECT_EQ(b.order(), 21);
  EXPECT_EQ(b.base().front(), 5u);
}

TEST(PermGroup, OrbitStabilizer) {
  const PermGroup g = PermGroup::from_generators(6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4})});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.orbit(0), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(g.orbit(5), (std::vector<std::size_t>{5}));
  for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(g.stabilizer_order(x) * static_cast<unsigned long>(g.orbit(x).size()), g.order());
  EXPECT_FALSE(g.is_transitive());
}

TEST(PermGroup, RandomGroupsMatchClosure) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    std::vector<Permutation> gens;
    const std::size_t k = 1 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_perm(rng, n));
    const auto elements = closure(n, gens);
    const PermGroup g = PermGroup::from_generators(n, gens);
    ASSERT_EQ(g.order(), static_cast<unsigned long>(elements.size()));
    for (int probe = 0; probe < 20; ++probe) {
      const Permutation p = random_perm(rng, n);
      EXPECT_EQ(g.contains(p), elements.count(p.images()) == 1);
    }
  }
}
