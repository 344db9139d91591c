#include <gtest/gtest.h>

#include <random>

#include "latmono/del_pezzo.hpp"
#include "latmono/weyl_e7.hpp"

using namespace latmono;

namespace {

// |W(E7)| as the product of the degrees of its basic invariants.
Integer weyl_e7_order() {
  Integer n = 1;
  for (long d : {2, 6, 8, 10, 12, 14, 18}) n *= d;
  return n;
}

}  // namespace

TEST(Roots, CountAndCartanMatrix) {
  EXPECT_EQ(roots().size(), 126u);
  const auto simple = simple_roots();
  ASSERT_EQ(simple.size(), 7u);
  // Cartan matrix entries −⟨αᵢ,αⱼ⟩ ∈ {2, 0, −1} with 6 edges (a tree on 7 nodes).
  std::size_t edges = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(pairing(simple[i], simple[i]), -2);
    for (std::size_t j = i + 1; j < 7; ++j) {
      const Integer p = pairing(simple[i], simple[j]);
      EXPECT_TRUE(p == 0 || p == 1);
      edges += p == 1 ? 1 : 0;
    }
  }
  EXPECT_EQ(edges, 6u);
}

TEST(Roots, ReflectionProperties) {
  const IntVector k = canonical_class();
  for (const auto& r : simple_roots()) {
    const IntMatrix s = reflection(r);
    EXPECT_EQ(s * s, IntMatrix::identity(8));
    EXPECT_TRUE(picard_lattice().is_isometry(s));
    EXPECT_EQ(s.apply(k), k);
    IntVector neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    EXPECT_EQ(s.apply(r), neg);
  }
  EXPECT_THROW(reflection(IntVector{1, 0, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST(Weyl, OrderMatchesDegreeProduct) {
  const PermGroup& w = weyl_group_on_classes();
  EXPECT_EQ(w.order(), weyl_e7_order());
  EXPECT_TRUE(w.is_transitive());
  EXPECT_EQ(w.stabilizer_order(0), weyl_e7_order() / 56);
}

TEST(Weyl, CenterIsGeiser) {
  const CenterQuotient c = center_and_quotient();
  EXPECT_EQ(c.center_order, 2);
  EXPECT_EQ(c.quotient_order, weyl_e7_order() / 2);
  EXPECT_TRUE(c.geiser_in_center);
  EXPECT_EQ(c.geiser, class_permutation(geiser_involution()));
  for (std::size_t v = 0; v < 56; ++v) EXPECT_EQ(c.geiser[v], dual_index(v));
}

TEST(Weyl, RandomWordsStayInGroup) {
  std::mt19937 rng(5);
  const auto simple = simple_roots();
  const PermGroup& w = weyl_group_on_classes();
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = IntMatrix::identity(8);
    for (int i = 0; i < 12; ++i) m = reflection(simple[rng() % 7]) * m;
    EXPECT_TRUE(w.contains(class_permutation(m)));
  }
  // A transposition of two disjoint classes breaks the pairing pattern.
  std::vector<Permutation::Point> img(56);
  for (std::size_t i = 0; i < 56; ++i) img[i] = static_cast<Permutation::Point>(i);
  std::swap(img[0], img[1]);
  EXPECT_FALSE(w.contains(Permutation(img)));
}

TEST(Weyl, DiscriminantRepresentationIsFaithful) {
  const DiscriminantRepresentation d = discriminant_representation();
  EXPECT_EQ(d.generator_images.size(), 7u);
  EXPECT_EQ(d.image_order, weyl_e7_order());
  EXPECT_EQ(d.group_order, weyl_e7_order());
  EXPECT_TRUE(d.kernel_trivial);
  for (const auto& g : d.generator_images) EXPECT_TRUE(g.is_invertible());
}
