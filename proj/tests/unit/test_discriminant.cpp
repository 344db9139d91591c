#include <gtest/gtest.h>

#include "latmono/discriminant.hpp"
#include "latmono/lattice.hpp"

using namespace latmono;

namespace {

Lattice a1() { return standard_lattice(StandardKind::A1); }
Lattice d4() { return standard_lattice(StandardKind::D4); }

}  // namespace

TEST(DiscriminantForm, A1) {
  const auto q = discriminant_form(a1());
  EXPECT_EQ(q.divisors(), (IntVector{2}));
  EXPECT_EQ(q.order(), 2);
  // generator e/2 with e² = −2: q = −1/2 mod 2
  EXPECT_EQ(q.q({Integer(1)}), Rational(3, 2));
  EXPECT_EQ(q.b({Integer(1)}, {Integer(1)}), Rational(1, 2));
}

TEST(DiscriminantForm, UnimodularIsTrivial) {
  EXPECT_TRUE(discriminant_form(standard_lattice(StandardKind::U)).is_trivial());
  EXPECT_TRUE(discriminant_form(standard_lattice(StandardKind::E8Neg)).is_trivial());
}

TEST(DiscriminantForm, D4) {
  const auto q = discriminant_form(d4());
  EXPECT_EQ(q.divisors(), (IntVector{2, 2}));
  EXPECT_TRUE(q.is_two_elementary());
  // every nonzero element has norm −1 mod 2
  for (const auto& x : q.elements())
    if (x != IntVector{0, 0}) EXPECT_EQ(q.q(x), Rational(1));
}

TEST(DiscriminantForm, OrderIsAbsDeterminant) {
  for (const Lattice& l : {a1(), d4(), standard_lattice(StandardKind::U2), direct_sum({a1(), d4()})})
    EXPECT_EQ(discriminant_form(l).order(), Integer(abs(l.determinant()))) << l.name();
}

TEST(DiscriminantForm, LiftsAreDualVectors) {
  const Lattice l = direct_sum({d4(), standard_lattice(StandardKind::U2)});
  const auto q = discriminant_form(l);
  for (const auto& x : q.elements()) {
    const RatVector v = q.lift(x);
    EXPECT_EQ(q.coordinates(v), x);
    const RatVector gv = to_rational(l.gram()).apply(v);
    for (const auto& c : gv) EXPECT_EQ(c.get_den(), 1);
  }
}

TEST(TwoElementary, Detection) {
  EXPECT_TRUE(is_2_elementary(a1()));
  EXPECT_TRUE(is_2_elementary(d4()));
  EXPECT_FALSE(is_2_elementary(standard_lattice(StandardKind::Diag, 4)));
  EXPECT_FALSE(is_2_elementary(standard_lattice(StandardKind::Diag, 3)));
}

TEST(TwoElementary, TableMatchesRationalForm) {
  const Lattice l = direct_sum({a1(), d4(), standard_lattice(StandardKind::Diag, 2)});
  const auto q = discriminant_form(l);
  const TwoElementaryForm t(q);
  ASSERT_EQ(t.size(), 16u);
  for (F2Element x = 0; x < t.size(); ++x) {
    EXPECT_EQ(t.q(x).value(), q.q(t.coordinates(x)));
    EXPECT_EQ(t.encode(t.coordinates(x)), x);
    for (F2Element y = 0; y < t.size(); ++y) EXPECT_EQ(t.b(x, y), q.b(t.coordinates(x), t.coordinates(y)) != 0);
  }
}

TEST(QuarterMod2, Arithmetic) {
  EXPECT_EQ(QuarterMod2::from_rational(Rational(-1, 2)).quarters(), 6);
  EXPECT_EQ(QuarterMod2::from_rational(Rational(5, 2)).quarters(), 2);
  EXPECT_EQ((-QuarterMod2::from_rational(Rational(1, 2))).quarters(), 6);
  EXPECT_THROW(QuarterMod2::from_rational(Rational(1, 3)), std::domain_error);
}

TEST(F2Linear, ComposeAndIdentity) {
  const F2Linear swap{2, {0b01, 0b10}};
  EXPECT_EQ(swap.compose(swap), F2Linear::identity(2));
  EXPECT_TRUE(swap.is_invertible());
  EXPECT_FALSE((F2Linear{2, {0b10, 0b10}}).is_invertible());
  EXPECT_EQ(swap.apply(0b10), 0b01u);
}

TEST(Glue, TwoPlusA1GivesU) {
  const Lattice two = standard_lattice(StandardKind::Diag, 2);
  const auto gamma = find_anti_isometry(discriminant_form(two), discriminant_form(a1()));
  ASSERT_TRUE(gamma.has_value());
  EXPECT_TRUE(gamma->is_anti_isometry());
  const Overlattice o = glue_overlattice(two, a1(), *gamma);
  EXPECT_EQ(o.index, 2);
  EXPECT_EQ(abs(o.lattice.determinant()), 1);
  EXPECT_TRUE(o.lattice.is_even());
  EXPECT_EQ(o.lattice.signature(), (Signature{1, 1, 0}));
}

TEST(Glue, NoAntiIsometryBetweenA1AndItself) {
  const auto q = discriminant_form(a1());
  EXPECT_FALSE(find_anti_isometry(q, q).has_value());
}

TEST(Glue, D4PairGivesE8) {
  // q_{D4} takes only the value 1 on nonzero elements, so −q = q.
  const auto q = discriminant_form(d4());
  const auto gamma = find_anti_isometry(q, q);
  ASSERT_TRUE(gamma.has_value());
  const Overlattice o = glue_overlattice(d4(), d4(), *gamma);
  EXPECT_EQ(abs(o.lattice.determinant()), 1);
  EXPECT_TRUE(o.lattice.is_even());
  EXPECT_EQ(o.lattice.signature(), (Signature{0, 8, 0}));
}

TEST(OrthogonalGroup, SmallOracles) {
  // O(q_{A1}) is trivial; A1² has the swap only; D4 has S₃ on the three nonzero elements.
  EXPECT_EQ(orthogonal_group_order(discriminant_form(a1())).order, 1);
  EXPECT_EQ(orthogonal_group_order(discriminant_form(direct_sum({a1(), a1()}))).order, 2);
  EXPECT_EQ(orthogonal_group_order(discriminant_form(d4())).order, 6);
}

TEST(InducedAction, MinusIdentityIsTrivialOnTwoElementary) {
  const Lattice l = direct_sum({a1(), d4()});
  const auto q = discriminant_form(l);
  const TwoElementaryForm t(q);
  const auto act = induced_discriminant_action(l, q, -IntMatrix::identity(l.rank()));
  EXPECT_EQ(act.to_f2(t), F2Linear::identity(t.rank()));
  EXPECT_THROW(induced_discriminant_action(l, q, IntMatrix::identity(l.rank()) + IntMatrix::identity(l.rank())),
               std::invalid_argument);
}
