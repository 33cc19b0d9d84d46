#include <gtest/gtest.h>

#include "cvxlat/analysis.hpp"
#include "support.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;

TEST(CheckJsd, SpecExamples) {
  EXPECT_TRUE(check_jsd(boolean(3)).holds);
  EXPECT_TRUE(check_jsd(n5()).holds);
  const auto l = m3();
  const auto r = check_jsd(l);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(revalidate(l, *r.witness));
  EXPECT_FALSE(check_jsd_reference(l).holds);
}

TEST(CheckJsd, AgreesWithTripleReference) {
  for (const auto& l : {m3(), n5(), boolean(3), chain(5), boolean(4)}) {
    EXPECT_EQ(check_jsd(l).holds, check_jsd_reference(l).holds);
  }
}

TEST(WeakAtom, SpecExamples) {
  EXPECT_TRUE(check_weak_atom_property(boolean(3)).holds);
  const auto l = m3();
  const auto r = check_weak_atom_property(l);
  ASSERT_FALSE(r.holds);
  EXPECT_TRUE(revalidate(l, *r.witness));
  EXPECT_TRUE(check_weak_atom_property(enumerate_closed_sets(FiniteGround(collinear(4)))).holds);
}

TEST(AntiExchange, SpecExamples) {
  EXPECT_TRUE(check_anti_exchange(FiniteGround(collinear(4))).holds);
  TableClosure symmetric(2, {0b00, 0b11, 0b11, 0b11});
  const auto r = check_anti_exchange(symmetric);
  ASSERT_FALSE(r.holds);
  EXPECT_TRUE(revalidate(closure_lattice(symmetric), *r.witness));
}

TEST(DRelation, BooleanAndChainAreEmpty) {
  EXPECT_TRUE(d_relation(boolean(3)).empty());
  EXPECT_TRUE(d_relation(chain(4)).empty());
}

TEST(LowerBounded, FourCollinearPointsHaveADCycle) {
  const auto l = enumerate_closed_sets(FiniteGround(collinear(4)));
  const auto r = check_lower_bounded(l);
  ASSERT_FALSE(r.holds);
  EXPECT_TRUE(revalidate(l, *r.witness));
  // The cycle runs among the two interior singletons.
  for (const auto& [role, idx] : r.witness->elements) {
    const auto s = l.set(idx);
    EXPECT_TRUE(s == 0b0010 || s == 0b0100) << role;
  }
  EXPECT_TRUE(check_lower_bounded(boolean(3)).holds);
  EXPECT_TRUE(check_lower_bounded(enumerate_closed_sets(FiniteGround(collinear(3)))).holds);
}

TEST(Biatomic, SpecExamples) {
  EXPECT_TRUE(check_biatomic(boolean(3)).holds);
  EXPECT_TRUE(check_biatomic(enumerate_closed_sets(FiniteGround(collinear(4)))).holds);
  EXPECT_TRUE(check_biatomic(enumerate_closed_sets(FiniteGround(collinear(3)))).holds);
}

TEST(Biatomic, ViolationIsReported) {
  // Atoms a, x; d and e cover only a, and x <= d ∨ e = 1 although a ∨ a = a.
  const auto l = FiniteLattice::from_leq({"0", "a", "x", "d", "e", "1"},
                                         {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {3, 5}, {4, 5}, {2, 5}});
  const auto r = check_biatomic(l);
  ASSERT_FALSE(r.holds);
  EXPECT_TRUE(revalidate(l, *r.witness));
}

TEST(FindM3, SpecExamples) {
  const auto l = m3();
  const auto w = find_m3(l);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(revalidate(l, *w));
  EXPECT_FALSE(find_m3(boolean(3)).has_value());
  EXPECT_FALSE(find_m3(n5()).has_value());
}

TEST(Distributive, Examples) {
  EXPECT_TRUE(is_distributive(boolean(3)));
  EXPECT_FALSE(is_distributive(m3()));
  EXPECT_FALSE(is_distributive(n5()));
}

TEST(VerifyEmbedding, SpecExamples) {
  const auto b = boolean(3);
  LatticeMap id{&b, &b, {}};
  for (std::size_t i = 0; i < b.size(); ++i) id.image.push_back(i);
  EXPECT_TRUE(verify_embedding(id).holds);

  const auto c = chain(2);
  LatticeMap constant{&c, &c, {0, 0}};
  const auto r = verify_embedding(constant);
  ASSERT_FALSE(r.holds);
  EXPECT_TRUE(revalidate(constant, *r.witness));
}
