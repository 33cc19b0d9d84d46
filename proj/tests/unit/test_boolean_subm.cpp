#include <gtest/gtest.h>

#include "cvxlat/boolean_subm.hpp"
#include "cvxlat/errors.hpp"
#include "cvxlat/simplex_embedding.hpp"
#include "support.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;

namespace {

// Family mask from a list of element masks.
Mask fam(std::initializer_list<Mask> ts) {
  Mask f = 0;
  for (const auto t : ts) f |= Mask{1} << t;
  return f;
}

// Literal filter over every family of B_{n+1}.
std::size_t brute_count(std::size_t n) {
  const std::size_t m = b_size(n);
  std::size_t count = 0;
  for (Mask f = 0; f < (Mask{1} << m); ++f) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = 0; b < m && ok; ++b) {
        if (((f >> a) & 1U) && ((f >> b) & 1U) && !((f >> (a & b)) & 1U)) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST(SubmEnumeration, CountsMatchBruteForce) {
  EXPECT_EQ(enumerate_subm(0).size(), 4U);
  EXPECT_EQ(enumerate_subm(1).size(), 14U);
  EXPECT_EQ(enumerate_subm(2).size(), 122U);
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(count_subm(n), brute_count(n)) << n;
  EXPECT_EQ(count_subm(3), 4960U);
}

TEST(SubmEnumeration, TooLargeIsResourceError) { EXPECT_THROW(enumerate_subm(3), ResourceError); }

TEST(SubmEnumeration, EveryFamilyIsMeetClosed) {
  for (const auto f : enumerate_subm(2)) EXPECT_TRUE(is_meet_closed(f, 2));
}

TEST(SubmLattice, JoinAddsIntersection) {
  const auto l = subm_lattice(1);
  EXPECT_EQ(l.size(), 14U);
  const auto a = *l.index_of(fam({0b01}));
  const auto b = *l.index_of(fam({0b10}));
  EXPECT_EQ(l.set(l.join(a, b)), fam({0b01, 0b10, 0}));
  const auto empty = *l.index_of(0);
  for (std::size_t s = 0; s < l.size(); ++s) EXPECT_EQ(l.meet(s, empty), empty);
}

TEST(SubmLattice, TopSublattice) {
  EXPECT_EQ(subm_top_lattice(1).size(), 7U);
  EXPECT_EQ(subm_top_lattice(2).size(), 61U);
}

TEST(SubmLattice, AxiomsExhaustiveForSmallN) {
  const auto l = subm_lattice(1);
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      EXPECT_EQ(l.set(l.meet(a, b)), l.set(a) & l.set(b));
      EXPECT_EQ(l.set(l.join(a, b)), meet_closure(l.set(a) | l.set(b), 1));
      EXPECT_EQ(l.join(a, l.meet(a, b)), a);
    }
  }
}

TEST(Psi, Cases) {
  const auto s = base_simplex(2);
  EXPECT_EQ(psi(0b111, s).pieces, 0U);
  EXPECT_EQ(psi(0b011, s).pieces, fam({0b011}));
  EXPECT_TRUE(contains(psi(0b011, s), P({0, 1}), s));
  EXPECT_FALSE(contains(psi(0b011, s), P({0, 0}), s));
  EXPECT_TRUE(contains(psi(0, s), P({R(1, 3), R(1, 3)}), s));
  EXPECT_FALSE(contains(psi(0, s), P({R(1, 2), R(1, 2)}), s));
}

TEST(Psi, PiecesAreDisjoint) {
  const auto s = base_simplex(2);
  const std::vector<QPoint> probes{P({0, 0}), P({1, 0}), P({R(1, 2), 0}), P({R(1, 2), R(1, 2)}), P({R(1, 4), R(1, 4)})};
  for (const auto& q : probes) {
    std::size_t hits = 0;
    for (Mask t = 0; t < 0b111; ++t) hits += contains(psi(t, s), q, s);
    EXPECT_EQ(hits, 1U) << to_string(q);
  }
}

TEST(Phi, Cases) {
  const auto s = base_simplex(2);
  EXPECT_EQ(phi(0, s).pieces, 0U);
  EXPECT_EQ(phi(fam({0b111}), s).pieces, 0U);
  EXPECT_THROW(phi(fam({0b001, 0b010}), s), InputError);
  const auto all = phi((Mask{1} << 8) - 1, s);
  for (const auto& q : {P({0, 0}), P({R(1, 2), R(1, 2)}), P({R(1, 5), R(1, 7)})}) EXPECT_TRUE(contains(all, q, s));
  EXPECT_FALSE(contains(all, P({1, 1}), s));
}

TEST(Phi, PreservesMeets) {
  const auto s = base_simplex(2);
  const auto fams = enumerate_subm(2);
  for (std::size_t a = 0; a < fams.size(); a += 7) {
    for (std::size_t b = 0; b < fams.size(); b += 5) {
      EXPECT_EQ(phi(fams[a] & fams[b], s).pieces, phi(fams[a], s).pieces & phi(fams[b], s).pieces);
    }
  }
}

TEST(ClaimJoin, NoncomparablePair) {
  const auto s = base_simplex(2);
  const auto r = verify_claim_join(0b011, 0b101, s);
  EXPECT_TRUE(r.holds) << r.offending;
  EXPECT_TRUE(verify_claim_join(0b001, 0b001, s).holds);
}

TEST(ClaimJoin, AllPairsN2) {
  const auto s = base_simplex(2);
  for (Mask a = 0; a <= 0b111; ++a) {
    for (Mask b = a; b <= 0b111; ++b) {
      const auto r = verify_claim_join(a, b, s);
      EXPECT_TRUE(r.holds) << mask_label(a) << " " << mask_label(b) << ": " << r.offending;
    }
  }
}
