#include <gtest/gtest.h>

#include "lensfill/families.hpp"

using namespace lensfill;

TEST(Family, Members) {
  EXPECT_EQ(family_member(FamilyId::Sec3, 3, 1), LensSpace(65, 14));
  EXPECT_EQ(family_member(FamilyId::Sec3, 9, 7), LensSpace(2633, 638));
  EXPECT_EQ(family_member(FamilyId::Sec4, 0, 0), LensSpace(8, 1));
  EXPECT_EQ(family_member(FamilyId::Sec4, 6, 0), LensSpace(896, 769));
  EXPECT_EQ(family_member(FamilyId::Sec4, 6, 1), LensSpace(4992, 4289));
  EXPECT_EQ(family_member(FamilyId::Ex34, 2, 1), LensSpace(5, 1));
  EXPECT_EQ(family_member(FamilyId::Tange, 1), LensSpace(59, 37));
  EXPECT_EQ(family_member(FamilyId::Tange, 2), LensSpace(185, 114));
  EXPECT_EQ(family_member(FamilyId::FourNSq, 0, 2), LensSpace(16, 5));
}

TEST(Family, Ranges) {
  EXPECT_THROW(family_member(FamilyId::Sec3, 2, 1), std::invalid_argument);
  EXPECT_THROW(family_member(FamilyId::Sec3, 3, 0), std::invalid_argument);
  EXPECT_THROW(family_member(FamilyId::Ex34, 2, 0), std::invalid_argument);
  EXPECT_THROW(family_member(FamilyId::Tange, 0), std::invalid_argument);
  EXPECT_THROW(family_member(FamilyId::FourNSq, 3, 0), std::invalid_argument);
  EXPECT_THROW(family_from_string("sec5"), std::invalid_argument);
  for (FamilyId f : all_families()) EXPECT_EQ(family_from_string(to_string(f)), f);
}

TEST(Family, Patterns) {
  EXPECT_EQ(*expected_cf(FamilyId::Sec4, 6, 0),
            ContinuedFraction({2, 2, 2, 2, 2, 2, 20, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(*expected_dual_cf(FamilyId::Tange, 1), ContinuedFraction({3, 4, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(*expected_cf(FamilyId::Ex34, 2, 1), ContinuedFraction({5}));
  EXPECT_FALSE(expected_cf(FamilyId::FourNSq, 0, 1).has_value());
}

TEST(Family, IdentitiesOnGrid) {
  EXPECT_TRUE(verify_cf_identities(FamilyId::Sec3, 3, 12, 1, 10).ok);
  EXPECT_TRUE(verify_cf_identities(FamilyId::Sec4, 0, 8, 0, 8).ok);
  EXPECT_TRUE(verify_cf_identities(FamilyId::Ex34, 2, 10, 1, 10).ok);
  EXPECT_TRUE(verify_cf_identities(FamilyId::Tange, 1, 50).ok);
  EXPECT_TRUE(verify_cf_identities(FamilyId::FourNSq, 0, 0, 1, 30).ok);
}

TEST(Family, Sec4Difference) {
  for (long m = 0; m <= 8; ++m)
    for (long n = 0; n <= 8; ++n) {
      const LensSpace l = family_member(FamilyId::Sec4, m, n);
      const Int M = m, N = n;
      ASSERT_EQ(l.p() - l.q(), M * M * M * N + 7 * M * M * N + 2 * M * M + 16 * M * N + 8 * M +
                                   12 * N + 7);
    }
}

TEST(Family, CoprimeUpToAMillion) {
  // family_member asserts coprimality itself; walk each family until p > 10^6.
  for (long m = 3;; ++m) {
    if (family_member(FamilyId::Sec3, m, 1).p() > 1000000) break;
    for (long n = 1; family_member(FamilyId::Sec3, m, n).p() <= 1000000; ++n) {
    }
  }
  for (long m = 0;; ++m) {
    if (family_member(FamilyId::Sec4, m, 0).p() > 1000000) break;
    for (long n = 0; family_member(FamilyId::Sec4, m, n).p() <= 1000000; ++n) {
    }
  }
  for (long m = 2;; ++m) {
    if (family_member(FamilyId::Ex34, m, 1).p() > 1000000) break;
    for (long n = 1; family_member(FamilyId::Ex34, m, n).p() <= 1000000; ++n) {
    }
  }
  for (long l = 1; family_member(FamilyId::Tange, l).p() <= 1000000; ++l) {
  }
  for (long n = 1; family_member(FamilyId::FourNSq, 0, n).p() <= 1000000; ++n) {
  }
}

TEST(Tange, DSquareFormula) {
  for (long l = 1; l <= 100; ++l) {
    const LensSpace t = family_member(FamilyId::Tange, l);
    auto r = d_square_obstruction(SingularityData::from_type(t.p(), t.p() - t.q()));
    ASSERT_EQ(r.value, Rational(tange_d_closed_form(l))) << l;
  }
  EXPECT_EQ(tange_d_closed_form(2), 529);
}

TEST(Tange, SquareHits) {
  EXPECT_EQ(tange_square_hits(100000), (std::vector<Int>{2, 57, 275, 6324, 30302}));
}
