#include "primehopf/classify.hpp"
#include "primehopf/iso.hpp"

#include <gtest/gtest.h>

using namespace primehopf;

namespace {

PresentationPtr taft(int n, int t, int k = 1) {
  return Presentation::make(FamilySpec::taft(n, t, Cyclotomic::zeta_power(n, k)));
}

std::vector<Family> families(const Classification& c) {
  std::vector<Family> out;
  for (const auto& f : c.families) out.push_back(f.family);
  return out;
}

}  // namespace

TEST(Classify, KnownRegimes) {
  EXPECT_EQ(families(classify({1, 1, Dichotomy::Any})),
            (std::vector<Family>{Family::PolynomialLine, Family::LaurentLine}));
  EXPECT_EQ(families(classify({5, 1, Dichotomy::Primitive})), std::vector<Family>{Family::Taft});
  EXPECT_EQ(classify({5, 1, Dichotomy::Primitive}).families[0].instances[0].t, 0);
  EXPECT_EQ(families(classify({2, 1, Dichotomy::Grouplike})), std::vector<Family>{Family::Dihedral});
  EXPECT_TRUE(classify({3, 1, Dichotomy::Grouplike}).families.empty());
  EXPECT_EQ(families(classify({6, 6, Dichotomy::Grouplike})), std::vector<Family>{Family::Liu});
  const Classification c = classify({6, 6, Dichotomy::Primitive});
  ASSERT_EQ(c.families.size(), 1u);
  EXPECT_EQ(c.families[0].instances.size(), 2u);  // t = 1, 5
}

TEST(Classify, OpenAndInvalid) {
  const Classification c = classify({4, 2, Dichotomy::Any});
  EXPECT_EQ(c.status, "open");
  EXPECT_TRUE(c.families.empty());
  EXPECT_THROW(classify({6, 4, Dichotomy::Any}), std::invalid_argument);
  EXPECT_THROW(classify({0, 1, Dichotomy::Any}), std::invalid_argument);
  EXPECT_THROW(parse_dichotomy("both"), std::invalid_argument);
  EXPECT_EQ(parse_dichotomy("Group-like"), Dichotomy::Grouplike);
}

TEST(Classify, RoundTrip) {
  for (long n = 1; n <= 5; ++n) {
    for (long m : {1L, n}) {
      for (Dichotomy d : {Dichotomy::Primitive, Dichotomy::Grouplike}) {
        for (const auto& f : classify({n, m, d}).families) {
          for (const auto& s : f.instances) {
            const auto h = Presentation::make(s);
            const IoIm r = io_im(h);
            EXPECT_EQ(r.io, n) << h->label();
            EXPECT_EQ(r.im, m) << h->label();
            EXPECT_EQ(dichotomy(h), dichotomy_name(d)) << h->label();
          }
        }
      }
    }
  }
}

TEST(Iso, TaftCriterion) {
  // xi = eta^v gives H(n,t,xi) = H(n,vt,eta).
  const IsoVerdict v = family_iso(taft(5, 1, 2), taft(5, 2, 1));
  EXPECT_EQ(v.verdict, IsoKind::HopfIsomorphic);
  ASSERT_TRUE(v.witness && v.inverse);
  EXPECT_TRUE(v.witness->relation_failures().empty());
  EXPECT_EQ(family_iso(taft(5, 1, 1), taft(5, 2, 1)).verdict, IsoKind::NotIsomorphic);
  EXPECT_EQ(family_iso(taft(4, 1), taft(5, 1)).verdict, IsoKind::NotIsomorphic);
  // Same xi: bialgebra isomorphism iff t agrees.
  for (int t = 0; t < 4; ++t)
    for (int s = 0; s < 4; ++s) EXPECT_EQ(family_iso(taft(4, t), taft(4, s)).verdict == IsoKind::HopfIsomorphic, t == s);
}

TEST(Iso, LiuCriterion) {
  const auto a = Presentation::make(FamilySpec::liu(4, 2));
  // theta = z(4)^3, i0 = 1 gives the same xi = theta^3 = z(4).
  const auto b = Presentation::make(FamilySpec::liu(4, 2, Cyclotomic::zeta_power(4, 3), 1));
  ASSERT_EQ(a->liu().xi, b->liu().xi);
  const IsoVerdict v = family_iso(a, b);
  EXPECT_EQ(v.verdict, IsoKind::HopfIsomorphic) << v.reason;
  EXPECT_EQ(family_iso(a, Presentation::make(FamilySpec::liu(4, 3))).verdict, IsoKind::NotIsomorphic);
  EXPECT_EQ(family_iso(a, Presentation::make(FamilySpec::liu(4, 2, Cyclotomic::zeta_power(4, 3), 0))).verdict,
            IsoKind::NotIsomorphic);
}

TEST(Iso, CrossFamilyAndExplicitMaps) {
  const auto d = Presentation::make(FamilySpec::dihedral());
  EXPECT_EQ(family_iso(d, taft(2, 0)).verdict, IsoKind::NotIsomorphic);
  EXPECT_EQ(family_iso(taft(3, 1), Presentation::make(FamilySpec::liu(3, 1))).verdict, IsoKind::NotIsomorphic);
  EXPECT_EQ(family_iso(d, d).verdict, IsoKind::HopfIsomorphic);

  const auto h = taft(4, 1);
  EXPECT_EQ(hopf_iso_check(AlgebraMap::identity(h), AlgebraMap::identity(h)).verdict, IsoKind::HopfIsomorphic);
  EXPECT_EQ(hopf_iso_check(AlgebraMap::identity(h), std::nullopt).verdict, IsoKind::Undecided);
  // g -> g^2 breaks xg = xi gx.
  const AlgebraMap bad = AlgebraMap::from_letters(h, h, {{"g", Element::parse(h, "g^2")}, {"x", Element::parse(h, "x")}});
  const IsoVerdict v = hopf_iso_check(bad, std::nullopt);
  EXPECT_EQ(v.verdict, IsoKind::Undecided);
  EXPECT_NE(v.reason.find("relation"), std::string::npos);
}

TEST(Iso, EquivalenceOnGrid) {
  std::vector<PresentationPtr> grid;
  for (int k : {1, 3}) {
    for (int t = 0; t < 4; ++t) grid.push_back(taft(4, t, k));
  }
  for (int k : {1, 3})
    for (int i0 : {0, 1}) grid.push_back(Presentation::make(FamilySpec::liu(4, 2, Cyclotomic::zeta_power(4, k), i0)));
  const std::size_t N = grid.size();
  std::vector<std::vector<bool>> iso(N, std::vector<bool>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) iso[i][j] = family_iso(grid[i], grid[j]).verdict == IsoKind::HopfIsomorphic;
  for (std::size_t i = 0; i < N; ++i) {
    EXPECT_TRUE(iso[i][i]);
    for (std::size_t j = 0; j < N; ++j) {
      EXPECT_EQ(iso[i][j], iso[j][i]);
      for (std::size_t k = 0; k < N; ++k)
        if (iso[i][j] && iso[j][k]) {
          EXPECT_TRUE(iso[i][k]);
        }
    }
  }
}
