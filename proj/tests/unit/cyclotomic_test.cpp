#include "primehopf/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace primehopf;

namespace {

// [n choose s]_q as a sum over s-subsets of {0..n-1}: q^(sum - s(s-1)/2).
Cyclotomic qbinom_by_subsets(int n, int s, const Cyclotomic& q) {
  Cyclotomic total;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != s) continue;
    long sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += i;
    total += q.pow(sum - static_cast<long>(s) * (s - 1) / 2);
  }
  return total;
}

}  // namespace

TEST(Cyclotomic, RootOfUnityArithmetic) {
  for (int n = 1; n <= 12; ++n) {
    const Cyclotomic z = primitive_root(n);
    EXPECT_TRUE(z.pow(n).is_one()) << n;
    Cyclotomic sum;
    for (int k = 0; k < n; ++k) sum += z.pow(k);
    EXPECT_EQ(sum, Cyclotomic(n == 1 ? 1L : 0L)) << n;
    EXPECT_EQ(multiplicative_order(z), std::optional<long>(n));
  }
  EXPECT_EQ(primitive_root(4).pow(2), Cyclotomic(-1L));
  EXPECT_EQ(primitive_root(6).pow(3), Cyclotomic(-1L));
  EXPECT_EQ(primitive_root(3) + primitive_root(3).pow(2), Cyclotomic(-1L));
}

TEST(Cyclotomic, MixedConductors) {
  const Cyclotomic i = primitive_root(4);
  const Cyclotomic w = primitive_root(3);
  const Cyclotomic p = i * w;
  EXPECT_EQ(multiplicative_order(p), std::optional<long>(12));
  EXPECT_EQ(p, Cyclotomic::zeta_power(12, 7));
  EXPECT_EQ((i + w) - w, i);
}

TEST(Cyclotomic, FieldOperations) {
  const Cyclotomic a = Cyclotomic::parse("1/2 + 3 * z(5)^2");
  const Cyclotomic b = Cyclotomic::parse("z(5)^1 - 2/3");
  EXPECT_EQ(a * b / b, a);
  EXPECT_EQ(a * a.inverse(), Cyclotomic(1L));
  EXPECT_EQ(a.pow(-2) * a.pow(2), Cyclotomic(1L));
  EXPECT_THROW(Cyclotomic().inverse(), std::domain_error);
  EXPECT_FALSE(multiplicative_order(Cyclotomic(2L)).has_value());
}

TEST(Cyclotomic, TextRoundTrip) {
  for (const char* text : {"0", "1", "-3/7", "z(4)^1", "1 - z(6)^1", "2/3 * z(8)^3 + 5 - z(8)^1",
                           "(1 + z(3)^1) * z(3)^2"}) {
    const Cyclotomic c = Cyclotomic::parse(text);
    EXPECT_EQ(Cyclotomic::parse(c.str()), c) << text;
  }
  EXPECT_EQ(Cyclotomic::parse("z(6)^-1"), Cyclotomic::zeta_power(6, 5));
  EXPECT_THROW(Cyclotomic::parse("z(4"), std::invalid_argument);
  EXPECT_THROW(Cyclotomic::parse("1 +"), std::invalid_argument);
}

TEST(Cyclotomic, GaussianBinomialMatchesSubsetCount) {
  for (int N : {1, 2, 3, 4, 5, 6, 8}) {
    for (int k = 0; k < N; ++k) {
      const Cyclotomic q = Cyclotomic::zeta_power(N, k);
      for (int n = 0; n <= 8; ++n)
        for (int s = 0; s <= n; ++s) EXPECT_EQ(qbinom(n, s, q), qbinom_by_subsets(n, s, q)) << n << " " << s;
    }
  }
  EXPECT_EQ(qbinom(4, 2, Cyclotomic(1L)), Cyclotomic(6L));
  EXPECT_THROW(qbinom(2, 3, Cyclotomic(1L)), std::invalid_argument);
}

TEST(Cyclotomic, GaussianBinomialVanishesAtPrimitiveRoots) {
  EXPECT_TRUE(qbinom(4, 2, primitive_root(4)).is_zero());
  for (int n = 2; n <= 8; ++n)
    for (int s = 1; s < n; ++s) EXPECT_TRUE(qbinom(n, s, primitive_root(n)).is_zero()) << n << " " << s;
}

TEST(Cyclotomic, IntegerHelpers) {
  for (long a = -20; a <= 20; ++a)
    for (long b = 1; b <= 12; ++b) {
      EXPECT_EQ(gcd_long(a, b), std::gcd(a, b));
      const long r = mod_floor(a, b);
      EXPECT_TRUE(r >= 0 && r < b && (a - r) % b == 0);
    }
  EXPECT_EQ(lcm_long(4, 6), 12);
}
