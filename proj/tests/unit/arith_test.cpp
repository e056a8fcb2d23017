#include "oddcycles/arith.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oddcycles/errors.hpp"
#include "support/oracles.hpp"

namespace oddcycles {
namespace {

using testing::brute_order2;
using testing::divide_out_twos;
using testing::gcd_count_totient;
using testing::pascal_cycle_count;
using testing::trial_factor;

TEST(TwoAdicValuation, Examples) {
  EXPECT_EQ(two_adic_valuation(18), 1u);
  EXPECT_EQ(two_adic_valuation(32), 5u);
  EXPECT_EQ(two_adic_valuation(15), 0u);
  EXPECT_EQ(two_adic_valuation(u64{1} << 63), 63u);
}

TEST(TwoAdicValuation, RejectsZero) { EXPECT_THROW(two_adic_valuation(0), DomainError); }

TEST(TwoAdicValuation, OddPartIsOddUpToAMillion) {
  for (u64 n = 1; n <= 1'000'000; ++n) {
    const unsigned t = two_adic_valuation(n);
    ASSERT_EQ((n >> t) & 1, 1u) << n;
    ASSERT_EQ(t, divide_out_twos(n)) << n;
  }
}

TEST(Primality, MatchesTrialDivisionBelow100k) {
  for (u64 n = 0; n < 100'000; ++n) {
    const auto f = n < 2 ? std::map<u64, unsigned>{} : trial_factor(n);
    const bool prime = f.size() == 1 && f.begin()->second == 1;
    ASSERT_EQ(is_prime(n), prime) << n;
  }
}

TEST(Primality, KnownLargeValues) {
  EXPECT_TRUE(is_prime(6700417));
  EXPECT_TRUE(is_prime(2147483647));           // M_31
  EXPECT_TRUE(is_prime(2305843009213693951));  // M_61
  EXPECT_FALSE(is_prime(4294967297));          // F_5
  EXPECT_FALSE(is_prime(3215031751));          // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051)); // strong pseudoprime to bases 2..23
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(63), Factorization({{3, 2}, {7, 1}}));
  EXPECT_EQ(factorize(2047), Factorization({{23, 1}, {89, 1}}));
  EXPECT_EQ(factorize(4294967297), Factorization({{641, 1}, {6700417, 1}}));
}

TEST(Factorize, RejectsBelowTwo) {
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(1), DomainError);
}

TEST(Factorize, LargeSemiprimeNeedsRho) {
  // Both factors are above the trial-division bound.
  const u64 a = 1'000'000'007, b = 1'000'000'009;
  EXPECT_EQ(factorize(a * b), Factorization({{a, 1}, {b, 1}}));
  // M_59 = 179951 * 3203431780337.
  EXPECT_EQ(factorize((u64{1} << 59) - 1), Factorization({{179951, 1}, {3203431780337, 1}}));
}

TEST(Factorize, InvariantsOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const u64 n = 2 + rng() % (u64{1} << 62);
    const Factorization f = factorize(n);
    ASSERT_EQ(f.value(), n);
    u64 prev = 0;
    for (const auto& [p, e] : f.factors()) {
      ASSERT_TRUE(is_prime(p)) << p;
      ASSERT_GT(p, prev);
      ASSERT_GE(e, 1u);
      prev = p;
    }
  }
}

TEST(Factorize, MatchesTrialDivision) {
  for (u64 n = 2; n < 20'000; ++n) {
    std::vector<PrimePower> expected;
    for (const auto& [p, e] : trial_factor(n)) expected.push_back({p, e});
    ASSERT_EQ(factorize(n), Factorization(expected)) << n;
  }
}

TEST(Factorization, Divisors) {
  EXPECT_EQ(factorize(63).divisors(), (std::vector<u64>{1, 3, 7, 9, 21, 63}));
  EXPECT_EQ(factorize(2047).divisors(), (std::vector<u64>{1, 23, 89, 2047}));
}

TEST(EulerTotient, Examples) {
  EXPECT_EQ(euler_totient(OddModulus(17)), 16u);
  EXPECT_EQ(euler_totient(OddModulus(63)), 36u);
  EXPECT_EQ(euler_totient(OddModulus(641)), 640u);
}

TEST(EulerTotient, MatchesGcdCountAndIsEven) {
  for (u64 q = 3; q < 3000; q += 2) {
    const u64 phi = euler_totient(OddModulus(q));
    ASSERT_EQ(phi, gcd_count_totient(q)) << q;
    ASSERT_EQ(phi % 2, 0u) << q;
  }
}

TEST(Order2Oracle, Examples) {
  EXPECT_EQ(order2_oracle(OddModulus(7)), 3u);
  EXPECT_EQ(order2_oracle(OddModulus(89)), 11u);
  EXPECT_EQ(order2_oracle(OddModulus(17)), 8u);
  EXPECT_EQ(order2_oracle(OddModulus(6700417)), 64u);
  EXPECT_EQ(order2_oracle(OddModulus(4294967297)), 64u);
}

TEST(Order2Oracle, DirectCheckUpTo10k) {
  for (u64 q = 3; q <= 10'000; q += 2) {
    const u64 r = order2_oracle(OddModulus(q));
    u64 x = 1;
    for (u64 i = 1; i < r; ++i) {
      x = x * 2 % q;
      ASSERT_NE(x, 1u) << "q=" << q << " r=" << i;
    }
    ASSERT_EQ(x * 2 % q, 1u) << q;
  }
}

TEST(Order2Oracle, BothMethodsAgree) {
  for (u64 q = 3; q <= 20'001; q += 2) {
    const OddModulus m(q);
    ASSERT_EQ(order2_oracle(m, OrderMethod::kDoubling),
              order2_oracle(m, OrderMethod::kTotientDivisors))
        << q;
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const u64 q = (rng() % 20'000'000) | 1;
    if (q < 3) continue;
    const OddModulus m(q);
    ASSERT_EQ(order2_oracle(m, OrderMethod::kDoubling),
              order2_oracle(m, OrderMethod::kTotientDivisors))
        << q;
  }
}

TEST(CycleCountFormula, Examples) {
  EXPECT_EQ(cycle_count_formula(11, 3), 15u);
  EXPECT_EQ(cycle_count_formula(7, 3), 5u);
  EXPECT_EQ(cycle_count_formula(13, 5), 99u);
}

TEST(CycleCountFormula, MatchesPascalAndIsSymmetric) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 61u}) {
    for (unsigned k = 1; k < p; ++k) {
      ASSERT_EQ(cycle_count_formula(p, k), static_cast<u64>(pascal_cycle_count(p, k)))
          << p << "," << k;
      ASSERT_EQ(cycle_count_formula(p, k), cycle_count_formula(p, p - k)) << p << "," << k;
    }
  }
}

TEST(CycleCountFormula, BinomialSumIdentity) {
  for (u64 p : {3, 5, 7, 11, 13, 17, 19}) {
    u64 sum = 0;
    for (u64 k = 1; k < p; ++k) sum += k * cycle_count_formula(p, k);
    EXPECT_EQ(sum, ((u64{1} << p) - 2) / 2) << p;
  }
}

TEST(CycleCountFormula, Errors) {
  EXPECT_THROW(cycle_count_formula(9, 2), DomainError);
  EXPECT_THROW(cycle_count_formula(7, 0), DomainError);
  EXPECT_THROW(cycle_count_formula(7, 7), DomainError);
  // C(127, 63) / 127 is about 2^120.
  EXPECT_THROW(cycle_count_formula(127, 64), OverflowError);
  EXPECT_NO_THROW(cycle_count_formula(127, 5));
}

TEST(LegendreTauRatio, Examples) {
  EXPECT_EQ(legendre_tau_ratio(OddModulus(7)), 6u);
  EXPECT_EQ(legendre_tau_ratio(OddModulus(3)), 2u);
  EXPECT_EQ(legendre_tau_ratio(OddModulus(17)), 16u);
}

TEST(LegendreTauRatio, MatchesProductOfValuations) {
  // (2q-2)!/(q-1)! is the product of q..2q-2.
  for (u64 q = 3; q < 2000; q += 2) {
    u64 direct = 0;
    for (u64 m = q; m <= 2 * q - 2; ++m) direct += divide_out_twos(m);
    ASSERT_EQ(legendre_tau_ratio(OddModulus(q)), direct) << q;
  }
}

TEST(LegendreTauRatio, EqualsQMinusOneUpTo1e5) {
  for (u64 q = 3; q <= 100'000; q += 2) ASSERT_EQ(legendre_tau_ratio(OddModulus(q)), q - 1) << q;
}

TEST(OddModulusType, Validation) {
  EXPECT_THROW(OddModulus(0), DomainError);
  EXPECT_THROW(OddModulus(1), DomainError);
  EXPECT_THROW(OddModulus(10), DomainError);
  EXPECT_THROW(OddModulus(u64{1} << 63 | 1), DomainError);
  EXPECT_NO_THROW(OddModulus(OddModulus::kMax));
  const OddModulus q(17);
  EXPECT_TRUE(q.contains(15));
  EXPECT_FALSE(q.contains(16));
  EXPECT_FALSE(q.contains(17));
  EXPECT_EQ(q.odd_count(), 8u);
}

}  // namespace
}  // namespace oddcycles
