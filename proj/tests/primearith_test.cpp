#include "abelian/factorize.hpp"
#include "abelian/modular.hpp"
#include "abelian/primality.hpp"
#include "abelian/progression.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using abelian::Int;

TEST(IsPrime, WorkedExampleValues) {
    EXPECT_TRUE(abelian::is_prime(Int(75853)));
    EXPECT_TRUE(abelian::is_prime(Int(127)));
    EXPECT_FALSE(abelian::is_prime(Int(1)));
    EXPECT_FALSE(abelian::is_prime(Int(0)));
    ASSERT_FALSE(oracle::is_prime_trial(85));
    EXPECT_FALSE(abelian::is_prime(Int(85)));
}

TEST(IsPrime, AgreesWithSieveBelowOneMillion) {
    constexpr std::uint64_t kLimit = 1'000'000;
    const auto prime = oracle::sieve(kLimit);
    for (std::uint64_t n = 0; n <= kLimit; ++n) ASSERT_EQ(abelian::is_prime(n), prime[n]) << n;
}

TEST(IsPrime, StrongPseudoprimesAndCarmichaelNumbers) {
    // 3215031751 fools bases 2, 3, 5 and 7; 3825123056546413051 fools 2..23.
    for (std::uint64_t n : {561ull, 1105ull, 3215031751ull, 3825123056546413051ull})
        EXPECT_FALSE(abelian::is_prime(n)) << n;
    EXPECT_TRUE(abelian::is_prime(std::uint64_t{18446744073709551557ull}));  // largest 64-bit prime
}

TEST(IsPrime, BeyondSixtyFourBits) {
    const Int m61 = (Int(1) << 61) - 1;
    const Int m89 = (Int(1) << 89) - 1;
    const Int m127 = (Int(1) << 127) - 1;
    EXPECT_TRUE(abelian::is_prime(m89));
    EXPECT_TRUE(abelian::is_prime(m127));
    EXPECT_FALSE(abelian::is_prime(m61 * m89));
    EXPECT_FALSE(abelian::is_prime(m89 * m89));
    EXPECT_FALSE(abelian::is_prime((Int(1) << 67) - 1));  // 193707721 * 761838257287
    EXPECT_FALSE(abelian::is_prime(Int("318665857834031151167461")));  // strong pseudoprime to bases 2..37
    EXPECT_FALSE(abelian::is_prime(Int("3317044064679887385961981")));  // strong pseudoprime to bases 2..37
}

TEST(ModPow, SmallCasesAgainstRepeatedMultiplication) {
    EXPECT_EQ(abelian::mod_pow(7, 2, 10), 9);
    EXPECT_EQ(abelian::mod_pow(5, 0, 13), 1);
    EXPECT_EQ(abelian::mod_pow(5, 0, 1), 0);
    for (std::uint64_t n = 1; n < 60; ++n)
        for (std::uint64_t a = 0; a < 20; ++a)
            for (std::uint64_t e = 0; e < 40; ++e) ASSERT_EQ(abelian::mod_pow(a, e, n), oracle::pow_naive(a, e, n));
    const Int r = abelian::mod_pow(10, 1806, 9633331);
    EXPECT_EQ(r, oracle::pow_naive(10, 1806, 9633331));
    EXPECT_LT(r, 9633331);
}

TEST(ModPow, LargeModulusMatchesBoostPowm) {
    const Int m = (Int(1) << 127) - 1;
    const Int base("123456789012345678901234567890");
    const Int e("98765432109876543210");
    EXPECT_EQ(abelian::mod_pow(base, e, m), boost::multiprecision::powm(base, e, m));
}

TEST(Crt, CombinesAndMatchesScan) {
    const Int x = abelian::crt_combine({{1, 13}, {42, 43}});
    EXPECT_EQ(x, oracle::crt_scan({{1, 13}, {42, 43}}));
    EXPECT_EQ(abelian::crt_combine({{2, 3}, {3, 5}}), 8);
    EXPECT_EQ(abelian::crt_combine({{0, 1}}), 0);
    EXPECT_EQ(abelian::crt_combine({}), 0);
}

TEST(Crt, RejectsSharedFactors) {
    try {
        abelian::crt_combine({{1, 6}, {1, 4}});
        FAIL();
    } catch (const abelian::error& e) {
        EXPECT_EQ(e.code(), abelian::errc::not_coprime);
    }
}

TEST(Crt, RandomSystemsSatisfyEveryCongruence) {
    std::mt19937_64 rng(7);
    const std::uint64_t moduli[] = {3, 4, 5, 7, 11, 13, 17, 19, 23, 29};
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<abelian::Congruence> system;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> plain;
        Int M = 1;
        for (auto m : moduli) {
            if (rng() % 2) continue;
            const std::uint64_t r = rng() % m;
            system.push_back({r, m});
            plain.emplace_back(r, m);
            M *= m;
        }
        const Int x = abelian::crt_combine(system);
        ASSERT_GE(x, 0);
        ASSERT_LT(x, M);
        for (const auto& [r, m] : system) ASSERT_EQ(x % m, r);
        if (M < 200000) {
            ASSERT_EQ(x, oracle::crt_scan(plain));
        }
    }
}

TEST(Progression, WorkedExamplePrimes) {
    EXPECT_EQ(abelian::find_prime_in_progression(127, 5292, 0, Int(1'000'000'000)), 127);
    EXPECT_EQ(abelian::find_prime_in_progression(1765, 74088, 0, Int(1'000'000'000)), 75853);
    EXPECT_EQ(abelian::find_prime_in_progression(1, 2, 2, 100), 3);
}

TEST(Progression, ErrorsAndBounds) {
    try {
        abelian::find_prime_in_progression(2, 4, 0, 100);
        FAIL();
    } catch (const abelian::error& e) {
        EXPECT_EQ(e.code(), abelian::errc::not_coprime);
    }
    try {
        abelian::find_prime_in_progression(1, 100, 0, 100);  // 101 is just past the cap
        FAIL();
    } catch (const abelian::error& e) {
        EXPECT_EQ(e.code(), abelian::errc::search_bound_exceeded);
    }
    EXPECT_EQ(abelian::find_prime_in_progression(1, 100, 0, 101), 101);
    EXPECT_THROW(abelian::find_prime_in_progression(5, 3, 0, 100), std::invalid_argument);
}

TEST(Progression, SmallestPrimeByScan) {
    for (std::uint64_t m = 1; m <= 40; ++m) {
        for (std::uint64_t a = 0; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            const Int p = abelian::find_prime_in_progression(a, m, 0, Int(1'000'000));
            std::uint64_t expected = a;
            while (!oracle::is_prime_trial(expected) || expected == 0) expected += m;
            ASSERT_EQ(p, expected) << a << " mod " << m;
        }
    }
}

TEST(Factorize, WorkedExampleModuli) {
    using abelian::PrimePower;
    EXPECT_EQ(abelian::factorize(Int(559)).factors, (std::vector<PrimePower>{{13, 1}, {43, 1}}));
    EXPECT_EQ(abelian::factorize(Int(2359)).factors, (std::vector<PrimePower>{{7, 1}, {337, 1}}));
    EXPECT_EQ(abelian::factorize(Int(9633331)).factors, (std::vector<PrimePower>{{127, 1}, {75853, 1}}));
    EXPECT_TRUE(abelian::factorize(Int(1)).factors.empty());
}

TEST(Factorize, ReconstructsEveryIntegerUpToOneMillion) {
    const auto prime = oracle::sieve(1'000'000);
    for (std::uint64_t n = 1; n <= 1'000'000; n += (n < 20000 ? 1 : 97)) {
        const auto f = abelian::factorize(n);
        Int back = 1;
        Int previous = 1;
        for (const auto& [p, e] : f.factors) {
            ASSERT_GT(p, previous);
            ASSERT_TRUE(prime[abelian::to_u64(p)]);
            ASSERT_GE(e, 1u);
            back *= abelian::pow(p, e);
            previous = p;
        }
        ASSERT_EQ(back, n);
        ASSERT_EQ(f.value, n);
    }
}

TEST(Factorize, LargeSemiprimesAndPowers) {
    const Int p("1000000007"), q("998244353"), r("4294967311");
    const Int n = p * q * r * r;
    const auto f = abelian::factorize(n);
    ASSERT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(f.factors[0], (abelian::PrimePower{q, 1}));
    EXPECT_EQ(f.factors[1], (abelian::PrimePower{p, 1}));
    EXPECT_EQ(f.factors[2], (abelian::PrimePower{r, 2}));
}

TEST(Factorize, BudgetExhaustion) {
    const Int n = Int("1000000007") * Int("998244353");
    try {
        abelian::factorize(n, 10);
        FAIL();
    } catch (const abelian::error& e) {
        EXPECT_EQ(e.code(), abelian::errc::factorization_failed);
    }
}

TEST(Totients, WorkedExampleValues) {
    ASSERT_EQ(oracle::phi_count(559), 504u);
    EXPECT_EQ(abelian::euler_phi(abelian::factorize(Int(559))), 504);
    EXPECT_EQ(abelian::euler_phi(abelian::factorize(Int(1))), 1);
    EXPECT_EQ(abelian::euler_phi(abelian::factorize(Int(75853))), 75852);

    ASSERT_EQ(oracle::lambda_max_order(559), 84u);
    EXPECT_EQ(abelian::carmichael_lambda(abelian::factorize(Int(559))), 84);
    EXPECT_EQ(abelian::carmichael_lambda(abelian::factorize(Int(8))), 2);
    EXPECT_EQ(abelian::carmichael_lambda(abelian::factorize(Int(2))), 1);
}

TEST(Totients, AgreeWithDirectCountingUpTo5000) {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const auto f = abelian::factorize(n);
        ASSERT_EQ(abelian::euler_phi(f), oracle::phi_count(n)) << n;
        ASSERT_EQ(abelian::carmichael_lambda(f), oracle::lambda_max_order(n)) << n;
    }
}

TEST(Divisors, AscendingAndComplete) {
    const auto ds = abelian::divisors(abelian::factorize(Int(84)));
    EXPECT_EQ(ds, (std::vector<Int>{1, 2, 3, 4, 6, 7, 12, 14, 21, 28, 42, 84}));
    EXPECT_EQ(abelian::divisors(abelian::factorize(Int(1))), std::vector<Int>{1});
}
