#include "abelian/group_spec.hpp"
#include "abelian/groups.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using abelian::GroupPresentation;
using abelian::Int;
using abelian::InvariantFactors;

namespace {

InvariantFactors chain(std::vector<Int> xs) { return InvariantFactors::from_chain(std::move(xs)); }

GroupPresentation random_presentation(std::mt19937_64& rng) {
    GroupPresentation g;
    const int count = static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) g.moduli.push_back(Int(2 + rng() % 200));
    return g;
}

bool is_chain(const InvariantFactors& g) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (g[i] < 2) return false;
        if (i > 0 && g[i - 1] % g[i] != 0) return false;
    }
    return true;
}

}  // namespace

TEST(Normalize, Examples) {
    EXPECT_EQ(abelian::normalize({{3, 42}}), chain({42, 3}));
    EXPECT_EQ(abelian::normalize({{6, 21}}), chain({42, 3}));
    EXPECT_EQ(abelian::normalize({{}}), chain({}));
    EXPECT_EQ(abelian::normalize({{4, 4, 2}}), chain({4, 4, 2}));
    EXPECT_EQ(abelian::normalize({{2, 3}}), chain({6}));
    EXPECT_EQ(abelian::normalize({{12, 18}}), chain({36, 6}));
}

TEST(Normalize, RejectsSmallModuli) {
    for (Int bad : {Int(0), Int(1), Int(-3)}) {
        try {
            abelian::normalize({{5, bad}});
            FAIL();
        } catch (const abelian::error& e) {
            EXPECT_EQ(e.code(), abelian::errc::invalid_modulus);
        }
    }
}

TEST(InvariantFactors, ChainValidation) {
    EXPECT_NO_THROW(chain({12, 6, 2}));
    EXPECT_THROW(chain({6, 4}), abelian::error);
    EXPECT_THROW(chain({3, 6}), abelian::error);
    EXPECT_THROW(chain({1}), abelian::error);
}

TEST(Order, Examples) {
    EXPECT_EQ(abelian::order(chain({42, 3})), 126);
    EXPECT_EQ(abelian::order(chain({})), 1);
    EXPECT_EQ(abelian::order(chain({5})), 5);
}

TEST(Isomorphic, Examples) {
    EXPECT_TRUE(abelian::isomorphic({{3, 42}}, {{6, 21}}));
    EXPECT_FALSE(abelian::isomorphic({{4}}, {{2, 2}}));
    EXPECT_TRUE(abelian::isomorphic({{2, 3}}, {{6}}));
}

TEST(NormalizeProperties, IdempotentChainAndOrderPreserving) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const GroupPresentation g = random_presentation(rng);
        const InvariantFactors once = abelian::normalize(g);
        ASSERT_TRUE(is_chain(once));
        ASSERT_EQ(abelian::order(once), abelian::product(g.moduli));
        ASSERT_EQ(abelian::normalize({once.factors()}), once);
    }
}

TEST(NormalizeProperties, PermutationAndCoprimeSplitting) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
        GroupPresentation g = random_presentation(rng);
        const InvariantFactors base = abelian::normalize(g);

        std::shuffle(g.moduli.begin(), g.moduli.end(), rng);
        ASSERT_EQ(abelian::normalize(g), base);

        // replace one modulus m = a*b (gcd 1, a, b >= 2) by the pair (a, b)
        GroupPresentation split;
        bool did_split = false;
        for (const Int& m : g.moduli) {
            Int a = 0;
            if (!did_split) {
                for (Int q = 2; q * q <= m; ++q) {
                    if (m % q != 0) continue;
                    Int part = 1, rest = m;
                    while (rest % q == 0) {
                        rest /= q;
                        part *= q;
                    }
                    if (rest > 1) a = part;
                    break;  // q is the smallest prime factor
                }
            }
            if (a != 0) {
                split.moduli.push_back(a);
                split.moduli.push_back(m / a);
                did_split = true;
            } else {
                split.moduli.push_back(m);
            }
        }
        ASSERT_EQ(abelian::normalize(split), base);
    }
}

TEST(IsomorphicProperties, EquivalenceRelation) {
    std::mt19937_64 rng(13);
    std::vector<GroupPresentation> pool;
    for (int i = 0; i < 60; ++i) {
        GroupPresentation g;
        const int count = static_cast<int>(rng() % 3);
        for (int j = 0; j < count; ++j) g.moduli.push_back(Int(2 + rng() % 11));
        pool.push_back(g);
    }
    for (const auto& a : pool) {
        ASSERT_TRUE(abelian::isomorphic(a, a));
        for (const auto& b : pool) {
            ASSERT_EQ(abelian::isomorphic(a, b), abelian::isomorphic(b, a));
            if (!abelian::isomorphic(a, b)) continue;
            for (const auto& c : pool) {
                if (abelian::isomorphic(b, c)) {
                    ASSERT_TRUE(abelian::isomorphic(a, c));
                }
            }
        }
    }
}

TEST(FormatGroup, Notation) {
    EXPECT_EQ(abelian::format_group(chain({42, 3})), "Z42 x Z3");
    EXPECT_EQ(abelian::format_group(chain({})), "1");
    EXPECT_EQ(abelian::format_factors_compact(chain({4, 2})), "4x2");
}

TEST(GroupSpec, Grammar) {
    using abelian::parse_group_spec;
    EXPECT_EQ(parse_group_spec("Z3xZ42").moduli, (std::vector<Int>{3, 42}));
    EXPECT_EQ(parse_group_spec("[42,3]").moduli, (std::vector<Int>{42, 3}));
    EXPECT_EQ(parse_group_spec(" z6 * Z21 ").moduli, (std::vector<Int>{6, 21}));
    EXPECT_EQ(parse_group_spec("(4 X 4 x 2)").moduli, (std::vector<Int>{4, 4, 2}));
    EXPECT_EQ(parse_group_spec("12").moduli, (std::vector<Int>{12}));
    EXPECT_TRUE(parse_group_spec("1").moduli.empty());
    EXPECT_TRUE(parse_group_spec("[]").moduli.empty());
    EXPECT_TRUE(parse_group_spec("").moduli.empty());
}

TEST(GroupSpec, Errors) {
    using abelian::parse_group_spec;
    try {
        parse_group_spec("Z0xZ5");
        FAIL();
    } catch (const abelian::error& e) {
        EXPECT_EQ(e.code(), abelian::errc::invalid_modulus);
    }
    try {
        parse_group_spec("Z3yZ5");
        FAIL();
    } catch (const abelian::parse_error& e) {
        EXPECT_EQ(e.position(), 2u);
    }
    try {
        parse_group_spec("Z3x");
        FAIL();
    } catch (const abelian::parse_error& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_group_spec("[3,5"), abelian::parse_error);
    EXPECT_THROW(parse_group_spec("Zx3"), abelian::parse_error);
    EXPECT_THROW(parse_group_spec("3,,5"), abelian::parse_error);
}
