#include <gtest/gtest.h>

#include <set>

#include "jtlab/errors.hpp"
#include "jtlab/greene.hpp"
#include "jtlab/poset.hpp"
#include "jtlab/uchains.hpp"
#include "support.hpp"

using namespace jtlab;

TEST(UChains, LambdaUExample)
{
    auto lu = lambda_u_of(parse_partition("6^2,4,3,2^3,1"));
    EXPECT_EQ(lu.lambda_u, (Partition{15, 8, 3}));
    EXPECT_EQ(lu.u, (std::vector<int>{0, 15, 23, 26}));
    ASSERT_EQ(lu.witnesses.size(), 3u);
    EXPECT_EQ(lu.witnesses[0].bases, (std::vector<int>{1}));
    EXPECT_EQ(lu.witnesses[1].bases, (std::vector<int>{1, 5}));
    EXPECT_EQ(lu.witnesses[2].bases, (std::vector<int>{1, 3, 5}));
}

TEST(UChains, AlternativeWitnessesAttainTheSameSizes)
{
    auto P = parse_partition("6^2,4,3,2^3,1");
    auto D = build_poset(P);
    EXPECT_EQ(u_chain_vertices(D, {{2}}).size(), 15u);
    EXPECT_EQ(u_chain_vertices(D, {{2, 5}}).size(), 23u);
    EXPECT_EQ(u_chain_vertices(D, {{1, 3, 5}}).size(), 26u);
    EXPECT_EQ(detail::uchain_union_size(P, {2, 5}), 23);
}

TEST(UChains, SpecValidation)
{
    EXPECT_NO_THROW(validate_uchain_spec({{1, 3, 5}}));
    EXPECT_THROW(validate_uchain_spec({{0}}), PreconditionError);
    EXPECT_THROW(validate_uchain_spec({{2, 3}}), PreconditionError);
    EXPECT_THROW(validate_uchain_spec({{4, 2}}), PreconditionError);
    EXPECT_THROW(simple_uchain_size(Partition{3}, 0), PreconditionError);
}

TEST(UChains, SimpleSizeFormulaCountsVertices)
{
    testsupport::for_all_partitions(12, [](const Partition& P) {
        auto D = build_poset(P);
        for (int a = 1; a <= P.largest() + 1; ++a)
            EXPECT_EQ(static_cast<int>(u_chain_vertices(D, {{a}}).size()), simple_uchain_size(P, a))
                << to_string(P) << " a=" << a;
    });
}

TEST(UChains, ComponentsAreDisjointChains)
{
    testsupport::for_all_partitions(10, [](const Partition& P) {
        auto D = build_poset(P);
        auto [lo, hi] = uchain_base_range(P);
        for (int a = lo; a <= hi; ++a)
            for (int b = a + 2; b <= hi; ++b) {
                UChainSpec spec{{a, b}};
                std::set<PosetVertex> seen;
                for (int i = 1; i <= 2; ++i) {
                    auto S = u_chain_component(D, spec, i);
                    for (std::size_t x = 0; x < S.size(); ++x) {
                        EXPECT_TRUE(seen.insert(S[x]).second) << to_string(P);
                        for (std::size_t y = x + 1; y < S.size(); ++y)
                            EXPECT_TRUE(leq(D, S[x], S[y]) || leq(D, S[y], S[x])) << to_string(P);
                    }
                }
                EXPECT_EQ(seen.size(), u_chain_vertices(D, spec).size());
                EXPECT_EQ(static_cast<int>(seen.size()), detail::uchain_union_size(P, {a, b}));
            }
    });
}

TEST(UChains, WideningTheBaseRangeChangesNothing)
{
    testsupport::for_all_partitions(10, [](const Partition& P) {
        auto narrow = lambda_u_of(P);
        auto wide = lambda_u_of(P, 1, P.largest() + 3);
        EXPECT_EQ(narrow.u, wide.u) << to_string(P);
    });
}

TEST(UChains, ProfileProperties)
{
    testsupport::for_all_partitions(12, [](const Partition& P) {
        auto lu = lambda_u_of(P);
        auto lam = lambda_of(P).lambda;
        EXPECT_EQ(lu.lambda_u.total(), P.total()) << to_string(P);
        EXPECT_EQ(static_cast<int>(lu.lambda_u.length()), r_of(P)) << to_string(P);
        EXPECT_EQ(lu.lambda_u.smallest(), mu(P)) << to_string(P);
        EXPECT_TRUE(dominance_leq(lu.lambda_u, lam)) << to_string(P);
        EXPECT_EQ(lu.lambda_u.largest(), oblak_index(P));
        for (std::size_t k = 0; k < lu.witnesses.size(); ++k)
            EXPECT_EQ(static_cast<int>(lu.witnesses[k].bases.size()), static_cast<int>(k) + 1);
    });
}

TEST(UChains, OblakIndex)
{
    EXPECT_EQ(oblak_index(parse_partition("8^2,7,6,5^2,3,2^4")), 23);
    EXPECT_EQ(oblak_index(parse_partition("6^2,4,3,2^3,1")), 15);
    EXPECT_EQ(oblak_index(Partition{1}), 1);
}
