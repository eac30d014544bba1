#include <gtest/gtest.h>

#include <random>

#include "jtlab/commutant.hpp"
#include "jtlab/errors.hpp"
#include "jtlab/greene.hpp"
#include "jtlab/prime_field.hpp"
#include "jtlab/uchains.hpp"
#include "support.hpp"

using namespace jtlab;

TEST(PrimeField, ArithmeticMatchesWideModulo)
{
    std::mt19937_64 rng(1);
    const unsigned __int128 q = gf::kModulus;
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t a = rng() % gf::kModulus, b = rng() % gf::kModulus;
        EXPECT_EQ(gf::mul(a, b), static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q));
        EXPECT_EQ(gf::add(a, b), static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % q));
        EXPECT_EQ(gf::add(gf::sub(a, b), b), a);
        if (a) {
            EXPECT_EQ(gf::mul(a, gf::inv(a)), 1u);
        }
    }
    EXPECT_EQ(gf::reduce(static_cast<unsigned __int128>(gf::kModulus)), 0u);
    EXPECT_EQ(gf::kModulus, 2305843009213693951ULL);
    EXPECT_THROW(gf::inv(0), PreconditionError);
}

TEST(PrimeField, RankOfKnownMatrices)
{
    EXPECT_EQ(PrimeFieldMatrix::identity(5).rank(), 5u);
    EXPECT_EQ(PrimeFieldMatrix(4).rank(), 0u);
    PrimeFieldMatrix M(3);
    M.set(0, 0, 1), M.set(0, 1, 2), M.set(0, 2, 3);
    M.set(1, 0, 2), M.set(1, 1, 4), M.set(1, 2, 6);
    M.set(2, 0, 1), M.set(2, 1, 0), M.set(2, 2, 1);
    EXPECT_EQ(M.rank(), 2u);
    M.set(1, 2, gf::sub(0, 1));
    EXPECT_EQ(M.rank(), 3u);
}

TEST(PrimeField, RankMatchesProductOfRandomFactors)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 8, k = trial % (n + 1);
        // n x k times k x n, padded to square: rank k with probability ~1.
        PrimeFieldMatrix A(n), B(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                A.set(i, j, rng() % gf::kModulus);
                B.set(j, i, rng() % gf::kModulus);
            }
        EXPECT_EQ((A * B).rank(), k);
    }
}

TEST(SplitMix, ReferenceStream)
{
    SplitMix64 g(0);
    EXPECT_EQ(g.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(g.next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(g.next(), 0x06c45d188009454fULL);
    SplitMix64 h(42);
    for (int i = 0; i < 1000; ++i)
        EXPECT_LT(h.next_field(), gf::kModulus);
    EXPECT_EQ(trial_seeds(7, 3), trial_seeds(7, 3));
    EXPECT_NE(trial_seeds(7, 3), trial_seeds(8, 3));
}

TEST(Centralizer, BasisDimension)
{
    testsupport::for_all_partitions(10, [](const Partition& P) {
        // dim C(J_P) = sum over i, j of min(q_i, q_j).
        std::size_t dim = 0;
        for (int a : P.parts())
            for (int b : P.parts())
                dim += static_cast<std::size_t>(std::min(a, b));
        EXPECT_EQ(centralizer_basis(P).size(), dim) << to_string(P);
    });
}

TEST(Centralizer, BasisElementsCommuteWithJ)
{
    testsupport::for_all_partitions(7, [](const Partition& P) {
        auto J = jordan_matrix(P);
        for (const auto& e : centralizer_basis(P)) {
            auto M = basis_matrix(P, e);
            EXPECT_FALSE(M.is_zero());
            EXPECT_EQ(M * J, J * M) << to_string(P) << " (" << e.target << "," << e.source << "," << e.shift << ")";
        }
    });
}

TEST(Centralizer, SampleIsNilpotentCommutesAndHasStrictlyUpperQuotient)
{
    testsupport::for_all_partitions(10, [](const Partition& P) {
        auto J = jordan_matrix(P);
        auto A = sample_UB(P, 11);
        EXPECT_EQ(A * J, J * A) << to_string(P);
        EXPECT_NO_THROW(jordan_type(A)) << to_string(P);
        std::vector<std::size_t> off;
        std::size_t acc = 0;
        for (int q : P.parts()) {
            off.push_back(acc);
            acc += static_cast<std::size_t>(q);
        }
        for (std::size_t i = 0; i < P.length(); ++i)
            for (std::size_t j = 0; j < P.length(); ++j)
                if (P[i] == P[j] && i >= j) {
                    std::size_t q = static_cast<std::size_t>(P[i]);
                    EXPECT_EQ(A.at(off[i] + q - 1, off[j] + q - 1), 0u) << to_string(P) << " " << i << "," << j;
                }
    });
}

TEST(JordanType, OfJordanMatrixIsItsPartition)
{
    testsupport::for_all_partitions(12, [](const Partition& P) {
        EXPECT_EQ(jordan_type(jordan_matrix(P)).jordan_type, P) << to_string(P);
    });
    EXPECT_THROW(jordan_type(PrimeFieldMatrix::identity(3)), PreconditionError);
    EXPECT_EQ(jordan_type(PrimeFieldMatrix(0)).jordan_type, Partition());
}

TEST(QEstimate, DeterministicAndValidated)
{
    auto P = parse_partition("8^2,7,6,5^2,3,2^4");
    EXPECT_EQ(q_estimate(P, 3, 0), q_estimate(P, 3, 0));
    EXPECT_EQ(q_estimate(P, 3, 0), (Partition{23, 17, 10}));
    EXPECT_EQ(q_estimate(P, 1, 12345), (Partition{23, 17, 10}));
    EXPECT_THROW(q_estimate(P, 0, 0), PreconditionError);
}

TEST(QClosedForm, Examples)
{
    EXPECT_EQ(q_closed_form(parse_partition("8^2,7,6,5^2,3,2^4")), (Partition{23, 17, 10}));
    EXPECT_EQ(q_closed_form(Partition{3}), (Partition{3}));
    EXPECT_EQ(q_closed_form(parse_partition("2^3,1^4")), (Partition{10}));
    // The four-part rule; both sides sum to |P| = 82.
    auto four = parse_partition("10^2,9,8,7^2,5,4^4,2^3,1^4");
    EXPECT_EQ(q_closed_form(four), (Partition{33, 23, 16, 10}));
    EXPECT_EQ(q_estimate(four, 3, 0), (Partition{33, 23, 16, 10}));
    EXPECT_EQ(q_closed_form(parse_partition("9,7,5,3,1")), std::nullopt);
    EXPECT_THROW(q_closed_form(Partition()), PreconditionError);
}

TEST(QClosedForm, AgreesWithMonteCarloUpToFourteen)
{
    testsupport::for_all_partitions(14, [](const Partition& P) {
        auto cf = q_closed_form(P);
        if (cf) {
            EXPECT_EQ(*cf, q_estimate(P, 3, 0)) << to_string(P);
        } else {
            EXPECT_GE(r_of(P), 4) << to_string(P);
        }
    });
}

TEST(QEstimate, SandwichOnLargerPartitions)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 15 + trial % 10;
        auto all = all_partitions(n);
        const auto& P = all[rng() % all.size()];
        auto q = q_estimate(P, 3, trial);
        auto lam = lambda_of(P).lambda;
        auto lu = lambda_u_of(P).lambda_u;
        EXPECT_TRUE(dominance_leq(lu, q)) << to_string(P);
        EXPECT_TRUE(dominance_leq(q, lam)) << to_string(P);
        EXPECT_EQ(q.smallest(), mu(P)) << to_string(P);
        EXPECT_EQ(static_cast<int>(q.length()), r_of(P)) << to_string(P);
        EXPECT_EQ(q.largest(), oblak_index(P)) << to_string(P);
    }
}
