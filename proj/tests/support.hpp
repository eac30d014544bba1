#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jtlab/greene.hpp"
#include "jtlab/partition.hpp"

namespace testsupport {

// Random order on n points: a random DAG along the index order, closed
// transitively by Floyd-Warshall.
inline jtlab::OrderRelation random_order(std::size_t n, double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution edge(density);
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        le[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j)
            le[i][j] = edge(rng);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (le[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (le[k][j])
                        le[i][j] = 1;
    jtlab::OrderRelation R(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (le[i][j])
                R.set_leq(i, j);
    return R;
}

// Partition numbers by the parts-at-most-k recurrence.
inline std::vector<long long> partition_numbers(int n)
{
    std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(n + 1, 0));
    for (int k = 0; k <= n; ++k)
        t[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            t[m][k] = t[m][k - 1] + (m >= k ? t[m - k][k] : 0);
    std::vector<long long> out;
    for (int m = 0; m <= n; ++m)
        out.push_back(t[m][m]);
    return out;
}

template <class F>
void for_all_partitions(int max_n, F&& f)
{
    for (int n = 1; n <= max_n; ++n)
        for (const auto& P : jtlab::all_partitions(n))
            f(P);
}

}  // namespace testsupport
