#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "flow.hpp"
#include "partition.hpp"
#include "poset.hpp"

namespace jtlab {

// A finite order given by its reflexive closure.  Used so the chain and
// antichain machinery can run on posets other than D_P.
class OrderRelation {
public:
    explicit OrderRelation(std::size_t n) : n_(n), le_(n * n, 0)
    {
        for (std::size_t i = 0; i < n; ++i)
            le_[i * n + i] = 1;
    }

    static OrderRelation of(const PartitionPoset& D)
    {
        OrderRelation R(D.size());
        for (std::size_t i = 0; i < D.size(); ++i)
            for (std::size_t j = 0; j < D.size(); ++j)
                R.le_[i * R.n_ + j] = D.less_equal(i, j) ? 1 : 0;
        return R;
    }

    // Caller keeps the relation transitive.
    void set_leq(std::size_t i, std::size_t j) { le_[i * n_ + j] = 1; }

    std::size_t size() const noexcept { return n_; }
    bool leq(std::size_t i, std::size_t j) const { return le_[i * n_ + j] != 0; }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

private:
    std::size_t n_;
    std::vector<std::uint8_t> le_;
};

struct ChainUnionProfile {
    std::vector<int> c;  // c[0] = 0, ..., last entry = n
    Partition lambda;
};

inline constexpr std::size_t kBruteForceCap = 16;

namespace detail {

inline std::vector<std::int64_t> chain_union_costs(const OrderRelation& R, std::size_t max_units)
{
    std::size_t n = R.size();
    // Nodes: 0 source, 1 sink, 2+2i in-copy of i, 3+2i out-copy of i.
    MinCostFlow flow(2 * n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        flow.add_edge(0, 2 + 2 * i, 1, 0);
        flow.add_edge(2 + 2 * i, 3 + 2 * i, 1, -1);
        flow.add_edge(3 + 2 * i, 1, 1, 0);
        for (std::size_t j = 0; j < n; ++j)
            if (R.less(i, j))
                flow.add_edge(3 + 2 * i, 2 + 2 * j, 1, 0);
    }
    return flow.negative_cost_profile(0, 1, max_units);
}

}  // namespace detail

// c_k for k = 0..K, where K is the first k with c_k = n.
inline std::vector<int> chain_union_profile(const OrderRelation& R)
{
    auto costs = detail::chain_union_costs(R, R.size());
    std::vector<int> c;
    for (auto v : costs)
        c.push_back(static_cast<int>(-v));
    if (c.back() != static_cast<int>(R.size()))
        throw CertificationError("chain union flow did not saturate");
    return c;
}

inline int max_k_chain_union(const OrderRelation& R, int k)
{
    if (k < 1)
        throw PreconditionError("max_k_chain_union: k must be positive");
    auto costs = detail::chain_union_costs(R, static_cast<std::size_t>(k));
    return static_cast<int>(-costs.back());
}

inline int max_k_chain_union(const PartitionPoset& D, int k)
{
    return max_k_chain_union(OrderRelation::of(D), k);
}

inline ChainUnionProfile lambda_of(const Partition& P)
{
    ChainUnionProfile out;
    out.c = chain_union_profile(OrderRelation::of(build_poset(P)));
    std::vector<int> parts;
    for (std::size_t k = 1; k < out.c.size(); ++k)
        parts.push_back(out.c[k] - out.c[k - 1]);
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw CertificationError("chain union increments are not weakly decreasing for " + to_string(P));
    out.lambda = Partition(std::move(parts));
    return out;
}

// Width via Dilworth: n minus a maximum matching in the strict comparability
// bipartite graph.
inline int max_antichain_size(const OrderRelation& R)
{
    std::size_t n = R.size();
    std::vector<std::size_t> match_right(n, n);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!R.less(i, j) || seen[j])
                continue;
            seen[j] = 1;
            if (match_right[j] == n || augment(match_right[j])) {
                match_right[j] = i;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (std::size_t i = 0; i < n; ++i) {
        seen.assign(n, 0);
        if (augment(i))
            ++matching;
    }
    return static_cast<int>(n) - matching;
}

// a_k for k = 0..K where a_K = n, by exhaustive search over vertex subsets.
inline std::vector<int> antichain_union_profile_bruteforce(const OrderRelation& R, std::size_t cap = kBruteForceCap)
{
    std::size_t n = R.size();
    if (n > cap)
        throw OracleUnavailable("antichain brute force: " + std::to_string(n) + " vertices exceeds cap " +
                                std::to_string(cap));
    std::size_t full = std::size_t{1} << n;
    // height[S] = longest chain inside S.  A set is a union of k antichains iff
    // its height is at most k (Mirsky).
    std::vector<std::uint8_t> height(full, 0);
    for (std::size_t S = 1; S < full; ++S) {
        std::uint8_t best = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (!(S >> v & 1))
                continue;
            std::size_t below = 0;
            for (std::size_t w = 0; w < n; ++w)
                if ((S >> w & 1) && R.less(w, v))
                    below |= std::size_t{1} << w;
            best = std::max<std::uint8_t>(best, static_cast<std::uint8_t>(1 + height[below]));
        }
        height[S] = best;
    }
    std::vector<int> best_size(n + 1, 0);
    for (std::size_t S = 0; S < full; ++S) {
        int sz = std::popcount(S);
        for (std::size_t k = height[S]; k <= n; ++k)
            best_size[k] = std::max(best_size[k], sz);
    }
    std::vector<int> a{0};
    for (std::size_t k = 1; k <= n && a.back() < static_cast<int>(n); ++k)
        a.push_back(best_size[k]);
    return a;
}

inline int max_k_antichain_union_bruteforce(const OrderRelation& R, int k, std::size_t cap = kBruteForceCap)
{
    if (k < 0)
        throw PreconditionError("max_k_antichain_union_bruteforce: negative k");
    if (k == 0)
        return 0;
    if (k == 1)
        return max_antichain_size(R);
    auto a = antichain_union_profile_bruteforce(R, cap);
    return static_cast<std::size_t>(k) < a.size() ? a[k] : a.back();
}

inline int max_k_antichain_union_bruteforce(const PartitionPoset& D, int k, std::size_t cap = kBruteForceCap)
{
    return max_k_antichain_union_bruteforce(OrderRelation::of(D), k, cap);
}

}  // namespace jtlab
