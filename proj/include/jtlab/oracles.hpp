#pragma once

// Independent brute-force checks used by the test suite and the verify sweep.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "greene.hpp"
#include "partition.hpp"
#include "poset.hpp"

namespace jtlab::oracle {

// Minimum number of almost rectangular sub-multisets whose union is P, by
// exhaustive search over what covers the smallest remaining part.
inline int r_bruteforce(const Partition& P)
{
    auto d = P.distinct();
    std::vector<int> m;
    for (int v : d)
        m.push_back(P.mult(v));
    std::map<std::vector<int>, int> memo;
    auto rec = [&](auto&& self, std::vector<int>& cur) -> int {
        auto it = std::find_if(cur.begin(), cur.end(), [](int v) { return v > 0; });
        if (it == cur.end())
            return 0;
        if (auto hit = memo.find(cur); hit != memo.end())
            return hit->second;
        std::size_t i = static_cast<std::size_t>(it - cur.begin());
        bool adjacent = i + 1 < d.size() && d[i + 1] == d[i] + 1;
        int best = 1 << 20;
        int take_next_max = adjacent ? cur[i + 1] : 0;
        for (int a = 1; a <= cur[i]; ++a)
            for (int b = 0; b <= take_next_max; ++b) {
                cur[i] -= a;
                if (adjacent)
                    cur[i + 1] -= b;
                best = std::min(best, 1 + self(self, cur));
                cur[i] += a;
                if (adjacent)
                    cur[i + 1] += b;
            }
        memo[cur] = best;
        return best;
    };
    return rec(rec, m);
}

// Empty when the order agrees with reachability along cover edges.
inline std::string closure_mismatch(const PartitionPoset& D)
{
    std::size_t n = D.size();
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& e : D.cover_edges())
        out[e.source].push_back(e.target);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{a};
        seen[a] = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto w : out[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        for (std::size_t b = 0; b < n; ++b)
            if (static_cast<bool>(seen[b]) != D.less_equal(a, b))
                return to_string(D.vertices()[a]) + " vs " + to_string(D.vertices()[b]) + ": reachable=" +
                       (seen[b] ? "yes" : "no") + " leq=" + (D.less_equal(a, b) ? "yes" : "no");
    }
    return {};
}

// Empty when no cover edge has an element strictly between its ends.
inline std::string cover_not_minimal(const PartitionPoset& D)
{
    for (const auto& e : D.cover_edges()) {
        if (e.source == e.target || !D.less_equal(e.source, e.target))
            return "edge " + to_string(D.vertices()[e.source]) + " -> " + to_string(D.vertices()[e.target]) +
                   " is not a strict relation";
        for (std::size_t c = 0; c < D.size(); ++c)
            if (c != e.source && c != e.target && D.less_equal(e.source, c) && D.less_equal(c, e.target))
                return "edge " + to_string(D.vertices()[e.source]) + " -> " + to_string(D.vertices()[e.target]) +
                       " passes over " + to_string(D.vertices()[c]);
    }
    return {};
}

// c_k for k = 0..K (c_K = n) by exhaustive search: a subset is a union of k
// chains iff its largest antichain has at most k elements.
inline std::vector<int> chain_union_profile_bruteforce(const OrderRelation& R, std::size_t cap = kBruteForceCap)
{
    std::size_t n = R.size();
    if (n > cap)
        throw OracleUnavailable("chain brute force: " + std::to_string(n) + " vertices exceeds cap " +
                                std::to_string(cap));
    std::size_t full = std::size_t{1} << n;
    std::vector<std::uint8_t> width(full, 0);
    for (std::size_t S = 1; S < full; ++S) {
        bool anti = true;
        for (std::size_t a = 0; a < n && anti; ++a)
            if (S >> a & 1)
                for (std::size_t b = a + 1; b < n; ++b)
                    if ((S >> b & 1) && R.comparable(a, b)) {
                        anti = false;
                        break;
                    }
        std::uint8_t w = anti ? static_cast<std::uint8_t>(std::popcount(S)) : 0;
        if (!anti)
            for (std::size_t v = 0; v < n; ++v)
                if (S >> v & 1)
                    w = std::max(w, width[S & ~(std::size_t{1} << v)]);
        width[S] = w;
    }
    std::vector<int> best(n + 1, 0);
    for (std::size_t S = 0; S < full; ++S)
        for (std::size_t k = width[S]; k <= n; ++k)
            best[k] = std::max(best[k], std::popcount(S));
    std::vector<int> c{0};
    for (std::size_t k = 1; k <= n && c.back() < static_cast<int>(n); ++k)
        c.push_back(best[k]);
    return c;
}

}  // namespace jtlab::oracle
