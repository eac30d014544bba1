#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "poset.hpp"

namespace jtlab {

// Bases a_1 < ... < a_r of an r-U-chain; each contributes levels a_i and a_i + 1.
struct UChainSpec {
    std::vector<int> bases;
    friend bool operator==(const UChainSpec&, const UChainSpec&) = default;
};

struct UChainProfile {
    std::vector<int> u;  // u[0] = 0, ..., u[r(P)]
    Partition lambda_u;
    std::vector<UChainSpec> witnesses;  // witnesses[k-1] attains u[k]
};

inline void validate_uchain_spec(const UChainSpec& spec)
{
    for (std::size_t i = 0; i < spec.bases.size(); ++i) {
        if (spec.bases[i] < 1)
            throw PreconditionError("U-chain bases must be positive");
        if (i > 0 && spec.bases[i] < spec.bases[i - 1] + 2)
            throw PreconditionError("U-chain bases must be separated by at least 2");
    }
}

namespace detail {

// Whether chain i (1-based) with base a covers column u of level p.
inline bool uchain_column(int i, int a, int p, int u)
{
    if (p == a || p == a + 1)
        return i <= u && u <= p - i + 1;
    if (p > a + 1)
        return u == i || u == p - i + 1;
    return false;
}

inline int uchain_union_size(const Partition& P, const std::vector<int>& bases)
{
    int total = 0;
    for (int p : P.distinct()) {
        int cols = 0;
        for (int u = 1; u <= p; ++u) {
            for (std::size_t i = 0; i < bases.size(); ++i)
                if (uchain_column(static_cast<int>(i) + 1, bases[i], p, u)) {
                    ++cols;
                    break;
                }
        }
        total += cols * P.mult(p);
    }
    return total;
}

}  // namespace detail

// The set S_{A;i} for chain index i (1-based).
inline std::vector<PosetVertex> u_chain_component(const PartitionPoset& D, const UChainSpec& spec, int i)
{
    validate_uchain_spec(spec);
    if (i < 1 || i > static_cast<int>(spec.bases.size()))
        throw PreconditionError("U-chain component index out of range");
    std::vector<PosetVertex> out;
    for (const auto& v : D.vertices())
        if (detail::uchain_column(i, spec.bases[i - 1], v.p, v.u))
            out.push_back(v);
    return out;
}

inline std::vector<PosetVertex> u_chain_vertices(const PartitionPoset& D, const UChainSpec& spec)
{
    validate_uchain_spec(spec);
    std::vector<PosetVertex> out;
    for (const auto& v : D.vertices())
        for (std::size_t i = 0; i < spec.bases.size(); ++i)
            if (detail::uchain_column(static_cast<int>(i) + 1, spec.bases[i], v.p, v.u)) {
                out.push_back(v);
                break;
            }
    return out;
}

inline int simple_uchain_size(const Partition& P, int a)
{
    if (a < 1)
        throw PreconditionError("simple_uchain_size: base must be positive");
    int above = 0;
    for (int p : P.parts())
        if (p > a + 1)
            ++above;
    return a * P.mult(a) + (a + 1) * P.mult(a + 1) + 2 * above;
}

inline std::pair<int, int> uchain_base_range(const Partition& P)
{
    return {std::max(1, P.smallest() - 1), P.largest()};
}

// Exhaustive over separated base sets drawn from [lo, hi]; lexicographically
// first maximizer wins ties.
inline UChainProfile lambda_u_of(const Partition& P, int lo, int hi)
{
    if (P.empty())
        throw PreconditionError("lambda_u_of: empty partition");
    lo = std::max(lo, 1);
    int r = r_of(P);
    UChainProfile out;
    out.u.push_back(0);
    for (int k = 1; k <= r; ++k) {
        std::vector<int> cur, best;
        int best_size = -1;
        auto rec = [&](auto&& self, int next) -> void {
            if (static_cast<int>(cur.size()) == k) {
                int sz = detail::uchain_union_size(P, cur);
                if (sz > best_size) {
                    best_size = sz;
                    best = cur;
                }
                return;
            }
            int remaining = k - static_cast<int>(cur.size());
            for (int a = next; a + 2 * (remaining - 1) <= hi; ++a) {
                cur.push_back(a);
                self(self, a + 2);
                cur.pop_back();
            }
        };
        rec(rec, lo);
        if (best_size < 0)
            throw PreconditionError("lambda_u_of: base range too narrow for " + std::to_string(k) + " chains");
        out.u.push_back(best_size);
        out.witnesses.push_back({best});
    }
    std::vector<int> parts;
    for (std::size_t k = 1; k < out.u.size(); ++k)
        parts.push_back(out.u[k] - out.u[k - 1]);
    if (std::any_of(parts.begin(), parts.end(), [](int v) { return v < 1; }) ||
        !std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw CertificationError("U-chain increments do not form a partition for " + to_string(P));
    out.lambda_u = Partition(std::move(parts));
    return out;
}

inline UChainProfile lambda_u_of(const Partition& P)
{
    auto [lo, hi] = uchain_base_range(P);
    return lambda_u_of(P, lo, hi);
}

inline int oblak_index(const Partition& P)
{
    auto [lo, hi] = uchain_base_range(P);
    int best = 0;
    for (int a = lo; a <= hi; ++a)
        best = std::max(best, simple_uchain_size(P, a));
    return best;
}

}  // namespace jtlab
