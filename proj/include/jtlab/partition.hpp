#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace jtlab {

// A partition stored as weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 1)
                throw PreconditionError("partition parts must be positive, got " + std::to_string(p));
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int total() const noexcept { return total_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    int largest() const
    {
        require_nonempty();
        return parts_.front();
    }

    int smallest() const
    {
        require_nonempty();
        return parts_.back();
    }

    // Multiplicity n_p; zero for sizes that do not occur.
    int mult(int p) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), p));
    }

    // Distinct part sizes in ascending order.
    std::vector<int> distinct() const
    {
        std::vector<int> d(parts_.rbegin(), parts_.rend());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        return d;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    void require_nonempty() const
    {
        if (parts_.empty())
            throw PreconditionError("empty partition");
    }

    std::vector<int> parts_;
    int total_ = 0;
};

struct SpreadDecomposition {
    std::vector<Partition> spreads;  // highest parts first
    std::vector<int> offsets;        // offsets[k] = sum of r over the spreads listed after k
};

namespace detail {

inline int parse_positive(std::string_view text, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("malformed partition token '" + std::string(text) + "' in '" + std::string(whole) + "'");
    if (value < 1)
        throw ParseError("parts and exponents must be positive in '" + std::string(whole) + "'");
    return value;
}

}  // namespace detail

// Accepts "6^2,4,3,2^3,1" or "6 6 4 3 2 2 2 1" (commas and whitespace both separate).
inline Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j]))
            ++j;
        std::string_view token = text.substr(i, j - i);
        std::size_t caret = token.find('^');
        int part = 0, exponent = 1;
        if (caret == std::string_view::npos) {
            part = detail::parse_positive(token, text);
        } else {
            part = detail::parse_positive(token.substr(0, caret), text);
            exponent = detail::parse_positive(token.substr(caret + 1), text);
        }
        if (exponent > 1000000)
            throw ParseError("exponent too large in '" + std::string(text) + "'");
        parts.insert(parts.end(), exponent, part);
        i = j;
    }
    if (parts.empty())
        throw ParseError("empty partition text");
    return Partition(std::move(parts));
}

// Exponent form, e.g. "6^2,4,3,2^3,1".
inline std::string to_string(const Partition& P)
{
    std::string out;
    const auto& v = P.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(v[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline Partition conjugate(const Partition& P)
{
    std::vector<int> out;
    if (P.empty())
        return Partition();
    for (int col = 1; col <= P.largest(); ++col) {
        int count = 0;
        for (int p : P.parts())
            if (p >= col)
                ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

inline bool dominance_leq(const Partition& P, const Partition& Q)
{
    if (P.total() != Q.total())
        throw PreconditionError("dominance_leq: partitions of different totals " + std::to_string(P.total()) +
                                " and " + std::to_string(Q.total()));
    int sp = 0, sq = 0;
    std::size_t len = std::max(P.length(), Q.length());
    for (std::size_t i = 0; i < len; ++i) {
        sp += i < P.length() ? P[i] : 0;
        sq += i < Q.length() ? Q[i] : 0;
        if (sp > sq)
            return false;
    }
    return true;
}

// Multiset union.
inline Partition partition_union(const Partition& A, const Partition& B)
{
    std::vector<int> v = A.parts();
    v.insert(v.end(), B.parts().begin(), B.parts().end());
    return Partition(std::move(v));
}

inline bool is_spread(const Partition& P)
{
    if (P.empty())
        return false;
    auto d = P.distinct();
    return d.back() - d.front() + 1 == static_cast<int>(d.size());
}

inline bool is_almost_rectangular(const Partition& P)
{
    return !P.empty() && P.largest() - P.smallest() <= 1;
}

namespace detail {

inline int spread_r(const Partition& S)
{
    return (static_cast<int>(S.distinct().size()) + 1) / 2;
}

// Components lowest first.
inline std::vector<Partition> spreads_ascending(const Partition& P)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    const auto& v = P.parts();
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (!cur.empty() && *it - cur.back() >= 2) {
            out.emplace_back(std::move(cur));
            cur.clear();
        }
        cur.push_back(*it);
    }
    if (!cur.empty())
        out.emplace_back(std::move(cur));
    return out;
}

}  // namespace detail

inline SpreadDecomposition spread_decompose(const Partition& P)
{
    if (P.empty())
        throw PreconditionError("spread_decompose: empty partition");
    auto asc = detail::spreads_ascending(P);
    SpreadDecomposition out;
    std::vector<int> offsets;
    int acc = 0;
    for (const auto& S : asc) {
        offsets.push_back(acc);
        acc += detail::spread_r(S);
    }
    out.spreads.assign(asc.rbegin(), asc.rend());
    out.offsets.assign(offsets.rbegin(), offsets.rend());
    return out;
}

inline int r_of(const Partition& P)
{
    if (P.empty())
        throw PreconditionError("r_of: empty partition");
    int r = 0;
    for (const auto& S : detail::spreads_ascending(P))
        r += detail::spread_r(S);
    return r;
}

inline Partition shift_down(const Partition& P, int l)
{
    if (l < 0)
        throw PreconditionError("shift_down: negative shift");
    if (!P.empty() && l >= P.smallest())
        throw PreconditionError("shift_down: shift " + std::to_string(l) + " is not below the smallest part " +
                                std::to_string(P.smallest()));
    std::vector<int> v = P.parts();
    for (int& p : v)
        p -= l;
    return Partition(std::move(v));
}

namespace detail {

inline int mu_spread(const Partition& S)
{
    int p = S.smallest();
    int r = spread_r(S);
    auto n = [&](int i) { return S.mult(p + i - 1); };
    int best = std::numeric_limits<int>::max();
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j)
            best = std::min(best, p * n(2 * i - 1) + (p + 1) * n(2 * j));
    return best;
}

}  // namespace detail

// mu of each shifted component P_k - 2 rbar_k, lowest spread first.
inline std::vector<int> mu_components(const Partition& P)
{
    if (P.empty())
        throw PreconditionError("mu: empty partition");
    std::vector<int> out;
    int rbar = 0;
    for (const auto& S : detail::spreads_ascending(P)) {
        out.push_back(detail::mu_spread(shift_down(S, 2 * rbar)));
        rbar += detail::spread_r(S);
    }
    return out;
}

inline int mu(const Partition& P)
{
    auto c = mu_components(P);
    return *std::min_element(c.begin(), c.end());
}

// All partitions of n in decreasing lexicographic order.
inline std::vector<Partition> all_partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace jtlab
