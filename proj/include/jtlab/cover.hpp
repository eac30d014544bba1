#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "poset.hpp"

namespace jtlab {

struct AntichainFamily {
    std::vector<std::vector<PosetVertex>> antichains;
};

struct FamilyCertificate {
    bool valid = false;
    bool disjoint = false;
    bool antichains = false;
    bool sizes = false;
    std::size_t count = 0;
    int antichain_size = 0;
    std::string failure;
};

// Every member an antichain of size r(P), members pairwise disjoint.
inline FamilyCertificate validate_family(const PartitionPoset& D, const AntichainFamily& F)
{
    FamilyCertificate cert;
    cert.count = F.antichains.size();
    cert.antichain_size = r_of(D.partition());
    cert.disjoint = cert.antichains = cert.sizes = true;
    std::set<PosetVertex> seen;
    for (std::size_t i = 0; i < F.antichains.size(); ++i) {
        const auto& A = F.antichains[i];
        for (const auto& v : A) {
            if (!D.contains(v)) {
                cert.antichains = false;
                cert.failure = "vertex " + to_string(v) + " not in poset";
                return cert;
            }
            if (!seen.insert(v).second && cert.disjoint) {
                cert.disjoint = false;
                cert.failure = "vertex " + to_string(v) + " used twice";
            }
        }
        if (static_cast<int>(A.size()) != cert.antichain_size && cert.sizes) {
            cert.sizes = false;
            cert.failure = "antichain " + std::to_string(i) + " has size " + std::to_string(A.size());
        }
        if (!is_antichain(D, A) && cert.antichains) {
            cert.antichains = false;
            cert.failure = "member " + std::to_string(i) + " is not an antichain";
        }
    }
    cert.valid = cert.disjoint && cert.antichains && cert.sizes;
    return cert;
}

// O^t(x, k): vertices (x+i-1, p_{2i-1}, k_i) for i = 1..t.
inline std::vector<PosetVertex> o_antichain(const Partition& P, int t, int x, const std::vector<int>& k)
{
    if (!is_spread(P))
        throw PreconditionError("o_antichain: partition is not a spread");
    int p1 = P.smallest();
    int s = static_cast<int>(P.distinct().size());
    int r = (s + 1) / 2;
    if (t < 0 || t > r || static_cast<int>(k.size()) != t)
        throw PreconditionError("o_antichain: need 0 <= t <= r and t row indices");
    std::vector<PosetVertex> out;
    if (t == 0)
        return out;
    if (x < 1 || x > p1)
        throw PreconditionError("o_antichain: column out of range");
    for (int i = 1; i <= t; ++i) {
        int level = p1 + 2 * i - 2;
        if (k[i - 1] < 1 || k[i - 1] > P.mult(level))
            throw PreconditionError("o_antichain: row index out of range");
        out.push_back({x + i - 1, level, k[i - 1]});
    }
    return out;
}

// E^t(y, k'): vertices (y+j-1, p_{2j}, k'_j) for j = t+1..r.
inline std::vector<PosetVertex> e_antichain(const Partition& P, int t, int y, const std::vector<int>& k)
{
    if (!is_spread(P))
        throw PreconditionError("e_antichain: partition is not a spread");
    int p1 = P.smallest();
    int s = static_cast<int>(P.distinct().size());
    int r = (s + 1) / 2;
    if (t < 0 || t > r || static_cast<int>(k.size()) != r - t)
        throw PreconditionError("e_antichain: need 0 <= t <= r and r - t row indices");
    std::vector<PosetVertex> out;
    if (t == r)
        return out;
    if (2 * r > s)
        throw PreconditionError("e_antichain: odd spread has no top even level");
    if (y < 1 || y > p1 + 1)
        throw PreconditionError("e_antichain: column out of range");
    for (int j = t + 1; j <= r; ++j) {
        int level = p1 + 2 * j - 1;
        if (k[j - t - 1] < 1 || k[j - t - 1] > P.mult(level))
            throw PreconditionError("e_antichain: row index out of range");
        out.push_back({y + j - 1, level, k[j - t - 1]});
    }
    return out;
}

// Two-level matching model.  Lower level columns x = 1..p; the upper level
// sits g + 2 above it and its column y + 1 is addressed by y = 1..p+g.  A
// lower x and upper y form an antichain iff x <= y <= x + g.
struct ColumnPair {
    int lower = 0;
    int upper = 0;
    friend bool operator==(const ColumnPair&, const ColumnPair&) = default;
};

enum class MatchCase { a, b, c };

inline char match_case_letter(MatchCase m)
{
    return m == MatchCase::a ? 'a' : m == MatchCase::b ? 'b' : 'c';
}

struct LemmaMatch {
    MatchCase which = MatchCase::a;
    int a = 0;
    int b = 0;
    std::vector<ColumnPair> pairs;
    std::vector<int> lower_used;  // index x - 1
    std::vector<int> upper_used;  // index y - 1
};

namespace detail {

inline std::vector<ColumnPair> pair_in_order(const std::vector<int>& xs, const std::vector<int>& ys)
{
    std::vector<ColumnPair> out;
    std::size_t j = 0;
    int left = 0;
    for (std::size_t x = 0; x < xs.size(); ++x)
        for (int c = 0; c < xs[x]; ++c) {
            while (j < ys.size() && left == ys[j]) {
                ++j;
                left = 0;
            }
            if (j == ys.size())
                throw CertificationError("pair_in_order: more lower than upper vertices");
            out.push_back({static_cast<int>(x) + 1, static_cast<int>(j) + 1});
            ++left;
        }
    int total_y = std::accumulate(ys.begin(), ys.end(), 0);
    if (static_cast<int>(out.size()) != total_y)
        throw CertificationError("pair_in_order: more upper than lower vertices");
    return out;
}

inline void check_pairs(const std::vector<ColumnPair>& pairs, int p, int g)
{
    for (const auto& c : pairs)
        if (c.lower < 1 || c.lower > p || c.upper < c.lower || c.upper > c.lower + g || c.upper > p + g)
            throw CertificationError("matching produced a comparable pair (" + std::to_string(c.lower) + "," +
                                     std::to_string(c.upper) + ")");
}

inline void bump(std::vector<int>& v, int from, int to, int by)
{
    for (int c = from; c <= to; ++c)
        v[c - 1] += by;
}

}  // namespace detail

// The theta <= eta matching: every upper vertex in the first theta rows is
// paired, with gθ = pa + b selecting the case.
inline LemmaMatch match_theta_le_eta(int p, int g, int eta, int theta, int delta, int d)
{
    if (p < 1 || g < 1 || eta < 0 || theta < 1 || delta < 0 || delta >= p || d < 0 || d > p - delta)
        throw PreconditionError("match_theta_le_eta: parameters out of range");
    if ((p + g) * theta > p * eta + delta)
        throw PreconditionError("match_theta_le_eta: needs (p+g)theta <= p eta + delta");
    LemmaMatch m;
    m.a = g * theta / p;
    m.b = g * theta % p;
    m.lower_used.assign(p, theta + m.a);
    if (m.b <= delta) {
        m.which = MatchCase::a;
        detail::bump(m.lower_used, d + delta - m.b + 1, d + delta, 1);
    } else if (m.b <= delta + d) {
        m.which = MatchCase::b;
        detail::bump(m.lower_used, 1, m.b - delta, 1);
        detail::bump(m.lower_used, d + 1, d + delta, 1);
    } else {
        m.which = MatchCase::c;
        detail::bump(m.lower_used, 1, d + delta, 1);
        detail::bump(m.lower_used, p - m.b + d + delta + 1, p, 1);
    }
    m.upper_used.assign(p + g, theta);
    m.pairs = detail::pair_in_order(m.lower_used, m.upper_used);
    detail::check_pairs(m.pairs, p, g);
    return m;
}

// The eta <= theta matching: every lower vertex in the first eta rows is
// paired, with pη = (p+g)a - b selecting the case.
inline LemmaMatch match_eta_le_theta(int p, int g, int eta, int theta, int epsilon, int d)
{
    if (p < 1 || g < 1 || eta < 1 || theta < 1 || epsilon < 0 || epsilon >= p + g || d < 0 || d > p + g - epsilon)
        throw PreconditionError("match_eta_le_theta: parameters out of range");
    if (p * eta > (p + g) * theta - epsilon)
        throw PreconditionError("match_eta_le_theta: needs p eta <= (p+g)theta - epsilon");
    LemmaMatch m;
    int w = p + g;
    m.a = (p * eta + w - 1) / w;
    m.b = w * m.a - p * eta;
    m.upper_used.assign(w, m.a);
    if (m.b < epsilon) {
        m.which = MatchCase::a;
        detail::bump(m.upper_used, d + epsilon - m.b + 1, d + epsilon, -1);
    } else if (m.b < d + epsilon) {
        m.which = MatchCase::b;
        detail::bump(m.upper_used, 1, m.b - epsilon, -1);
        detail::bump(m.upper_used, d + 1, d + epsilon, -1);
    } else {
        m.which = MatchCase::c;
        int bp = w - m.b;
        detail::bump(m.upper_used, 1, d + epsilon, -1);
        detail::bump(m.upper_used, bp + d + epsilon + 1, w, -1);
    }
    m.lower_used.assign(p, eta);
    m.pairs = detail::pair_in_order(m.lower_used, m.upper_used);
    detail::check_pairs(m.pairs, p, g);
    return m;
}

struct TwoLevelProfile {
    int p = 0;
    int g = 0;
    std::vector<int> lower;  // size p
    std::vector<int> upper;  // size p + g
    friend bool operator==(const TwoLevelProfile&, const TwoLevelProfile&) = default;
};

// Lower level: eta everywhere plus one on columns d+1..d+delta.
struct LowerBump {
    int eta = 0;
    int d = 0;
    int delta = 0;
};

// Upper level: theta everywhere minus one on columns d+1..d+epsilon.
struct UpperDip {
    int theta = 0;
    int d = 0;
    int epsilon = 0;
};

inline std::optional<LowerBump> fit_lower_bump(const std::vector<int>& v)
{
    if (v.empty())
        return std::nullopt;
    auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
    int lo = *lo_it, hi = *hi_it;
    if (lo == hi)
        return LowerBump{lo, 0, 0};
    if (hi != lo + 1)
        return std::nullopt;
    auto first = std::find(v.begin(), v.end(), hi) - v.begin();
    auto count = std::count(v.begin(), v.end(), hi);
    for (auto i = first; i < first + count; ++i)
        if (v[i] != hi)
            return std::nullopt;
    return LowerBump{lo, static_cast<int>(first), static_cast<int>(count)};
}

inline std::optional<UpperDip> fit_upper_dip(const std::vector<int>& v)
{
    if (v.empty())
        return std::nullopt;
    auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
    int lo = *lo_it, hi = *hi_it;
    if (lo == hi)
        return UpperDip{hi, 0, 0};
    if (hi != lo + 1)
        return std::nullopt;
    auto first = std::find(v.begin(), v.end(), lo) - v.begin();
    auto count = std::count(v.begin(), v.end(), lo);
    for (auto i = first; i < first + count; ++i)
        if (v[i] != lo)
            return std::nullopt;
    return UpperDip{hi, static_cast<int>(first), static_cast<int>(count)};
}

enum class ReductionRule {
    degenerate,
    theta_le_eta,            // bump shape, upper side exhausted
    bump_then_eta_le_theta,  // bump shape, lower side exhausted
    eta_le_theta,            // dip shape, lower side exhausted
    dip_fill,                // dip shape, upper side exhausted after a fill step
};

struct BlockReduction {
    std::vector<ColumnPair> pairs;
    TwoLevelProfile residual;
    ReductionRule rule = ReductionRule::degenerate;
    std::string trace;
};

namespace detail {

inline TwoLevelProfile apply_pairs(TwoLevelProfile prof, const std::vector<ColumnPair>& pairs)
{
    for (const auto& c : pairs) {
        if (--prof.lower[c.lower - 1] < 0 || --prof.upper[c.upper - 1] < 0)
            throw CertificationError("block reduction consumed a vertex that is not there");
    }
    return prof;
}

inline std::string lemma_tag(const char* name, const LemmaMatch& m)
{
    return std::string(name) + "/" + match_case_letter(m.which);
}

}  // namespace detail

// Pairs a bump-shaped lower level with a flat upper level, or a flat lower
// level with a dip-shaped upper level, as far as either side allows.
inline BlockReduction reduce_block(const TwoLevelProfile& prof)
{
    int p = prof.p, g = prof.g;
    if (p < 1 || g < 1 || static_cast<int>(prof.lower.size()) != p || static_cast<int>(prof.upper.size()) != p + g)
        throw PreconditionError("reduce_block: profile dimensions do not match p and g");
    for (int v : prof.lower)
        if (v < 0)
            throw PreconditionError("reduce_block: negative multiplicity");
    for (int v : prof.upper)
        if (v < 0)
            throw PreconditionError("reduce_block: negative multiplicity");
    BlockReduction out;
    int lower_total = std::accumulate(prof.lower.begin(), prof.lower.end(), 0);
    int upper_total = std::accumulate(prof.upper.begin(), prof.upper.end(), 0);
    if (lower_total == 0 || upper_total == 0) {
        out.residual = prof;
        out.trace = "degenerate";
        return out;
    }
    auto low = fit_lower_bump(prof.lower);
    auto up = fit_upper_dip(prof.upper);
    if (low && up && up->epsilon == 0) {
        int eta = low->eta, d = low->d, delta = low->delta, theta = up->theta;
        if ((p + g) * theta <= p * eta + delta) {
            auto m = match_theta_le_eta(p, g, eta, theta, delta, d);
            out.pairs = m.pairs;
            out.rule = ReductionRule::theta_le_eta;
            out.trace = detail::lemma_tag("theta_le_eta", m);
        } else {
            for (int c = d + 1; c <= d + delta; ++c)
                out.pairs.push_back({c, c});
            out.rule = ReductionRule::bump_then_eta_le_theta;
            out.trace = "bump";
            if (eta >= 1) {
                auto m = match_eta_le_theta(p, g, eta, theta, delta, d);
                out.pairs.insert(out.pairs.end(), m.pairs.begin(), m.pairs.end());
                out.trace += "+" + detail::lemma_tag("eta_le_theta", m);
            }
        }
        detail::check_pairs(out.pairs, p, g);
        out.residual = detail::apply_pairs(prof, out.pairs);
        return out;
    }
    if (!low || low->delta != 0 || !up)
        throw PreconditionError("reduce_block: profile has neither the bump nor the dip shape");
    int eta = low->eta, theta = up->theta, d = up->d, eps = up->epsilon;
    if (p * eta <= (p + g) * theta - eps) {
        auto m = match_eta_le_theta(p, g, eta, theta, eps, d);
        out.pairs = m.pairs;
        out.rule = ReductionRule::eta_le_theta;
        out.trace = detail::lemma_tag("eta_le_theta", m);
        out.residual = detail::apply_pairs(prof, out.pairs);
        return out;
    }
    // Fill every full upper column with one lower vertex, leaving a bump-shaped
    // lower level against a flat upper level.
    std::vector<ColumnPair> fill;
    if (eps >= g) {
        for (int y = 1; y <= d; ++y)
            fill.push_back({y, y});
        for (int y = d + eps + 1; y <= p + g; ++y)
            fill.push_back({y - g, y});
        out.trace = "fill_wide";
    } else if (d > g - eps) {
        for (int y = d + eps + 1; y <= p + g; ++y)
            fill.push_back({y - g, y});
        for (int y = g - eps + 1; y <= d; ++y)
            fill.push_back({y + eps - g, y});
        for (int c = 1; c <= g - eps; ++c)
            fill.push_back({(c - 1) % p + 1, c});
        out.trace = "fill_left";
    } else {
        for (int c = 1; c <= d; ++c)
            fill.push_back({(c - 1) % p + 1, c});
        int l = d == 0 ? 0 : (d - 1) % p + 1;
        int nb = p - l;
        for (int c = d + eps + 1; c <= d + eps + nb; ++c)
            fill.push_back({l + c - d - eps, c});
        int j = 0;
        for (int y = p + g; y >= d + eps + nb + 1; --y, ++j)
            fill.push_back({p - (j % p), y});
        out.trace = "fill_wrap";
    }
    detail::check_pairs(fill, p, g);
    auto rest = reduce_block(detail::apply_pairs(prof, fill));
    if (rest.rule != ReductionRule::theta_le_eta && rest.rule != ReductionRule::degenerate)
        throw CertificationError("reduce_block: fill step left an unexpected shape (" + rest.trace + ")");
    out.pairs = std::move(fill);
    out.pairs.insert(out.pairs.end(), rest.pairs.begin(), rest.pairs.end());
    out.rule = ReductionRule::dip_fill;
    out.trace += "+" + rest.trace;
    out.residual = std::move(rest.residual);
    return out;
}

// A (column, level) cell of D_P; rows are assigned once a family is complete.
struct Slot {
    int col = 0;
    int level = 0;
    friend bool operator==(const Slot&, const Slot&) = default;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

using SlotAntichain = std::vector<Slot>;  // ascending level

struct SpreadLoopStep {
    int t = 0;
    std::vector<int> lower;
    std::vector<int> upper;
    std::string trace;
    std::size_t pairs = 0;
};

struct SpreadCoverRun {
    std::vector<SlotAntichain> family;
    int odd_rounds = 0;   // copies of each full odd antichain
    int even_rounds = 0;  // copies of each full even antichain
    std::vector<SpreadLoopStep> steps;
};

// Slot-level cover of one spread in its own coordinates.
inline SpreadCoverRun spread_cover_run(const Partition& S)
{
    if (!is_spread(S))
        throw PreconditionError("spread_cover: " + to_string(S) + " is not a spread");
    int p = S.smallest();
    int s = static_cast<int>(S.distinct().size());
    int r = (s + 1) / 2;
    auto n = [&](int i) { return S.mult(p + i - 1); };
    auto win_lo = [](int i) { return (i + 1) / 2; };
    // rem[i][c - win_lo(i)] for level index i and actual column c.
    std::vector<std::vector<int>> rem(s + 1);
    for (int i = 1; i <= s; ++i)
        rem[i].assign(p + i / 2 - win_lo(i) + 1, n(i));
    auto cell = [&](int i, int c) -> int& { return rem[i].at(c - win_lo(i)); };

    SpreadCoverRun run;
    auto take = [&](SlotAntichain ac) {
        for (const auto& sl : ac)
            if (--cell(sl.level - p + 1, sl.col) < 0)
                throw CertificationError("spread_cover: overdrew a cell");
        run.family.push_back(std::move(ac));
    };
    auto odd = [&](int x, int t) {
        SlotAntichain ac;
        for (int i = 1; i <= t; ++i)
            ac.push_back({x + i - 1, p + 2 * i - 2});
        return ac;
    };
    auto even = [&](int y, int t) {
        SlotAntichain ac;
        for (int j = t + 1; j <= r; ++j)
            ac.push_back({y + j - 1, p + 2 * j - 1});
        return ac;
    };

    int o = n(1);
    for (int i = 1; i <= r; ++i)
        o = std::min(o, n(2 * i - 1));
    run.odd_rounds = o;
    for (int x = 1; x <= p; ++x)
        for (int k = 0; k < o; ++k)
            take(odd(x, r));
    if (s % 2 == 1)
        return run;

    int e = n(2);
    for (int j = 1; j <= r; ++j)
        e = std::min(e, n(2 * j));
    run.even_rounds = e;
    for (int y = 1; y <= p + 1; ++y)
        for (int k = 0; k < e; ++k)
            take(even(y, 0));

    for (;;) {
        int t = 0;
        for (int j = 1; j <= r; ++j)
            if (std::all_of(rem[2 * j].begin(), rem[2 * j].end(), [](int v) { return v == 0; }))
                t = j;
        if (t == 0)
            throw CertificationError("spread_cover: no even level emptied");
        SpreadLoopStep step;
        step.t = t;
        step.lower.assign(p, 0);
        for (int x = 1; x <= p; ++x) {
            int m = cell(1, x);
            for (int i = 1; i <= t; ++i)
                m = std::min(m, cell(2 * i - 1, x + i - 1));
            step.lower[x - 1] = m;
        }
        if (t == r || std::all_of(step.lower.begin(), step.lower.end(), [](int v) { return v == 0; }))
            break;
        step.upper.assign(p + 1, 0);
        for (int y = 1; y <= p + 1; ++y) {
            int m = cell(2 * (t + 1), y + t);
            for (int j = t + 1; j <= r; ++j)
                m = std::min(m, cell(2 * j, y + j - 1));
            step.upper[y - 1] = m;
        }
        auto red = reduce_block({p, 1, step.lower, step.upper});
        for (const auto& c : red.pairs) {
            SlotAntichain ac = odd(c.lower, t);
            auto top = even(c.upper, t);
            ac.insert(ac.end(), top.begin(), top.end());
            take(std::move(ac));
        }
        step.trace = red.trace;
        step.pairs = red.pairs.size();
        run.steps.push_back(step);
        if (red.rule == ReductionRule::bump_then_eta_le_theta || red.rule == ReductionRule::degenerate)
            break;
    }
    return run;
}

namespace detail {

// Rows are drawn from the top of each column downward.
inline AntichainFamily assign_rows(const Partition& P, const std::vector<SlotAntichain>& slots)
{
    AntichainFamily F;
    std::map<Slot, int> used;
    for (const auto& ac : slots) {
        std::vector<PosetVertex> A;
        for (const auto& sl : ac) {
            int k = P.mult(sl.level) - used[sl]++;
            if (k < 1 || sl.col < 1 || sl.col > sl.level)
                throw CertificationError("cover: cell (" + std::to_string(sl.col) + "," + std::to_string(sl.level) +
                                         ") exhausted or out of range");
            A.push_back({sl.col, sl.level, k});
        }
        F.antichains.push_back(std::move(A));
    }
    return F;
}

inline void certify(const Partition& P, const AntichainFamily& F)
{
    auto cert = validate_family(build_poset(P), F);
    if (!cert.valid)
        throw CertificationError("cover of " + to_string(P) + " is invalid: " + cert.failure);
    int m = mu(P);
    if (static_cast<int>(cert.count) != m)
        throw CertificationError("cover of " + to_string(P) + " has " + std::to_string(cert.count) +
                                 " antichains, expected " + std::to_string(m));
}

struct SpreadGeometry {
    std::map<int, std::pair<int, int>> windows;  // level -> column range
    int top = 0;
    int bottom = 0;
};

inline bool slots_incomparable(const Slot& a, const Slot& b)
{
    PosetVertex va{a.col, a.level, 1}, vb{b.col, b.level, 1};
    return !leq_labels(va, vb) && !leq_labels(vb, va);
}

// Joins a lower spread's family with the family of everything above it by
// pairing lower tops with upper bottoms, level pair by level pair.
inline std::vector<SlotAntichain> stitch(const std::vector<SlotAntichain>& lower,
                                         const std::vector<SlotAntichain>& upper, const SpreadGeometry& glo,
                                         const SpreadGeometry& gup)
{
    enum Side { lo_side, up_side };
    std::map<std::tuple<int, int, int>, std::vector<std::size_t>> pools;
    for (std::size_t i = 0; i < lower.size(); ++i)
        pools[{lo_side, lower[i].back().level, lower[i].back().col}].push_back(i);
    for (std::size_t j = 0; j < upper.size(); ++j)
        pools[{up_side, upper[j].front().level, upper[j].front().col}].push_back(j);
    auto count = [&](int side, int level, int col) -> int {
        auto it = pools.find({side, level, col});
        return it == pools.end() ? 0 : static_cast<int>(it->second.size());
    };
    auto pop = [&](int side, int level, int col) {
        auto& v = pools.at({side, level, col});
        if (v.empty())
            throw CertificationError("stitch: drew from an empty pool");
        std::size_t i = v.back();
        v.pop_back();
        return i;
    };
    auto nonempty = [&](int side, int level) {
        for (const auto& [key, v] : pools)
            if (std::get<0>(key) == side && std::get<1>(key) == level && !v.empty())
                return true;
        return false;
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    auto bumps = [&](int side, int level, const SpreadGeometry& geo) {
        std::vector<int> cols;
        auto it = geo.windows.find(level);
        if (it == geo.windows.end())
            return cols;
        auto [a, b] = it->second;
        int base = count(side, level, a);
        for (int c = a; c <= b; ++c)
            base = std::min(base, count(side, level, c));
        for (int c = a; c <= b; ++c)
            if (count(side, level, c) > base)
                cols.push_back(c);
        return cols;
    };

    auto run = [&](int L, int M) {
        auto li = glo.windows.find(L);
        auto ui = gup.windows.find(M);
        if (li == glo.windows.end() || ui == gup.windows.end())
            return;
        int g = M - L - 2;
        auto [a, b] = li->second;
        auto [ua, ub] = ui->second;
        int lo = std::min(a, ua - 1);
        int hi = std::max(b, ub - 1 - g);
        int w = hi - lo + 1;
        TwoLevelProfile prof{w, g, std::vector<int>(w), std::vector<int>(w + g)};
        for (int x = 0; x < w; ++x)
            prof.lower[x] = count(lo_side, L, lo + x);
        for (int y = 0; y < w + g; ++y)
            prof.upper[y] = count(up_side, M, lo + 1 + y);
        if (std::accumulate(prof.lower.begin(), prof.lower.end(), 0) == 0 ||
            std::accumulate(prof.upper.begin(), prof.upper.end(), 0) == 0)
            return;
        std::vector<ColumnPair> cp;
        if (g >= 1) {
            try {
                cp = reduce_block(prof).pairs;
            } catch (const PreconditionError& err) {
                throw CertificationError(std::string("stitch: ") + err.what());
            }
        } else {
            for (int x = 1; x <= w; ++x)
                for (int c = std::min(prof.lower[x - 1], prof.upper[x - 1]); c > 0; --c)
                    cp.push_back({x, x});
        }
        for (const auto& c : cp)
            pairs.emplace_back(pop(lo_side, L, lo + c.lower - 1), pop(up_side, M, lo + c.upper));
    };

    int LB = glo.top, LA = LB - 1, LC = gup.bottom, LD = LC + 1;
    auto bl = bumps(lo_side, LB, glo);
    auto bu = bumps(up_side, LC, gup);
    for (std::size_t i = 0; i < std::min(bl.size(), bu.size()); ++i)
        if (slots_incomparable({bl[i], LB}, {bu[i], LC}))
            pairs.emplace_back(pop(lo_side, LB, bl[i]), pop(up_side, LC, bu[i]));
    run(LB, LC);
    if (!nonempty(lo_side, LB)) {
        run(LA, LC);
        run(LA, LD);
    } else if (!nonempty(up_side, LC)) {
        run(LB, LD);
        run(LA, LD);
    }

    std::vector<SlotAntichain> out;
    for (auto [i, j] : pairs) {
        const auto& A = lower[i];
        const auto& B = upper[j];
        if (!slots_incomparable(A.back(), B.front()))
            throw CertificationError("stitch: boundary pair is comparable");
        SlotAntichain C = A;
        C.insert(C.end(), B.begin(), B.end());
        // Soundness of joining along the boundary pair only.
        for (const auto& x : A)
            for (const auto& y : B)
                if (!slots_incomparable(x, y))
                    throw CertificationError("stitch: boundary pair incomparable but the union is not an antichain");
        out.push_back(std::move(C));
    }
    return out;
}

}  // namespace detail

inline AntichainFamily spread_cover(const Partition& P)
{
    auto run = spread_cover_run(P);
    auto F = detail::assign_rows(P, run.family);
    detail::certify(P, F);
    return F;
}

inline AntichainFamily general_cover(const Partition& P)
{
    if (P.empty())
        throw PreconditionError("general_cover: empty partition");
    auto parts = detail::spreads_ascending(P);
    std::vector<std::vector<SlotAntichain>> fams;
    std::vector<detail::SpreadGeometry> geo;
    int rbar = 0;
    for (const auto& S : parts) {
        Partition sh = shift_down(S, 2 * rbar);
        auto run = spread_cover_run(sh);
        for (auto& ac : run.family)
            for (auto& sl : ac) {
                sl.col += rbar;
                sl.level += 2 * rbar;
            }
        fams.push_back(std::move(run.family));
        detail::SpreadGeometry g;
        int p = sh.smallest();
        int s = static_cast<int>(sh.distinct().size());
        for (int i = 1; i <= s; ++i)
            g.windows[p + i - 1 + 2 * rbar] = {(i + 1) / 2 + rbar, p + i / 2 + rbar};
        g.bottom = p + 2 * rbar;
        g.top = sh.largest() + 2 * rbar;
        geo.push_back(std::move(g));
        rbar += detail::spread_r(S);
    }
    std::vector<SlotAntichain> acc = fams.back();
    for (std::size_t k = fams.size() - 1; k-- > 0;)
        acc = detail::stitch(fams[k], acc, geo[k], geo[k + 1]);
    auto F = detail::assign_rows(P, acc);
    detail::certify(P, F);
    return F;
}

}  // namespace jtlab
