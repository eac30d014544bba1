#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace jtlab {

// Column u, level p, row k.
struct PosetVertex {
    int u = 0;
    int p = 0;
    int k = 0;
    friend bool operator==(const PosetVertex&, const PosetVertex&) = default;
    friend auto operator<=>(const PosetVertex&, const PosetVertex&) = default;
};

inline std::string to_string(const PosetVertex& v)
{
    return "(" + std::to_string(v.u) + "," + std::to_string(v.p) + "," + std::to_string(v.k) + ")";
}

enum class EdgeKind { alpha, beta, e, omega };

inline std::string_view edge_kind_name(EdgeKind kind)
{
    switch (kind) {
    case EdgeKind::alpha: return "alpha";
    case EdgeKind::beta: return "beta";
    case EdgeKind::e: return "e";
    case EdgeKind::omega: return "omega";
    }
    return "?";
}

struct CoverEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    EdgeKind kind = EdgeKind::e;
    friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

// The order on labels; both vertices are assumed to lie in the same D_P.
inline bool leq_labels(const PosetVertex& a, const PosetVertex& b) noexcept
{
    if (a.p < b.p)
        return b.p - a.p + a.u <= b.u;
    if (a.p > b.p)
        return a.u <= b.u;
    if (a.u != b.u)
        return a.u < b.u;
    return a.k <= b.k;
}

class PartitionPoset {
public:
    explicit PartitionPoset(Partition P) : partition_(std::move(P))
    {
        if (partition_.empty())
            throw PreconditionError("build_poset: empty partition");
        levels_ = partition_.distinct();
        for (int p : levels_) {
            level_start_[p] = vertices_.size();
            int n = partition_.mult(p);
            for (int k = 1; k <= n; ++k)
                for (int u = 1; u <= p; ++u)
                    vertices_.push_back({u, p, k});
        }
        build_edges();
        std::size_t n = vertices_.size();
        closure_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                closure_[i * n + j] = leq_labels(vertices_[i], vertices_[j]) ? 1 : 0;
    }

    const Partition& partition() const noexcept { return partition_; }
    const std::vector<PosetVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<CoverEdge>& cover_edges() const noexcept { return edges_; }
    const std::vector<int>& levels() const noexcept { return levels_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    std::optional<std::size_t> find(const PosetVertex& v) const
    {
        auto it = level_start_.find(v.p);
        if (it == level_start_.end() || v.u < 1 || v.u > v.p || v.k < 1 || v.k > partition_.mult(v.p))
            return std::nullopt;
        return it->second + static_cast<std::size_t>((v.k - 1) * v.p + (v.u - 1));
    }

    bool contains(const PosetVertex& v) const { return find(v).has_value(); }

    std::size_t index_of(const PosetVertex& v) const
    {
        auto i = find(v);
        if (!i)
            throw PreconditionError("vertex " + to_string(v) + " is not in D_" + to_string(partition_));
        return *i;
    }

    // Reflexive order between dense indices.
    bool less_equal(std::size_t i, std::size_t j) const { return closure_[i * vertices_.size() + j] != 0; }

private:
    void add(const PosetVertex& a, const PosetVertex& b, EdgeKind kind)
    {
        edges_.push_back({index_of(a), index_of(b), kind});
    }

    void build_edges()
    {
        std::size_t s = levels_.size();
        for (std::size_t i = 0; i < s; ++i) {
            int p = levels_[i];
            int top = partition_.mult(p);
            for (int u = 1; u <= p; ++u)
                for (int k = 1; k < top; ++k)
                    add({u, p, k}, {u, p, k + 1}, EdgeKind::e);
            if (i + 1 < s) {
                int q = levels_[i + 1];
                for (int u = 1; u <= p; ++u)
                    add({u, p, top}, {u + q - p, q, 1}, EdgeKind::alpha);
            }
            if (i > 0) {
                int q = levels_[i - 1];
                for (int u = 1; u <= q; ++u)
                    add({u, p, top}, {u, q, 1}, EdgeKind::beta);
            }
            // A missing neighbour counts as a gap larger than one.
            bool gap_below = i == 0 || p - levels_[i - 1] > 1;
            bool gap_above = i + 1 == s || levels_[i + 1] - p > 1;
            if (gap_below && gap_above)
                for (int u = 1; u < p; ++u)
                    add({u, p, top}, {u + 1, p, 1}, EdgeKind::omega);
        }
        std::sort(edges_.begin(), edges_.end(), [](const CoverEdge& a, const CoverEdge& b) {
            return std::tie(a.source, a.target) < std::tie(b.source, b.target);
        });
    }

    Partition partition_;
    std::vector<int> levels_;
    std::map<int, std::size_t> level_start_;
    std::vector<PosetVertex> vertices_;
    std::vector<CoverEdge> edges_;
    std::vector<std::uint8_t> closure_;
};

inline PartitionPoset build_poset(const Partition& P)
{
    return PartitionPoset(P);
}

inline bool leq(const PartitionPoset& D, const PosetVertex& a, const PosetVertex& b)
{
    return D.less_equal(D.index_of(a), D.index_of(b));
}

inline bool is_antichain(const PartitionPoset& D, std::span<const PosetVertex> S)
{
    std::vector<std::size_t> idx;
    idx.reserve(S.size());
    for (const auto& v : S)
        idx.push_back(D.index_of(v));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            if (a != b && D.less_equal(idx[a], idx[b]))
                return false;
    return true;
}

inline std::string dot_name(const PosetVertex& v)
{
    return std::to_string(v.u) + "." + std::to_string(v.p) + "." + std::to_string(v.k);
}

inline std::string export_dot(const PartitionPoset& D)
{
    std::ostringstream out;
    out << "digraph D_P {\n";
    out << "  label=\"D_P for P = " << to_string(D.partition()) << "\";\n";
    out << "  rankdir=BT;\n";
    for (const auto& v : D.vertices())
        out << "  \"" << dot_name(v) << "\";\n";
    for (const auto& e : D.cover_edges())
        out << "  \"" << dot_name(D.vertices()[e.source]) << "\" -> \"" << dot_name(D.vertices()[e.target])
            << "\" [label=\"" << edge_kind_name(e.kind) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace jtlab
