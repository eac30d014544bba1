#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "errors.hpp"

namespace jtlab::detail {

// Successive shortest paths with Johnson potentials.  Negative arc costs are
// allowed as long as the initial residual graph has no negative cycle.
class MinCostFlow {
public:
    explicit MinCostFlow(std::size_t nodes) : graph_(nodes) {}

    void add_edge(std::size_t from, std::size_t to, int cap, std::int64_t cost)
    {
        graph_[from].push_back({to, graph_[to].size(), cap, cost});
        graph_[to].push_back({from, graph_[from].size() - 1, 0, -cost});
    }

    // Pushes one unit at a time while the cheapest path has negative cost, up to
    // max_units.  Entry m of the result is the total cost after m units.
    std::vector<std::int64_t> negative_cost_profile(std::size_t s, std::size_t t, std::size_t max_units)
    {
        std::vector<std::int64_t> costs{0};
        if (!bellman_ford(s))
            throw PreconditionError("min-cost flow: negative cycle in initial network");
        std::size_t n = graph_.size();
        std::vector<std::int64_t> dist(n);
        std::vector<std::size_t> prev_node(n), prev_edge(n);
        std::vector<char> done(n);
        while (costs.size() <= max_units) {
            // Dense Dijkstra on reduced costs; graphs here are close to complete.
            std::fill(dist.begin(), dist.end(), kInf);
            std::fill(done.begin(), done.end(), 0);
            dist[s] = 0;
            for (;;) {
                std::size_t v = n;
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i] && dist[i] < kInf && (v == n || dist[i] < dist[v]))
                        v = i;
                if (v == n)
                    break;
                done[v] = 1;
                for (std::size_t ei = 0; ei < graph_[v].size(); ++ei) {
                    const Edge& e = graph_[v][ei];
                    if (e.cap <= 0 || potential_[e.to] >= kInf)
                        continue;
                    std::int64_t nd = dist[v] + e.cost + potential_[v] - potential_[e.to];
                    if (nd < dist[e.to]) {
                        dist[e.to] = nd;
                        prev_node[e.to] = v;
                        prev_edge[e.to] = ei;
                    }
                }
            }
            if (dist[t] >= kInf)
                break;
            std::int64_t path_cost = dist[t] + potential_[t] - potential_[s];
            if (path_cost >= 0)
                break;
            for (std::size_t i = 0; i < n; ++i)
                if (dist[i] < kInf)
                    potential_[i] += dist[i];
            for (std::size_t v = t; v != s; v = prev_node[v]) {
                Edge& e = graph_[prev_node[v]][prev_edge[v]];
                e.cap -= 1;
                graph_[v][e.rev].cap += 1;
            }
            costs.push_back(costs.back() + path_cost);
        }
        return costs;
    }

private:
    struct Edge {
        std::size_t to;
        std::size_t rev;
        int cap;
        std::int64_t cost;
    };

    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

    bool bellman_ford(std::size_t s)
    {
        std::size_t n = graph_.size();
        potential_.assign(n, kInf);
        potential_[s] = 0;
        for (std::size_t round = 0; round < n; ++round) {
            bool changed = false;
            for (std::size_t v = 0; v < n; ++v) {
                if (potential_[v] >= kInf)
                    continue;
                for (const Edge& e : graph_[v])
                    if (e.cap > 0 && potential_[v] + e.cost < potential_[e.to]) {
                        potential_[e.to] = potential_[v] + e.cost;
                        changed = true;
                    }
            }
            if (!changed)
                return true;
        }
        return false;
    }

    std::vector<std::vector<Edge>> graph_;
    std::vector<std::int64_t> potential_;
};

}  // namespace jtlab::detail
