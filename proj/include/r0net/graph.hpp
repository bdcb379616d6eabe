#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "r0net/errors.hpp"

namespace r0net {

/// Simple undirected graph: no self-loops, no parallel edges, nodes 0..n-1.
/// Adjacency lists keep insertion order; a packed edge set backs O(1)
/// membership tests.
class Graph {
public:
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 1)
            throw ParameterError("Graph: node count must be >= 1");
    }

    int node_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_set_.size(); }

    /// Adds the undirected edge {u, v}. Returns false if it already exists.
    bool add_edge(int u, int v) {
        check_node(u);
        check_node(v);
        if (u == v)
            throw ParameterError("Graph::add_edge: self-loop on node " + std::to_string(u));
        if (!edge_set_.insert(pack(u, v)).second)
            return false;
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        return true;
    }

    /// Removes the edge {u, v}. Returns false if it was not present.
    bool remove_edge(int u, int v) {
        check_node(u);
        check_node(v);
        if (edge_set_.erase(pack(u, v)) == 0)
            return false;
        auto drop = [](std::vector<int>& list, int x) {
            list.erase(std::find(list.begin(), list.end(), x));
        };
        drop(adj_[static_cast<std::size_t>(u)], v);
        drop(adj_[static_cast<std::size_t>(v)], u);
        return true;
    }

    bool has_edge(int u, int v) const {
        check_node(u);
        check_node(v);
        if (u == v)
            return false;
        return edge_set_.count(pack(u, v)) != 0;
    }

    const std::vector<int>& neighbors(int v) const {
        check_node(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const {
        return static_cast<int>(neighbors(v).size());
    }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_set_.size());
        for (std::uint64_t key : edge_set_)
            out.emplace_back(static_cast<int>(key >> 32),
                             static_cast<int>(key & 0xffffffffULL));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.node_count() == b.node_count() && a.edge_set_ == b.edge_set_;
    }

    /// Consistency audit used by tests: adjacency lists and the edge set
    /// must describe the same simple graph.
    bool validate() const {
        std::size_t degree_sum = 0;
        for (int v = 0; v < node_count(); ++v) {
            std::unordered_set<int> seen;
            for (int u : adj_[static_cast<std::size_t>(v)]) {
                if (u < 0 || u >= node_count() || u == v)
                    return false;
                if (!seen.insert(u).second)
                    return false;
                if (edge_set_.count(pack(u, v)) == 0)
                    return false;
            }
            degree_sum += seen.size();
        }
        return degree_sum == 2 * edge_set_.size();
    }

private:
    void check_node(int v) const {
        if (v < 0 || v >= node_count())
            throw ParameterError("Graph: node " + std::to_string(v) + " out of range");
    }

    static std::uint64_t pack(int u, int v) {
        if (u > v)
            std::swap(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    }

    std::vector<std::vector<int>> adj_;
    std::unordered_set<std::uint64_t> edge_set_;
};

/// Breadth-first reachability from node 0.
inline bool is_connected(const Graph& g) {
    const int n = g.node_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++found;
                stack.push_back(u);
            }
        }
    }
    return found == n;
}

} // namespace r0net
