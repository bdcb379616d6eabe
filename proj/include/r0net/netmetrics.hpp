#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "r0net/errors.hpp"
#include "r0net/graph.hpp"

namespace r0net {

/// The six structural features, in the fixed column order used by every
/// dataset, model and report in this project.
struct FeatureVector {
    double avgdeg = 0.0; // mean degree, 2E/n
    double spl = 0.0;    // mean shortest path length over unordered pairs
    double cc = 0.0;     // global clustering coefficient (transitivity)
    double den = 0.0;    // edge density, E / C(n,2)
    double dia = 0.0;    // diameter
    double maxdeg = 0.0; // maximum degree

    static constexpr std::array<const char*, 6> names() {
        return {"avgdeg", "spl", "cc", "den", "dia", "maxdeg"};
    }

    std::array<double, 6> values() const {
        return {avgdeg, spl, cc, den, dia, maxdeg};
    }
};

inline double average_degree(const Graph& g) {
    return 2.0 * static_cast<double>(g.edge_count()) / g.node_count();
}

inline int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.node_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

inline double density(const Graph& g) {
    const long long n = g.node_count();
    if (n < 2)
        throw ParameterError("density: need at least 2 nodes");
    return static_cast<double>(g.edge_count()) / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

/// Global transitivity: 3 * triangles / connected triples. Triangles are
/// counted per edge by sorted-adjacency intersection; each triangle is
/// seen once per edge, i.e. three times in total. Returns 0 for graphs
/// with no connected triple.
inline double clustering_coefficient(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> sorted_adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        sorted_adj[static_cast<std::size_t>(v)] = g.neighbors(v);
        std::sort(sorted_adj[static_cast<std::size_t>(v)].begin(),
                  sorted_adj[static_cast<std::size_t>(v)].end());
    }
    std::uint64_t closed = 0; // 3 * triangle count
    for (const auto& [u, v] : g.edges()) {
        const auto& a = sorted_adj[static_cast<std::size_t>(u)];
        const auto& b = sorted_adj[static_cast<std::size_t>(v)];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else { ++closed; ++i; ++j; }
        }
    }
    std::uint64_t triples = 0;
    for (int v = 0; v < n; ++v) {
        const std::uint64_t d = static_cast<std::uint64_t>(g.degree(v));
        triples += d * (d - 1) / 2;
    }
    if (triples == 0)
        return 0.0;
    return static_cast<double>(closed) / static_cast<double>(triples);
}

struct PathStats {
    double spl = 0.0;
    int dia = 0;
};

/// Mean shortest path length and diameter via one BFS per source.
/// Throws DisconnectedGraphError when any node pair is unreachable.
inline PathStats shortest_path_stats(const Graph& g) {
    const int n = g.node_count();
    if (n < 2)
        throw ParameterError("shortest_path_stats: need at least 2 nodes");
    std::uint64_t dist_sum = 0; // over ordered pairs
    int dia = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        int reached = 1;
        while (head < tail) {
            const int v = queue[head++];
            const int dv = dist[static_cast<std::size_t>(v)];
            for (int u : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dv + 1;
                    dist_sum += static_cast<std::uint64_t>(dv) + 1;
                    dia = std::max(dia, dv + 1);
                    queue[tail++] = u;
                    ++reached;
                }
            }
        }
        if (reached != n)
            throw DisconnectedGraphError("shortest_path_stats: graph is not connected");
    }
    const double pairs = static_cast<double>(n) * (n - 1);
    return PathStats{static_cast<double>(dist_sum) / pairs, dia};
}

inline FeatureVector extract_features(const Graph& g) {
    FeatureVector fv;
    fv.avgdeg = average_degree(g);
    const PathStats ps = shortest_path_stats(g);
    fv.spl = ps.spl;
    fv.cc = clustering_coefficient(g);
    fv.den = density(g);
    fv.dia = ps.dia;
    fv.maxdeg = max_degree(g);
    return fv;
}

/// One CSV row in the fixed feature order, full double precision.
inline std::string feature_csv_row(const FeatureVector& fv) {
    std::ostringstream os;
    os.precision(17);
    const auto vals = fv.values();
    for (std::size_t i = 0; i < vals.size(); ++i)
        os << (i ? "," : "") << vals[i];
    return os.str();
}

} // namespace r0net
