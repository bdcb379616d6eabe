#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "r0net/errors.hpp"
#include "r0net/graph.hpp"
#include "r0net/rng.hpp"

namespace r0net {

enum class Family { er, ws, sf, ba, sbm };

inline const char* family_name(Family f) {
    switch (f) {
    case Family::er: return "er";
    case Family::ws: return "ws";
    case Family::sf: return "sf";
    case Family::ba: return "ba";
    case Family::sbm: return "sbm";
    }
    return "?";
}

inline Family family_from_name(const std::string& name) {
    for (Family f : {Family::er, Family::ws, Family::sf, Family::ba, Family::sbm})
        if (name == family_name(f))
            return f;
    throw ParameterError("unknown graph family: " + name);
}

/// Erdos-Renyi G(n, p): every unordered pair is an edge independently
/// with probability p. Pairs are visited in lexicographic order so the
/// random stream is reproducible.
inline Graph generate_er(int n, double p, std::uint64_t seed) {
    if (n < 1)
        throw ParameterError("generate_er: n must be >= 1");
    if (p < 0.0 || p > 1.0)
        throw ParameterError("generate_er: p must be in [0, 1]");
    Graph g(n);
    Rng rng(seed);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p))
                g.add_edge(i, j);
    return g;
}

/// Watts-Strogatz small world: ring lattice where each node links to its
/// k nearest neighbours, then each lattice edge (u, u+j) is rewired with
/// probability p to (u, w) with w resampled until it makes a valid new
/// edge. A node already adjacent to everyone keeps its edge. Edge count
/// is preserved at n*k/2.
inline Graph generate_ws(int n, int k, double p, std::uint64_t seed) {
    if (n < 1)
        throw ParameterError("generate_ws: n must be >= 1");
    if (k < 2 || k % 2 != 0)
        throw ParameterError("generate_ws: k must be even and >= 2");
    if (k >= n)
        throw ParameterError("generate_ws: k must be < n");
    if (p < 0.0 || p > 1.0)
        throw ParameterError("generate_ws: p must be in [0, 1]");
    Graph g(n);
    for (int j = 1; j <= k / 2; ++j)
        for (int u = 0; u < n; ++u)
            g.add_edge(u, (u + j) % n);
    Rng rng(seed);
    for (int j = 1; j <= k / 2; ++j) {
        for (int u = 0; u < n; ++u) {
            const int v = (u + j) % n;
            if (!rng.bernoulli(p))
                continue;
            int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            bool saturated = false;
            while (w == u || g.has_edge(u, w)) {
                w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                if (g.degree(u) >= n - 1) {
                    saturated = true;
                    break;
                }
            }
            if (!saturated) {
                g.remove_edge(u, v);
                g.add_edge(u, w);
            }
        }
    }
    return g;
}

namespace detail {

/// m distinct values sampled by repeated uniform choice from a weighted
/// pool (nodes appear once per incident edge endpoint, so choice is
/// degree-proportional). Returned in first-draw order.
inline std::vector<int> random_subset(const std::vector<int>& pool, int m, Rng& rng) {
    std::vector<int> picks;
    std::unordered_set<int> seen;
    picks.reserve(static_cast<std::size_t>(m));
    while (static_cast<int>(picks.size()) < m) {
        const int x = pool[static_cast<std::size_t>(rng.below(pool.size()))];
        if (seen.insert(x).second)
            picks.push_back(x);
    }
    return picks;
}

} // namespace detail

/// Holme-Kim scale free graph: growth with preferential attachment plus
/// a triangle-closing step taken with probability p_triangle. Starts
/// from m isolated nodes; each new node brings m link steps, where a
/// link step is either preferential attachment or closure of a triangle
/// with a neighbour of the previous target. Closing an edge that already
/// exists is a no-op, so the final edge count is at most (n-m)*m.
inline Graph generate_sf(int n, int m, double p_triangle, std::uint64_t seed) {
    if (m < 1)
        throw ParameterError("generate_sf: m must be >= 1");
    if (n < m + 1)
        throw ParameterError("generate_sf: n must be > m");
    if (p_triangle < 0.0 || p_triangle > 1.0)
        throw ParameterError("generate_sf: p_triangle must be in [0, 1]");
    Graph g(n);
    Rng rng(seed);
    std::vector<int> repeated;
    repeated.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m) * 2);
    for (int v = 0; v < m; ++v)
        repeated.push_back(v);
    for (int source = m; source < n; ++source) {
        int target = detail::random_subset(repeated, m, rng).front();
        g.add_edge(source, target);
        repeated.push_back(target);
        int count = 1;
        while (count < m) {
            if (rng.bernoulli(p_triangle)) {
                std::vector<int> neighborhood;
                for (int nbr : g.neighbors(target))
                    if (nbr != source && !g.has_edge(source, nbr))
                        neighborhood.push_back(nbr);
                if (!neighborhood.empty()) {
                    const int nbr = neighborhood[static_cast<std::size_t>(
                        rng.below(neighborhood.size()))];
                    g.add_edge(source, nbr);
                    repeated.push_back(nbr);
                    ++count;
                    continue;
                }
            }
            target = detail::random_subset(repeated, 1, rng).front();
            g.add_edge(source, target); // may already exist; no-op then
            repeated.push_back(target);
            ++count;
        }
        for (int i = 0; i < m; ++i)
            repeated.push_back(source);
    }
    return g;
}

/// Barabasi-Albert preferential attachment. Seeded with a star on m+1
/// nodes (hub 0, leaves 1..m); every later node attaches to m distinct
/// targets drawn proportionally to degree. Edge count is m*(n-m).
inline Graph generate_ba(int n, int m, std::uint64_t seed) {
    if (m < 1)
        throw ParameterError("generate_ba: m must be >= 1");
    if (n < m + 1)
        throw ParameterError("generate_ba: n must be >= m + 1");
    Graph g(n);
    Rng rng(seed);
    std::vector<int> repeated;
    repeated.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m) * 2);
    for (int leaf = 1; leaf <= m; ++leaf) {
        g.add_edge(0, leaf);
        repeated.push_back(0);
        repeated.push_back(leaf);
    }
    for (int source = m + 1; source < n; ++source) {
        const std::vector<int> targets = detail::random_subset(repeated, m, rng);
        for (int t : targets) {
            g.add_edge(source, t);
            repeated.push_back(t);
            repeated.push_back(source);
        }
    }
    return g;
}

/// Stochastic block model. Nodes are grouped into consecutive blocks of
/// the given sizes; pair {i, j} is an edge with probability
/// probs[block(i)][block(j)]. Pairs are visited lexicographically.
inline Graph generate_sbm(const std::vector<int>& block_sizes,
                          const std::vector<std::vector<double>>& probs,
                          std::uint64_t seed) {
    const std::size_t blocks = block_sizes.size();
    if (blocks == 0)
        throw ParameterError("generate_sbm: need at least one block");
    for (int s : block_sizes)
        if (s < 1)
            throw ParameterError("generate_sbm: block sizes must be >= 1");
    if (probs.size() != blocks)
        throw ParameterError("generate_sbm: probability matrix must be square");
    for (std::size_t r = 0; r < blocks; ++r) {
        if (probs[r].size() != blocks)
            throw ParameterError("generate_sbm: probability matrix must be square");
        for (std::size_t s = 0; s < blocks; ++s) {
            if (probs[r][s] < 0.0 || probs[r][s] > 1.0)
                throw ParameterError("generate_sbm: probabilities must be in [0, 1]");
            if (probs[r][s] != probs[s][r])
                throw ParameterError("generate_sbm: probability matrix must be symmetric");
        }
    }
    const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
    std::vector<int> block_of(static_cast<std::size_t>(n));
    int at = 0;
    for (std::size_t b = 0; b < blocks; ++b)
        for (int i = 0; i < block_sizes[b]; ++i)
            block_of[static_cast<std::size_t>(at++)] = static_cast<int>(b);
    Graph g(n);
    Rng rng(seed);
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double p = probs[static_cast<std::size_t>(block_of[static_cast<std::size_t>(i)])]
                                  [static_cast<std::size_t>(block_of[static_cast<std::size_t>(j)])];
            if (rng.bernoulli(p))
                g.add_edge(i, j);
        }
    }
    return g;
}

struct ErParams { double p = 0.1; };
struct WsParams { int k = 4; double p = 0.1; };
struct SfParams { int m = 2; double p_triangle = 0.2; };
struct BaParams { int m = 2; };
struct SbmParams {
    std::vector<int> block_sizes;
    std::vector<std::vector<double>> probs;
};

/// One generator invocation: family, size, parameters, seed.
struct GeneratorSpec {
    int n = 0;
    std::uint64_t seed = 0;
    std::variant<ErParams, WsParams, SfParams, BaParams, SbmParams> params;

    Family family() const {
        switch (params.index()) {
        case 0: return Family::er;
        case 1: return Family::ws;
        case 2: return Family::sf;
        case 3: return Family::ba;
        default: return Family::sbm;
        }
    }

    std::string describe() const {
        std::ostringstream os;
        os << "family=" << family_name(family()) << " n=" << n;
        if (const auto* er = std::get_if<ErParams>(&params)) {
            os << " p=" << er->p;
        } else if (const auto* ws = std::get_if<WsParams>(&params)) {
            os << " k=" << ws->k << " p=" << ws->p;
        } else if (const auto* sf = std::get_if<SfParams>(&params)) {
            os << " m=" << sf->m << " p_triangle=" << sf->p_triangle;
        } else if (const auto* ba = std::get_if<BaParams>(&params)) {
            os << " m=" << ba->m;
        } else if (const auto* sbm = std::get_if<SbmParams>(&params)) {
            os << " blocks=";
            for (std::size_t i = 0; i < sbm->block_sizes.size(); ++i)
                os << (i ? "," : "") << sbm->block_sizes[i];
            os << " probs=";
            for (std::size_t r = 0; r < sbm->probs.size(); ++r)
                for (std::size_t c = 0; c < sbm->probs[r].size(); ++c)
                    os << ((r || c) ? "," : "") << sbm->probs[r][c];
        }
        os << " seed=" << seed;
        return os.str();
    }
};

inline Graph generate(const GeneratorSpec& spec) {
    if (const auto* er = std::get_if<ErParams>(&spec.params))
        return generate_er(spec.n, er->p, spec.seed);
    if (const auto* ws = std::get_if<WsParams>(&spec.params))
        return generate_ws(spec.n, ws->k, ws->p, spec.seed);
    if (const auto* sf = std::get_if<SfParams>(&spec.params))
        return generate_sf(spec.n, sf->m, sf->p_triangle, spec.seed);
    if (const auto* ba = std::get_if<BaParams>(&spec.params))
        return generate_ba(spec.n, ba->m, spec.seed);
    const auto& sbm = std::get<SbmParams>(spec.params);
    int total = std::accumulate(sbm.block_sizes.begin(), sbm.block_sizes.end(), 0);
    if (spec.n != 0 && spec.n != total)
        throw ParameterError("generate: sbm block sizes must sum to n");
    return generate_sbm(sbm.block_sizes, sbm.probs, spec.seed);
}

struct ConnectedResult {
    Graph graph;
    int attempts;       // 1 means the first draw was already connected
    std::uint64_t seed; // seed of the successful attempt
};

/// Draws from the spec until the result is connected. Attempt 0 uses the
/// spec seed verbatim; attempt t > 0 uses a sub-seed derived from it, so
/// the whole retry sequence is a pure function of the spec.
inline ConnectedResult generate_connected(const GeneratorSpec& spec, int max_retries = 20) {
    if (max_retries < 1)
        throw ParameterError("generate_connected: max_retries must be >= 1");
    GeneratorSpec attempt = spec;
    for (int t = 0; t < max_retries; ++t) {
        attempt.seed = (t == 0) ? spec.seed : derive_seed(spec.seed, static_cast<std::uint64_t>(t));
        Graph g = generate(attempt);
        if (is_connected(g))
            return ConnectedResult{std::move(g), t + 1, attempt.seed};
    }
    throw GenerationError("no connected graph after " + std::to_string(max_retries) +
                          " attempts for " + spec.describe());
}

} // namespace r0net
