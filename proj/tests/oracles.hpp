#pragma once

// Reference implementations used only by tests. Each one computes the
// same quantity as the library through a different algorithm, so
// agreement is meaningful: Floyd-Warshall vs per-source BFS, exhaustive
// triple enumeration vs edge-intersection triangle counting, normal
// equations vs orthogonal decomposition, Jacobi rotations vs the
// library eigensolver.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "r0net/graph.hpp"

namespace oracles {

constexpr int UNREACHABLE = -1;

inline std::vector<std::vector<int>> floyd_warshall(const r0net::Graph& g) {
    const int n = g.node_count();
    const int INF = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), INF));
    for (int i = 0; i < n; ++i)
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    for (const auto& [u, v] : g.edges()) {
        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                        d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] <
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                        d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    for (auto& row : d)
        for (int& v : row)
            if (v >= INF)
                v = UNREACHABLE;
    return d;
}

struct PathOracle {
    bool connected = false;
    double spl = 0.0;
    int dia = 0;
};

inline PathOracle path_stats(const r0net::Graph& g) {
    const auto d = floyd_warshall(g);
    const int n = g.node_count();
    PathOracle out;
    long long sum = 0;
    int dia = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int dist = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (dist == UNREACHABLE)
                return out; // connected stays false
            sum += dist;
            dia = std::max(dia, dist);
        }
    }
    out.connected = true;
    out.spl = static_cast<double>(sum) / (0.5 * n * (n - 1));
    out.dia = dia;
    return out;
}

/// Transitivity by definition: enumerate every centred pair of
/// neighbours, count how many close into a triangle.
inline double transitivity(const r0net::Graph& g) {
    long long triples = 0, closed = 0;
    for (int b = 0; b < g.node_count(); ++b) {
        const auto& nbrs = g.neighbors(b);
        for (std::size_t x = 0; x < nbrs.size(); ++x) {
            for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
                ++triples;
                if (g.has_edge(nbrs[x], nbrs[y]))
                    ++closed;
            }
        }
    }
    return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
}

/// Least squares through the normal equations (Xt X) w = Xt y with an
/// implicit leading bias column, solved by Gaussian elimination with
/// partial pivoting. Requires full column rank.
inline std::vector<double> normal_equations(const std::vector<std::vector<double>>& X,
                                            const std::vector<double>& y) {
    const std::size_t m = X.size();
    const std::size_t d = X[0].size() + 1;
    auto design = [&](std::size_t i, std::size_t j) { return j == 0 ? 1.0 : X[i][j - 1]; };
    std::vector<std::vector<double>> M(d, std::vector<double>(d + 1, 0.0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                acc += design(i, r) * design(i, c);
            M[r][c] = acc;
        }
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            acc += design(i, r) * y[i];
        M[r][d] = acc;
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::abs(M[r][col]) > std::abs(M[pivot][col]))
                pivot = r;
        if (std::abs(M[pivot][col]) < 1e-12)
            throw std::runtime_error("normal_equations: singular system");
        std::swap(M[col], M[pivot]);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col)
                continue;
            const double f = M[r][col] / M[col][col];
            for (std::size_t c = col; c <= d; ++c)
                M[r][c] -= f * M[col][c];
        }
    }
    std::vector<double> w(d);
    for (std::size_t r = 0; r < d; ++r)
        w[r] = M[r][d] / M[r][r];
    return w;
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns eigenvalues in descending order with matching eigenvectors,
/// each vector's largest-magnitude entry made positive.
inline std::pair<std::vector<double>, std::vector<std::vector<double>>> jacobi_eigen(
    std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        v[i][i] = 1.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale += a[i][j] * a[i][j];
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += a[p][q] * a[p][q];
        if (off <= 1e-30 * (scale > 0.0 ? scale : 1.0))
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = a[p][p], aqq = a[q][q], apq = a[p][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = c * akp - s * akq;
                    a[k][q] = a[q][k] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
    values.reserve(n);
    vectors.reserve(n);
    for (std::size_t idx : order) {
        values.push_back(a[idx][idx]);
        std::vector<double> col(n);
        for (std::size_t k = 0; k < n; ++k)
            col[k] = v[k][idx];
        std::size_t top = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (std::abs(col[k]) > std::abs(col[top]))
                top = k;
        if (col[top] < 0.0)
            for (double& x : col)
                x = -x;
        vectors.push_back(std::move(col));
    }
    return {std::move(values), std::move(vectors)};
}

// Small named graphs used across the metric tests.

inline r0net::Graph path_graph(int n) {
    r0net::Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline r0net::Graph cycle_graph(int n) {
    r0net::Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline r0net::Graph complete_graph(int n) {
    r0net::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

inline r0net::Graph star_graph(int leaves) {
    r0net::Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

} // namespace oracles
