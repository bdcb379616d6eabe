#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "r0net/errors.hpp"

namespace r0net {

enum class KernelKind { linear, poly, rbf };

inline const char* kernel_name(KernelKind k) {
    switch (k) {
    case KernelKind::linear: return "linear";
    case KernelKind::poly: return "poly";
    case KernelKind::rbf: return "rbf";
    }
    return "?";
}

inline KernelKind kernel_from_name(const std::string& name) {
    for (KernelKind k : {KernelKind::linear, KernelKind::poly, KernelKind::rbf})
        if (name == kernel_name(k))
            return k;
    throw ParameterError("unknown kernel: " + name);
}

struct KernelSpec {
    KernelKind kind = KernelKind::rbf;
    double gamma = 1.0 / 6.0; // poly and rbf
    int degree = 2;           // poly only
    double coef0 = 0.0;       // poly only

    void validate() const {
        if (kind != KernelKind::linear && !(gamma > 0.0))
            throw ParameterError("KernelSpec: gamma must be positive");
        if (kind == KernelKind::poly && degree < 1)
            throw ParameterError("KernelSpec: degree must be >= 1");
    }
};

inline double kernel_eval(const KernelSpec& spec, const std::vector<double>& a,
                          const std::vector<double>& b) {
    if (a.size() != b.size())
        throw ParameterError("kernel_eval: dimension mismatch");
    switch (spec.kind) {
    case KernelKind::linear: {
        double dot = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            dot += a[i] * b[i];
        return dot;
    }
    case KernelKind::poly: {
        double dot = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            dot += a[i] * b[i];
        return std::pow(spec.gamma * dot + spec.coef0, spec.degree);
    }
    case KernelKind::rbf: {
        double d2 = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            d2 += d * d;
        }
        return std::exp(-spec.gamma * d2);
    }
    }
    return 0.0;
}

struct SvrConfig {
    KernelSpec kernel;
    double C = 1.0;
    double epsilon = 0.1;
    double tol = 1e-3;
    // Budget in sweeps, where one sweep is m pair updates. 0 means the
    // default of 10*m sweeps.
    long max_sweeps = 0;
    // When set, the dual objective is recorded once per sweep (used by
    // tests to check monotone progress).
    bool record_objective = false;

    void validate() const {
        kernel.validate();
        if (!(C > 0.0))
            throw ParameterError("SvrConfig: C must be positive");
        if (epsilon < 0.0)
            throw ParameterError("SvrConfig: epsilon must be >= 0");
        if (!(tol > 0.0))
            throw ParameterError("SvrConfig: tol must be positive");
        if (max_sweeps < 0)
            throw ParameterError("SvrConfig: max_sweeps must be >= 0");
    }
};

struct SvrModel {
    KernelSpec kernel;
    double C = 1.0;
    double epsilon = 0.1;
    double bias = 0.0;
    std::vector<std::vector<double>> support_vectors; // rows with nonzero coefficient
    std::vector<double> coefs;                        // beta = alpha - alpha*
    bool converged = true;
    long iterations = 0; // pair updates performed
    std::vector<double> objective_history;

    double predict(const std::vector<double>& x) const {
        double out = bias;
        for (std::size_t i = 0; i < support_vectors.size(); ++i)
            out += coefs[i] * kernel_eval(kernel, support_vectors[i], x);
        return out;
    }
};

/// Epsilon-insensitive support vector regression trained by sequential
/// minimal optimization on the stacked dual: variables a_p in [0, C] for
/// p = 0..2m-1, where p < m carries alpha_i (sign s = +1) and p >= m
/// carries alpha*_i (s = -1), beta_i = a_i - a_{i+m}.
///
/// Minimizes W(a) = 1/2 sum_pq s_p s_q K(x_p, x_q) a_p a_q
///                + sum_p (epsilon - s_p y_p) a_p
/// subject to sum_p s_p a_p = 0, using the maximal violating pair: with
/// v_p = -s_p G_p (each vector's bias estimate), pick the largest v over
/// the set allowed to grow and the smallest over the set allowed to
/// shrink; optimal once they cross within tol.
inline SvrModel train_svr(const std::vector<std::vector<double>>& X, const std::vector<double>& y,
                          const SvrConfig& config) {
    config.validate();
    if (X.empty() || X.size() != y.size())
        throw ParameterError("train_svr: bad training set shape");
    const std::size_t m = X.size();
    const std::size_t d = X[0].size();
    for (const auto& row : X)
        if (row.size() != d)
            throw ParameterError("train_svr: ragged design matrix");

    const double C = config.C;
    const double eps = config.epsilon;
    const long total_updates =
        (config.max_sweeps > 0 ? config.max_sweeps : 10 * static_cast<long>(m)) *
        static_cast<long>(m);

    // Kernel matrix. Training sets here are small enough to hold it
    // whole; fall back to row recomputation beyond the cap.
    const bool cache_full = m <= 3000;
    std::vector<double> K;
    if (cache_full) {
        K.resize(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                const double v = kernel_eval(config.kernel, X[i], X[j]);
                K[i * m + j] = v;
                K[j * m + i] = v;
            }
    }
    std::vector<double> diag(m);
    for (std::size_t i = 0; i < m; ++i)
        diag[i] = cache_full ? K[i * m + i] : kernel_eval(config.kernel, X[i], X[i]);
    std::vector<double> row_i_buf, row_j_buf;
    auto kernel_row = [&](std::size_t i, std::vector<double>& buf) -> const double* {
        if (cache_full)
            return &K[i * m];
        buf.resize(m);
        for (std::size_t j = 0; j < m; ++j)
            buf[j] = kernel_eval(config.kernel, X[i], X[j]);
        return buf.data();
    };

    const std::size_t total = 2 * m;
    auto sign_of = [m](std::size_t p) { return p < m ? 1.0 : -1.0; };
    std::vector<double> a(total, 0.0);
    std::vector<double> lin(total);
    std::vector<double> G(total);
    for (std::size_t p = 0; p < total; ++p) {
        lin[p] = eps - sign_of(p) * y[p % m];
        G[p] = lin[p]; // gradient at a = 0
    }

    auto dual_objective = [&]() {
        double w = 0.0;
        for (std::size_t p = 0; p < total; ++p)
            w += a[p] * (G[p] + lin[p]);
        return -0.5 * w; // maximization form
    };

    SvrModel model;
    model.kernel = config.kernel;
    model.C = C;
    model.epsilon = eps;
    if (config.record_objective)
        model.objective_history.push_back(dual_objective());

    constexpr double TAU = 1e-12;
    long updates = 0;
    bool optimal = false;
    while (updates < total_updates) {
        // Maximal violating pair over v_p = -s_p G_p.
        double v_up = -std::numeric_limits<double>::infinity();
        double v_low = std::numeric_limits<double>::infinity();
        std::size_t p_up = total, p_low = total;
        for (std::size_t p = 0; p < total; ++p) {
            const double s = sign_of(p);
            const double v = -s * G[p];
            const bool can_up = (s > 0.0) ? (a[p] < C) : (a[p] > 0.0);
            const bool can_low = (s > 0.0) ? (a[p] > 0.0) : (a[p] < C);
            if (can_up && v > v_up) {
                v_up = v;
                p_up = p;
            }
            if (can_low && v < v_low) {
                v_low = v;
                p_low = p;
            }
        }
        if (p_up == total || p_low == total || v_up - v_low < config.tol) {
            optimal = true;
            break;
        }
        const std::size_t i = p_up, j = p_low;
        const double si = sign_of(i), sj = sign_of(j);
        const std::size_t ri = i % m, rj = j % m;
        const double Kij = cache_full ? K[ri * m + rj] : kernel_eval(config.kernel, X[ri], X[rj]);
        const double old_ai = a[i], old_aj = a[j];
        if (si != sj) {
            // both variables move together; the induced change in beta is
            // t*(e_ri - e_rj) either way, so the curvature matches the
            // same-sign branch
            double quad = diag[ri] + diag[rj] - 2.0 * Kij;
            if (quad <= 0.0)
                quad = TAU;
            const double delta = (-G[i] - G[j]) / quad;
            const double diff = a[i] - a[j];
            a[i] += delta;
            a[j] += delta;
            if (diff > 0.0) {
                if (a[j] < 0.0) { a[j] = 0.0; a[i] = diff; }
            } else {
                if (a[i] < 0.0) { a[i] = 0.0; a[j] = -diff; }
            }
            if (a[i] > C) { a[i] = C; a[j] = C - diff; }
            if (a[j] > C) { a[j] = C; a[i] = C + diff; }
        } else {
            double quad = diag[ri] + diag[rj] - 2.0 * Kij;
            if (quad <= 0.0)
                quad = TAU;
            const double delta = (G[i] - G[j]) / quad;
            const double sum = a[i] + a[j];
            a[i] -= delta;
            a[j] += delta;
            if (a[i] > C) { a[i] = C; a[j] = sum - C; }
            if (a[j] < 0.0) { a[j] = 0.0; a[i] = sum; }
            if (a[j] > C) { a[j] = C; a[i] = sum - C; }
            if (a[i] < 0.0) { a[i] = 0.0; a[j] = sum; }
        }
        const double dai = a[i] - old_ai;
        const double daj = a[j] - old_aj;
        if (dai != 0.0 || daj != 0.0) {
            const double* Ki = kernel_row(ri, row_i_buf);
            const double* Kj = kernel_row(rj, row_j_buf);
            for (std::size_t p = 0; p < total; ++p) {
                const double sp = sign_of(p);
                G[p] += sp * (si * dai * Ki[p % m] + sj * daj * Kj[p % m]);
            }
        }
        ++updates;
        if (config.record_objective && updates % static_cast<long>(m) == 0)
            model.objective_history.push_back(dual_objective());
    }
    model.converged = optimal;
    model.iterations = updates;
    if (config.record_objective)
        model.objective_history.push_back(dual_objective());

    // Bias: average v_p over free vectors; otherwise the midpoint of the
    // interval the bound vectors leave for it.
    double free_sum = 0.0;
    long free_count = 0;
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < total; ++p) {
        const double s = sign_of(p);
        const double v = -s * G[p];
        if (a[p] > 0.0 && a[p] < C) {
            free_sum += v;
            ++free_count;
        } else if ((s > 0.0 && a[p] == 0.0) || (s < 0.0 && a[p] == C)) {
            lower = std::max(lower, v);
        } else {
            upper = std::min(upper, v);
        }
    }
    if (free_count > 0)
        model.bias = free_sum / static_cast<double>(free_count);
    else if (std::isfinite(lower) && std::isfinite(upper))
        model.bias = 0.5 * (lower + upper);
    else
        model.bias = std::isfinite(lower) ? lower : (std::isfinite(upper) ? upper : 0.0);

    for (std::size_t i = 0; i < m; ++i) {
        const double beta = a[i] - a[i + m];
        if (beta != 0.0) {
            model.support_vectors.push_back(X[i]);
            model.coefs.push_back(beta);
        }
    }
    return model;
}

} // namespace r0net
