#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "r0net/dataset.hpp"
#include "r0net/errors.hpp"

namespace r0net {

enum class PcaAxis {
    sample, // eigenvectors of the n x n matrix D Dt / (n-1)
    feature // eigenvectors of the p x p matrix Dt D / (n-1)
};

struct PcaOptions {
    PcaAxis axis = PcaAxis::sample;
    bool center = true;
    // Scale columns to unit variance after centering. Off by default:
    // exactly collinear feature pairs (density is average degree rescaled
    // when every graph has the same node count) become identical columns
    // under standardization and then tie in the ranking.
    bool standardize = false;
};

struct PcaResult {
    PcaAxis axis = PcaAxis::sample;
    std::vector<double> eigenvalues;                // descending, floored at 0
    std::vector<std::vector<double>> eigenvectors;  // [j] pairs with eigenvalues[j]
    int rank = 0;        // eigenvalues above max * 1e-12
    bool rank_warning = false; // input left less spread than dimensions allow
    std::vector<double> col_mean;  // centering that was applied
    std::vector<double> col_scale; // scaling that was applied (1 if none)
};

namespace detail {

inline Eigen::MatrixXd to_centered_matrix(const std::vector<std::vector<double>>& rows,
                                          const PcaOptions& opt, std::vector<double>& mean,
                                          std::vector<double>& scale) {
    if (rows.empty())
        throw ParameterError("pca: empty data matrix");
    const std::size_t n = rows.size();
    const std::size_t p = rows[0].size();
    if (p == 0)
        throw ParameterError("pca: zero feature columns");
    Eigen::MatrixXd D(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != p)
            throw ParameterError("pca: ragged data matrix");
        for (std::size_t j = 0; j < p; ++j)
            D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    mean.assign(p, 0.0);
    scale.assign(p, 1.0);
    if (opt.center) {
        for (std::size_t j = 0; j < p; ++j) {
            mean[j] = D.col(static_cast<Eigen::Index>(j)).mean();
            D.col(static_cast<Eigen::Index>(j)).array() -= mean[j];
        }
    }
    if (opt.standardize) {
        for (std::size_t j = 0; j < p; ++j) {
            const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
            const double sd = std::sqrt(D.col(static_cast<Eigen::Index>(j)).squaredNorm() / denom);
            if (sd > 0.0) {
                scale[j] = sd;
                D.col(static_cast<Eigen::Index>(j)) /= sd;
            }
        }
    }
    return D;
}

} // namespace detail

/// Principal component analysis of the row-major data matrix. Sample
/// axis diagonalizes the n x n spread of sample vectors; feature axis
/// the p x p feature covariance. Eigenpairs come back in descending
/// eigenvalue order with each vector's largest-magnitude entry made
/// positive, so results are deterministic.
inline PcaResult pca(const std::vector<std::vector<double>>& rows, const PcaOptions& opt = {}) {
    std::vector<double> mean, scale;
    const Eigen::MatrixXd D = detail::to_centered_matrix(rows, opt, mean, scale);
    const double denom = D.rows() > 1 ? static_cast<double>(D.rows() - 1) : 1.0;
    Eigen::MatrixXd cov;
    if (opt.axis == PcaAxis::sample)
        cov = D * D.transpose() / denom;
    else
        cov = D.transpose() * D / denom;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success)
        throw GenerationError("pca: eigendecomposition failed");
    const Eigen::Index dim = cov.rows();

    PcaResult result;
    result.axis = opt.axis;
    result.col_mean = std::move(mean);
    result.col_scale = std::move(scale);
    result.eigenvalues.reserve(static_cast<std::size_t>(dim));
    result.eigenvectors.reserve(static_cast<std::size_t>(dim));
    for (Eigen::Index j = dim - 1; j >= 0; --j) { // solver returns ascending
        const double ev = solver.eigenvalues()(j);
        result.eigenvalues.push_back(ev > 0.0 ? ev : 0.0);
        Eigen::VectorXd vec = solver.eigenvectors().col(j);
        Eigen::Index top = 0;
        vec.cwiseAbs().maxCoeff(&top);
        if (vec(top) < 0.0)
            vec = -vec;
        result.eigenvectors.emplace_back(vec.data(), vec.data() + vec.size());
    }
    const double max_ev = result.eigenvalues.empty() ? 0.0 : result.eigenvalues.front();
    for (double ev : result.eigenvalues)
        if (max_ev > 0.0 && ev > max_ev * 1e-12)
            ++result.rank;
    const std::size_t p = rows[0].size();
    const std::size_t n = rows.size();
    const int achievable = static_cast<int>(std::min(opt.center && n > 0 ? n - 1 : n, p));
    result.rank_warning = result.rank < achievable;
    return result;
}

/// Smallest component count whose eigenvalues cover at least `mass` of
/// the total.
inline int components_for_mass(const std::vector<double>& eigenvalues, double mass = 0.9) {
    if (mass <= 0.0 || mass > 1.0)
        throw ParameterError("components_for_mass: mass must be in (0, 1]");
    const double total = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
    if (total <= 0.0)
        throw ParameterError("components_for_mass: spectrum has no mass");
    double acc = 0.0;
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
        acc += eigenvalues[j];
        if (acc >= mass * total)
            return static_cast<int>(j) + 1;
    }
    return static_cast<int>(eigenvalues.size());
}

/// Raw contribution index of every feature column against the top p
/// principal directions. Sample axis: c_i = sum_j |<d_j, X_i>| with X_i
/// the processed feature column. Feature axis: c_i = sum_j lambda_j
/// |v_j[i]|, the eigenvalue-weighted loading magnitude.
inline std::vector<double> contribution_indices(const std::vector<std::vector<double>>& rows,
                                                int p, const PcaOptions& opt = {}) {
    std::vector<double> mean, scale;
    const Eigen::MatrixXd D = detail::to_centered_matrix(rows, opt, mean, scale);
    const PcaResult pc = pca(rows, opt);
    if (p < 1 || p > pc.rank)
        throw ParameterError("contribution_indices: p must be in [1, rank]; rank is " +
                             std::to_string(pc.rank));
    const std::size_t nfeat = rows[0].size();
    std::vector<double> c(nfeat, 0.0);
    for (int j = 0; j < p; ++j) {
        const auto& vec = pc.eigenvectors[static_cast<std::size_t>(j)];
        if (opt.axis == PcaAxis::sample) {
            const Eigen::Map<const Eigen::VectorXd> dj(vec.data(),
                                                       static_cast<Eigen::Index>(vec.size()));
            for (std::size_t i = 0; i < nfeat; ++i)
                c[i] += std::abs(dj.dot(D.col(static_cast<Eigen::Index>(i))));
        } else {
            for (std::size_t i = 0; i < nfeat; ++i)
                c[i] += pc.eigenvalues[static_cast<std::size_t>(j)] * std::abs(vec[i]);
        }
    }
    return c;
}

struct RankingReport {
    std::vector<std::string> feature_names; // dataset column order
    std::vector<double> raw;                // contribution per column
    std::vector<double> normalized;         // min-max scaled to [0, 1]
    std::vector<int> order;                 // column indices, strongest first
    int p_used = 0;
    bool rank_warning = false;

    std::vector<std::string> ranked_names() const {
        std::vector<std::string> out;
        out.reserve(order.size());
        for (int i : order)
            out.push_back(feature_names[static_cast<std::size_t>(i)]);
        return out;
    }
};

/// Ranks dataset features by contribution index. p = 0 picks the
/// smallest component count carrying 90% of the eigenvalue mass.
inline RankingReport rank_features(const Dataset& ds, int p = 0, const PcaOptions& opt = {}) {
    if (ds.size() < 2)
        throw ParameterError("rank_features: need at least 2 samples");
    const auto rows = ds.matrix();
    const PcaResult pc = pca(rows, opt);
    RankingReport report;
    report.feature_names = ds.feature_names;
    report.rank_warning = pc.rank_warning;
    report.p_used = p > 0 ? p : components_for_mass(
        std::vector<double>(pc.eigenvalues.begin(), pc.eigenvalues.begin() + pc.rank));
    report.raw = contribution_indices(rows, report.p_used, opt);
    const double lo = *std::min_element(report.raw.begin(), report.raw.end());
    const double hi = *std::max_element(report.raw.begin(), report.raw.end());
    report.normalized.resize(report.raw.size());
    for (std::size_t i = 0; i < report.raw.size(); ++i)
        report.normalized[i] = hi > lo ? (report.raw[i] - lo) / (hi - lo) : 0.0;
    report.order.resize(report.raw.size());
    std::iota(report.order.begin(), report.order.end(), 0);
    std::stable_sort(report.order.begin(), report.order.end(),
                     [&](int a, int b) { return report.raw[static_cast<std::size_t>(a)] >
                                                report.raw[static_cast<std::size_t>(b)]; });
    return report;
}

/// Keeps the top m ranked feature columns, in rank order, preserving
/// labels and sample metadata.
inline Dataset select_features(const Dataset& ds, const RankingReport& report, int m) {
    if (m < 1 || m > static_cast<int>(report.order.size()))
        throw ParameterError("select_features: m out of range");
    if (report.feature_names != ds.feature_names)
        throw ParameterError("select_features: ranking does not match dataset columns");
    Dataset out;
    out.feature_names.clear();
    for (int j = 0; j < m; ++j)
        out.feature_names.push_back(
            ds.feature_names[static_cast<std::size_t>(report.order[static_cast<std::size_t>(j)])]);
    out.samples.reserve(ds.size());
    for (const Sample& s : ds.samples) {
        Sample t;
        t.label = s.label;
        t.family = s.family;
        t.seed = s.seed;
        t.n = s.n;
        t.features.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
            t.features.push_back(
                s.features[static_cast<std::size_t>(report.order[static_cast<std::size_t>(j)])]);
        out.samples.push_back(std::move(t));
    }
    return out;
}

} // namespace r0net
