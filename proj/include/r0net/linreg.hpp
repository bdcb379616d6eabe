#pragma once

#include <vector>

#include <Eigen/Dense>

#include "r0net/errors.hpp"

namespace r0net {

/// Ordinary least squares fit y ~ w0 + w . x. weights[0] is the bias.
struct LinearModel {
    std::vector<double> weights;

    double predict(const std::vector<double>& x) const {
        if (x.size() + 1 != weights.size())
            throw ParameterError("LinearModel::predict: feature dimension mismatch");
        double out = weights[0];
        for (std::size_t j = 0; j < x.size(); ++j)
            out += weights[j + 1] * x[j];
        return out;
    }
};

/// Least squares with an implicit bias column. Solved by complete
/// orthogonal decomposition, which returns the minimum-norm solution
/// when the design matrix is rank deficient (e.g. duplicated or
/// linearly dependent feature columns).
inline LinearModel train_linear(const std::vector<std::vector<double>>& X,
                                const std::vector<double>& y) {
    if (X.empty())
        throw ParameterError("train_linear: empty design matrix");
    if (X.size() != y.size())
        throw ParameterError("train_linear: X and y row counts differ");
    const std::size_t m = X.size();
    const std::size_t d = X[0].size();
    Eigen::MatrixXd A(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(d + 1));
    Eigen::VectorXd b(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        if (X[i].size() != d)
            throw ParameterError("train_linear: ragged design matrix");
        A(static_cast<Eigen::Index>(i), 0) = 1.0;
        for (std::size_t j = 0; j < d; ++j)
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j) + 1) = X[i][j];
        b(static_cast<Eigen::Index>(i)) = y[i];
    }
    const Eigen::VectorXd w = A.completeOrthogonalDecomposition().solve(b);
    LinearModel model;
    model.weights.assign(w.data(), w.data() + w.size());
    return model;
}

} // namespace r0net
