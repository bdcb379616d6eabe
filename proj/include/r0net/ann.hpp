#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "r0net/errors.hpp"
#include "r0net/rng.hpp"

namespace r0net {

/// Rule-of-thumb upper bound on hidden layer size that keeps the free
/// parameter count a fraction of the sample count:
/// floor(N_s / (alpha * (N_i + N_o))), alpha in [2, 10].
inline int hidden_neurons_rule(long n_samples, int n_in, int n_out, double alpha) {
    if (n_samples < 1 || n_in < 1 || n_out < 1)
        throw ParameterError("hidden_neurons_rule: counts must be >= 1");
    if (alpha < 2.0 || alpha > 10.0)
        throw ParameterError("hidden_neurons_rule: alpha must be in [2, 10]");
    return static_cast<int>(std::floor(static_cast<double>(n_samples) /
                                       (alpha * (n_in + n_out))));
}

struct AnnConfig {
    int hidden = 23;
    int epochs = 50;
    int batch_size = 5;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double adam_epsilon = 1e-8;
    double init_stddev = 0.05;
    bool zero_init = false; // start all weights at zero instead of Gaussian

    void validate() const {
        if (hidden < 1)
            throw ParameterError("AnnConfig: hidden must be >= 1");
        if (epochs < 1)
            throw ParameterError("AnnConfig: epochs must be >= 1");
        if (batch_size < 1)
            throw ParameterError("AnnConfig: batch_size must be >= 1");
        if (!(learning_rate > 0.0))
            throw ParameterError("AnnConfig: learning_rate must be positive");
        if (beta1 < 0.0 || beta1 >= 1.0 || beta2 < 0.0 || beta2 >= 1.0)
            throw ParameterError("AnnConfig: betas must be in [0, 1)");
        if (!(adam_epsilon > 0.0))
            throw ParameterError("AnnConfig: adam_epsilon must be positive");
        if (init_stddev < 0.0)
            throw ParameterError("AnnConfig: init_stddev must be >= 0");
    }
};

/// One hidden relu layer, identity output:
/// yhat = b2 + sum_j w2[j] * relu(b1[j] + sum_i w1[j*d+i] * x[i]).
struct AnnModel {
    int input_dim = 0;
    int hidden_dim = 0;
    std::vector<double> w1; // hidden_dim x input_dim, row-major
    std::vector<double> b1; // hidden_dim
    std::vector<double> w2; // hidden_dim
    double b2 = 0.0;
    std::vector<double> epoch_loss; // full-pass training MSE per epoch

    double predict(const std::vector<double>& x) const {
        if (static_cast<int>(x.size()) != input_dim)
            throw ParameterError("AnnModel::predict: feature dimension mismatch");
        double out = b2;
        for (int j = 0; j < hidden_dim; ++j) {
            double pre = b1[static_cast<std::size_t>(j)];
            const double* wrow = &w1[static_cast<std::size_t>(j) * static_cast<std::size_t>(input_dim)];
            for (int i = 0; i < input_dim; ++i)
                pre += wrow[i] * x[static_cast<std::size_t>(i)];
            if (pre > 0.0)
                out += w2[static_cast<std::size_t>(j)] * pre;
        }
        return out;
    }
};

struct AnnGradients {
    std::vector<double> w1;
    std::vector<double> b1;
    std::vector<double> w2;
    double b2 = 0.0;
};

/// Mean squared error over the batch and its gradient with respect to
/// every parameter. relu is given derivative 0 at exactly 0. Exposed so
/// the analytic gradient can be compared against finite differences.
inline double ann_loss_and_gradients(const AnnModel& model,
                                     const std::vector<std::vector<double>>& X,
                                     const std::vector<double>& y, AnnGradients& grads) {
    if (X.empty() || X.size() != y.size())
        throw ParameterError("ann_loss_and_gradients: bad batch shape");
    const int d = model.input_dim;
    const int h = model.hidden_dim;
    grads.w1.assign(model.w1.size(), 0.0);
    grads.b1.assign(model.b1.size(), 0.0);
    grads.w2.assign(model.w2.size(), 0.0);
    grads.b2 = 0.0;
    const double inv = 1.0 / static_cast<double>(X.size());
    double loss = 0.0;
    std::vector<double> act(static_cast<std::size_t>(h));
    for (std::size_t s = 0; s < X.size(); ++s) {
        const std::vector<double>& x = X[s];
        if (static_cast<int>(x.size()) != d)
            throw ParameterError("ann_loss_and_gradients: feature dimension mismatch");
        double out = model.b2;
        for (int j = 0; j < h; ++j) {
            double pre = model.b1[static_cast<std::size_t>(j)];
            const double* wrow = &model.w1[static_cast<std::size_t>(j) * static_cast<std::size_t>(d)];
            for (int i = 0; i < d; ++i)
                pre += wrow[i] * x[static_cast<std::size_t>(i)];
            const double a = pre > 0.0 ? pre : 0.0;
            act[static_cast<std::size_t>(j)] = a;
            out += model.w2[static_cast<std::size_t>(j)] * a;
        }
        const double err = out - y[s];
        loss += err * err * inv;
        const double dout = 2.0 * err * inv;
        grads.b2 += dout;
        for (int j = 0; j < h; ++j) {
            const double a = act[static_cast<std::size_t>(j)];
            grads.w2[static_cast<std::size_t>(j)] += dout * a;
            if (a > 0.0) { // relu gate: derivative 1 only where pre > 0
                const double dpre = dout * model.w2[static_cast<std::size_t>(j)];
                grads.b1[static_cast<std::size_t>(j)] += dpre;
                double* grow = &grads.w1[static_cast<std::size_t>(j) * static_cast<std::size_t>(d)];
                for (int i = 0; i < d; ++i)
                    grow[i] += dpre * x[static_cast<std::size_t>(i)];
            }
        }
    }
    return loss;
}

inline double ann_mse(const AnnModel& model, const std::vector<std::vector<double>>& X,
                      const std::vector<double>& y) {
    double loss = 0.0;
    for (std::size_t s = 0; s < X.size(); ++s) {
        const double err = model.predict(X[s]) - y[s];
        loss += err * err;
    }
    return loss / static_cast<double>(X.size());
}

/// Minibatch Adam training. Sample order is reshuffled each epoch from a
/// seed-derived stream, weights start from Gaussian(0, init_stddev), so
/// runs are bit-reproducible. Throws DivergenceError when the loss stops
/// being finite.
inline AnnModel train_ann(const std::vector<std::vector<double>>& X, const std::vector<double>& y,
                          const AnnConfig& config, std::uint64_t seed) {
    config.validate();
    if (X.empty() || X.size() != y.size())
        throw ParameterError("train_ann: bad training set shape");
    const int d = static_cast<int>(X[0].size());
    for (const auto& row : X)
        if (static_cast<int>(row.size()) != d)
            throw ParameterError("train_ann: ragged design matrix");

    AnnModel model;
    model.input_dim = d;
    model.hidden_dim = config.hidden;
    const std::size_t n_w1 = static_cast<std::size_t>(config.hidden) * static_cast<std::size_t>(d);
    model.w1.assign(n_w1, 0.0);
    model.b1.assign(static_cast<std::size_t>(config.hidden), 0.0);
    model.w2.assign(static_cast<std::size_t>(config.hidden), 0.0);
    model.b2 = 0.0;
    if (!config.zero_init) {
        Rng init_rng(derive_seed(seed, 0));
        for (double& w : model.w1)
            w = init_rng.gaussian(0.0, config.init_stddev);
        for (double& w : model.w2)
            w = init_rng.gaussian(0.0, config.init_stddev);
    }

    const std::size_t n_params = n_w1 + 2 * static_cast<std::size_t>(config.hidden) + 1;
    std::vector<double> adam_m(n_params, 0.0), adam_v(n_params, 0.0);
    long t = 0;

    std::vector<int> order(X.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);

    AnnGradients grads;
    std::vector<std::vector<double>> batch_x;
    std::vector<double> batch_y;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        Rng shuffle_rng(derive_seed(seed, 1, static_cast<std::uint64_t>(epoch)));
        shuffle_rng.shuffle(order);
        for (std::size_t at = 0; at < order.size(); at += static_cast<std::size_t>(config.batch_size)) {
            const std::size_t end = std::min(order.size(), at + static_cast<std::size_t>(config.batch_size));
            batch_x.clear();
            batch_y.clear();
            for (std::size_t i = at; i < end; ++i) {
                batch_x.push_back(X[static_cast<std::size_t>(order[i])]);
                batch_y.push_back(y[static_cast<std::size_t>(order[i])]);
            }
            const double loss = ann_loss_and_gradients(model, batch_x, batch_y, grads);
            if (!std::isfinite(loss))
                throw DivergenceError("train_ann: non-finite loss", epoch);
            ++t;
            const double bc1 = 1.0 - std::pow(config.beta1, static_cast<double>(t));
            const double bc2 = 1.0 - std::pow(config.beta2, static_cast<double>(t));
            std::size_t p = 0;
            auto adam_step = [&](double& theta, double g) {
                adam_m[p] = config.beta1 * adam_m[p] + (1.0 - config.beta1) * g;
                adam_v[p] = config.beta2 * adam_v[p] + (1.0 - config.beta2) * g * g;
                theta -= config.learning_rate * (adam_m[p] / bc1) /
                         (std::sqrt(adam_v[p] / bc2) + config.adam_epsilon);
                ++p;
            };
            for (std::size_t i = 0; i < model.w1.size(); ++i)
                adam_step(model.w1[i], grads.w1[i]);
            for (std::size_t i = 0; i < model.b1.size(); ++i)
                adam_step(model.b1[i], grads.b1[i]);
            for (std::size_t i = 0; i < model.w2.size(); ++i)
                adam_step(model.w2[i], grads.w2[i]);
            adam_step(model.b2, grads.b2);
        }
        const double epoch_mse = ann_mse(model, X, y);
        if (!std::isfinite(epoch_mse))
            throw DivergenceError("train_ann: non-finite loss", epoch);
        model.epoch_loss.push_back(epoch_mse);
    }
    return model;
}

} // namespace r0net
