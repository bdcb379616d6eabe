#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "r0net/ann.hpp"
#include "r0net/dataset.hpp"
#include "r0net/errors.hpp"
#include "r0net/linreg.hpp"
#include "r0net/rng.hpp"
#include "r0net/svr.hpp"

namespace r0net {

struct Metrics {
    double mse = 0.0;
    double r2 = 0.0;
};

/// Mean squared error and coefficient of determination
/// R^2 = 1 - SS_res / SS_tot. A constant truth vector has no variance to
/// explain, so R^2 is rejected there.
inline Metrics evaluate(const std::vector<double>& y_true, const std::vector<double>& y_pred) {
    if (y_true.empty() || y_true.size() != y_pred.size())
        throw ParameterError("evaluate: size mismatch");
    const double n = static_cast<double>(y_true.size());
    double mean = 0.0;
    for (double v : y_true)
        mean += v;
    mean /= n;
    double ss_res = 0.0, ss_tot = 0.0, mse = 0.0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const double r = y_true[i] - y_pred[i];
        ss_res += r * r;
        mse += r * r;
        const double c = y_true[i] - mean;
        ss_tot += c * c;
    }
    if (ss_tot == 0.0)
        throw ParameterError("evaluate: y_true is constant, R^2 undefined");
    return Metrics{mse / n, 1.0 - ss_res / ss_tot};
}

enum class ModelKind { linear, svr, ann };

/// Which regressor to train, with its hyper-parameters. The name form
/// is one of: linear, svr-linear, svr-poly, svr-rbf, ann.
struct ModelSpec {
    ModelKind kind = ModelKind::linear;
    SvrConfig svr;
    AnnConfig ann;

    static ModelSpec from_name(const std::string& name) {
        ModelSpec spec;
        if (name == "linear") {
            spec.kind = ModelKind::linear;
        } else if (name == "ann") {
            spec.kind = ModelKind::ann;
        } else if (name == "svr-linear" || name == "svr-poly" || name == "svr-rbf") {
            spec.kind = ModelKind::svr;
            const std::string kernel = name.substr(4);
            spec.svr.kernel.kind = kernel_from_name(kernel);
            if (spec.svr.kernel.kind == KernelKind::poly)
                spec.svr.kernel.gamma = 0.1;
        } else {
            throw ParameterError("unknown model: " + name);
        }
        return spec;
    }

    std::string name() const {
        switch (kind) {
        case ModelKind::linear: return "linear";
        case ModelKind::ann: return "ann";
        case ModelKind::svr: return std::string("svr-") + kernel_name(svr.kernel.kind);
        }
        return "?";
    }
};

struct TrainedModel {
    ModelKind kind = ModelKind::linear;
    std::vector<std::string> feature_names;
    LinearModel linear;
    SvrModel svr;
    AnnModel ann;

    double predict(const std::vector<double>& x) const {
        switch (kind) {
        case ModelKind::linear: return linear.predict(x);
        case ModelKind::svr: return svr.predict(x);
        case ModelKind::ann: return ann.predict(x);
        }
        return 0.0;
    }
};

inline TrainedModel train_model(const std::vector<std::vector<double>>& X,
                                const std::vector<double>& y, const ModelSpec& spec,
                                std::uint64_t seed) {
    TrainedModel model;
    model.kind = spec.kind;
    switch (spec.kind) {
    case ModelKind::linear:
        model.linear = train_linear(X, y);
        break;
    case ModelKind::svr:
        model.svr = train_svr(X, y, spec.svr);
        break;
    case ModelKind::ann:
        model.ann = train_ann(X, y, spec.ann, seed);
        break;
    }
    return model;
}

struct CvReport {
    int k = 0;
    std::vector<Metrics> folds;
    double mean_mse = 0.0;
    double mean_r2 = 0.0;
    bool all_converged = true; // false if any SVR fold hit its budget
};

/// k-fold cross-validation: seeded shuffle into near-equal folds, train
/// on k-1 of them, score the held-out fold. Fold metrics are averaged
/// arithmetically.
inline CvReport cross_validate(const Dataset& ds, const ModelSpec& spec, int k,
                               std::uint64_t seed) {
    const FoldPlan plan = kfold_plan(ds.size(), k, derive_seed(seed, 0));
    CvReport report;
    report.k = k;
    for (int f = 0; f < k; ++f) {
        std::vector<std::vector<double>> train_x, test_x;
        std::vector<double> train_y, test_y;
        for (int g = 0; g < k; ++g) {
            for (int idx : plan.folds[static_cast<std::size_t>(g)]) {
                const Sample& s = ds.samples[static_cast<std::size_t>(idx)];
                if (g == f) {
                    test_x.push_back(s.features);
                    test_y.push_back(s.label);
                } else {
                    train_x.push_back(s.features);
                    train_y.push_back(s.label);
                }
            }
        }
        const TrainedModel model =
            train_model(train_x, train_y, spec, derive_seed(seed, 1, static_cast<std::uint64_t>(f)));
        if (spec.kind == ModelKind::svr && !model.svr.converged)
            report.all_converged = false;
        std::vector<double> pred;
        pred.reserve(test_x.size());
        for (const auto& x : test_x)
            pred.push_back(model.predict(x));
        report.folds.push_back(evaluate(test_y, pred));
    }
    for (const Metrics& m : report.folds) {
        report.mean_mse += m.mse;
        report.mean_r2 += m.r2;
    }
    report.mean_mse /= k;
    report.mean_r2 /= k;
    return report;
}

} // namespace r0net
