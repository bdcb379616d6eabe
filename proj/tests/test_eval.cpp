#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "r0net/eval.hpp"
#include "r0net/rng.hpp"

using namespace r0net;

TEST_CASE("metrics against hand-computed values") {
    const std::vector<double> y{1.0, 2.0, 3.0, 4.0};
    const std::vector<double> pred{1.1, 1.9, 3.2, 3.8};
    const Metrics m = evaluate(y, pred);
    REQUIRE_THAT(m.mse, Catch::Matchers::WithinAbs(0.025, 1e-12));
    REQUIRE_THAT(m.r2, Catch::Matchers::WithinAbs(0.98, 1e-12));
}

TEST_CASE("metric extremes") {
    const std::vector<double> y{1.0, 2.0, 3.0};
    SECTION("perfect prediction") {
        const Metrics m = evaluate(y, y);
        REQUIRE(m.mse == 0.0);
        REQUIRE(m.r2 == 1.0);
    }
    SECTION("predicting the mean scores zero") {
        const Metrics m = evaluate(y, {2.0, 2.0, 2.0});
        REQUIRE_THAT(m.r2, Catch::Matchers::WithinAbs(0.0, 1e-15));
    }
    SECTION("worse than the mean goes negative") {
        const Metrics m = evaluate(y, {3.0, 3.0, 3.0});
        REQUIRE_THAT(m.r2, Catch::Matchers::WithinAbs(-1.5, 1e-12));
        REQUIRE_THAT(m.mse, Catch::Matchers::WithinAbs(5.0 / 3.0, 1e-12));
    }
}

TEST_CASE("metric validation") {
    REQUIRE_THROWS_AS(evaluate({}, {}), ParameterError);
    REQUIRE_THROWS_AS(evaluate({1.0, 2.0}, {1.0}), ParameterError);
    REQUIRE_THROWS_AS(evaluate({2.0, 2.0, 2.0}, {1.0, 2.0, 3.0}), ParameterError);
}

TEST_CASE("model specs parse from names") {
    REQUIRE(ModelSpec::from_name("linear").kind == ModelKind::linear);
    REQUIRE(ModelSpec::from_name("ann").kind == ModelKind::ann);

    const ModelSpec rbf = ModelSpec::from_name("svr-rbf");
    REQUIRE(rbf.kind == ModelKind::svr);
    REQUIRE(rbf.svr.kernel.kind == KernelKind::rbf);
    REQUIRE_THAT(rbf.svr.kernel.gamma, Catch::Matchers::WithinAbs(1.0 / 6.0, 1e-15));

    const ModelSpec poly = ModelSpec::from_name("svr-poly");
    REQUIRE(poly.svr.kernel.kind == KernelKind::poly);
    REQUIRE(poly.svr.kernel.gamma == 0.1);
    REQUIRE(poly.svr.kernel.degree == 2);

    REQUIRE(ModelSpec::from_name("svr-linear").svr.kernel.kind == KernelKind::linear);
    REQUIRE_THROWS_AS(ModelSpec::from_name("forest"), ParameterError);

    for (const char* n : {"linear", "ann", "svr-linear", "svr-poly", "svr-rbf"})
        REQUIRE(ModelSpec::from_name(n).name() == n);
}

namespace {

Dataset linear_dataset(std::size_t n, double noise, std::uint64_t seed) {
    Rng rng(seed);
    Dataset ds;
    ds.feature_names = {"a", "b"};
    for (std::size_t i = 0; i < n; ++i) {
        Sample s;
        const double a = rng.uniform(-1.0, 1.0);
        const double b = rng.uniform(-1.0, 1.0);
        s.features = {a, b};
        s.label = 1.0 + 2.0 * a - b + noise * rng.gaussian();
        s.family = "er";
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

} // namespace

TEST_CASE("train_model dispatches on the spec") {
    const Dataset ds = linear_dataset(40, 0.0, 17);
    const auto X = ds.matrix();
    const auto y = ds.labels();

    const TrainedModel lin = train_model(X, y, ModelSpec::from_name("linear"), 1);
    REQUIRE(lin.kind == ModelKind::linear);
    REQUIRE_THAT(lin.predict({0.5, 0.5}), Catch::Matchers::WithinAbs(1.5, 1e-9));

    ModelSpec svr_spec = ModelSpec::from_name("svr-linear");
    svr_spec.svr.C = 50.0;
    svr_spec.svr.epsilon = 0.01;
    const TrainedModel svr = train_model(X, y, svr_spec, 1);
    REQUIRE(svr.kind == ModelKind::svr);
    REQUIRE_THAT(svr.predict({0.5, 0.5}), Catch::Matchers::WithinAbs(1.5, 0.1));

    ModelSpec ann_spec = ModelSpec::from_name("ann");
    ann_spec.ann.hidden = 4;
    ann_spec.ann.epochs = 200;
    const TrainedModel ann = train_model(X, y, ann_spec, 1);
    REQUIRE(ann.kind == ModelKind::ann);
    REQUIRE(std::isfinite(ann.predict({0.5, 0.5})));
}

TEST_CASE("cross validation on clean linear data is near perfect") {
    const Dataset ds = linear_dataset(60, 0.001, 23);
    const CvReport report = cross_validate(ds, ModelSpec::from_name("linear"), 5, 7);
    REQUIRE(report.k == 5);
    REQUIRE(report.folds.size() == 5);
    REQUIRE(report.mean_r2 > 0.999);
    REQUIRE(report.mean_mse < 1e-4);
    REQUIRE(report.all_converged);
}

TEST_CASE("cross validation is reproducible per seed") {
    const Dataset ds = linear_dataset(60, 0.3, 29);
    const ModelSpec spec = ModelSpec::from_name("linear");
    const CvReport a = cross_validate(ds, spec, 4, 11);
    const CvReport b = cross_validate(ds, spec, 4, 11);
    REQUIRE(a.mean_mse == b.mean_mse);
    REQUIRE(a.mean_r2 == b.mean_r2);
    for (std::size_t f = 0; f < a.folds.size(); ++f) {
        REQUIRE(a.folds[f].mse == b.folds[f].mse);
        REQUIRE(a.folds[f].r2 == b.folds[f].r2);
    }
    const CvReport c = cross_validate(ds, spec, 4, 12);
    REQUIRE(c.mean_mse != a.mean_mse); // different shuffle, different folds
}

TEST_CASE("cross validation flags unconverged folds") {
    const Dataset ds = linear_dataset(40, 0.5, 31);
    ModelSpec spec = ModelSpec::from_name("svr-rbf");
    spec.svr.max_sweeps = 1;
    spec.svr.tol = 1e-10;
    spec.svr.epsilon = 1e-4;
    spec.svr.C = 1000.0;
    const CvReport report = cross_validate(ds, spec, 4, 3);
    REQUIRE_FALSE(report.all_converged);
}

TEST_CASE("cross validation with the network model runs end to end") {
    const Dataset ds = linear_dataset(24, 0.1, 37);
    ModelSpec spec = ModelSpec::from_name("ann");
    spec.ann.hidden = 2;
    spec.ann.epochs = 10;
    const CvReport report = cross_validate(ds, spec, 3, 5);
    REQUIRE(report.folds.size() == 3);
    for (const Metrics& m : report.folds)
        REQUIRE(std::isfinite(m.mse));
}

TEST_CASE("cross validation validates k") {
    const Dataset ds = linear_dataset(10, 0.1, 41);
    const ModelSpec spec = ModelSpec::from_name("linear");
    REQUIRE_THROWS_AS(cross_validate(ds, spec, 1, 1), ParameterError);
    REQUIRE_THROWS_AS(cross_validate(ds, spec, 11, 1), ParameterError);
}
