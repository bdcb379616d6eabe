#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "r0net/ranking.hpp"
#include "r0net/rng.hpp"

using namespace r0net;

namespace {

std::vector<std::vector<double>> random_rows(std::size_t n, std::size_t p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> rows(n, std::vector<double>(p));
    for (auto& row : rows)
        for (double& v : row)
            v = rng.gaussian(0.0, 1.0) + rng.uniform(-0.5, 0.5);
    return rows;
}

std::vector<std::vector<double>> centered(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size(), p = rows[0].size();
    std::vector<double> mean(p, 0.0);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < p; ++j)
            mean[j] += r[j] / static_cast<double>(n);
    auto out = rows;
    for (auto& r : out)
        for (std::size_t j = 0; j < p; ++j)
            r[j] -= mean[j];
    return out;
}

} // namespace

TEST_CASE("two orthogonal unit rows") {
    const std::vector<std::vector<double>> rows{{1.0, 0.0}, {0.0, 1.0}};
    SECTION("uncentered spread is the identity") {
        PcaOptions opt;
        opt.center = false;
        const PcaResult pc = pca(rows, opt);
        REQUIRE_THAT(pc.eigenvalues[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(pc.eigenvalues[1], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE(pc.rank == 2);
        REQUIRE_FALSE(pc.rank_warning);
        REQUIRE(pc.col_mean == std::vector<double>{0.0, 0.0});
    }
    SECTION("centering collapses two mirror points to one direction") {
        const PcaResult pc = pca(rows);
        REQUIRE_THAT(pc.eigenvalues[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(pc.eigenvalues[1], Catch::Matchers::WithinAbs(0.0, 1e-12));
        REQUIRE(pc.rank == 1);
        REQUIRE_FALSE(pc.rank_warning); // two centered samples can span only one axis
        REQUIRE_THAT(std::abs(pc.eigenvectors[0][0]),
                     Catch::Matchers::WithinAbs(std::sqrt(0.5), 1e-12));
        REQUIRE(pc.eigenvectors[0][0] >= 0.0); // orientation rule
    }
}

TEST_CASE("feature-axis decomposition matches an independent eigensolver") {
    const auto rows = random_rows(12, 4, 77);
    PcaOptions opt;
    opt.axis = PcaAxis::feature;
    const PcaResult pc = pca(rows, opt);

    const auto D = centered(rows);
    std::vector<std::vector<double>> cov(4, std::vector<double>(4, 0.0));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            for (std::size_t i = 0; i < 12; ++i)
                cov[a][b] += D[i][a] * D[i][b];
            cov[a][b] /= 11.0;
        }
    const auto [values, vectors] = oracles::jacobi_eigen(cov);

    REQUIRE(pc.eigenvalues.size() == 4);
    REQUIRE(pc.rank == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        REQUIRE_THAT(pc.eigenvalues[j], Catch::Matchers::WithinAbs(values[j], 1e-9));
        for (std::size_t i = 0; i < 4; ++i)
            REQUIRE_THAT(pc.eigenvectors[j][i], Catch::Matchers::WithinAbs(vectors[j][i], 1e-7));
    }
}

TEST_CASE("sample and feature axes share their nonzero spectrum") {
    const auto rows = random_rows(12, 4, 31);
    PcaOptions fopt;
    fopt.axis = PcaAxis::feature;
    const PcaResult f = pca(rows, fopt);
    const PcaResult s = pca(rows); // sample axis default
    REQUIRE(s.eigenvalues.size() == 12);
    REQUIRE(s.rank == 4);
    for (std::size_t j = 0; j < 4; ++j)
        REQUIRE_THAT(s.eigenvalues[j], Catch::Matchers::WithinAbs(f.eigenvalues[j], 1e-9));
    for (std::size_t j = 4; j < 12; ++j)
        REQUIRE(std::abs(s.eigenvalues[j]) < 1e-10);
}

TEST_CASE("orientation makes every eigenvector's largest entry positive") {
    const auto rows = random_rows(15, 5, 99);
    for (PcaAxis axis : {PcaAxis::sample, PcaAxis::feature}) {
        PcaOptions opt;
        opt.axis = axis;
        const PcaResult pc = pca(rows, opt);
        for (const auto& vec : pc.eigenvectors) {
            double best = 0.0;
            for (double v : vec)
                if (std::abs(v) > std::abs(best))
                    best = v;
            REQUIRE(best >= 0.0);
        }
    }
}

TEST_CASE("standardization yields a correlation spectrum") {
    const auto rows = random_rows(40, 4, 13);
    PcaOptions opt;
    opt.axis = PcaAxis::feature;
    opt.standardize = true;
    const PcaResult pc = pca(rows, opt);
    const double total = std::accumulate(pc.eigenvalues.begin(), pc.eigenvalues.end(), 0.0);
    REQUIRE_THAT(total, Catch::Matchers::WithinAbs(4.0, 1e-9)); // trace of the correlation matrix
    for (double s : pc.col_scale)
        REQUIRE(s > 0.0);
}

TEST_CASE("linearly dependent columns reduce the rank and warn") {
    auto rows = random_rows(10, 2, 55);
    for (auto& r : rows)
        r.push_back(2.0 * r[0]); // third column is a copy
    PcaOptions opt;
    opt.axis = PcaAxis::feature;
    const PcaResult pc = pca(rows, opt);
    REQUIRE(pc.rank == 2);
    REQUIRE(pc.rank_warning);
}

TEST_CASE("component count for an eigenvalue mass") {
    const std::vector<double> ev{4.0, 3.0, 2.0, 1.0};
    REQUIRE(components_for_mass(ev, 0.9) == 3);
    REQUIRE(components_for_mass(ev, 0.4) == 1);
    REQUIRE(components_for_mass(ev, 1.0) == 4);
    REQUIRE(components_for_mass(ev, 0.7) == 2);
    REQUIRE_THROWS_AS(components_for_mass(ev, 0.0), ParameterError);
    REQUIRE_THROWS_AS(components_for_mass(ev, 1.1), ParameterError);
    REQUIRE_THROWS_AS(components_for_mass({0.0, 0.0}, 0.9), ParameterError);
}

TEST_CASE("contribution indices follow their definitions") {
    const auto rows = random_rows(12, 4, 21);
    SECTION("sample axis sums projections of feature columns") {
        const PcaResult pc = pca(rows);
        const auto c = contribution_indices(rows, 2);
        const auto D = centered(rows);
        for (std::size_t i = 0; i < 4; ++i) {
            double expect = 0.0;
            for (int j = 0; j < 2; ++j) {
                double dot = 0.0;
                for (std::size_t s = 0; s < 12; ++s)
                    dot += pc.eigenvectors[static_cast<std::size_t>(j)][s] * D[s][i];
                expect += std::abs(dot);
            }
            REQUIRE_THAT(c[i], Catch::Matchers::WithinAbs(expect, 1e-9));
        }
    }
    SECTION("feature axis weights loadings by eigenvalue") {
        PcaOptions opt;
        opt.axis = PcaAxis::feature;
        const PcaResult pc = pca(rows, opt);
        const auto c = contribution_indices(rows, 3, opt);
        for (std::size_t i = 0; i < 4; ++i) {
            double expect = 0.0;
            for (int j = 0; j < 3; ++j)
                expect += pc.eigenvalues[static_cast<std::size_t>(j)] *
                          std::abs(pc.eigenvectors[static_cast<std::size_t>(j)][i]);
            REQUIRE_THAT(c[i], Catch::Matchers::WithinAbs(expect, 1e-9));
        }
    }
    SECTION("component count beyond the rank is rejected") {
        REQUIRE_THROWS_AS(contribution_indices(rows, 5), ParameterError);
        REQUIRE_THROWS_AS(contribution_indices(rows, 0), ParameterError);
    }
}

namespace {

Dataset dominant_feature_dataset() {
    Rng rng(321);
    Dataset ds;
    for (int i = 0; i < 30; ++i) {
        Sample s;
        s.features.resize(6);
        s.features[0] = 10.0 * rng.gaussian();
        for (std::size_t j = 1; j < 6; ++j)
            s.features[j] = 0.1 * rng.gaussian();
        s.label = s.features[0];
        s.family = "er";
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

} // namespace

TEST_CASE("ranking puts the high-variance feature first") {
    const Dataset ds = dominant_feature_dataset();
    const RankingReport report = rank_features(ds);
    REQUIRE(report.feature_names == ds.feature_names);
    REQUIRE(report.order.size() == 6);
    REQUIRE(report.order[0] == 0);
    REQUIRE(report.p_used >= 1);
    REQUIRE(report.normalized[static_cast<std::size_t>(report.order[0])] == 1.0);
    REQUIRE(report.normalized[static_cast<std::size_t>(report.order[5])] == 0.0);
    for (std::size_t j = 1; j < report.order.size(); ++j)
        REQUIRE(report.raw[static_cast<std::size_t>(report.order[j - 1])] >=
                report.raw[static_cast<std::size_t>(report.order[j])]);
    REQUIRE(report.ranked_names()[0] == ds.feature_names[0]);
}

TEST_CASE("explicit component count is honored") {
    const Dataset ds = dominant_feature_dataset();
    const RankingReport report = rank_features(ds, 3);
    REQUIRE(report.p_used == 3);
}

TEST_CASE("feature selection keeps the top columns in rank order") {
    const Dataset ds = dominant_feature_dataset();
    const RankingReport report = rank_features(ds);
    const Dataset cut = select_features(ds, report, 2);
    REQUIRE(cut.feature_names.size() == 2);
    REQUIRE(cut.feature_names[0] == ds.feature_names[static_cast<std::size_t>(report.order[0])]);
    REQUIRE(cut.feature_names[1] == ds.feature_names[static_cast<std::size_t>(report.order[1])]);
    REQUIRE(cut.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        REQUIRE(cut.samples[i].features[0] ==
                ds.samples[i].features[static_cast<std::size_t>(report.order[0])]);
        REQUIRE(cut.samples[i].features[1] ==
                ds.samples[i].features[static_cast<std::size_t>(report.order[1])]);
        REQUIRE(cut.samples[i].label == ds.samples[i].label);
        REQUIRE(cut.samples[i].family == ds.samples[i].family);
    }
    REQUIRE_THROWS_AS(select_features(ds, report, 0), ParameterError);
    REQUIRE_THROWS_AS(select_features(ds, report, 7), ParameterError);

    Dataset renamed = ds;
    renamed.feature_names[0] = "zzz";
    REQUIRE_THROWS_AS(select_features(renamed, report, 2), ParameterError);
}

TEST_CASE("ranking input validation") {
    Dataset ds;
    REQUIRE_THROWS_AS(rank_features(ds), ParameterError);
    Sample s;
    s.features = {1, 2, 3, 4, 5, 6};
    ds.samples.push_back(s);
    REQUIRE_THROWS_AS(rank_features(ds), ParameterError);
    REQUIRE_THROWS_AS(pca({}), ParameterError);
    REQUIRE_THROWS_AS(pca({{1.0}, {}}), ParameterError);
}
