// Command line pipeline: generate datasets of (network features, r0)
// samples, train and evaluate regression models on them, predict r0 for
// new graphs, rank features, and report model accuracy.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "r0net/r0net.hpp"

namespace {

using nlohmann::json;

json range_json(const r0net::IntRange& r) { return json::array({r.lo, r.hi}); }
json range_json(const r0net::RealRange& r) { return json::array({r.lo, r.hi}); }

r0net::IntRange int_range(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw r0net::ParseError("range must be a [lo, hi] array");
    return {j[0].get<int>(), j[1].get<int>()};
}

r0net::RealRange real_range(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw r0net::ParseError("range must be a [lo, hi] array");
    return {j[0].get<double>(), j[1].get<double>()};
}

json build_config_json(const r0net::BuildConfig& c) {
    json j;
    j["n"] = c.n;
    j["seed"] = c.seed;
    j["jobs"] = c.jobs;
    j["max_retries"] = c.max_retries;
    j["epidemic"] = {{"k", c.epidemic.k},       {"p_ir", c.epidemic.p_ir},
                     {"p_id", c.epidemic.p_id}, {"p_rs", c.epidemic.p_rs},
                     {"s0", c.epidemic.s0},     {"i0", c.epidemic.i0},
                     {"r0", c.epidemic.r0},     {"steps", c.epidemic.steps},
                     {"tail", c.epidemic.tail}, {"dt", c.epidemic.dt}};
    j["er"] = {{"count", c.er.count}, {"p", range_json(c.er.p)}};
    j["ws"] = {{"count", c.ws.count}, {"k", range_json(c.ws.k)}, {"p", range_json(c.ws.p)}};
    j["sf"] = {{"count", c.sf.count}, {"m", range_json(c.sf.m)},
               {"p_triangle", c.sf.p_triangle}};
    j["ba"] = {{"count", c.ba.count}, {"m", range_json(c.ba.m)}};
    j["sbm"] = {{"count", c.sbm.count}, {"p_in", range_json(c.sbm.p_in)},
                {"p_out", range_json(c.sbm.p_out)}};
    return j;
}

/// Reads a build config, overriding fields of `base` that the file sets.
r0net::BuildConfig build_config_from_json(const json& j, r0net::BuildConfig base) {
    try {
        if (j.contains("n")) base.n = j["n"].get<int>();
        if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("jobs")) base.jobs = j["jobs"].get<int>();
        if (j.contains("max_retries")) base.max_retries = j["max_retries"].get<int>();
        if (j.contains("epidemic")) {
            const json& e = j["epidemic"];
            auto& p = base.epidemic;
            if (e.contains("k")) p.k = e["k"].get<double>();
            if (e.contains("p_ir")) p.p_ir = e["p_ir"].get<double>();
            if (e.contains("p_id")) p.p_id = e["p_id"].get<double>();
            if (e.contains("p_rs")) p.p_rs = e["p_rs"].get<double>();
            if (e.contains("s0")) p.s0 = e["s0"].get<double>();
            if (e.contains("i0")) p.i0 = e["i0"].get<double>();
            if (e.contains("r0")) p.r0 = e["r0"].get<double>();
            if (e.contains("steps")) p.steps = e["steps"].get<int>();
            if (e.contains("tail")) p.tail = e["tail"].get<int>();
            if (e.contains("dt")) p.dt = e["dt"].get<double>();
        }
        if (j.contains("er")) {
            const json& f = j["er"];
            if (f.contains("count")) base.er.count = f["count"].get<int>();
            if (f.contains("p")) base.er.p = real_range(f["p"]);
        }
        if (j.contains("ws")) {
            const json& f = j["ws"];
            if (f.contains("count")) base.ws.count = f["count"].get<int>();
            if (f.contains("k")) base.ws.k = int_range(f["k"]);
            if (f.contains("p")) base.ws.p = real_range(f["p"]);
        }
        if (j.contains("sf")) {
            const json& f = j["sf"];
            if (f.contains("count")) base.sf.count = f["count"].get<int>();
            if (f.contains("m")) base.sf.m = int_range(f["m"]);
            if (f.contains("p_triangle")) base.sf.p_triangle = f["p_triangle"].get<double>();
        }
        if (j.contains("ba")) {
            const json& f = j["ba"];
            if (f.contains("count")) base.ba.count = f["count"].get<int>();
            if (f.contains("m")) base.ba.m = int_range(f["m"]);
        }
        if (j.contains("sbm")) {
            const json& f = j["sbm"];
            if (f.contains("count")) base.sbm.count = f["count"].get<int>();
            if (f.contains("p_in")) base.sbm.p_in = real_range(f["p_in"]);
            if (f.contains("p_out")) base.sbm.p_out = real_range(f["p_out"]);
        }
    } catch (const json::exception& e) {
        throw r0net::ParseError(std::string("bad config: ") + e.what());
    }
    return base;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw r0net::ParseError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return r0net::fnv1a64_hex(ss.str());
}

std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
    std::string profile = "desk";
    std::string config_path;
    std::string out_path = "dataset.csv";
    int n = 0;
    std::int64_t seed = -1;
    int jobs = 0;
    int count = 0;
};

int cmd_generate(const GenerateArgs& args) {
    r0net::BuildConfig cfg;
    if (args.profile == "desk")
        cfg = r0net::BuildConfig::desk_profile();
    else if (args.profile == "full")
        cfg = r0net::BuildConfig::full_profile();
    else
        throw r0net::ParameterError("unknown profile: " + args.profile);
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in)
            throw r0net::ParseError("cannot open: " + args.config_path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw r0net::ParseError(std::string("bad config: ") + e.what());
        }
        cfg = build_config_from_json(j, cfg);
    }
    if (args.n > 0) cfg.n = args.n;
    if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
    if (args.jobs > 0) cfg.jobs = args.jobs;
    if (args.count > 0) {
        cfg.er.count = cfg.ws.count = cfg.sf.count = cfg.ba.count = cfg.sbm.count = args.count;
    }

    const std::string canonical = build_config_json(cfg).dump();
    const std::string digest = r0net::fnv1a64_hex(canonical);
    std::cerr << "building " << cfg.total_count() << " samples at n=" << cfg.n
              << " (config digest " << digest << ")\n";
    r0net::BuildStats stats;
    const r0net::Dataset ds = r0net::build_dataset(cfg, &stats, &std::cerr);
    r0net::save_csv(ds, args.out_path,
                    {"r0net generate", "config=" + canonical, "config_digest=" + digest});

    double lo = ds.samples.front().label, hi = lo;
    for (const auto& s : ds.samples) {
        lo = std::min(lo, s.label);
        hi = std::max(hi, s.label);
    }
    std::cout << "wrote " << ds.size() << " samples to " << args.out_path << "\n"
              << "generator attempts: " << stats.total_attempts << " (worst single sample "
              << stats.max_attempts << ")\n"
              << "r0 range: [" << fmt(lo) << ", " << fmt(hi) << "]\n";
    return 0;
}

// ---------------------------------------------------------------------------

struct TrainArgs {
    std::string data_path;
    std::string model_name;
    std::string out_path = "model.json";
    int k = 10;
    std::uint64_t seed = 7;
    double svr_c = 1.0;
    double svr_epsilon = 0.1;
    double svr_gamma = 0.0; // 0 keeps the kernel default
    int svr_degree = 2;
    double svr_coef0 = 0.0;
    double svr_tol = 1e-3;
    long svr_max_sweeps = 0;
    int hidden = 0; // 0 means the default capped by the size rule
    int epochs = 50;
    int batch = 5;
    double lr = 1e-3;
    bool zero_init = false;
};

int cmd_train(const TrainArgs& args) {
    const r0net::Dataset ds = r0net::load_csv(args.data_path);
    if (ds.size() < 2)
        throw r0net::ParameterError("dataset has fewer than 2 samples");
    r0net::ModelSpec spec = r0net::ModelSpec::from_name(args.model_name);

    if (spec.kind == r0net::ModelKind::svr) {
        spec.svr.C = args.svr_c;
        spec.svr.epsilon = args.svr_epsilon;
        if (args.svr_gamma > 0.0)
            spec.svr.kernel.gamma = args.svr_gamma;
        spec.svr.kernel.degree = args.svr_degree;
        spec.svr.kernel.coef0 = args.svr_coef0;
        spec.svr.tol = args.svr_tol;
        spec.svr.max_sweeps = args.svr_max_sweeps;
    } else if (spec.kind == r0net::ModelKind::ann) {
        const int n_in = static_cast<int>(ds.dim());
        const int bound = r0net::hidden_neurons_rule(static_cast<long>(ds.size()), n_in, 1, 2.0);
        if (args.hidden > 0) {
            if (args.hidden > bound)
                throw r0net::ParameterError(
                    "hidden=" + std::to_string(args.hidden) + " exceeds the size rule bound " +
                    std::to_string(bound) + " for " + std::to_string(ds.size()) +
                    " samples (alpha >= 2); lower --hidden or add data");
            spec.ann.hidden = args.hidden;
        } else {
            spec.ann.hidden = std::max(1, std::min(spec.ann.hidden, bound));
        }
        spec.ann.epochs = args.epochs;
        spec.ann.batch_size = args.batch;
        spec.ann.learning_rate = args.lr;
        spec.ann.zero_init = args.zero_init;
    }

    std::cout << "cross-validating " << spec.name() << " with k=" << args.k << " on "
              << ds.size() << " samples\n";
    const r0net::CvReport cv = r0net::cross_validate(ds, spec, args.k, args.seed);
    std::cout << "fold,mse,r2\n";
    for (std::size_t f = 0; f < cv.folds.size(); ++f)
        std::cout << f + 1 << ',' << fmt(cv.folds[f].mse) << ',' << fmt(cv.folds[f].r2) << '\n';
    std::cout << "mean,"  << fmt(cv.mean_mse) << ',' << fmt(cv.mean_r2) << '\n';
    if (!cv.all_converged)
        std::cerr << "warning: at least one SVR fold stopped at its sweep budget\n";

    const r0net::TrainedModel model = [&] {
        r0net::TrainedModel m =
            r0net::train_model(ds.matrix(), ds.labels(), spec, r0net::derive_seed(args.seed, 999));
        m.feature_names = ds.feature_names;
        return m;
    }();
    if (model.kind == r0net::ModelKind::svr && !model.svr.converged)
        std::cerr << "warning: final SVR model stopped at its sweep budget after "
                  << model.svr.iterations << " updates\n";

    std::map<std::string, std::string> provenance{
        {"command", "train"},
        {"data", args.data_path},
        {"data_digest", file_digest(args.data_path)},
        {"model", spec.name()},
        {"k", std::to_string(args.k)},
        {"seed", std::to_string(args.seed)},
        {"cv_mean_mse", fmt(cv.mean_mse, 17)},
        {"cv_mean_r2", fmt(cv.mean_r2, 17)},
    };
    r0net::save_model(model, args.out_path, provenance);
    std::cout << "wrote model to " << args.out_path << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct PredictArgs {
    std::string model_path;
    std::string edge_list;
    std::string features;
    bool simulate = false;
    std::uint64_t seed = 7;
};

std::vector<double> features_by_name(const r0net::FeatureVector& fv,
                                     const std::vector<std::string>& names) {
    const auto canonical = r0net::FeatureVector::names();
    const auto values = fv.values();
    std::vector<double> out;
    out.reserve(names.size());
    for (const std::string& name : names) {
        bool found = false;
        for (std::size_t i = 0; i < canonical.size(); ++i) {
            if (name == canonical[i]) {
                out.push_back(values[i]);
                found = true;
                break;
            }
        }
        if (!found)
            throw r0net::ParameterError("model expects feature '" + name +
                                        "' which graphs do not provide; pass --features");
    }
    return out;
}

int cmd_predict(const PredictArgs& args) {
    const r0net::TrainedModel model = r0net::load_model(args.model_path);
    std::vector<double> x;
    bool have_graph = false;
    r0net::Graph graph(1);
    if (!args.edge_list.empty()) {
        r0net::LoadedEdgeList loaded = r0net::load_edge_list(args.edge_list);
        if (loaded.self_loops_dropped || loaded.duplicates_dropped)
            std::cerr << "dropped " << loaded.self_loops_dropped << " self-loops and "
                      << loaded.duplicates_dropped << " duplicate edges\n";
        graph = std::move(loaded.graph);
        have_graph = true;
        x = features_by_name(r0net::extract_features(graph), model.feature_names);
    } else if (!args.features.empty()) {
        std::stringstream ss(args.features);
        std::string tok;
        while (std::getline(ss, tok, ','))
            x.push_back(r0net::detail::parse_double(r0net::detail::strip(tok), 0));
        if (x.size() != model.feature_names.size())
            throw r0net::ParameterError("model expects " +
                                        std::to_string(model.feature_names.size()) +
                                        " features, got " + std::to_string(x.size()));
    } else {
        throw r0net::ParameterError("predict needs --edge-list or --features");
    }

    const double pred = model.predict(x);
    std::cout << "predicted_r0=" << fmt(pred) << '\n';
    if (pred > 0.0)
        std::cout << "herd_immunity_threshold=" << fmt(r0net::herd_immunity_threshold(pred))
                  << '\n';
    else
        std::cout << "herd_immunity_threshold=undefined (predicted r0 <= 0)\n";

    if (args.simulate) {
        if (!have_graph)
            throw r0net::ParameterError("--simulate requires --edge-list");
        const r0net::SimulationTrace trace =
            r0net::simulate(graph, r0net::EpidemicParams{}, args.seed);
        const double sim = r0net::compute_r0(trace);
        std::cout << "simulated_r0=" << fmt(sim) << '\n';
        std::cout << "prediction_abs_error=" << fmt(std::abs(sim - pred)) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct RankArgs {
    std::string data_path;
    std::string out_path;
    std::string project_out;
    int p = 0;
    int select = 0;
    std::string axis = "sample";
    bool standardize = false;
    bool no_center = false;
};

int cmd_rank(const RankArgs& args) {
    const r0net::Dataset ds = r0net::load_csv(args.data_path);
    r0net::PcaOptions opt;
    if (args.axis == "sample")
        opt.axis = r0net::PcaAxis::sample;
    else if (args.axis == "feature")
        opt.axis = r0net::PcaAxis::feature;
    else
        throw r0net::ParameterError("axis must be 'sample' or 'feature'");
    opt.standardize = args.standardize;
    opt.center = !args.no_center;

    const r0net::RankingReport report = r0net::rank_features(ds, args.p, opt);
    if (report.rank_warning)
        std::cerr << "note: data spread spans fewer directions than feature count "
                     "(collinear or constant columns)\n";
    std::cout << "components used: " << report.p_used << '\n';
    std::cout << "rank,feature,raw_index,normalized_index\n";
    std::ostringstream rows;
    rows.precision(17);
    for (std::size_t r = 0; r < report.order.size(); ++r) {
        const int i = report.order[r];
        std::cout << r + 1 << ',' << report.feature_names[static_cast<std::size_t>(i)] << ','
                  << fmt(report.raw[static_cast<std::size_t>(i)]) << ','
                  << fmt(report.normalized[static_cast<std::size_t>(i)]) << '\n';
        rows << r + 1 << ',' << report.feature_names[static_cast<std::size_t>(i)] << ','
             << report.raw[static_cast<std::size_t>(i)] << ','
             << report.normalized[static_cast<std::size_t>(i)] << '\n';
    }
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out)
            throw r0net::ParseError("cannot open for writing: " + args.out_path);
        out << "# r0net rank data=" << args.data_path << " data_digest="
            << file_digest(args.data_path) << " p=" << report.p_used << " axis=" << args.axis
            << '\n'
            << "rank,feature,raw_index,normalized_index\n"
            << rows.str();
        std::cout << "wrote ranking to " << args.out_path << '\n';
    }
    if (args.select > 0) {
        if (args.project_out.empty())
            throw r0net::ParameterError("--select needs --project-out");
        const r0net::Dataset projected = r0net::select_features(ds, report, args.select);
        std::ostringstream names;
        for (std::size_t i = 0; i < projected.feature_names.size(); ++i)
            names << (i ? "," : "") << projected.feature_names[i];
        r0net::save_csv(projected, args.project_out,
                        {"r0net rank selection=" + names.str(),
                         "source=" + args.data_path + " digest=" + file_digest(args.data_path)});
        std::cout << "wrote projection onto {" << names.str() << "} to " << args.project_out
                  << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct ReportArgs {
    std::string model_path;
    std::string data_path;
    std::string out_path;
};

int cmd_report(const ReportArgs& args) {
    const r0net::TrainedModel model = r0net::load_model(args.model_path);
    const r0net::Dataset ds = r0net::load_csv(args.data_path);

    // Model columns are matched to dataset columns by name so a model
    // trained on a feature subset still scores a full dataset.
    std::vector<std::size_t> col;
    for (const std::string& name : model.feature_names) {
        bool found = false;
        for (std::size_t j = 0; j < ds.feature_names.size(); ++j) {
            if (ds.feature_names[j] == name) {
                col.push_back(j);
                found = true;
                break;
            }
        }
        if (!found)
            throw r0net::ParameterError("dataset lacks feature '" + name +
                                        "' required by the model");
    }

    std::vector<double> y_true, y_pred;
    y_true.reserve(ds.size());
    y_pred.reserve(ds.size());
    std::vector<double> x(col.size());
    for (const r0net::Sample& s : ds.samples) {
        for (std::size_t j = 0; j < col.size(); ++j)
            x[j] = s.features[col[j]];
        y_true.push_back(s.label);
        y_pred.push_back(model.predict(x));
    }
    const r0net::Metrics metrics = r0net::evaluate(y_true, y_pred);
    std::cout << "samples=" << ds.size() << " mse=" << fmt(metrics.mse)
              << " r2=" << fmt(metrics.r2) << '\n';

    std::map<std::string, std::vector<std::size_t>> by_family;
    for (std::size_t i = 0; i < ds.size(); ++i)
        by_family[ds.samples[i].family].push_back(i);
    for (const auto& [family, idx] : by_family) {
        if (idx.size() < 2)
            continue;
        std::vector<double> t, p;
        for (std::size_t i : idx) {
            t.push_back(y_true[i]);
            p.push_back(y_pred[i]);
        }
        double lo = t[0], hi = t[0];
        for (double v : t) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi > lo) {
            const r0net::Metrics fm = r0net::evaluate(t, p);
            std::cout << "family=" << family << " samples=" << idx.size()
                      << " mse=" << fmt(fm.mse) << " r2=" << fmt(fm.r2) << '\n';
        }
    }

    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out)
            throw r0net::ParseError("cannot open for writing: " + args.out_path);
        out << "# r0net report model=" << args.model_path << " data=" << args.data_path
            << " data_digest=" << file_digest(args.data_path) << '\n';
        out << "true_r0,predicted_r0,abs_error,family,seed,n\n";
        out.precision(17);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const r0net::Sample& s = ds.samples[i];
            out << y_true[i] << ',' << y_pred[i] << ',' << std::abs(y_true[i] - y_pred[i]) << ','
                << s.family << ',' << s.seed << ',' << s.n << '\n';
        }
        std::cout << "wrote pairs to " << args.out_path << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"epidemic reproduction number prediction from network structure"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* g = app.add_subcommand("generate", "build a (features, r0) dataset");
    g->add_option("--profile", gen.profile, "base config: desk or full")
        ->check(CLI::IsMember({"desk", "full"}));
    g->add_option("--config", gen.config_path, "JSON config overriding the profile");
    g->add_option("--n", gen.n, "nodes per graph");
    g->add_option("--seed", gen.seed, "master seed");
    g->add_option("--jobs", gen.jobs, "worker threads");
    g->add_option("--count", gen.count, "samples per family");
    g->add_option("--out", gen.out_path, "output CSV path");

    TrainArgs tr;
    CLI::App* t = app.add_subcommand("train", "cross-validate and fit a model");
    t->add_option("--data", tr.data_path, "dataset CSV")->required();
    t->add_option("--model", tr.model_name, "linear, svr-linear, svr-poly, svr-rbf, or ann")
        ->required();
    t->add_option("--k", tr.k, "cross-validation folds");
    t->add_option("--seed", tr.seed, "seed for folds and ann");
    t->add_option("--out", tr.out_path, "output model path");
    t->add_option("--svr-c", tr.svr_c, "SVR box constraint");
    t->add_option("--svr-epsilon", tr.svr_epsilon, "SVR tube half-width");
    t->add_option("--svr-gamma", tr.svr_gamma, "kernel gamma (0 keeps default)");
    t->add_option("--svr-degree", tr.svr_degree, "poly kernel degree");
    t->add_option("--svr-coef0", tr.svr_coef0, "poly kernel offset");
    t->add_option("--svr-tol", tr.svr_tol, "SMO stopping tolerance");
    t->add_option("--svr-max-sweeps", tr.svr_max_sweeps, "SMO sweep budget (0 = 10m)");
    t->add_option("--hidden", tr.hidden, "ann hidden units (0 = default capped by size rule)");
    t->add_option("--epochs", tr.epochs, "ann training epochs");
    t->add_option("--batch", tr.batch, "ann minibatch size");
    t->add_option("--lr", tr.lr, "ann learning rate");
    t->add_flag("--zero-init", tr.zero_init, "start ann weights at zero");

    PredictArgs pr;
    CLI::App* p = app.add_subcommand("predict", "predict r0 for one graph");
    p->add_option("--model", pr.model_path, "model file")->required();
    p->add_option("--edge-list", pr.edge_list, "graph edge list file");
    p->add_option("--features", pr.features, "comma separated feature values");
    p->add_flag("--simulate", pr.simulate, "also simulate the epidemic on the graph");
    p->add_option("--seed", pr.seed, "simulation seed");

    RankArgs rk;
    CLI::App* r = app.add_subcommand("rank", "rank features by principal component contribution");
    r->add_option("--data", rk.data_path, "dataset CSV")->required();
    r->add_option("--p", rk.p, "components to use (0 = 90% eigenvalue mass)");
    r->add_option("--axis", rk.axis, "covariance axis: sample or feature")
        ->check(CLI::IsMember({"sample", "feature"}));
    r->add_flag("--standardize", rk.standardize, "scale columns to unit variance first");
    r->add_flag("--no-center", rk.no_center, "skip column centering");
    r->add_option("--out", rk.out_path, "ranking CSV path");
    r->add_option("--select", rk.select, "write a dataset projected onto the top m features");
    r->add_option("--project-out", rk.project_out, "path for the projected dataset");

    ReportArgs rp;
    CLI::App* q = app.add_subcommand("report", "score a model against a dataset");
    q->add_option("--model", rp.model_path, "model file")->required();
    q->add_option("--data", rp.data_path, "dataset CSV")->required();
    q->add_option("--out", rp.out_path, "true/predicted pairs CSV path");

    try {
        app.parse(argc, argv);
        if (g->parsed()) return cmd_generate(gen);
        if (t->parsed()) return cmd_train(tr);
        if (p->parsed()) return cmd_predict(pr);
        if (r->parsed()) return cmd_rank(rk);
        if (q->parsed()) return cmd_report(rp);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const r0net::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const r0net::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const r0net::DisconnectedGraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const r0net::GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const r0net::DivergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
