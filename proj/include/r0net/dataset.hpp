#pragma once

#include <atomic>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "r0net/epidemic.hpp"
#include "r0net/errors.hpp"
#include "r0net/graph.hpp"
#include "r0net/netgen.hpp"
#include "r0net/netmetrics.hpp"
#include "r0net/rng.hpp"

namespace r0net {

struct Sample {
    std::vector<double> features;
    double label = 0.0; // measured reproduction number
    std::string family;
    std::uint64_t seed = 0; // generator seed that produced the graph
    int n = 0;
};

struct Dataset {
    std::vector<std::string> feature_names;
    std::vector<Sample> samples;

    Dataset() {
        const auto names = FeatureVector::names();
        feature_names.assign(names.begin(), names.end());
    }

    std::size_t size() const { return samples.size(); }
    std::size_t dim() const { return feature_names.size(); }

    std::vector<std::vector<double>> matrix() const {
        std::vector<std::vector<double>> X;
        X.reserve(samples.size());
        for (const Sample& s : samples)
            X.push_back(s.features);
        return X;
    }

    std::vector<double> labels() const {
        std::vector<double> y;
        y.reserve(samples.size());
        for (const Sample& s : samples)
            y.push_back(s.label);
        return y;
    }
};

// ---------------------------------------------------------------------------
// CSV format: optional '#' comment lines, a header listing the feature
// columns followed by r0,family,seed,n, then one row per sample. Doubles
// are written with 17 significant digits so a round trip is exact.

inline void save_csv(const Dataset& ds, std::ostream& os,
                     const std::vector<std::string>& comments = {}) {
    for (const std::string& c : comments)
        os << "# " << c << '\n';
    for (const std::string& name : ds.feature_names)
        os << name << ',';
    os << "r0,family,seed,n\n";
    os.precision(17);
    for (const Sample& s : ds.samples) {
        if (s.features.size() != ds.dim())
            throw ParameterError("save_csv: sample dimension mismatch");
        for (double v : s.features)
            os << v << ',';
        os << s.label << ',' << s.family << ',' << s.seed << ',' << s.n << '\n';
    }
}

inline void save_csv(const Dataset& ds, const std::string& path,
                     const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open for writing: " + path);
    save_csv(ds, out, comments);
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

inline double parse_double(const std::string& s, long line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw ParseError("trailing characters in number '" + s + "'", line);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + s + "'", line);
    }
}

} // namespace detail

inline Dataset load_csv(std::istream& is) {
    Dataset ds;
    ds.feature_names.clear();
    std::string line;
    long line_no = 0;
    bool header_seen = false;
    std::size_t expected_fields = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string t = detail::strip(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::vector<std::string> fields = detail::split_csv_line(t);
        if (!header_seen) {
            if (fields.size() < 5)
                throw ParseError("header needs at least one feature column and r0,family,seed,n",
                                 line_no);
            const std::size_t nf = fields.size() - 4;
            if (fields[nf] != "r0" || fields[nf + 1] != "family" || fields[nf + 2] != "seed" ||
                fields[nf + 3] != "n")
                throw ParseError("header must end with r0,family,seed,n", line_no);
            ds.feature_names.assign(fields.begin(), fields.begin() + static_cast<long>(nf));
            expected_fields = fields.size();
            header_seen = true;
            continue;
        }
        if (fields.size() != expected_fields)
            throw ParseError("expected " + std::to_string(expected_fields) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        Sample s;
        const std::size_t nf = ds.feature_names.size();
        s.features.reserve(nf);
        for (std::size_t i = 0; i < nf; ++i)
            s.features.push_back(detail::parse_double(fields[i], line_no));
        s.label = detail::parse_double(fields[nf], line_no);
        s.family = fields[nf + 1];
        try {
            s.seed = std::stoull(fields[nf + 2]);
            s.n = std::stoi(fields[nf + 3]);
        } catch (const std::exception&) {
            throw ParseError("bad seed or n field", line_no);
        }
        ds.samples.push_back(std::move(s));
    }
    if (!header_seen)
        throw ParseError("no header found");
    return ds;
}

inline Dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open: " + path);
    return load_csv(in);
}

// ---------------------------------------------------------------------------
// Edge list format: '#' or '%' comment lines, then one "u v" pair per
// line (extra trailing tokens such as weights are ignored). Node labels
// are arbitrary non-negative integers; if they are not already the
// contiguous range 0..max they are compacted in first-appearance order.

inline void save_edge_list(const Graph& g, std::ostream& os,
                           const std::vector<std::string>& comments = {}) {
    for (const std::string& c : comments)
        os << "# " << c << '\n';
    os << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        os << u << ' ' << v << '\n';
}

inline void save_edge_list(const Graph& g, const std::string& path,
                           const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open for writing: " + path);
    save_edge_list(g, out, comments);
}

struct LoadedEdgeList {
    Graph graph;
    long self_loops_dropped = 0;
    long duplicates_dropped = 0;
};

inline LoadedEdgeList load_edge_list(std::istream& is, bool require_connected = true) {
    std::string line;
    long line_no = 0;
    std::vector<std::pair<long, long>> raw;
    long max_id = -1;
    bool ids_valid_range = true;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string t = detail::strip(line);
        if (t.empty() || t[0] == '#' || t[0] == '%')
            continue;
        std::istringstream ls(t);
        long u = 0, v = 0;
        if (!(ls >> u >> v))
            throw ParseError("expected two node ids", line_no);
        if (u < 0 || v < 0)
            throw ParseError("node ids must be non-negative", line_no);
        raw.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
        if (max_id > 100000000L)
            ids_valid_range = false;
    }
    if (raw.empty())
        throw ParseError("edge list contains no edges");

    // Keep labels verbatim when they already form the range 0..max;
    // otherwise relabel by first appearance. Either way a saved graph
    // loads back identical.
    std::unordered_map<long, int> id_map;
    bool contiguous = false;
    if (ids_valid_range) {
        std::vector<char> seen(static_cast<std::size_t>(max_id) + 1, 0);
        long distinct = 0;
        for (const auto& [u, v] : raw) {
            if (!seen[static_cast<std::size_t>(u)]) { seen[static_cast<std::size_t>(u)] = 1; ++distinct; }
            if (!seen[static_cast<std::size_t>(v)]) { seen[static_cast<std::size_t>(v)] = 1; ++distinct; }
        }
        contiguous = (distinct == max_id + 1);
    }
    if (!contiguous) {
        int next = 0;
        for (const auto& [u, v] : raw) {
            if (id_map.emplace(u, next).second) ++next;
            if (id_map.emplace(v, next).second) ++next;
        }
    }

    const int n = contiguous ? static_cast<int>(max_id + 1) : static_cast<int>(id_map.size());
    LoadedEdgeList out{Graph(n), 0, 0};
    for (const auto& [ru, rv] : raw) {
        const int u = contiguous ? static_cast<int>(ru) : id_map[ru];
        const int v = contiguous ? static_cast<int>(rv) : id_map[rv];
        if (u == v) {
            ++out.self_loops_dropped;
            continue;
        }
        if (!out.graph.add_edge(u, v))
            ++out.duplicates_dropped;
    }
    if (require_connected && !is_connected(out.graph))
        throw DisconnectedGraphError("edge list describes a disconnected graph");
    return out;
}

inline LoadedEdgeList load_edge_list(const std::string& path, bool require_connected = true) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open: " + path);
    return load_edge_list(in, require_connected);
}

// ---------------------------------------------------------------------------
// Shuffling and cross-validation folds.

/// Returns the dataset with rows in seeded-random order plus the
/// permutation applied: row i of the result was row perm[i] originally.
inline std::pair<Dataset, std::vector<int>> shuffle_dataset(const Dataset& ds, std::uint64_t seed) {
    std::vector<int> perm(ds.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<int>(i);
    Rng rng(seed);
    rng.shuffle(perm);
    Dataset out;
    out.feature_names = ds.feature_names;
    out.samples.reserve(ds.size());
    for (int i : perm)
        out.samples.push_back(ds.samples[static_cast<std::size_t>(i)]);
    return {std::move(out), std::move(perm)};
}

/// k folds as index lists: a seeded shuffle of 0..n-1 cut into contiguous
/// blocks whose sizes differ by at most one (the first n mod k folds get
/// the extra row).
struct FoldPlan {
    int k = 0;
    std::vector<std::vector<int>> folds;
};

inline FoldPlan kfold_plan(std::size_t n, int k, std::uint64_t seed) {
    if (k < 2)
        throw ParameterError("kfold_plan: k must be >= 2");
    if (static_cast<std::size_t>(k) > n)
        throw ParameterError("kfold_plan: k exceeds sample count");
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = static_cast<int>(i);
    Rng rng(seed);
    rng.shuffle(idx);
    FoldPlan plan;
    plan.k = k;
    plan.folds.resize(static_cast<std::size_t>(k));
    const std::size_t base = n / static_cast<std::size_t>(k);
    const std::size_t extra = n % static_cast<std::size_t>(k);
    std::size_t at = 0;
    for (int f = 0; f < k; ++f) {
        const std::size_t len = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
        auto& fold = plan.folds[static_cast<std::size_t>(f)];
        fold.assign(idx.begin() + static_cast<long>(at), idx.begin() + static_cast<long>(at + len));
        at += len;
    }
    return plan;
}

// ---------------------------------------------------------------------------
// Dataset construction: draw generator parameters from per-family ranges,
// grow a connected graph, measure its features, run the epidemic, record
// the reproduction number.

struct IntRange { int lo = 0, hi = 0; };
struct RealRange { double lo = 0.0, hi = 0.0; };

struct ErBuild { int count = 0; RealRange p; };
struct WsBuild { int count = 0; IntRange k; RealRange p; };
struct SfBuild { int count = 0; IntRange m; double p_triangle = 0.2; };
struct BaBuild { int count = 0; IntRange m; };
struct SbmBuild { int count = 0; RealRange p_in; RealRange p_out; };

struct BuildConfig {
    int n = 1000;
    std::uint64_t seed = 1;
    int jobs = 1;
    int max_retries = 20;
    EpidemicParams epidemic;
    ErBuild er;
    WsBuild ws;
    SfBuild sf;
    BaBuild ba;
    SbmBuild sbm;

    int total_count() const {
        return er.count + ws.count + sf.count + ba.count + sbm.count;
    }

    /// Small profile: five families at n=200, sized for interactive runs.
    static BuildConfig desk_profile() {
        BuildConfig c;
        c.n = 200;
        c.er = {40, {0.04, 0.30}};
        c.ws = {40, {2, 14}, {0.1, 0.5}};
        c.sf = {40, {2, 20}, 0.2};
        c.ba = {40, {2, 20}};
        c.sbm = {40, {0.08, 0.35}, {0.01, 0.08}};
        return c;
    }

    /// Full-scale profile: five families at n=1000, 2552 networks in total.
    static BuildConfig full_profile() {
        BuildConfig c;
        c.n = 1000;
        c.er = {525, {0.0072, 0.5}};
        c.ws = {520, {2, 30}, {0.1, 0.5}};
        c.sf = {548, {2, 550}, 0.2};
        c.ba = {548, {2, 550}};
        c.sbm = {411, {0.01, 0.5}, {0.001, 0.05}};
        return c;
    }
};

struct BuildStats {
    long total_attempts = 0; // generator draws including retries
    int max_attempts = 1;    // worst single sample
};

namespace detail {

inline GeneratorSpec draw_spec(const BuildConfig& cfg, Family fam, std::uint64_t param_seed,
                               std::uint64_t gen_seed) {
    Rng rng(param_seed);
    GeneratorSpec spec;
    spec.n = cfg.n;
    spec.seed = gen_seed;
    switch (fam) {
    case Family::er:
        spec.params = ErParams{rng.uniform(cfg.er.p.lo, cfg.er.p.hi)};
        break;
    case Family::ws: {
        const int half = static_cast<int>(rng.uniform_int(cfg.ws.k.lo / 2, cfg.ws.k.hi / 2));
        spec.params = WsParams{2 * half, rng.uniform(cfg.ws.p.lo, cfg.ws.p.hi)};
        break;
    }
    case Family::sf:
        spec.params = SfParams{static_cast<int>(rng.uniform_int(cfg.sf.m.lo, cfg.sf.m.hi)),
                               cfg.sf.p_triangle};
        break;
    case Family::ba:
        spec.params = BaParams{static_cast<int>(rng.uniform_int(cfg.ba.m.lo, cfg.ba.m.hi))};
        break;
    case Family::sbm: {
        const double pin = rng.uniform(cfg.sbm.p_in.lo, cfg.sbm.p_in.hi);
        const double pout = rng.uniform(cfg.sbm.p_out.lo, cfg.sbm.p_out.hi);
        spec.params = SbmParams{{cfg.n / 2, cfg.n - cfg.n / 2}, {{pin, pout}, {pout, pin}}};
        break;
    }
    }
    return spec;
}

} // namespace detail

/// Builds the full dataset described by the config. Every sample's
/// random streams are derived from (master seed, family, index), so the
/// result is identical for any job count.
inline Dataset build_dataset(const BuildConfig& cfg, BuildStats* stats = nullptr,
                             std::ostream* log = nullptr) {
    if (cfg.n < 3)
        throw ParameterError("build_dataset: n must be >= 3");
    if (cfg.jobs < 1)
        throw ParameterError("build_dataset: jobs must be >= 1");
    if (cfg.total_count() < 1)
        throw ParameterError("build_dataset: no samples requested");
    cfg.epidemic.validate();

    struct Task {
        Family fam;
        int index; // within family
    };
    std::vector<Task> tasks;
    tasks.reserve(static_cast<std::size_t>(cfg.total_count()));
    const std::pair<Family, int> plan[] = {{Family::er, cfg.er.count},
                                           {Family::ws, cfg.ws.count},
                                           {Family::sf, cfg.sf.count},
                                           {Family::ba, cfg.ba.count},
                                           {Family::sbm, cfg.sbm.count}};
    for (const auto& [fam, count] : plan)
        for (int i = 0; i < count; ++i)
            tasks.push_back({fam, i});

    std::vector<Sample> results(tasks.size());
    std::vector<int> attempts(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&]() {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size())
                return;
            try {
                const Task& task = tasks[t];
                const std::uint64_t base =
                    derive_seed(cfg.seed, static_cast<std::uint64_t>(task.fam),
                                static_cast<std::uint64_t>(task.index));
                const GeneratorSpec spec =
                    detail::draw_spec(cfg, task.fam, derive_seed(base, 0), derive_seed(base, 1));
                ConnectedResult cr = generate_connected(spec, cfg.max_retries);
                const FeatureVector fv = extract_features(cr.graph);
                const SimulationTrace trace = simulate(cr.graph, cfg.epidemic, derive_seed(base, 2));
                Sample s;
                const auto vals = fv.values();
                s.features.assign(vals.begin(), vals.end());
                s.label = compute_r0(trace);
                s.family = family_name(task.fam);
                s.seed = cr.seed;
                s.n = cfg.n;
                results[t] = std::move(s);
                attempts[t] = cr.attempts;
                const std::size_t d = done.fetch_add(1) + 1;
                if (log && (d % 50 == 0 || d == tasks.size())) {
                    std::lock_guard<std::mutex> lk(failure_mu);
                    *log << "built " << d << "/" << tasks.size() << " samples\n";
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(failure_mu);
                if (!failure)
                    failure = std::current_exception();
                next.store(tasks.size());
                return;
            }
        }
    };

    if (cfg.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int threads = std::min<int>(cfg.jobs, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    if (stats) {
        *stats = BuildStats{};
        for (int a : attempts) {
            stats->total_attempts += a;
            stats->max_attempts = std::max(stats->max_attempts, a);
        }
    }
    Dataset ds;
    ds.samples = std::move(results);
    return ds;
}

} // namespace r0net
