#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "r0net/errors.hpp"
#include "r0net/graph.hpp"
#include "r0net/rng.hpp"

namespace r0net {

enum class State : std::uint8_t { susceptible, infected, recovered };

struct EpidemicParams {
    double k = 0.1;       // per-neighbour transmission rate
    double p_ir = 0.6;    // recovery probability per step
    double p_id = 0.3;    // death probability per step, tried only after recovery fails
    double p_rs = 0.1;    // immunity loss probability per step
    double s0 = 0.995;    // initial susceptible fraction
    double i0 = 0.005;    // initial infected fraction
    double r0 = 0.0;      // initial recovered fraction
    int steps = 100;
    int tail = 20;        // trailing window used for rate averaging
    double dt = 1.0;

    void validate() const {
        if (k < 0.0)
            throw ParameterError("EpidemicParams: k must be >= 0");
        for (double p : {p_ir, p_id, p_rs})
            if (p < 0.0 || p > 1.0)
                throw ParameterError("EpidemicParams: probabilities must be in [0, 1]");
        for (double f : {s0, i0, r0})
            if (f < 0.0 || f > 1.0)
                throw ParameterError("EpidemicParams: initial fractions must be in [0, 1]");
        if (std::abs(s0 + i0 + r0 - 1.0) > 1e-9)
            throw ParameterError("EpidemicParams: initial fractions must sum to 1");
        if (steps < 1)
            throw ParameterError("EpidemicParams: steps must be >= 1");
        if (tail < 1 || tail > steps)
            throw ParameterError("EpidemicParams: tail must be in [1, steps]");
        if (!(dt > 0.0))
            throw ParameterError("EpidemicParams: dt must be positive");
    }
};

/// Probability that a susceptible node with `infected_neighbors` infected
/// neighbours becomes infected this step: 1 - exp(-k * i).
inline double infection_probability(double k, int infected_neighbors) {
    if (k < 0.0)
        throw ParameterError("infection_probability: k must be >= 0");
    if (infected_neighbors < 0)
        throw ParameterError("infection_probability: neighbour count must be >= 0");
    return 1.0 - std::exp(-k * infected_neighbors);
}

/// Compartment counts after a step plus the transition tallies produced
/// during it. A death (new_ID) returns the node to S, so S+I+R stays n.
struct StepRecord {
    int t = 0;
    int S = 0, I = 0, R = 0;
    int new_SI = 0; // infections
    int new_IR = 0; // recoveries
    int new_ID = 0; // deaths (node replaced by a fresh susceptible)
    int new_RS = 0; // immunity losses
};

struct SimulationTrace {
    EpidemicParams params;
    int n = 0;
    std::uint64_t seed = 0;
    // records[0] holds the initial counts with zero transitions;
    // records[t] describes the state after step t.
    std::vector<StepRecord> records;
};

/// Seeds the initial compartments: round(i0*n) infected (at least one)
/// and round(r0*n) recovered, at distinct random nodes; everyone else
/// susceptible.
inline std::vector<State> initialize_states(const Graph& g, const EpidemicParams& params, Rng& rng) {
    params.validate();
    const int n = g.node_count();
    int n_inf = static_cast<int>(std::lround(params.i0 * n));
    if (n_inf < 1)
        n_inf = 1;
    int n_rec = static_cast<int>(std::lround(params.r0 * n));
    if (n_inf + n_rec > n)
        n_rec = n - n_inf;
    std::vector<State> states(static_cast<std::size_t>(n), State::susceptible);
    const std::vector<int> chosen = rng.sample_without_replacement(n, n_inf + n_rec);
    for (int i = 0; i < n_inf; ++i)
        states[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])] = State::infected;
    for (int i = n_inf; i < n_inf + n_rec; ++i)
        states[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])] = State::recovered;
    return states;
}

inline StepRecord count_states(const std::vector<State>& states) {
    StepRecord rec;
    for (State s : states) {
        if (s == State::susceptible) ++rec.S;
        else if (s == State::infected) ++rec.I;
        else ++rec.R;
    }
    return rec;
}

/// One synchronous update. Every transition probability is evaluated
/// against the state at step start. Random draws happen in node order
/// within each compartment rule: first every susceptible node draws its
/// infection trial, then every infected node draws recovery (and, only
/// if recovery failed, death), then every recovered node draws immunity
/// loss. This fixed order makes traces bit-reproducible.
inline std::pair<std::vector<State>, StepRecord> step(const Graph& g,
                                                      const std::vector<State>& states,
                                                      const EpidemicParams& params,
                                                      Rng& rng) {
    const int n = g.node_count();
    std::vector<State> next = states;
    StepRecord rec;
    for (int v = 0; v < n; ++v) {
        if (states[static_cast<std::size_t>(v)] != State::susceptible)
            continue;
        int infected_nbrs = 0;
        for (int u : g.neighbors(v))
            if (states[static_cast<std::size_t>(u)] == State::infected)
                ++infected_nbrs;
        if (rng.bernoulli(infection_probability(params.k, infected_nbrs))) {
            next[static_cast<std::size_t>(v)] = State::infected;
            ++rec.new_SI;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (states[static_cast<std::size_t>(v)] != State::infected)
            continue;
        if (rng.bernoulli(params.p_ir)) {
            next[static_cast<std::size_t>(v)] = State::recovered;
            ++rec.new_IR;
        } else if (rng.bernoulli(params.p_id)) {
            next[static_cast<std::size_t>(v)] = State::susceptible;
            ++rec.new_ID;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (states[static_cast<std::size_t>(v)] != State::recovered)
            continue;
        if (rng.bernoulli(params.p_rs)) {
            next[static_cast<std::size_t>(v)] = State::susceptible;
            ++rec.new_RS;
        }
    }
    const StepRecord counts = count_states(next);
    rec.S = counts.S;
    rec.I = counts.I;
    rec.R = counts.R;
    return {std::move(next), rec};
}

inline SimulationTrace simulate(const Graph& g, const EpidemicParams& params, std::uint64_t seed) {
    params.validate();
    SimulationTrace trace;
    trace.params = params;
    trace.n = g.node_count();
    trace.seed = seed;
    trace.records.reserve(static_cast<std::size_t>(params.steps) + 1);
    Rng rng(seed);
    std::vector<State> states = initialize_states(g, params, rng);
    StepRecord initial = count_states(states);
    initial.t = 0;
    trace.records.push_back(initial);
    for (int t = 1; t <= params.steps; ++t) {
        auto [next, rec] = step(g, states, params, rng);
        states = std::move(next);
        rec.t = t;
        trace.records.push_back(rec);
    }
    return trace;
}

/// Per-step rate estimates recovered from transition tallies. When a
/// denominator compartment is empty the configured rate is used instead,
/// except for the contact rate a which is then zero.
struct RateEstimates {
    double a = 0.0; // infection rate per S-I contact
    double b = 0.0; // recovery rate
    double c = 0.0; // death rate
    double e = 0.0; // immunity loss rate
};

inline RateEstimates estimate_rates(const StepRecord& prev, const StepRecord& cur,
                                    const EpidemicParams& params) {
    RateEstimates r;
    const double dt = params.dt;
    if (prev.S > 0 && prev.I > 0)
        r.a = cur.new_SI / (static_cast<double>(prev.S) * static_cast<double>(prev.I) * dt);
    if (prev.I > 0) {
        const double rec_frac = cur.new_IR / (prev.I * dt);
        r.b = rec_frac;
        r.c = (1.0 - rec_frac) * (cur.new_ID / (prev.I * dt));
    } else {
        r.b = params.p_ir;
        r.c = (1.0 - params.p_ir) * params.p_id;
    }
    r.e = prev.R > 0 ? cur.new_RS / (prev.R * dt) : params.p_rs;
    return r;
}

/// Basic reproduction number implied by the rates at step t:
/// a*N / (b + c), or 0 when b + c is zero.
inline double instantaneous_r0(const SimulationTrace& trace, int t) {
    if (t < 1 || t >= static_cast<int>(trace.records.size()))
        throw ParameterError("instantaneous_r0: step out of range");
    const RateEstimates r = estimate_rates(trace.records[static_cast<std::size_t>(t - 1)],
                                           trace.records[static_cast<std::size_t>(t)],
                                           trace.params);
    const double denom = r.b + r.c;
    if (denom == 0.0)
        return 0.0;
    return r.a * trace.n / denom;
}

/// Reproduction number of a run: instantaneous values averaged over the
/// trailing `tail` steps of the trace.
inline double compute_r0(const SimulationTrace& trace) {
    const int steps = static_cast<int>(trace.records.size()) - 1;
    const int tail = trace.params.tail;
    if (steps < 1 || tail < 1 || tail > steps)
        throw ParameterError("compute_r0: trace shorter than averaging window");
    double sum = 0.0;
    for (int t = steps - tail + 1; t <= steps; ++t)
        sum += instantaneous_r0(trace, t);
    return sum / tail;
}

/// Fraction of the population that must be immune to stop spread:
/// 1 - 1/r0, floored at 0. Undefined for r0 <= 0.
inline double herd_immunity_threshold(double r0) {
    if (r0 <= 0.0)
        throw ParameterError("herd_immunity_threshold: requires r0 > 0");
    return std::max(0.0, 1.0 - 1.0 / r0);
}

inline void write_trace_csv(const SimulationTrace& trace, std::ostream& os) {
    os << "t,S,I,R,new_SI,new_IR,new_ID,new_RS\n";
    for (const StepRecord& r : trace.records)
        os << r.t << ',' << r.S << ',' << r.I << ',' << r.R << ',' << r.new_SI << ','
           << r.new_IR << ',' << r.new_ID << ',' << r.new_RS << '\n';
}

} // namespace r0net
