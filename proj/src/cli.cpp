// Copyright 2026 The qrem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrem/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"

#include "qrem/automaton.hpp"
#include "qrem/bitstring_io.hpp"
#include "qrem/energy.hpp"
#include "qrem/error_correction.hpp"
#include "qrem/montecarlo.hpp"
#include "qrem/records.hpp"
#include "qrem/roulette.hpp"

namespace qrem::cli {

namespace {

struct CommonOptions {
    std::string format = "jsonl";
    std::string output;  // empty: stdout (or QREM_OUTPUT_DIR)
};

struct NoiseOptions {
    double phi0 = 0.0;
    double bias = 0.0;
    double p_flip = 0.0;

    NoiseModel build() const { return NoiseModel(phi0, bias, p_flip); }
};

struct SchemeOptions {
    std::string name = "single-qubit";
    unsigned ghz_qubits = 3;

    SchemeSpec build(bool allow_coin_flip) const {
        SchemeSpec scheme;
        scheme.ghz_qubits = ghz_qubits;
        if (name == "single-qubit") {
            scheme.kind = SchemeKind::kSingleQubit;
        } else if (name == "tmr") {
            scheme.kind = SchemeKind::kTmr;
        } else if (name == "ghz") {
            scheme.kind = SchemeKind::kGhz;
        } else if (name == "coin-flip" && allow_coin_flip) {
            scheme.kind = SchemeKind::kCoinFlip;
        } else {
            throw std::invalid_argument("unknown scheme: " + name);
        }
        return scheme;
    }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--format", common.format, "Output format: jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    cmd->add_option("--output", common.output, "Write the data stream to this file");
}

void add_noise(CLI::App* cmd, NoiseOptions& noise) {
    cmd->add_option("--phi0", noise.phi0, "Per-gate half-angle standard deviation (radians)");
    cmd->add_option("--bias", noise.bias, "Per-gate systematic half-angle offset (radians)");
    cmd->add_option("--p-flip", noise.p_flip,
                    "Per-qubit per-pulse bit-flip probability (entangled register only)");
}

void add_scheme(CLI::App* cmd, SchemeOptions& scheme, bool allow_coin_flip) {
    std::vector<std::string> names = {"single-qubit", "tmr", "ghz"};
    if (allow_coin_flip) {
        names.push_back("coin-flip");
    }
    cmd->add_option("--scheme", scheme.name, "Computation scheme")->check(CLI::IsMember(names));
    cmd->add_option("--ghz-qubits", scheme.ghz_qubits,
                    "Entangled register size for the ghz scheme (odd, <= 11)");
}

// Data sink: --output wins, then QREM_OUTPUT_DIR, then stdout.
class DataSink {
  public:
    DataSink(const CommonOptions& common, const std::string& command, std::ostream& fallback) {
        std::string path = common.output;
        if (path.empty()) {
            if (const char* dir = std::getenv("QREM_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
                path = std::string(dir) + "/qrem-" + command +
                       (common.format == "csv" ? ".csv" : ".jsonl");
            }
        }
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw IoError("cannot open output file: " + path);
            }
            stream_ = &file_;
        } else {
            stream_ = &fallback;
        }
    }

    std::ostream& stream() { return *stream_; }

  private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

Record stats_fields(Record record, const TrialStats& stats) {
    record.add("trials", stats.trials)
        .add("wrong", stats.wrong)
        .add("p_hat", stats.p_hat)
        .add("ci_low", stats.ci_low)
        .add("ci_high", stats.ci_high)
        .add("predicted", stats.predicted);
    return record;
}

// ---------------------------------------------------------------------------
// run: process one bitstring file end to end.

struct RunArgs {
    CommonOptions common;
    NoiseOptions noise;
    SchemeOptions scheme;
    std::uint64_t n = 2;
    std::string input;
    std::uint64_t seed = 0;
    double tau = 1.0;
    double h = 1.0;
};

int execute_run(const RunArgs& args, std::ostream& out) {
    const NoiseModel noise = args.noise.build();
    const SchemeSpec scheme = args.scheme.build(false);

    // One streaming pass: the automata and the reference counter advance
    // together, so the file never materializes.
    const std::uint64_t modulus = 2 * args.n;
    std::uint64_t length = 0;
    std::uint64_t ones = 0;
    std::uint64_t remainder = 0;

    // The automata only need n while feeding; the real length is known only
    // after the pass, so feed under a provisional length-1 spec.
    const ProblemSpec feed_spec(args.n, 1);

    std::optional<SingleQubitAutomaton> single;
    std::vector<SingleQubitAutomaton> branches;
    std::optional<GhzAutomaton> ghz;
    std::vector<RandomStream> streams;
    switch (scheme.kind) {
        case SchemeKind::kSingleQubit:
            single.emplace(feed_spec, noise);
            streams.emplace_back(args.seed, 0);
            break;
        case SchemeKind::kTmr:
            for (int b = 0; b < 3; ++b) {
                branches.emplace_back(feed_spec, noise);
                streams.emplace_back(args.seed, static_cast<std::uint64_t>(b));
            }
            break;
        case SchemeKind::kGhz:
            if (scheme.ghz_qubits % 2 == 0 || scheme.ghz_qubits > 11) {
                throw std::invalid_argument("--ghz-qubits must be odd and at most 11");
            }
            ghz.emplace(feed_spec, scheme.ghz_qubits, noise);
            streams.emplace_back(args.seed, 0);
            break;
        case SchemeKind::kCoinFlip:
            throw std::invalid_argument("run: coin-flip is a roulette control, not a scheme");
    }

    stream_bitstring_file(args.input, [&](Bit b) {
        ++length;
        if (b == 1) {
            ++ones;
            remainder = (remainder + 1) % modulus;
        }
        if (single) {
            single->feed(b, streams[0]);
        } else if (ghz) {
            ghz->feed(b, streams[0]);
        } else {
            for (std::size_t i = 0; i < branches.size(); ++i) {
                branches[i].feed(b, streams[i]);
            }
        }
    });

    const ProblemSpec spec(args.n, length);
    int outcome_bit;
    Answer answer;
    if (single) {
        const MeasurementOutcome m = measure_x(single->state(), streams[0]);
        outcome_bit = m.x;
        answer = answer_from_outcome(m, spec);
    } else if (ghz) {
        const auto bits = measure_all(ghz->decoded(), streams[0]);
        unsigned set = 0;
        for (auto bit : bits) set += bit;
        const int majority = 2 * set > bits.size() ? 1 : 0;
        outcome_bit = majority;
        answer = Answer{majority == 0 ? spec.n : 0};
    } else {
        int votes = 0;
        for (std::size_t i = 0; i < branches.size(); ++i) {
            votes += measure_x(branches[i].state(), streams[i]).x;
        }
        const int majority = votes >= 2 ? 1 : 0;
        outcome_bit = majority;
        answer = answer_from_outcome({majority}, spec);
    }

    const double delta_e = qubit_pulse_coupling(spec.n, args.tau, args.h);
    const double margin = workability_margin(spec.N, noise.phi0());

    DataSink sink(args.common, "run", out);
    auto writer = make_writer(parse_output_format(args.common.format), sink.stream());
    Record meta;
    meta.add("tool", "qrem")
        .add("version", kVersion)
        .add("command", "run")
        .add("seed", args.seed)
        .add("n", spec.n)
        .add("scheme", to_string(scheme.kind))
        .add("phi0", noise.phi0())
        .add("bias", noise.bias())
        .add("p_flip", noise.p_flip())
        .add("tau", args.tau)
        .add("h", args.h)
        .add("input", args.input);
    writer->write_header(meta);

    Record row;
    row.add("scheme", to_string(scheme.kind))
        .add("n", spec.n)
        .add("N", spec.N)
        .add("N1", ones)
        .add("remainder_true", remainder)
        .add("outcome_x", outcome_bit)
        .add("answer", answer.excluded)
        .add("won_if_roulette", remainder != answer.excluded)
        .add("delta_e", delta_e)
        .add("pulse_time", args.tau)
        .add("total_time", static_cast<double>(spec.N) * args.tau)
        .add("workability_margin", margin)
        .add("workability_flag", to_string(workability_flag(margin)));
    writer->write(row);
    return 0;
}

// ---------------------------------------------------------------------------
// montecarlo: repeated conditioned trials of one scheme.

struct MonteCarloArgs {
    CommonOptions common;
    NoiseOptions noise;
    SchemeOptions scheme;
    std::uint64_t n = 2;
    std::uint64_t length = 0;   // 0: derive from the target weight
    std::uint64_t target = 0;   // 0: auto-resolve near N/2
    std::string conditioning = "remainder-0";
    std::string stat = "error-rate";
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

TrialConfig build_config(const MonteCarloArgs& args, bool allow_coin_flip) {
    if (args.length == 0 && args.target == 0) {
        throw std::invalid_argument("provide --N, --n1, or both");
    }
    const std::uint64_t length = args.length != 0 ? args.length : 2 * args.target;
    TrialConfig cfg;
    cfg.spec = ProblemSpec(args.n, length);
    cfg.noise = args.noise.build();
    cfg.scheme = args.scheme.build(allow_coin_flip);
    cfg.trials = args.trials;
    cfg.master_seed = args.seed;
    if (args.conditioning == "remainder-0") {
        cfg.conditioning = Conditioning::kRemainderZero;
    } else if (args.conditioning == "remainder-n") {
        cfg.conditioning = Conditioning::kRemainderN;
    } else if (args.conditioning == "unconditioned") {
        cfg.conditioning = Conditioning::kUnconditioned;
    } else {
        throw std::invalid_argument("unknown conditioning: " + args.conditioning);
    }
    if (args.target != 0) {
        cfg.target_weight = args.target;
    }
    return cfg;
}

Record montecarlo_meta(const char* command, const MonteCarloArgs& args,
                       const TrialConfig& cfg) {
    Record meta;
    meta.add("tool", "qrem")
        .add("version", kVersion)
        .add("command", command)
        .add("seed", args.seed)
        .add("scheme", to_string(cfg.scheme.kind))
        .add("conditioning", to_string(cfg.conditioning))
        .add("n", cfg.spec.n)
        .add("N", cfg.spec.N)
        .add("phi0", cfg.noise.phi0())
        .add("bias", cfg.noise.bias())
        .add("p_flip", cfg.noise.p_flip())
        .add("ghz_qubits", static_cast<std::uint64_t>(cfg.scheme.ghz_qubits))
        .add("trials", cfg.trials);
    return meta;
}

int execute_montecarlo(const MonteCarloArgs& args, std::ostream& out) {
    const TrialConfig cfg = build_config(args, true);

    DataSink sink(args.common, "montecarlo", out);
    auto writer = make_writer(parse_output_format(args.common.format), sink.stream());
    Record meta = montecarlo_meta("montecarlo", args, cfg);
    meta.add("stat", args.stat);
    writer->write_header(meta);

    if (args.stat == "angle-variance") {
        const auto stats = estimate_angle_variance(cfg, args.threads);
        Record row;
        row.add("scheme", to_string(cfg.scheme.kind))
            .add("n1", resolved_target_weight(cfg))
            .add("trials", stats.trials)
            .add("mean", stats.mean)
            .add("variance", stats.variance)
            .add("std_error", stats.std_error)
            .add("predicted", stats.predicted);
        writer->write(row);
        return 0;
    }
    if (args.stat != "error-rate") {
        throw std::invalid_argument("unknown stat: " + args.stat);
    }
    const auto stats = estimate_error_rate(cfg, args.threads);
    Record row;
    row.add("scheme", to_string(cfg.scheme.kind))
        .add("conditioning", to_string(cfg.conditioning))
        .add("n1", cfg.conditioning == Conditioning::kUnconditioned
                       ? std::uint64_t{0}
                       : resolved_target_weight(cfg));
    writer->write(stats_fields(std::move(row), stats));
    return 0;
}

// ---------------------------------------------------------------------------
// sweep: montecarlo along one axis.

struct SweepArgs {
    MonteCarloArgs base;
    std::string axis = "phi0";
    std::vector<double> values;
};

int execute_sweep(const SweepArgs& args, std::ostream& out) {
    const TrialConfig cfg = build_config(args.base, true);
    SweepAxis axis;
    if (args.axis == "phi0") {
        axis = SweepAxis::kPhi0;
    } else if (args.axis == "N") {
        axis = SweepAxis::kLength;
    } else if (args.axis == "n") {
        axis = SweepAxis::kHalfModulus;
    } else if (args.axis == "p_flip") {
        axis = SweepAxis::kFlipProbability;
    } else if (args.axis == "n_q") {
        axis = SweepAxis::kGhzQubits;
    } else {
        throw std::invalid_argument("unknown sweep axis: " + args.axis);
    }

    const auto points = sweep(cfg, axis, args.values, args.base.threads);

    DataSink sink(args.base.common, "sweep", out);
    auto writer = make_writer(parse_output_format(args.base.common.format), sink.stream());
    Record meta = montecarlo_meta("sweep", args.base, cfg);
    meta.add("axis", args.axis);
    writer->write_header(meta);

    for (const auto& point : points) {
        Record row;
        row.add("axis", args.axis)
            .add("value", point.value)
            .add("ok", point.stats.has_value())
            .add("error", point.error);
        const TrialStats stats = point.stats.value_or(TrialStats{});
        writer->write(stats_fields(std::move(row), stats));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// roulette: batches of the wheel game.

struct RouletteArgs {
    CommonOptions common;
    NoiseOptions noise;
    SchemeOptions scheme;
    std::uint64_t n = 2;
    std::uint64_t length = 0;
    double p_one = 0.5;
    std::uint64_t games = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    double tau = 1.0;
    double h = 1.0;
};

int execute_roulette(const RouletteArgs& args, std::ostream& out) {
    const GameSpec spec(args.n, args.length, args.p_one, args.seed);
    const NoiseModel noise = args.noise.build();
    const SchemeSpec scheme = args.scheme.build(true);

    const auto report = win_rate(spec, noise, scheme, args.games, args.seed, args.threads);
    const double delta_e = qubit_pulse_coupling(spec.n, args.tau, args.h);

    DataSink sink(args.common, "roulette", out);
    auto writer = make_writer(parse_output_format(args.common.format), sink.stream());
    Record meta;
    meta.add("tool", "qrem")
        .add("version", kVersion)
        .add("command", "roulette")
        .add("seed", args.seed)
        .add("n", spec.n)
        .add("N", spec.N)
        .add("p_one", spec.p_one)
        .add("scheme", to_string(scheme.kind))
        .add("phi0", noise.phi0())
        .add("bias", noise.bias())
        .add("p_flip", noise.p_flip())
        .add("games", args.games)
        .add("tau", args.tau)
        .add("h", args.h);
    writer->write_header(meta);

    Record row;
    row.add("scheme", to_string(scheme.kind))
        .add("games", report.win.trials)
        .add("losses", report.win.wrong)
        .add("win_rate", report.win.p_hat)
        .add("win_ci_low", report.win.ci_low)
        .add("win_ci_high", report.win.ci_high)
        .add("critical_games", report.critical_games)
        .add("critical_losses", report.critical_losses)
        .add("conditional_loss_rate", report.conditional_loss.p_hat)
        .add("conditional_ci_low", report.conditional_loss.ci_low)
        .add("conditional_ci_high", report.conditional_loss.ci_high)
        .add("conditional_predicted", report.conditional_loss.predicted)
        .add("delta_e", delta_e)
        .add("speedup_factor", quantum_speedup_factor(spec.n));
    writer->write(row);
    return 0;
}

// ---------------------------------------------------------------------------
// energy: the pure accounting table.

struct EnergyArgs {
    CommonOptions common;
    std::uint64_t n = 1;
    std::uint64_t length = 1;
    double tau = 1.0;
    double h = 1.0;
    double spin = 0.5;
    double measurement_time = 0.0;
};

int execute_energy(const EnergyArgs& args, std::ostream& out) {
    const auto report =
        ledger_report(args.n, args.length, args.tau, args.h, args.spin, args.measurement_time);

    DataSink sink(args.common, "energy", out);
    auto writer = make_writer(parse_output_format(args.common.format), sink.stream());
    Record meta;
    meta.add("tool", "qrem")
        .add("version", kVersion)
        .add("command", "energy")
        .add("n", report.n)
        .add("N", report.length)
        .add("tau", report.tau)
        .add("h", report.h)
        .add("S", report.spin)
        .add("speedup_factor", quantum_speedup_factor(report.n))
        .add("rotator_time_factor", rotator_time_factor(report.spin))
        .add("final_measurement_time", report.final_measurement_time);
    writer->write_header(meta);

    for (const auto& row : report.rows) {
        Record record;
        record.add("scheme", to_string(row.scheme))
            .add("delta_e", row.coupling_energy)
            .add("pulse_time", row.pulse_time)
            .add("total_time", row.total_time)
            .add("time_factor_vs_qubit", row.time_factor_vs_qubit)
            .add("ratio_vs_classical_bound", row.ratio_vs_classical_bound);
        writer->write(record);
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-qubit Hamming-weight remainder machine: simulator, "
                 "error-correction strategies, energy accounting, and Monte Carlo harness"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Process one bitstring file end to end");
    run_cmd->add_option("--n", run_args.n, "Half-modulus (pointer has 2n positions)")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    run_cmd->add_option("--input", run_args.input, "Bitstring file ('0'/'1', separators allowed)")
        ->required();
    run_cmd->add_option("--seed", run_args.seed, "Master seed (required; no ambient entropy)")
        ->required();
    run_cmd->add_option("--tau", run_args.tau, "Per-character time in ledger units");
    run_cmd->add_option("--planck", run_args.h, "Planck constant in ledger units");
    add_scheme(run_cmd, run_args.scheme, false);
    add_noise(run_cmd, run_args.noise);
    add_common(run_cmd, run_args.common);

    MonteCarloArgs mc_args;
    auto* mc_cmd = app.add_subcommand("montecarlo", "Estimate error rates over many trials");
    mc_cmd->add_option("--n", mc_args.n, "Half-modulus")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    mc_cmd->add_option("--N", mc_args.length, "String length (default: 2 * n1)");
    mc_cmd->add_option("--n1", mc_args.target, "Exact Hamming weight for conditioned trials");
    mc_cmd->add_option("--conditioning", mc_args.conditioning, "remainder-0, remainder-n, or unconditioned")
        ->check(CLI::IsMember({"remainder-0", "remainder-n", "unconditioned"}));
    mc_cmd->add_option("--stat", mc_args.stat, "error-rate or angle-variance")
        ->check(CLI::IsMember({"error-rate", "angle-variance"}));
    mc_cmd->add_option("--trials", mc_args.trials, "Number of trials")->required();
    mc_cmd->add_option("--seed", mc_args.seed, "Master seed (required)")->required();
    mc_cmd->add_option("--threads", mc_args.threads, "Worker threads (0 = auto; result-invariant)");
    add_scheme(mc_cmd, mc_args.scheme, true);
    add_noise(mc_cmd, mc_args.noise);
    add_common(mc_cmd, mc_args.common);

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo along one parameter axis");
    sweep_cmd->add_option("--n", sweep_args.base.n, "Half-modulus")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    sweep_cmd->add_option("--N", sweep_args.base.length, "String length (default: 2 * n1)");
    sweep_cmd->add_option("--n1", sweep_args.base.target, "Exact Hamming weight");
    sweep_cmd->add_option("--conditioning", sweep_args.base.conditioning,
                          "remainder-0, remainder-n, or unconditioned")
        ->check(CLI::IsMember({"remainder-0", "remainder-n", "unconditioned"}));
    sweep_cmd->add_option("--trials", sweep_args.base.trials, "Trials per point")->required();
    sweep_cmd->add_option("--seed", sweep_args.base.seed, "Master seed (required)")->required();
    sweep_cmd->add_option("--threads", sweep_args.base.threads, "Worker threads (0 = auto)");
    sweep_cmd->add_option("--axis", sweep_args.axis, "phi0, N, n, p_flip, or n_q")
        ->required()
        ->check(CLI::IsMember({"phi0", "N", "n", "p_flip", "n_q"}));
    sweep_cmd->add_option("--values", sweep_args.values, "Comma-separated axis values")
        ->required()
        ->delimiter(',');
    add_scheme(sweep_cmd, sweep_args.base.scheme, true);
    add_noise(sweep_cmd, sweep_args.base.noise);
    add_common(sweep_cmd, sweep_args.base.common);

    RouletteArgs roulette_args;
    auto* roulette_cmd = app.add_subcommand("roulette", "Play wheel-game batches");
    roulette_cmd->add_option("--n", roulette_args.n, "Half-modulus (wheel has 2n positions)")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    roulette_cmd->add_option("--N", roulette_args.length, "Characters per game")->required();
    roulette_cmd->add_option("--p-one", roulette_args.p_one, "Chance each character is '1'");
    roulette_cmd->add_option("--games", roulette_args.games, "Number of games")->required();
    roulette_cmd->add_option("--seed", roulette_args.seed, "Master seed (required)")->required();
    roulette_cmd->add_option("--threads", roulette_args.threads, "Worker threads (0 = auto)");
    roulette_cmd->add_option("--tau", roulette_args.tau, "Per-character time in ledger units");
    roulette_cmd->add_option("--planck", roulette_args.h, "Planck constant in ledger units");
    add_scheme(roulette_cmd, roulette_args.scheme, true);
    add_noise(roulette_cmd, roulette_args.noise);
    add_common(roulette_cmd, roulette_args.common);

    EnergyArgs energy_args;
    auto* energy_cmd = app.add_subcommand("energy", "Time-energy comparison table");
    energy_cmd->add_option("--n", energy_args.n, "Half-modulus (n = 1 allowed here)")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
    energy_cmd->add_option("--N", energy_args.length, "String length")->required();
    energy_cmd->add_option("--tau", energy_args.tau, "Per-character time");
    energy_cmd->add_option("--planck", energy_args.h, "Planck constant in ledger units");
    energy_cmd->add_option("--S", energy_args.spin, "Classical rotator spin magnitude (>= 1/2)");
    energy_cmd->add_option("--measurement-time", energy_args.measurement_time,
                           "Flat scheme-independent readout cost");
    add_common(energy_cmd, energy_args.common);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qrem");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (run_cmd->parsed()) return execute_run(run_args, out);
        if (mc_cmd->parsed()) return execute_montecarlo(mc_args, out);
        if (sweep_cmd->parsed()) return execute_sweep(sweep_args, out);
        if (roulette_cmd->parsed()) return execute_roulette(roulette_args, out);
        if (energy_cmd->parsed()) return execute_energy(energy_args, out);
        err << app.help();
        return 1;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const EmptyInputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

}  // namespace qrem::cli
