#include "ssga/cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssga/ga/config.hpp"
#include "ssga/ga/genome.hpp"
#include "ssga/harness/experiment.hpp"
#include "ssga/harness/output.hpp"
#include "ssga/markov/chain.hpp"
#include "ssga/markov/runtime_bounds.hpp"

namespace ssga::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OutputFlags {
    std::string out;
    std::string format = "csv";
    unsigned workers = 0;
};

struct AlgoFlags {
    std::string algo;
    std::vector<std::size_t> n;
    std::vector<std::size_t> mu;
    std::vector<double> c;
    std::string selection = "uniform";
    std::uint64_t runs = harness::kDefaultRuns;
    std::uint64_t seed = harness::kDefaultMasterSeed;
    std::uint64_t max_evaluations = 0;
    std::string normalize = "none";
};

struct BoundsFlags {
    std::string kind;
    std::optional<std::size_t> mu;
    double c = 1.0;
    std::optional<std::size_t> n;
    std::string mode = "leading-order";
    bool per_level = false;
    std::optional<int> precision;
};

struct SolveFlags {
    double pm = 0.0, pd = 0.0, pc = 0.0, pr = 0.0;
    std::uint64_t simulate = 0;
    std::uint64_t seed = harness::kDefaultMasterSeed;
    int precision = harness::kDefaultPrecision;
};

struct FigFlags {
    std::string which;
    std::string scale = "desk";
    std::uint64_t seed = harness::kDefaultMasterSeed;
};

void add_output_flags(CLI::App* cmd, OutputFlags& f, bool with_format) {
    cmd->add_option("--out", f.out, "Output file (default: standard output)");
    if (with_format)
        cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--workers", f.workers, "Worker threads (0 = all cores; SSGA_WORKERS overrides)");
}

unsigned resolve_workers(unsigned flag) {
    const char* env = std::getenv("SSGA_WORKERS");
    if (!env || !*env) return flag;
    unsigned value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError("SSGA_WORKERS must be a non-negative integer, got '" + std::string(s) + "'");
    return value;
}

void emit(const OutputFlags& f, const std::string& content, std::ostream& out) {
    if (f.out.empty())
        out << content;
    else
        harness::write_file_atomic(f.out, content);
}

ga::AlgorithmConfig base_config(const AlgoFlags& f) {
    const auto variant = ga::parse_variant(f.algo);
    if (!variant) throw UsageError("unknown algorithm '" + f.algo + "'");
    const auto selection = ga::parse_selection(f.selection);
    if (!selection) throw UsageError("unknown parent selection '" + f.selection + "'");
    ga::AlgorithmConfig cfg;
    cfg.variant = *variant;
    cfg.parent_selection = *selection;
    cfg.max_evaluations = f.max_evaluations;
    cfg.n = f.n.front();
    cfg.c = f.c.front();
    if (!f.mu.empty())
        cfg.mu = f.mu.front();
    else
        cfg.mu = (*variant == ga::Variant::OnePlusOneEA || *variant == ga::Variant::OneLambdaLambdaSelfAdjusting) ? 1 : 2;
    return cfg;
}

harness::ExperimentSpec algo_spec(const std::string& name, const AlgoFlags& f) {
    if (f.runs < 1) throw UsageError("--runs must be at least 1");
    const auto norm = harness::parse_normalization(f.normalize);
    if (!norm) throw UsageError("unknown normalization '" + f.normalize + "'");

    int lists = 0;
    harness::SweepVariable sweep = harness::SweepVariable::N;
    std::vector<double> values = {static_cast<double>(f.n.front())};
    if (f.n.size() > 1) {
        ++lists;
        values.assign(f.n.begin(), f.n.end());
    }
    if (f.mu.size() > 1) {
        ++lists;
        sweep = harness::SweepVariable::Mu;
        values.assign(f.mu.begin(), f.mu.end());
    }
    if (f.c.size() > 1) {
        ++lists;
        sweep = harness::SweepVariable::C;
        values = f.c;
    }
    if (lists > 1) throw UsageError("only one of --n, --mu, --c may hold several values");

    const ga::AlgorithmConfig cfg = base_config(f);
    harness::ExperimentSpec spec;
    spec.name = name;
    spec.master_seed = f.seed;
    spec.sweep = sweep;
    spec.normalization = *norm;
    spec.add_series(f.algo, cfg, values, f.runs);
    spec.validate();
    return spec;
}

void write_experiment(const harness::ExperimentSpec& spec, const OutputFlags& f, std::ostream& out,
                      std::ostream& err) {
    const auto result = harness::run_experiment(spec, resolve_workers(f.workers));
    const auto capped = result.capped_runs();
    if (f.format == "json") {
        emit(f, harness::to_json(result).dump(2) + "\n", out);
    } else {
        emit(f, harness::to_csv(result), out);
        if (capped) err << "warning: " << capped << " run(s) hit the evaluation cap and were excluded\n";
    }
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag, const std::string& kind) {
    if (!v) throw UsageError("--kind " + kind + " needs " + flag);
    return *v;
}

void cmd_bounds(const BoundsFlags& f, const OutputFlags& o, std::ostream& out) {
    markov::AsymptoticMode mode = markov::AsymptoticMode::LeadingOrder;
    if (f.mode == "conservative") mode = markov::AsymptoticMode::Conservative;

    json j;
    int precision = f.precision.value_or(harness::kDefaultPrecision);
    if (f.kind == "upper") {
        const std::size_t mu = require(f.mu, "--mu", f.kind);
        if (mu < 3) throw UsageError("--kind upper needs mu >= 3; use --kind upper-2plus1 for mu = 2");
        j = markov::to_json(markov::upper_runtime_bound(mu, f.c, require(f.n, "--n", f.kind), f.per_level, mode));
    } else if (f.kind == "upper-2plus1") {
        j = markov::to_json(markov::upper_bound_2plus1(f.c, require(f.n, "--n", f.kind), mode));
    } else if (f.kind == "lower") {
        j = markov::to_json(markov::lower_runtime_bound(f.c, require(f.n, "--n", f.kind), mode));
    } else if (f.kind == "takeover") {
        j = markov::to_json(markov::takeover_report(require(f.mu, "--mu", f.kind), f.c));
    } else {
        // Seven digits by default so the value is resolved to 1e-6.
        precision = f.precision.value_or(7);
        j = {{"kind", "optimal_c"}, {"value", markov::optimal_mutation_constant()}};
    }
    harness::round_numbers(j, precision);
    emit(o, j.dump(2) + "\n", out);
}

void cmd_mc_solve(const SolveFlags& f, const OutputFlags& o, std::ostream& out) {
    const markov::MarkovParams params{f.pm, f.pd, f.pc, f.pr};
    const auto times = markov::absorbing_times(params);
    json j = {{"p_m", f.pm}, {"p_d", f.pd}, {"p_c", f.pc}, {"p_r", f.pr},
              {"E_T1", times.from_s1}, {"E_T2", times.from_s2}};
    if (f.simulate > 0) {
        Rng rng = make_rng(f.seed);
        const auto s1 = markov::simulate_chain(params, markov::ChainState::S1, rng, f.simulate);
        const auto s2 = markov::simulate_chain(params, markov::ChainState::S2, rng, f.simulate);
        const auto within = [](const markov::SampleEstimate& s, double exact) {
            return std::abs(s.mean - exact) <= 4.0 * s.std_error + 1e-9 * exact;
        };
        j["simulation"] = {{"episodes", f.simulate},
                           {"seed", f.seed},
                           {"from_s1", {{"mean", s1.mean}, {"std_error", s1.std_error}}},
                           {"from_s2", {{"mean", s2.mean}, {"std_error", s2.std_error}}},
                           {"agrees", within(s1, times.from_s1) && within(s2, times.from_s2)}};
    }
    harness::round_numbers(j, f.precision);
    emit(o, j.dump(2) + "\n", out);
}

harness::ExperimentSpec fig_spec(const FigFlags& f) {
    const auto scale = harness::parse_scale(f.scale);
    if (!scale) throw UsageError("--scale must be desk or full");
    std::string name = f.which;
    if (name.size() == 1 && name[0] >= '1' && name[0] <= '5') name = "fig" + name;
    if (name != "table1" && name.rfind("fig", 0) != 0) throw UsageError("--which must be 1..5 or table1");
    auto spec = harness::builtin_spec(name, *scale);
    spec.master_seed = f.seed;
    return spec;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steady-state GA runtime experiments on OneMax"};
    app.name(args.empty() ? "ssga" : args.front());
    app.require_subcommand(1);

    OutputFlags o;
    AlgoFlags a;
    BoundsFlags b;
    SolveFlags s;
    FigFlags g;

    const auto add_algo = [&](CLI::App* cmd, bool lists) {
        cmd->add_option("--algo", a.algo, "Algorithm name")->required();
        auto* n = cmd->add_option("--n", a.n, "Problem size")->required();
        auto* mu = cmd->add_option("--mu", a.mu, "Population size");
        auto* c = cmd->add_option("--c", a.c, "Mutation rate constant (rate c/n)")->required();
        if (lists) {
            n->delimiter(',');
            mu->delimiter(',');
            c->delimiter(',');
            cmd->add_option("--normalize", a.normalize, "Normalization (none, vs_2plus1_ga, vs_1plus1_ea, vs_c_equal_1)");
        } else {
            n->expected(1);
            mu->expected(1);
            c->expected(1);
        }
        cmd->add_option("--selection", a.selection, "Parent selection (uniform, fitness-proportional, rank, greedy)");
        cmd->add_option("--runs", a.runs, "Independent runs per point");
        cmd->add_option("--seed", a.seed, "Master seed");
        cmd->add_option("--max-evaluations", a.max_evaluations, "Evaluation cap per run (0 = default)");
        add_output_flags(cmd, o, true);
    };

    auto* run_cmd = app.add_subcommand("run", "Repeated runs of one configuration");
    add_algo(run_cmd, false);
    auto* sweep_cmd = app.add_subcommand("sweep", "Runs over a comma list of n, mu or c values");
    add_algo(sweep_cmd, true);

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a closed-form runtime bound");
    bounds_cmd->add_option("--kind", b.kind, "Bound kind")
        ->required()
        ->check(CLI::IsMember({"upper", "upper-2plus1", "lower", "takeover", "optimal-c"}));
    bounds_cmd->add_option("--mu", b.mu, "Population size");
    bounds_cmd->add_option("--c", b.c, "Mutation rate constant");
    bounds_cmd->add_option("--n", b.n, "Problem size");
    bounds_cmd->add_option("--mode", b.mode, "Remainder handling")
        ->check(CLI::IsMember({"leading-order", "conservative"}));
    bounds_cmd->add_flag("--per-level", b.per_level, "Also report per-level values (upper only)");
    bounds_cmd->add_option("--precision", b.precision, "Significant digits")->check(CLI::Range(1, 17));
    add_output_flags(bounds_cmd, o, false);

    auto* solve_cmd = app.add_subcommand("mc-solve", "Expected absorption times of the three-state chain");
    solve_cmd->add_option("--pm", s.pm, "S1 -> S3 probability")->required();
    solve_cmd->add_option("--pd", s.pd, "S1 -> S2 probability")->required();
    solve_cmd->add_option("--pc", s.pc, "S2 -> S3 probability")->required();
    solve_cmd->add_option("--pr", s.pr, "S2 -> S1 probability")->required();
    solve_cmd->add_option("--simulate", s.simulate, "Monte-Carlo episodes per start state");
    solve_cmd->add_option("--seed", s.seed, "Simulation seed");
    solve_cmd->add_option("--precision", s.precision, "Significant digits")->check(CLI::Range(1, 17));
    add_output_flags(solve_cmd, o, false);

    const auto add_fig = [&](CLI::App* cmd, bool which) {
        if (which) cmd->add_option("--which", g.which, "1, 2, 3, 4, 5 or table1")->required();
        cmd->add_option("--scale", g.scale, "desk or full")->check(CLI::IsMember({"desk", "full"}));
        cmd->add_option("--seed", g.seed, "Master seed");
        add_output_flags(cmd, o, true);
    };
    auto* table_cmd = app.add_subcommand("table1", "Dataset of the runtime statistics table");
    add_fig(table_cmd, false);
    auto* figs_cmd = app.add_subcommand("figs", "Dataset behind one of the figures");
    add_fig(figs_cmd, true);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        if (!rev.empty()) rev.pop_back();
        app.parse(rev);

        if (run_cmd->parsed()) {
            write_experiment(algo_spec("run", a), o, out, err);
        } else if (sweep_cmd->parsed()) {
            write_experiment(algo_spec("sweep", a), o, out, err);
        } else if (bounds_cmd->parsed()) {
            cmd_bounds(b, o, out);
        } else if (solve_cmd->parsed()) {
            cmd_mc_solve(s, o, out);
        } else if (table_cmd->parsed()) {
            g.which = "table1";
            const auto spec = fig_spec(g);
            write_experiment(spec, o, out, err);
        } else if (figs_cmd->parsed()) {
            const auto spec = fig_spec(g);
            write_experiment(spec, o, out, err);
        }
        return kExitOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const markov::InfiniteExpectation& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitNumeric;
    }
}

} // namespace ssga::cli
