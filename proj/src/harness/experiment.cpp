#include "ssga/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "ssga/ga/genome.hpp"
#include "ssga/rng.hpp"

namespace ssga::harness {

namespace {

using ga::AlgorithmConfig;
using ga::ParentSelection;
using ga::Variant;

const std::vector<double> kSizes = {64, 128, 256, 512, 1024, 2048, 4096, 8192};

AlgorithmConfig make(Variant v, std::size_t mu, double c = 1.0,
                     ParentSelection sel = ParentSelection::Uniform) {
    AlgorithmConfig cfg;
    cfg.variant = v;
    cfg.mu = mu;
    cfg.c = c;
    cfg.parent_selection = sel;
    return cfg;
}

struct Row {
    std::string label;
    AlgorithmConfig config;
};

std::vector<Row> table_rows() {
    const double phi = ga::kGoldenRatio;
    return {
        {"(1+1) EA", make(Variant::OnePlusOneEA, 1)},
        {"(2+1) GA", make(Variant::MuPlusOneGA, 2)},
        {"greedy (2+1) GA", make(Variant::MuPlusOneGA, 2, 1.0, ParentSelection::Greedy)},
        {"(5+1) GA", make(Variant::MuPlusOneGA, 5)},
        {"Sudholt (2+1) GA 1/n", make(Variant::SudholtDiversity, 2)},
        {"Sudholt (2+1) GA opt", make(Variant::SudholtDiversity, 2, phi)},
        {"(2+1)_S GA", make(Variant::TwoPlusOneGreedyS, 2)},
        {"Sudholt greedy selection + greedy XO 1/n", make(Variant::SudholtDiversityGreedySelectionGreedyXO, 2)},
        {"Sudholt greedy selection 1/n", make(Variant::SudholtDiversityGreedySelection, 2)},
        {"Sudholt greedy selection + greedy XO opt",
         make(Variant::SudholtDiversityGreedySelectionGreedyXO, 2, phi)},
        {"self-adjusting (1+(lambda;lambda)) GA", make(Variant::OneLambdaLambdaSelfAdjusting, 1)},
    };
}

ExperimentSpec n_sweep(const std::string& name, const std::vector<std::string>& labels, Scale scale) {
    ExperimentSpec spec;
    spec.name = name;
    spec.sweep = SweepVariable::N;
    for (const auto& row : table_rows())
        if (std::find(labels.begin(), labels.end(), row.label) != labels.end())
            spec.add_series(row.label, row.config, kSizes, std::nullopt, scale);
    return spec;
}

std::vector<double> mu_values() {
    std::vector<double> out;
    for (int mu = 2; mu <= 16; ++mu) out.push_back(mu);
    return out;
}

ExperimentSpec mu_sweep(const std::string& name, const std::vector<std::size_t>& sizes, bool with_ea,
                        Scale scale) {
    ExperimentSpec spec;
    spec.name = name;
    spec.sweep = SweepVariable::Mu;
    spec.normalization = with_ea ? Normalization::Vs1Plus1EA : Normalization::Vs2Plus1GA;
    for (std::size_t n : sizes) {
        const std::string suffix = " n=" + std::to_string(n);
        AlgorithmConfig ga_cfg = make(Variant::MuPlusOneGA, 2);
        ga_cfg.n = n;
        if (with_ea) {
            AlgorithmConfig ea = make(Variant::OnePlusOneEA, 1);
            ea.n = n;
            spec.add_series("(1+1) EA" + suffix, ea, {1.0}, std::nullopt, scale);
        }
        spec.add_series("(mu+1) GA" + suffix, ga_cfg, mu_values(), std::nullopt, scale);
    }
    return spec;
}

ExperimentSpec c_sweep(Scale scale) {
    ExperimentSpec spec;
    spec.name = "fig5";
    spec.sweep = SweepVariable::C;
    spec.normalization = Normalization::VsCEqual1;
    AlgorithmConfig cfg = make(Variant::MuPlusOneGA, 5);
    cfg.n = 4096;
    std::vector<double> cs;
    for (int k = 9; k <= 19; ++k) cs.push_back(k / 10.0);
    spec.add_series("(5+1) GA", cfg, cs, scale == Scale::Desk ? 500 : kDefaultRuns, scale);
    return spec;
}

bool same_c(double a, double b) noexcept { return a == b; }

} // namespace

std::string_view to_string(Normalization v) noexcept {
    switch (v) {
    case Normalization::None: return "none";
    case Normalization::Vs2Plus1GA: return "vs_2plus1_ga";
    case Normalization::Vs1Plus1EA: return "vs_1plus1_ea";
    case Normalization::VsCEqual1: return "vs_c_equal_1";
    }
    return "none";
}

std::string_view to_string(SweepVariable v) noexcept {
    switch (v) {
    case SweepVariable::N: return "n";
    case SweepVariable::Mu: return "mu";
    case SweepVariable::C: return "c";
    }
    return "n";
}

std::string_view to_string(Scale v) noexcept { return v == Scale::Desk ? "desk" : "full"; }

std::optional<Normalization> parse_normalization(std::string_view s) noexcept {
    for (auto v : {Normalization::None, Normalization::Vs2Plus1GA, Normalization::Vs1Plus1EA,
                   Normalization::VsCEqual1})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

std::optional<Scale> parse_scale(std::string_view s) noexcept {
    if (s == "desk") return Scale::Desk;
    if (s == "full") return Scale::Full;
    return std::nullopt;
}

std::uint64_t runs_for(Scale scale, std::size_t n) noexcept {
    if (scale == Scale::Full || n <= 2048) return kDefaultRuns;
    return n <= 8192 ? 200 : 100;
}

double sweep_value(SweepVariable sweep, const AlgorithmConfig& cfg) noexcept {
    switch (sweep) {
    case SweepVariable::N: return static_cast<double>(cfg.n);
    case SweepVariable::Mu: return static_cast<double>(cfg.mu);
    case SweepVariable::C: return cfg.c;
    }
    return 0.0;
}

void ExperimentSpec::add_series(const std::string& series, const AlgorithmConfig& base,
                                const std::vector<double>& values, std::optional<std::uint64_t> runs,
                                Scale scale) {
    for (double v : values) {
        ExperimentPoint p;
        p.series = series;
        p.config = base;
        switch (sweep) {
        case SweepVariable::N: p.config.n = static_cast<std::size_t>(v); break;
        case SweepVariable::Mu: p.config.mu = static_cast<std::size_t>(v); break;
        case SweepVariable::C: p.config.c = v; break;
        }
        p.runs = runs ? *runs : runs_for(scale, p.config.n);
        points.push_back(std::move(p));
    }
}

void ExperimentSpec::validate() const {
    if (points.empty()) throw ContractViolation("experiment '" + name + "' has no points");
    std::map<std::string, double> last;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (p.runs < 1) throw ContractViolation("runs per point must be at least 1");
        p.config.validate();
        const double v = sweep_value(sweep, p.config);
        auto [it, fresh] = last.try_emplace(p.series, v);
        if (!fresh) {
            if (!(v > it->second))
                throw ContractViolation("sweep values of series '" + p.series + "' must be strictly increasing");
            it->second = v;
        }
        if (normalization != Normalization::None && !baseline_index(*this, i))
            throw ContractViolation("no " + std::string(to_string(normalization)) + " baseline for point " +
                                    std::to_string(i) + " of '" + name + "'");
    }
}

std::optional<std::size_t> baseline_index(const ExperimentSpec& spec, std::size_t point) {
    const AlgorithmConfig& a = spec.points.at(point).config;
    for (std::size_t j = 0; j < spec.points.size(); ++j) {
        const AlgorithmConfig& b = spec.points[j].config;
        if (b.n != a.n) continue;
        switch (spec.normalization) {
        case Normalization::None: return std::nullopt;
        case Normalization::Vs2Plus1GA:
            if (b.variant == Variant::MuPlusOneGA && b.mu == 2 && b.parent_selection == ParentSelection::Uniform &&
                same_c(b.c, a.c))
                return j;
            break;
        case Normalization::Vs1Plus1EA:
            if (b.variant == Variant::OnePlusOneEA && same_c(b.c, 1.0)) return j;
            break;
        case Normalization::VsCEqual1:
            if (b.variant == a.variant && b.mu == a.mu && b.parent_selection == a.parent_selection &&
                same_c(b.c, 1.0))
                return j;
            break;
        }
    }
    return std::nullopt;
}

std::vector<double> PointResult::finished_evaluations() const {
    std::vector<double> out;
    out.reserve(runs.size());
    for (const auto& r : runs)
        if (!r.hit_cap) out.push_back(static_cast<double>(r.evaluations));
    return out;
}

std::uint64_t ExperimentResult::capped_runs() const noexcept {
    std::uint64_t total = 0;
    for (const auto& p : points) total += p.stats.capped_count;
    return total;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned workers) {
    spec.validate();
    ExperimentResult result;
    result.name = spec.name;
    result.normalization = spec.normalization;
    result.sweep = spec.sweep;

    struct Item {
        std::size_t point;
        std::uint64_t run;
    };
    std::vector<Item> items;
    result.points.resize(spec.points.size());
    for (std::size_t p = 0; p < spec.points.size(); ++p) {
        result.points[p].point = spec.points[p];
        result.points[p].runs.resize(spec.points[p].runs);
        for (std::uint64_t r = 0; r < spec.points[p].runs; ++r) items.push_back({p, r});
    }

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, items.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::size_t k = next++; k < items.size(); k = next++) {
                const auto [p, r] = items[k];
                ga::AlgorithmConfig cfg = spec.points[p].config;
                cfg.seed = derive_seed(spec.master_seed, p, r);
                result.points[p].runs[r] = ga::run_to_optimum(cfg);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = items.size();
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& pr : result.points) {
        const auto values = pr.finished_evaluations();
        pr.stats = summarize(values, pr.runs.size() - values.size());
    }
    if (spec.normalization != Normalization::None) {
        for (std::size_t p = 0; p < result.points.size(); ++p) {
            const auto& base = result.points[*baseline_index(spec, p)].stats;
            if (base.mean > 0.0) result.points[p].stats = normalize(result.points[p].stats, base);
        }
    }
    return result;
}

std::vector<ExperimentSpec> builtin_specs(Scale scale) {
    return {
        n_sweep("fig1",
                {"(1+1) EA", "(2+1) GA", "(5+1) GA", "Sudholt (2+1) GA 1/n", "Sudholt (2+1) GA opt",
                 "Sudholt greedy selection + greedy XO opt", "self-adjusting (1+(lambda;lambda)) GA"},
                scale),
        n_sweep("fig2",
                {"(2+1) GA", "greedy (2+1) GA", "Sudholt greedy selection + greedy XO 1/n", "(2+1)_S GA",
                 "Sudholt (2+1) GA 1/n", "Sudholt greedy selection 1/n"},
                scale),
        mu_sweep("fig3", {256, 4096, 16384}, false, scale),
        mu_sweep("fig4", {256, 4096, 8192, 16384}, true, scale),
        c_sweep(scale),
        n_sweep("table1", [] {
            std::vector<std::string> all;
            for (const auto& r : table_rows()) all.push_back(r.label);
            return all;
        }(), scale),
    };
}

ExperimentSpec builtin_spec(std::string_view name, Scale scale) {
    for (auto& spec : builtin_specs(scale))
        if (spec.name == name) return spec;
    throw ContractViolation("unknown experiment '" + std::string(name) + "'");
}

} // namespace ssga::harness
