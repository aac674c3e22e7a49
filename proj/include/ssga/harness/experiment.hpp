#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssga/ga/algorithms.hpp"
#include "ssga/ga/config.hpp"
#include "ssga/harness/stats.hpp"

namespace ssga::harness {

enum class Normalization { None, Vs2Plus1GA, Vs1Plus1EA, VsCEqual1 };
enum class SweepVariable { N, Mu, C };
enum class Scale { Desk, Full };

std::string_view to_string(Normalization v) noexcept;
std::string_view to_string(SweepVariable v) noexcept;
std::string_view to_string(Scale v) noexcept;
std::optional<Normalization> parse_normalization(std::string_view s) noexcept;
std::optional<Scale> parse_scale(std::string_view s) noexcept;

inline constexpr std::uint64_t kDefaultMasterSeed = 1;
inline constexpr std::uint64_t kDefaultRuns = 1000;

/// Runs per point at desk scale: 1000 up to n = 2048, 200 for n in
/// {4096, 8192}, 100 beyond. Full scale always uses 1000.
std::uint64_t runs_for(Scale scale, std::size_t n) noexcept;

struct ExperimentPoint {
    std::string series; ///< curve the point belongs to; the sweep runs along it
    ga::AlgorithmConfig config;
    std::uint64_t runs = kDefaultRuns;
};

struct ExperimentSpec {
    std::string name;
    std::vector<ExperimentPoint> points;
    std::uint64_t master_seed = kDefaultMasterSeed;
    Normalization normalization = Normalization::None;
    SweepVariable sweep = SweepVariable::N;

    /// Appends one point per sweep value, copying `base` and overriding the
    /// swept field. Runs per point come from `runs` or from the scale.
    void add_series(const std::string& series, const ga::AlgorithmConfig& base,
                    const std::vector<double>& values, std::optional<std::uint64_t> runs,
                    Scale scale = Scale::Desk);

    /// Throws ContractViolation for an empty spec, runs < 1, an invalid
    /// config, a sweep that is not strictly increasing within a series, or a
    /// point without a baseline under the chosen normalization.
    void validate() const;
};

/// Index of the point `point` is normalized against, if any.
///   vs_2plus1_ga: the uniform-selection (2+1) GA with the same n and c;
///   vs_1plus1_ea: the (1+1) EA with the same n and c = 1;
///   vs_c_equal_1: the same algorithm, mu and n with c = 1.
std::optional<std::size_t> baseline_index(const ExperimentSpec& spec, std::size_t point);

/// Value of the swept field of a config.
double sweep_value(SweepVariable sweep, const ga::AlgorithmConfig& cfg) noexcept;

struct PointResult {
    ExperimentPoint point;
    std::vector<ga::RunResult> runs; ///< indexed by run number
    StatsSummary stats;

    /// Evaluation counts of the runs that reached the optimum.
    std::vector<double> finished_evaluations() const;
};

struct ExperimentResult {
    std::string name;
    Normalization normalization = Normalization::None;
    SweepVariable sweep = SweepVariable::N;
    std::vector<PointResult> points;

    std::uint64_t capped_runs() const noexcept;
};

/// Runs every point of the spec. Run r of point p uses the seed
/// derive_seed(master_seed, p, r); results are stored by index and reduced
/// afterwards, so the output does not depend on `workers`
/// (0 = hardware concurrency).
ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned workers = 0);

/// Named specs "fig1".."fig5" and "table1".
std::vector<ExperimentSpec> builtin_specs(Scale scale = Scale::Desk);

/// Throws ContractViolation for an unknown name.
ExperimentSpec builtin_spec(std::string_view name, Scale scale = Scale::Desk);

} // namespace ssga::harness
