#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ssga::ga {

enum class Variant {
    OnePlusOneEA,
    MuPlusOneEA,
    MuPlusOneGA,
    TwoPlusOneGreedyS,
    SudholtDiversity,
    SudholtDiversityGreedySelection,
    SudholtDiversityGreedySelectionGreedyXO,
    OneLambdaLambdaSelfAdjusting,
};

/// Parent selection policies. All of them give fitter members at least the
/// probability of less fit ones, and equal fitness means equal probability.
enum class ParentSelection {
    Uniform,
    FitnessProportional,
    Rank,
    Greedy, ///< uniform among the members of current best fitness
};

struct AlgorithmConfig {
    Variant variant = Variant::MuPlusOneGA;
    std::size_t n = 100;
    std::size_t mu = 2;
    double c = 1.0;
    ParentSelection parent_selection = ParentSelection::Uniform;
    std::uint64_t max_evaluations = 0; ///< 0 selects default_max_evaluations(n)
    std::uint64_t seed = 0;

    /// Throws ContractViolation on any broken invariant.
    void validate() const;
    std::uint64_t evaluation_cap() const;
};

/// ceil(100 e n ln n), floored at 1000 so tiny instances still get a budget.
std::uint64_t default_max_evaluations(std::size_t n);

/// True for the variants that create exactly one offspring per generation.
bool is_steady_state(Variant v) noexcept;

/// c = (1 + sqrt 5) / 2, the rate used for the tuned diversity runs.
inline constexpr double kGoldenRatio = 1.6180339887498948482;

std::string_view to_string(Variant v) noexcept;
std::string_view to_string(ParentSelection p) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;
std::optional<ParentSelection> parse_selection(std::string_view name) noexcept;

/// Human-readable label such as "(5+1) GA" used in experiment tables.
std::string display_name(const AlgorithmConfig& cfg);

} // namespace ssga::ga
