#include "ssga/ga/config.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "ssga/ga/genome.hpp"

namespace ssga::ga {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 8> kVariantNames{{
    {Variant::OnePlusOneEA, "one-plus-one-ea"},
    {Variant::MuPlusOneEA, "mu-plus-one-ea"},
    {Variant::MuPlusOneGA, "mu-plus-one-ga"},
    {Variant::TwoPlusOneGreedyS, "two-plus-one-greedy-s"},
    {Variant::SudholtDiversity, "sudholt-diversity"},
    {Variant::SudholtDiversityGreedySelection, "sudholt-diversity-greedy-selection"},
    {Variant::SudholtDiversityGreedySelectionGreedyXO, "sudholt-diversity-greedy-selection-greedy-xo"},
    {Variant::OneLambdaLambdaSelfAdjusting, "one-lambda-lambda"},
}};

constexpr std::array<std::pair<ParentSelection, std::string_view>, 4> kSelectionNames{{
    {ParentSelection::Uniform, "uniform"},
    {ParentSelection::FitnessProportional, "fitness-proportional"},
    {ParentSelection::Rank, "rank"},
    {ParentSelection::Greedy, "greedy"},
}};

} // namespace

std::uint64_t default_max_evaluations(std::size_t n) {
    const double nn = static_cast<double>(n);
    const double cap = std::ceil(100.0 * std::numbers::e * nn * std::log(nn));
    return std::max<std::uint64_t>(1000, static_cast<std::uint64_t>(cap));
}

bool is_steady_state(Variant v) noexcept { return v != Variant::OneLambdaLambdaSelfAdjusting; }

void AlgorithmConfig::validate() const {
    if (n < 1) throw ContractViolation("problem size n must be at least 1");
    if (!(c > 0.0)) throw ContractViolation("mutation constant c must be positive");
    if (c > static_cast<double>(n)) throw ContractViolation("mutation constant c must not exceed n");
    if (mu < 1) throw ContractViolation("population size mu must be at least 1");
    switch (variant) {
    case Variant::OnePlusOneEA:
    case Variant::OneLambdaLambdaSelfAdjusting:
        if (mu != 1) throw ContractViolation(std::string(to_string(variant)) + " requires mu = 1");
        break;
    case Variant::TwoPlusOneGreedyS:
        if (mu != 2) throw ContractViolation("two-plus-one-greedy-s requires mu = 2");
        break;
    default:
        break;
    }
}

std::uint64_t AlgorithmConfig::evaluation_cap() const {
    return max_evaluations > 0 ? max_evaluations : default_max_evaluations(n);
}

std::string_view to_string(Variant v) noexcept {
    for (const auto& [key, name] : kVariantNames)
        if (key == v) return name;
    return "unknown";
}

std::string_view to_string(ParentSelection p) noexcept {
    for (const auto& [key, name] : kSelectionNames)
        if (key == p) return name;
    return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
    for (const auto& [key, label] : kVariantNames)
        if (label == name) return key;
    return std::nullopt;
}

std::optional<ParentSelection> parse_selection(std::string_view name) noexcept {
    for (const auto& [key, label] : kSelectionNames)
        if (label == name) return key;
    return std::nullopt;
}

std::string display_name(const AlgorithmConfig& cfg) {
    const std::string mu = std::to_string(cfg.mu);
    std::string base;
    switch (cfg.variant) {
    case Variant::OnePlusOneEA: base = "(1+1) EA"; break;
    case Variant::MuPlusOneEA: base = "(" + mu + "+1) EA"; break;
    case Variant::MuPlusOneGA: base = "(" + mu + "+1) GA"; break;
    case Variant::TwoPlusOneGreedyS: base = "(2+1)_S GA"; break;
    case Variant::SudholtDiversity: base = "Sudholt (" + mu + "+1) GA"; break;
    case Variant::SudholtDiversityGreedySelection:
        base = "Sudholt greedy selection (" + mu + "+1) GA";
        break;
    case Variant::SudholtDiversityGreedySelectionGreedyXO:
        base = "Sudholt greedy selection + greedy XO (" + mu + "+1) GA";
        break;
    case Variant::OneLambdaLambdaSelfAdjusting: base = "self-adjusting (1+(lambda;lambda)) GA"; break;
    }
    if (cfg.parent_selection != ParentSelection::Uniform && cfg.variant != Variant::TwoPlusOneGreedyS &&
        cfg.variant != Variant::SudholtDiversityGreedySelection &&
        cfg.variant != Variant::SudholtDiversityGreedySelectionGreedyXO)
        base += " [" + std::string(to_string(cfg.parent_selection)) + "]";
    return base;
}

} // namespace ssga::ga
