#include "ssga/markov/transition_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ssga/ga/algorithms.hpp"

namespace ssga::markov {

namespace {

void require_level(std::size_t n, std::size_t i) {
    if (n < 1 || i >= n) throw RejectedInput("level i must satisfy 0 <= i < n");
}

// Lower bounds shared by every mu >= 2.
MarkovParams forward_bounds(std::size_t mu, double c, std::size_t n, std::size_t i) {
    const double nn = static_cast<double>(n);
    const double ii = static_cast<double>(i);
    const double m = static_cast<double>(mu);
    const double q = 1.0 - c / nn;
    MarkovParams out;
    out.p_d = (m / (m + 1.0)) * (ii * (nn - ii) * c * c / (nn * nn)) * std::pow(q, nn - 2.0);
    out.p_c = ((m - 1.0) / (2.0 * m * m)) * std::pow(q, nn);
    out.p_m = (c * (nn - ii) / nn) * std::pow(q, nn - 1.0);
    return out;
}

double binomial_stderr(double p, std::uint64_t samples) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

} // namespace

std::string_view to_string(AsymptoticMode mode) noexcept {
    return mode == AsymptoticMode::LeadingOrder ? "leading-order" : "conservative";
}

double remainder_over_n(AsymptoticMode mode, std::size_t n) noexcept {
    return mode == AsymptoticMode::LeadingOrder ? 0.0 : kConservativeKappa / static_cast<double>(n);
}

MarkovParams transition_bounds_mu3(std::size_t mu, double c, std::size_t n, std::size_t i,
                                   AsymptoticMode mode) {
    if (mu < 3) throw RejectedInput("transition_bounds_mu3 needs mu >= 3; use transition_bounds_mu2");
    if (!(c > 0.0)) throw RejectedInput("mutation constant c must be positive");
    require_level(n, i);
    MarkovParams out = forward_bounds(mu, c, n, i);
    const double m = static_cast<double>(mu);
    const double relapse = (m - 1.0) * (2.0 * m - 1.0) / (2.0 * std::exp(c) * m * m * (m + 1.0));
    out.p_r = std::min(relapse + remainder_over_n(mode, n), 1.0 - out.p_c);
    return out;
}

MarkovParams transition_bounds_mu2(double c, std::size_t n, std::size_t i, AsymptoticMode mode) {
    if (!(c > 0.0)) throw RejectedInput("mutation constant c must be positive");
    require_level(n, i);
    MarkovParams out = forward_bounds(2, c, n, i);
    const double relapse = 5.0 / (24.0 * std::exp(c));
    out.p_r = std::min(relapse + remainder_over_n(mode, n), 1.0 - out.p_c);
    return out;
}

TransitionFrequencies estimate_transition_frequencies(std::size_t mu, double c, std::size_t n,
                                                      std::size_t i, std::uint64_t samples, Rng& rng) {
    if (mu < 2) throw RejectedInput("transition frequencies need mu >= 2");
    if (i < 1 || i >= n) throw RejectedInput("level i must satisfy 1 <= i < n");
    if (samples < 1) throw RejectedInput("need at least one sample");

    ga::AlgorithmConfig cfg;
    cfg.variant = ga::Variant::MuPlusOneGA;
    cfg.n = n;
    cfg.mu = mu;
    cfg.c = c;

    // Majority genotype: ones in the first i positions. Minority: one 1-bit
    // moved into a 0-position, same level, Hamming distance 2.
    ga::Genome majority(n);
    for (std::size_t b = 0; b < i; ++b) majority.flip(b);
    ga::Genome minority = majority;
    minority.flip(0);
    minority.flip(i);

    std::uint64_t improved_s1 = 0;
    std::uint64_t diverse_s1 = 0;
    std::uint64_t improved_s2 = 0;
    std::uint64_t relapsed_s2 = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        {
            auto state = ga::initialize_with(cfg, std::vector<ga::Genome>(mu, majority));
            ga::step_mu_plus_one_ga(state, rng);
            if (state.population.best_fitness() > i)
                ++improved_s1;
            else if (state.population.distinct_best() >= 2 && state.population.worst_fitness() == i)
                ++diverse_s1;
        }
        {
            std::vector<ga::Genome> members(mu - 1, majority);
            members.push_back(minority);
            auto state = ga::initialize_with(cfg, std::move(members));
            ga::step_mu_plus_one_ga(state, rng);
            if (state.population.best_fitness() > i)
                ++improved_s2;
            else if (state.population.distinct_best() == 1 && state.population.worst_fitness() == i)
                ++relapsed_s2;
        }
    }

    const auto freq = [&](std::uint64_t k) { return static_cast<double>(k) / static_cast<double>(samples); };
    TransitionFrequencies out;
    out.samples = samples;
    out.estimate = {freq(improved_s1), freq(diverse_s1), freq(improved_s2), freq(relapsed_s2)};
    out.std_error = {binomial_stderr(out.estimate.p_m, samples), binomial_stderr(out.estimate.p_d, samples),
                     binomial_stderr(out.estimate.p_c, samples), binomial_stderr(out.estimate.p_r, samples)};
    return out;
}

} // namespace ssga::markov
