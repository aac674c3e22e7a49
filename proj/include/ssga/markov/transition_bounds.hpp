#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ssga/markov/chain.hpp"
#include "ssga/rng.hpp"

namespace ssga::markov {

/// How O(1/n) and O(1/log n) remainders are turned into numbers.
enum class AsymptoticMode {
    LeadingOrder, ///< remainder = 0
    Conservative, ///< remainder = kappa / n (or kappa / ln n), an explicit overshoot
};

inline constexpr double kConservativeKappa = 16.0;

std::string_view to_string(AsymptoticMode mode) noexcept;

/// Remainder term kappa/n in the given mode.
double remainder_over_n(AsymptoticMode mode, std::size_t n) noexcept;

/// Bound-side chain parameters of the (mu+1) GA on level i, mu >= 3.
///
/// p_d, p_c, p_m are lower bounds with the (1 - c/n)^k factors kept exact;
/// p_r is the upper bound (mu-1)(2mu-1) / (2 e^c mu^2 (mu+1)) plus the mode's
/// remainder, capped so that p_c + p_r <= 1.
MarkovParams transition_bounds_mu3(std::size_t mu, double c, std::size_t n, std::size_t i,
                                   AsymptoticMode mode = AsymptoticMode::LeadingOrder);

/// Same for mu = 2, where the relapse bound is 5 / (24 e^c) plus remainder.
MarkovParams transition_bounds_mu2(double c, std::size_t n, std::size_t i,
                                   AsymptoticMode mode = AsymptoticMode::LeadingOrder);

/// Empirical one-generation transition frequencies of the real (mu+1) GA on
/// level i. p_m and p_d start from mu copies of one level-i genome; p_c and
/// p_r start from mu-1 copies plus one level-i genome at Hamming distance 2.
struct TransitionFrequencies {
    MarkovParams estimate;
    MarkovParams std_error;
    std::uint64_t samples = 0;
};

TransitionFrequencies estimate_transition_frequencies(std::size_t mu, double c, std::size_t n,
                                                      std::size_t i, std::uint64_t samples, Rng& rng);

} // namespace ssga::markov
