#pragma once

#include <cstdint>
#include <stdexcept>

#include "ssga/rng.hpp"

namespace ssga::markov {

/// Expected absorption time is infinite (zero denominator).
class InfiniteExpectation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Input rejected by a validity check (probabilities, viability condition).
class RejectedInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Simulation exceeded its per-episode step budget.
class ChainBudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Transition probabilities of the per-level chain
///
///   S1 --p_d--> S2,  S1 --p_m--> S3,  S2 --p_c--> S3,  S2 --p_r--> S1
///
/// S1: all members identical; S2: at least two genotypes on the level;
/// S3: a better level was found (absorbing).
struct MarkovParams {
    double p_m = 0.0;
    double p_d = 0.0;
    double p_c = 0.0;
    double p_r = 0.0;

    /// Throws RejectedInput unless every value lies in [0, 1],
    /// p_m + p_d <= 1 and p_c + p_r <= 1.
    void validate() const;

    /// p_c p_d + p_c p_m + p_m p_r; absorption is certain iff positive.
    double denominator() const noexcept { return p_c * p_d + p_c * p_m + p_m * p_r; }
};

struct AbsorbingTimes {
    double from_s1 = 0.0;
    double from_s2 = 0.0;
};

/// Closed-form expected absorption times from S1 and from S2.
AbsorbingTimes absorbing_times(const MarkovParams& params);

/// True iff M and M' satisfy p_m < p_c, p_d' <= p_d, p_r' >= p_r,
/// p_c' <= p_c and p_m' <= p_m, so E_T1(M') bounds M's absorption time.
bool dominance_check(const MarkovParams& m, const MarkovParams& m_prime) noexcept;

/// (p_c + p_r) / denominator + 1 / p_c, the relaxed bound on E_T1.
double relaxed_upper_bound(const MarkovParams& params);

enum class ChainState { S1, S2 };

struct SampleEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t episodes = 0;
};

inline constexpr std::uint64_t kEpisodeStepBudget = 1'000'000'000;

/// Monte-Carlo estimate of the absorption time from `start`.
///
/// Holding times are drawn as geometric variables, so one episode costs
/// O(number of S1/S2 switches) rather than O(steps).
SampleEstimate simulate_chain(const MarkovParams& params, ChainState start, Rng& rng,
                              std::uint64_t episodes);

} // namespace ssga::markov
