#include "ssga/markov/chain.hpp"

#include <cmath>
#include <random>
#include <string>

namespace ssga::markov {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

// Number of steps spent in a state left with probability `leave`, including
// the step that leaves it.
std::uint64_t holding_time(double leave, Rng& rng) {
    if (leave >= 1.0) return 1;
    return 1 + std::geometric_distribution<std::uint64_t>(leave)(rng);
}

} // namespace

void MarkovParams::validate() const {
    if (!is_probability(p_m) || !is_probability(p_d) || !is_probability(p_c) || !is_probability(p_r))
        throw RejectedInput("transition probabilities must lie in [0, 1]");
    constexpr double slack = 1e-12;
    if (p_m + p_d > 1.0 + slack) throw RejectedInput("p_m + p_d must not exceed 1");
    if (p_c + p_r > 1.0 + slack) throw RejectedInput("p_c + p_r must not exceed 1");
}

AbsorbingTimes absorbing_times(const MarkovParams& params) {
    params.validate();
    const double den = params.denominator();
    if (!(den > 0.0)) throw InfiniteExpectation("absorbing state is not reached with probability 1");
    return {(params.p_c + params.p_r + params.p_d) / den, (params.p_m + params.p_r + params.p_d) / den};
}

bool dominance_check(const MarkovParams& m, const MarkovParams& mp) noexcept {
    return m.p_m < m.p_c && mp.p_d <= m.p_d && mp.p_r >= m.p_r && mp.p_c <= m.p_c && mp.p_m <= m.p_m;
}

double relaxed_upper_bound(const MarkovParams& params) {
    params.validate();
    const double den = params.denominator();
    if (!(den > 0.0) || !(params.p_c > 0.0))
        throw InfiniteExpectation("relaxed bound needs a positive denominator and p_c > 0");
    return (params.p_c + params.p_r) / den + 1.0 / params.p_c;
}

SampleEstimate simulate_chain(const MarkovParams& params, ChainState start, Rng& rng,
                              std::uint64_t episodes) {
    params.validate();
    if (episodes < 1) throw RejectedInput("simulate_chain needs at least one episode");
    // Absorption may be certain from one start state but not the other.
    const bool s2_absorbs = params.p_c > 0.0 || (params.p_r > 0.0 && params.p_m > 0.0);
    const bool s1_absorbs =
        params.p_m > 0.0 ? (params.p_d == 0.0 || s2_absorbs) : (params.p_d > 0.0 && params.p_c > 0.0);
    if (!(start == ChainState::S1 ? s1_absorbs : s2_absorbs))
        throw InfiniteExpectation("absorbing state is not reached with probability 1");

    const double leave_s1 = params.p_m + params.p_d;
    const double leave_s2 = params.p_c + params.p_r;
    const double absorb_from_s1 = leave_s1 > 0.0 ? params.p_m / leave_s1 : 0.0;
    const double absorb_from_s2 = leave_s2 > 0.0 ? params.p_c / leave_s2 : 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Welford accumulation of the per-episode absorption times.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t e = 0; e < episodes; ++e) {
        ChainState state = start;
        std::uint64_t steps = 0;
        for (;;) {
            const bool in_s1 = state == ChainState::S1;
            steps += holding_time(in_s1 ? leave_s1 : leave_s2, rng);
            if (steps > kEpisodeStepBudget)
                throw ChainBudgetExceeded("episode exceeded " + std::to_string(kEpisodeStepBudget) +
                                          " steps; chain is close to reducible");
            if (unit(rng) < (in_s1 ? absorb_from_s1 : absorb_from_s2)) break;
            state = in_s1 ? ChainState::S2 : ChainState::S1;
        }
        const double x = static_cast<double>(steps);
        const double delta = x - mean;
        mean += delta / static_cast<double>(e + 1);
        m2 += delta * (x - mean);
    }

    SampleEstimate out;
    out.mean = mean;
    out.episodes = episodes;
    if (episodes > 1) {
        const double var = m2 / static_cast<double>(episodes - 1);
        out.std_error = std::sqrt(var / static_cast<double>(episodes));
    }
    return out;
}

} // namespace ssga::markov
