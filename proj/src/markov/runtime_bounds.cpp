#include "ssga/markov/runtime_bounds.hpp"

#include <cmath>

namespace ssga::markov {

namespace {

void require_positive_c(double c) {
    if (!(c > 0.0)) throw RejectedInput("mutation constant c must be positive");
}

double n_log_n(std::size_t n) {
    const double nn = static_cast<double>(n);
    return nn * std::log(nn);
}

double objective(double c) { return std::exp(c) / (c * (3.0 + c)); }

} // namespace

std::string_view to_string(BoundKind kind) noexcept {
    switch (kind) {
    case BoundKind::Upper: return "upper_theorem2";
    case BoundKind::Upper2Plus1: return "upper_2plus1";
    case BoundKind::Lower: return "lower_theorem5";
    case BoundKind::Takeover: return "takeover_lemma3";
    }
    return "unknown";
}

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j["mu"] = r.mu ? nlohmann::json(*r.mu) : nlohmann::json(nullptr);
    j["c"] = r.c;
    j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
    j["mode"] = to_string(r.mode);
    j["leading_term_value"] = r.leading_term_value;
    if (r.coefficient) j["coefficient"] = *r.coefficient;
    if (!r.remainder.empty()) j["remainder"] = r.remainder;
    if (!r.per_level_values.empty()) j["per_level_values"] = r.per_level_values;
    return j;
}

double upper_bound_coefficient(double c) {
    require_positive_c(c);
    return 3.0 * objective(c);
}

BoundReport upper_runtime_bound(std::size_t mu, double c, std::size_t n, bool per_level,
                                 AsymptoticMode mode) {
    if (mu < 3) throw RejectedInput("the (mu+1) GA bound needs mu >= 3; use upper_bound_2plus1 for mu = 2");
    if (n < 2) throw RejectedInput("problem size must be at least 2");
    BoundReport r;
    r.kind = BoundKind::Upper;
    r.mu = mu;
    r.c = c;
    r.n = n;
    r.mode = mode;
    r.coefficient = upper_bound_coefficient(c);
    r.leading_term_value = *r.coefficient * n_log_n(n);
    r.remainder = "O(n mu log mu)";
    if (per_level) {
        const double nn = static_cast<double>(n);
        r.per_level_values.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            r.per_level_values.push_back(std::exp(c) * nn / (c * (nn - static_cast<double>(i))) * 3.0 /
                                         (3.0 + c));
    }
    return r;
}

BoundReport upper_bound_2plus1(double c, std::size_t n, AsymptoticMode mode) {
    require_positive_c(c);
    if (n < 2) throw RejectedInput("problem size must be at least 2");
    BoundReport r;
    r.kind = BoundKind::Upper2Plus1;
    r.mu = 2;
    r.c = c;
    r.n = n;
    r.mode = mode;
    r.coefficient = 4.0 * std::exp(c) / (c * (c + 4.0));
    r.leading_term_value = *r.coefficient * n_log_n(n);
    r.remainder = "o(n log n)";
    return r;
}

double lower_bound_peak_term(double c, std::size_t n) {
    require_positive_c(c);
    if (n < 1) throw RejectedInput("problem size must be at least 1");
    // t_k = t_{k-1} * c / k^2; once k^2 > c the sequence only decreases.
    double term = c;
    double peak = c;
    for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        term *= c / (kk * kk);
        peak = std::max(peak, term);
        if (kk * kk > c) break;
    }
    return peak;
}

BoundReport lower_runtime_bound(double c, std::size_t n, AsymptoticMode mode) {
    require_positive_c(c);
    if (n < 3) throw RejectedInput("problem size must be at least 3");
    const double y = lower_bound_peak_term(c, n);
    BoundReport r;
    r.kind = BoundKind::Lower;
    r.c = c;
    r.n = n;
    r.mode = mode;
    r.coefficient = 3.0 * std::exp(c) / (c * (3.0 + y));
    r.leading_term_value = *r.coefficient * n_log_n(n);
    r.remainder = "O(n log log n)";
    return r;
}

double optimal_mutation_constant() {
    double lo = 1e-9;
    double hi = 4.0;
    while (hi - lo > 1e-10) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (objective(m1) < objective(m2))
            hi = m2;
        else
            lo = m1;
    }
    return 0.5 * (lo + hi);
}

double takeover_bound(std::size_t mu, double c) {
    require_positive_c(c);
    if (mu < 1) throw RejectedInput("population size must be at least 1");
    const double m = static_cast<double>(mu);
    double total = 0.0;
    for (std::size_t k = 1; k < mu; ++k) total += 2.0 * (std::exp(c) + 1.0) * m / static_cast<double>(k);
    return total;
}

BoundReport takeover_report(std::size_t mu, double c) {
    if (mu < 2) throw RejectedInput("takeover report needs mu >= 2");
    BoundReport r;
    r.kind = BoundKind::Takeover;
    r.mu = mu;
    r.c = c;
    r.leading_term_value = takeover_bound(mu, c);
    return r;
}

} // namespace ssga::markov
