#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ssga/markov/transition_bounds.hpp"

namespace ssga::markov {

enum class BoundKind { Upper, Upper2Plus1, Lower, Takeover };

std::string_view to_string(BoundKind kind) noexcept;

/// Evaluated closed-form runtime bound. Logarithms are natural.
struct BoundReport {
    BoundKind kind = BoundKind::Upper;
    std::optional<std::size_t> mu;
    double c = 1.0;
    std::optional<std::size_t> n;
    AsymptoticMode mode = AsymptoticMode::LeadingOrder;
    double leading_term_value = 0.0;
    /// leading_term_value / (n ln n); unset for the takeover bound.
    std::optional<double> coefficient;
    /// Lower-order term kept symbolic, e.g. "O(n log log n)". Never a number.
    std::string remainder;
    std::vector<double> per_level_values;
};

/// Serializes as {kind, mu, c, n, mode, leading_term_value, ...}; mu and n
/// are null when the bound does not depend on them.
nlohmann::json to_json(const BoundReport& report);

/// 3 e^c / (c (3 + c)).
double upper_bound_coefficient(double c);

/// Leading term 3 e^c n ln n / (c (3 + c)) for the (mu+1) GA, mu >= 3.
/// With per_level set, also reports e^c n / (c (n - i)) * 3 / (3 + c), i = 0..n-1.
BoundReport upper_runtime_bound(std::size_t mu, double c, std::size_t n, bool per_level = false,
                                 AsymptoticMode mode = AsymptoticMode::LeadingOrder);

/// Leading term 4 e^c n ln n / (c (c + 4)) for the (2+1) GA.
BoundReport upper_bound_2plus1(double c, std::size_t n, AsymptoticMode mode = AsymptoticMode::LeadingOrder);

/// max over 1 <= k <= n of c^k / (k!)^2.
double lower_bound_peak_term(double c, std::size_t n);

/// Leading term 3 e^c n ln n / (c (3 + y)) of the (2+1)_S GA lower bound.
BoundReport lower_runtime_bound(double c, std::size_t n, AsymptoticMode mode = AsymptoticMode::LeadingOrder);

/// Minimizer of e^c / (c (3 + c)) over (0, 4], i.e. (sqrt 13 - 1) / 2.
double optimal_mutation_constant();

/// 2 (e^c + 1) mu H_{mu-1}: generations for a new best level to take over
/// the whole population (0 for mu = 1).
double takeover_bound(std::size_t mu, double c);

BoundReport takeover_report(std::size_t mu, double c);

} // namespace ssga::markov
