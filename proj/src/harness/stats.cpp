#include "ssga/harness/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace ssga::harness {

StatsSummary summarize(std::span<const double> values, std::uint64_t capped_count) {
    StatsSummary s;
    s.count = values.size();
    s.capped_count = capped_count;
    if (values.empty()) {
        s.mean = s.std_dev = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    double total = 0.0;
    for (double v : values) total += v;
    s.mean = total / static_cast<double>(values.size());
    if (values.size() == 1) return s;
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    return s;
}

StatsSummary normalize(const StatsSummary& a, const StatsSummary& b) {
    if (!(b.mean > 0.0)) throw std::invalid_argument("baseline mean must be positive");
    StatsSummary out = a;
    out.normalized_mean = a.mean / b.mean;
    out.normalized_std = a.std_dev / b.mean;
    return out;
}

WelchResult welch_t_test(const StatsSummary& a, const StatsSummary& b) {
    if (a.count < 2 || b.count < 2) throw std::invalid_argument("Welch's t-test needs two samples of size >= 2");
    const double na = static_cast<double>(a.count);
    const double nb = static_cast<double>(b.count);
    const double va = a.std_dev * a.std_dev / na;
    const double vb = b.std_dev * b.std_dev / nb;
    WelchResult r;
    if (va + vb == 0.0) {
        // Both samples constant: the ordering is exact.
        r.t = a.mean < b.mean ? -std::numeric_limits<double>::infinity()
                              : (a.mean > b.mean ? std::numeric_limits<double>::infinity() : 0.0);
        r.df = na + nb - 2.0;
        r.p_less = a.mean < b.mean ? 0.0 : 1.0;
        r.p_two_sided = a.mean == b.mean ? 1.0 : 0.0;
        return r;
    }
    r.t = (a.mean - b.mean) / std::sqrt(va + vb);
    r.df = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    const boost::math::students_t dist(r.df);
    r.p_less = boost::math::cdf(dist, r.t);
    r.p_two_sided = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t)));
    return r;
}

double chi_squared_upper_tail(double statistic, double df) {
    if (!(df > 0.0)) throw std::invalid_argument("degrees of freedom must be positive");
    if (statistic <= 0.0) return 1.0;
    return boost::math::cdf(boost::math::complement(boost::math::chi_squared(df), statistic));
}

} // namespace ssga::harness
