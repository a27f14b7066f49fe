#include "ppav/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "ppav/errors.hpp"
#include "ppav/parallel.hpp"
#include "ppav/quadratic.hpp"

namespace ppav {

namespace {

// Sign-aware test of L * 2 sqrt(p) <= R.
bool scaled_root_le(const Integer& L, const Integer& p, const Integer& R) {
    if (L <= 0 && R >= 0) return true;
    if (L >= 0 && R < 0) return false;
    const Integer lhs = 4 * p * L * L, rhs = R * R;
    return L >= 0 ? lhs <= rhs : lhs >= rhs;
}

}  // namespace

std::vector<CensusRow> enumerate_ec(const Integer& p, unsigned threads) {
    if (p < 5 || !is_prime(p)) throw DomainError("census needs a prime p >= 5");
    const Integer tmax = isqrt(4 * p - 1);  // t^2 < 4p
    std::vector<Integer> traces;
    for (Integer t = -tmax; t <= tmax; ++t)
        if (t != 0 && t % p != 0) traces.push_back(t);
    const double two_sqrt_p = 2.0 * std::sqrt(to_double(p));
    return parallel_map(
        traces.size(),
        [&](std::size_t i) {
            const Integer& t = traces[i];
            CensusRow r;
            r.t = t;
            r.delta = t * t - 4 * p;
            r.H = kronecker_class_number(r.delta);
            r.normalized_trace = to_double(t) / two_sqrt_p;
            return r;
        },
        threads);
}

int trace_bin(const Integer& t, const Integer& p, int bins) {
    if (bins < 1) throw DomainError("need at least one bin");
    int k = 0;
    while (k + 1 < bins && scaled_root_le(Integer(2 * (k + 1) - bins), p, Integer(bins * t))) ++k;
    return k;
}

double semicircle_mass(double a, double b) {
    auto F = [](double x) {
        x = std::clamp(x, -1.0, 1.0);
        return (x * std::sqrt(1.0 - x * x) + std::asin(x)) / std::numbers::pi;
    };
    return F(b) - F(a);
}

CensusSummary summarize(const Integer& p, const std::vector<CensusRow>& rows, int bins) {
    if (rows.empty()) throw DomainError("census summary needs at least one row");
    if (bins < 1) throw DomainError("need at least one bin");
    CensusSummary s;
    s.p = p;
    s.class_count = static_cast<unsigned long>(rows.size());
    s.curve_total = 0;
    std::vector<Integer> mass(bins, Integer(0));
    for (const auto& r : rows) {
        s.curve_total += r.H;
        mass[trace_bin(r.t, p, bins)] += r.H;
    }
    s.tv_to_semicircle = 0;
    for (int k = 0; k < bins; ++k) {
        const double h = to_double(make_rational(mass[k], s.curve_total));
        const double lo = -1.0 + 2.0 * k / bins, hi = -1.0 + 2.0 * (k + 1) / bins;
        const double sc = semicircle_mass(lo, hi);
        s.histogram.push_back(h);
        s.semicircle.push_back(sc);
        s.tv_to_semicircle += std::fabs(h - sc);
    }
    s.tv_to_semicircle /= 2;
    s.predicted_class_count = 4.0 * (1.0 - 1.0 / to_double(p)) * std::sqrt(to_double(p));
    return s;
}

std::vector<MinusFraction> minus_fraction_scan(const Integer& p, unsigned threads) {
    const auto rows = enumerate_ec(p, threads);
    auto out = parallel_map(
        rows.size(),
        [&](std::size_t i) {
            const auto hb = h_over_H_bound(rows[i].delta);
            return MinusFraction{rows[i].t, rows[i].delta, hb.ratio, hb.bound};
        },
        threads);
    std::stable_sort(out.begin(), out.end(),
                     [](const MinusFraction& a, const MinusFraction& b) { return a.fraction < b.fraction; });
    return out;
}

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
    out << "t,delta,H,normalized_trace\n";
    char buf[40];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g", r.normalized_trace);
        out << to_string(r.t) << ',' << to_string(r.delta) << ',' << to_string(r.H) << ',' << buf << '\n';
    }
}

}  // namespace ppav
