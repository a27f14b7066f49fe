#include "ppav/stratum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ppav/errors.hpp"
#include "ppav/parallel.hpp"

namespace ppav {

std::string to_string(Certificate c) { return c == Certificate::certified ? "certified" : "unknown"; }

void require_simple_ordinary(const IsogenyClassSpec& spec) {
    if (spec.n > 2) throw UnsupportedDegree("only dimensions 1 and 2 are supported here");
    if (!is_simple(spec.f)) throw NotWeil("Weil polynomial is reducible, so the class is not simple");
    if (!is_ordinary(spec.f, spec.q)) throw NotWeil("isogeny class is not ordinary");
}

namespace {

Integer ratio_from_g(const IntPoly& g, const Integer& q) {
    const IntPoly shift{Integer(-4 * q), Integer(0), Integer(1)};
    return abs(resultant(g, shift)) * abs(resultant(g, g.derivative()));
}

}  // namespace

Integer disc_ratio_exact(const IsogenyClassSpec& spec) {
    if (spec.n < 1 || spec.n > 2) throw UnsupportedDegree("discriminant ratio needs n <= 2");
    return ratio_from_g(spec.g, spec.q);
}

double disc_ratio_trig(const IsogenyClassSpec& spec) {
    const int n = spec.n;
    const auto& th = spec.angles_ld;
    long double v = std::pow(2.0L, n * (n + 1) / 2.0L) *
                    std::pow(static_cast<long double>(to_double(spec.q)), n * (n + 1) / 4.0L);
    for (int i = 0; i < n; ++i) {
        v *= std::sin(th[i]);
        for (int j = i + 1; j < n; ++j) v *= std::cos(th[i]) - std::cos(th[j]);
    }
    return static_cast<double>(v * v);
}

double h_minus_estimate(const IsogenyClassSpec& spec) {
    return std::sqrt(to_double(disc_ratio_exact(spec)));
}

std::vector<StratumCount> ec_stratum_counts(const Integer& t, const Integer& q) {
    if (t * t >= 4 * q) throw DomainError("trace must satisfy t^2 < 4q");
    if (gcd(t, q) != 1) throw DomainError("trace must be coprime to q for an ordinary class");
    const auto dd = decompose_discriminant(t * t - 4 * q);
    std::vector<StratumCount> out;
    for (const auto& f : divisors(factorize(dd.conductor)))
        out.push_back({f, class_number_by_formula(dd.delta0, f)});
    return out;
}

RealQuadraticData real_quadratic_data(const IsogenyClassSpec& spec) {
    if (spec.n != 2) throw DomainError("real quadratic data needs n = 2");
    const Integer c0 = spec.g[0], c1 = spec.g[1];
    const Integer dg = c1 * c1 - 4 * c0;
    if (dg <= 0 || is_square(dg))
        throw DomainError("real Weil polynomial does not define a real quadratic field");
    RealQuadraticData r;
    r.radicand = squarefree_radicand(dg);
    r.field_disc = mod_floor(r.radicand, Integer(4)) == 1 ? r.radicand : Integer(4 * r.radicand);
    r.conductor = isqrt(dg / r.field_disc);
    if (r.conductor * r.conductor * r.field_disc != dg)
        throw InternalError("disc(g) is not a square times the field discriminant");
    const Integer s = isqrt(dg / r.radicand);
    r.alpha = {make_rational(-c1, 2), make_rational(s, 2), r.radicand};
    r.delta = r.alpha * r.alpha - QuadElement{Rational(4 * spec.q), Rational(0), r.radicand};
    return r;
}

namespace {

// Rational primes below which (delta) has a prime ideal of odd valuation.
std::vector<Integer> odd_valuation_primes(const Integer& radicand, const QuadElement& delta) {
    if (delta.a == 0 && delta.b == 0) throw DomainError("delta = alpha^2 - 4q vanishes");
    std::vector<Integer> out;
    for (const auto& f : factor_element_ideal(radicand, delta))
        if (f.valuation % 2 == 1 && (out.empty() || out.back() != f.prime.ell))
            out.push_back(f.prime.ell);
    return out;
}

std::vector<Integer> odd_valuation_primes(const Integer& n) {
    std::vector<Integer> out;
    for (const auto& [p, e] : factorize(abs(n)))
        if (e % 2 == 1) out.push_back(p);
    return out;
}

std::vector<Integer> odd_valuation_primes(const IsogenyClassSpec& spec) {
    if (spec.n == 1) return odd_valuation_primes(Integer(spec.f[1] * spec.f[1] - 4 * spec.q));
    const auto rq = real_quadratic_data(spec);
    return odd_valuation_primes(rq.radicand, rq.delta);
}

}  // namespace

Certificate odd_ramification_certificate(const Integer& radicand, const QuadElement& delta) {
    for (const auto& ell : odd_valuation_primes(radicand, delta))
        if (ell != 2) return Certificate::certified;
    return Certificate::unknown;
}

Certificate odd_ramification_certificate(const IsogenyClassSpec& spec) {
    for (const auto& ell : odd_valuation_primes(spec))
        if (ell != 2) return Certificate::certified;
    return Certificate::unknown;
}

Certificate surjectivity_certificate(const IsogenyClassSpec& spec) {
    // For n = 1 the target is the narrow Picard group of Z, which is trivial.
    if (spec.n == 1) return Certificate::certified;
    const auto rq = real_quadratic_data(spec);
    // An odd valuation of delta at P forces K/K+ to ramify at P, in any
    // residue characteristic.
    for (const auto& ell : odd_valuation_primes(rq.radicand, rq.delta))
        if (rq.conductor % ell != 0) return Certificate::certified;
    return Certificate::unknown;
}

HeavyClass find_heavy_isogeny_class(const Integer& m, const Integer& delta0, std::int64_t limit,
                                    unsigned threads) {
    if (m < 2) throw DomainError("find_heavy needs m >= 2");
    if (delta0 >= -4 || !is_fundamental_discriminant(delta0))
        throw DomainError("find_heavy needs a fundamental discriminant below -4");
    if (limit < 1) throw DomainError("search limit must be positive");
    const Integer n = m * m * abs(delta0);
    for (std::int64_t y = 1; y <= limit; ++y) {
        const Integer ny2 = n * y * y;
        const auto hits = parallel_map(
            static_cast<std::size_t>(limit),
            [&](std::size_t i) {
                const Integer x(static_cast<long>(i + 1));
                return is_prime(x * x + ny2);
            },
            threads);
        const auto it = std::find(hits.begin(), hits.end(), true);
        if (it == hits.end()) continue;
        HeavyClass h;
        h.x = static_cast<long>(it - hits.begin()) + 1;
        h.y = static_cast<long>(y);
        h.p = h.x * h.x + ny2;
        h.t = 2 * h.x;
        h.delta = h.t * h.t - 4 * h.p;
        h.conductor = decompose_discriminant(h.delta).conductor;
        if (h.conductor % m != 0) throw InternalError("m does not divide the conductor");
        const auto hb = h_over_H_bound(h.delta);
        h.ratio = hb.ratio;
        h.bound = hb.bound;
        return h;
    }
    throw SearchLimitError("no prime x^2 + " + to_string(n) + " y^2 with x, y <= " +
                           std::to_string(limit));
}

Family parse_family(const std::string& name) {
    if (name == "small") return Family::small;
    if (name == "smaller") return Family::smaller;
    if (name == "smallest") return Family::smallest;
    throw DomainError("unknown family '" + name + "' (expected small, smaller or smallest)");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::small: return "small";
        case Family::smaller: return "smaller";
        case Family::smallest: return "smallest";
    }
    return "?";
}

// (a+1)^2 < p, largest such a.
Integer family_a(const Integer& p) { return isqrt(p - 1) - 1; }

// (c+1)^2 < 4p, largest such c.
Integer family_c(const Integer& p) { return isqrt(4 * p - 1) - 1; }

IntPoly family_polynomial(Family family, const Integer& p) {
    const Integer p2 = p * p;
    switch (family) {
        case Family::small: {
            const Integer a = family_a(p);
            return IntPoly{p2, Integer(-2 * a * p), Integer(a * a + p), Integer(-2 * a), Integer(1)};
        }
        case Family::smaller:
            return IntPoly{p2, p, Integer(2 * p - 1), Integer(1), Integer(1)};
        case Family::smallest: {
            const Integer c = family_c(p);
            const Integer e = 1 - 2 * c;
            return IntPoly{p2, Integer(p * e), Integer(2 * p + c * c - c - 1), e, Integer(1)};
        }
    }
    throw InternalError("unknown family");
}

FamilyMember example_family(Family family, const Integer& p) {
    if (mod_floor(p, Integer(8)) != 7 || !is_prime(p))
        throw DomainError("family members need a prime p = 7 mod 8, got " + to_string(p));
    FamilyMember m;
    m.family = family;
    m.p = p;
    m.parameter = family == Family::small      ? family_a(p)
                  : family == Family::smallest ? family_c(p)
                                               : Integer(0);
    m.f = family_polynomial(family, p);
    m.weil = is_weil(m.f, p);
    m.ordinary = is_ordinary(m.f, p);
    m.simple = is_simple(m.f);
    if (!m.weil) return m;
    m.ratio = ratio_from_g(real_weil_polynomial(m.f, p), p);
    switch (family) {
        case Family::small: {
            // 32 p^{5/2} < ratio < 144 p^{5/2}, squared.
            const Integer p5 = pow(p, 5UL), r2 = m.ratio * m.ratio;
            m.bound_checked = true;
            m.bound_holds = 1024 * p5 < r2 && r2 < 20736 * p5;
            break;
        }
        case Family::smaller:
            m.bound_checked = true;
            m.bound_holds = m.ratio == 5 * (16 * p * p - 12 * p + 1);
            break;
        case Family::smallest:
            if (p > 144) {
                m.bound_checked = true;
                m.bound_holds = 75 * p < m.ratio && m.ratio < 400 * p;
            }
            break;
    }
    return m;
}

std::vector<FamilyMember> family_sweep(Family family, const Integer& pmax, bool fail_fast,
                                       unsigned threads) {
    std::vector<Integer> primes;
    for (Integer p = 7; p < pmax; p += 8)
        if (is_prime(p)) primes.push_back(p);
    auto members = parallel_map(
        primes.size(), [&](std::size_t i) { return example_family(family, primes[i]); }, threads);
    if (fail_fast) {
        const auto bad =
            std::find_if(members.begin(), members.end(), [](const FamilyMember& m) { return !m.ok(); });
        if (bad != members.end()) members.erase(bad + 1, members.end());
    }
    return members;
}

StratumReport analyze(const IsogenyClassSpec& spec) {
    require_simple_ordinary(spec);
    const FieldPtr field = make_cm_field(spec.f, spec.q);
    StratumReport r(spec, minimal_order(field));
    r.convenience = convenient_certificate(r.minimal_order);
    r.ratio_exact = disc_ratio_exact(spec);
    r.ratio_trig = disc_ratio_trig(spec);
    r.odd_ramified = odd_ramification_certificate(spec);
    r.surjectivity = surjectivity_certificate(spec);
    if (spec.n == 1) {
        const Integer t = -spec.f[1];
        r.strata = ec_stratum_counts(t, spec.q);
        // Z[pi] has the full conductor, the last divisor.
        r.exact_count = r.strata.back().count;
        Integer total = 0;
        for (const auto& s : r.strata) total += s.count;
        r.isogeny_class_total = total;
        r.real_conductor = 1;
        r.unit_index_real = 1;
        r.norm_unit_index = "1";
        r.polarizations_per_variety = Integer(1);
        return r;
    }
    r.estimate = h_minus_estimate(spec);
    const auto rq = real_quadratic_data(spec);
    r.real_conductor = rq.conductor;
    const Integer dg = spec.g[1] * spec.g[1] - 4 * spec.g[0];
    r.unit_index_real = fundamental_unit(dg).norm == -1 ? 1 : 2;
    const bool odd = r.odd_ramified == Certificate::certified;
    r.norm_unit_index = odd ? "1" : "1 or 2";
    if (r.unit_index_real == 1)
        r.polarizations_per_variety = Integer(1);
    else if (odd)
        r.polarizations_per_variety = Integer(2);
    return r;
}

std::vector<TrendSample> estimator_trend_samples(std::size_t count, double lo, double hi,
                                                 std::uint64_t seed, unsigned threads) {
    if (!(lo >= 4 && hi > lo)) throw DomainError("trend range must satisfy 4 <= lo < hi");
    std::mt19937_64 rng(seed);
    std::vector<Integer> starts;
    const double span = std::log(hi / lo);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        starts.emplace_back(std::floor(lo * std::exp(span * u)));
    }
    return parallel_map(
        count,
        [&](std::size_t i) {
            Integer d = starts[i];
            while (!is_fundamental_discriminant(Integer(-d))) ++d;
            TrendSample s;
            s.delta = -d;
            s.h = class_number_imaginary(s.delta);
            s.log_ratio = std::log(to_double(s.h)) / (0.5 * std::log(to_double(d)));
            return s;
        },
        threads);
}

double median_log_ratio(const std::vector<TrendSample>& samples) {
    if (samples.empty()) throw DomainError("median of an empty sample");
    std::vector<double> v;
    for (const auto& s : samples) v.push_back(s.log_ratio);
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

}  // namespace ppav
