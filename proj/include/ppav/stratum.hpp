#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppav/arith.hpp"
#include "ppav/orders.hpp"
#include "ppav/quadratic.hpp"
#include "ppav/weil.hpp"

namespace ppav {

enum class Certificate { certified, unknown };
std::string to_string(Certificate c);

/// Throws NotWeil unless the class is simple and ordinary.
void require_simple_ordinary(const IsogenyClassSpec& spec);

/// |Delta_R / Delta_{R+}| for the minimal order, n <= 2:
/// |res(g, x^2 - 4q)| * |res(g, g')|, which is |t^2 - 4q| when n = 1.
Integer disc_ratio_exact(const IsogenyClassSpec& spec);

/// Square of 2^{n(n+1)/2} q^{n(n+1)/4} prod_{i<j}(cos t_i - cos t_j) prod sin t_i.
double disc_ratio_trig(const IsogenyClassSpec& spec);

/// sqrt(disc_ratio_exact). An order-of-magnitude stand-in for the minus
/// class number, not a count.
double h_minus_estimate(const IsogenyClassSpec& spec);

struct StratumCount {
    Integer conductor;
    Integer count;
};

/// Elliptic curves with trace t over F_q split by endomorphism ring: one
/// entry h(f^2 delta0) per f dividing the conductor, ascending in f.
std::vector<StratumCount> ec_stratum_counts(const Integer& t, const Integer& q);

/// K+ = Q(sqrt D) for n = 2, with alpha = pi + pi-bar written in it.
struct RealQuadraticData {
    Integer radicand;
    Integer field_disc;
    /// [O_{K+} : Z[alpha]].
    Integer conductor;
    QuadElement alpha;
    /// alpha^2 - 4q, whose square root generates K over K+.
    QuadElement delta;
};

RealQuadraticData real_quadratic_data(const IsogenyClassSpec& spec);

/// Certified when some prime of odd residue characteristic divides (delta)
/// to an odd power. Never certifies the absence of ramification.
Certificate odd_ramification_certificate(const Integer& radicand, const QuadElement& delta);
Certificate odd_ramification_certificate(const IsogenyClassSpec& spec);

/// Certified when K/K+ is visibly ramified (odd valuation of delta) at a
/// prime not dividing the conductor of Z[alpha].
Certificate surjectivity_certificate(const IsogenyClassSpec& spec);

struct HeavyClass {
    Integer x, y;
    Integer p, t, delta, conductor;
    Rational ratio, bound;
};

/// First prime p = x^2 + m^2 |delta0| y^2 with 1 <= x, y <= limit, ordered by
/// y then x; t = 2x.
HeavyClass find_heavy_isogeny_class(const Integer& m, const Integer& delta0, std::int64_t limit,
                                    unsigned threads = 0);

enum class Family { small, smaller, smallest };
Family parse_family(const std::string& name);
std::string to_string(Family f);

struct FamilyMember {
    Family family;
    Integer p;
    /// a_p for the small family, c_p for the smallest, 0 otherwise.
    Integer parameter;
    IntPoly f;
    Integer ratio;
    bool weil = false, ordinary = false, simple = false;
    /// The family's bound or identity was evaluated (skipped for small p in
    /// the smallest family).
    bool bound_checked = false;
    bool bound_holds = false;
    bool ok() const { return weil && ordinary && simple && (!bound_checked || bound_holds); }
};

/// Largest integer strictly below sqrt(p) - 1.
Integer family_a(const Integer& p);
/// Largest integer strictly below 2 sqrt(p) - 1.
Integer family_c(const Integer& p);
IntPoly family_polynomial(Family family, const Integer& p);

/// DomainError unless p is a prime congruent to 7 mod 8.
FamilyMember example_family(Family family, const Integer& p);

/// All primes p = 7 mod 8 below pmax, ascending. With fail_fast the sweep
/// stops at the first member that is not ok(); that member is the last entry.
std::vector<FamilyMember> family_sweep(Family family, const Integer& pmax, bool fail_fast,
                                       unsigned threads = 0);

struct StratumReport {
    StratumReport(IsogenyClassSpec s, Lattice order)
        : spec(std::move(s)), minimal_order(std::move(order)) {}

    IsogenyClassSpec spec;
    std::string stratum = "minimal";
    Lattice minimal_order;
    ConvenienceCertificate convenience;
    std::optional<Integer> exact_count;
    /// n = 1: every stratum and their total H(t^2 - 4q).
    std::vector<StratumCount> strata;
    std::optional<Integer> isogeny_class_total;
    std::optional<double> estimate;
    Integer ratio_exact;
    double ratio_trig = 0;
    Certificate surjectivity = Certificate::unknown;
    Certificate odd_ramified = Certificate::unknown;
    /// Conductor of R+ = Z[alpha] (1 for n = 1).
    Integer real_conductor;
    /// [U+_{>0} : (U+)^2].
    int unit_index_real = 1;
    /// [N(U) : (U+)^2]: "1" or "1 or 2".
    std::string norm_unit_index;
    /// [U+_{>0} : N(U)] when it is determined.
    std::optional<Integer> polarizations_per_variety;
};

/// Report for the minimal stratum of a simple ordinary class with n <= 2.
StratumReport analyze(const IsogenyClassSpec& spec);

/// Median of log h(delta) / log sqrt|delta| over `count` negative fundamental
/// discriminants drawn log-uniformly from [lo, hi] with a seeded generator.
struct TrendSample {
    Integer delta;
    Integer h;
    double log_ratio;
};
std::vector<TrendSample> estimator_trend_samples(std::size_t count, double lo, double hi,
                                                 std::uint64_t seed, unsigned threads = 0);
double median_log_ratio(const std::vector<TrendSample>& samples);

}  // namespace ppav
