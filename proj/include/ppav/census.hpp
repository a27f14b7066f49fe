#pragma once

#include <iosfwd>
#include <vector>

#include "ppav/arith.hpp"

namespace ppav {

struct CensusRow {
    Integer t;
    Integer delta;
    /// Kronecker class number H(t^2 - 4p): curves with trace t.
    Integer H;
    double normalized_trace;
};

/// One row per trace 0 < |t| < 2 sqrt(p) with p not dividing t, ascending.
std::vector<CensusRow> enumerate_ec(const Integer& p, unsigned threads = 0);

struct CensusSummary {
    Integer p;
    Integer class_count;
    Integer curve_total;
    /// H-weighted mass per equal-width bin of [-1, 1]; sums to 1.
    std::vector<double> histogram;
    /// Semicircle mass of the same bins.
    std::vector<double> semicircle;
    double tv_to_semicircle;
    double predicted_class_count;
};

/// Bin of t/(2 sqrt p) among `bins` equal bins of [-1, 1], decided exactly.
int trace_bin(const Integer& t, const Integer& p, int bins);

/// (2/pi) integral of sqrt(1 - x^2) over [a, b].
double semicircle_mass(double a, double b);

CensusSummary summarize(const Integer& p, const std::vector<CensusRow>& rows, int bins = 40);

struct MinusFraction {
    Integer t;
    Integer delta;
    /// h(delta) / H(delta): share of curves with minimal endomorphism ring.
    Rational fraction;
    Rational bound;
};

/// Every ordinary trace with its fraction and bound, ascending by fraction
/// and then by t.
std::vector<MinusFraction> minus_fraction_scan(const Integer& p, unsigned threads = 0);

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows);

}  // namespace ppav
