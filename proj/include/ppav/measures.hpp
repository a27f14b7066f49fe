#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "ppav/arith.hpp"

namespace ppav {

/// v_n = 2^n / n! * prod_{j=1}^n (2j/(2j-1))^{n+1-j}.
Rational constant_v(int n);
/// c_n = 2^{n^2} / pi^n.
double constant_c(int n);
/// The stated constant d_n = 1 / (v_n pi^n).
double constant_d_stated(int n);
/// 1 / (mass of the unnormalized isogeny-class density on S_n), computed once
/// per n by quadrature and cached.
double constant_d_effective(int n);

struct MeasureSpec {
    int n;
    Rational v;
    double c;
    double d_stated;
    double d_eff;
};

MeasureSpec measure_spec(int n);

/// prod_{i<j} (cos t_i - cos t_j) prod_i sin t_i, for ascending angles.
double vandermonde_sine(const std::vector<double>& theta);

/// Katz-Sarnak density c_n prod (cos t_i - cos t_j)^2 prod sin^2 t_i. The
/// expression is symmetric, so any ordering of theta in [0, pi]^n is accepted.
double density_mu(const std::vector<double>& theta);

enum class NuConstant { stated, effective };
/// d_n prod_{i<j} (cos t_i - cos t_j) prod sin t_i on ascending theta.
double density_nu(const std::vector<double>& theta, NuConstant constant);

struct QuadratureResult {
    double value;
    /// |difference| between the last two panel refinements.
    double error_estimate;
    int panels;
};

using SimplexDensity = std::function<double(const std::vector<double>&)>;

/// Integral over 0 <= t_1 <= ... <= t_n <= pi by iterated 64-point
/// Gauss-Legendre panels, doubling the panel count until successive values
/// differ by less than tol. n <= 4.
QuadratureResult integrate_simplex(int n, const SimplexDensity& density, double tol = 1e-8,
                                   unsigned threads = 0);

/// v_n (phi(q)/q) q^{n(n+1)/4}.
double isogeny_class_count_estimate(int n, const Integer& q);

/// Literal 2^{n^2+1}/pi^{2n} (q/phi(q)) q^{n(n+1)/4} prod(cos a_i - cos a_j) prod sin a_i.
double average_ppav_estimate(int n, const Integer& q, const std::vector<double>& theta);

/// The same average composed from its ingredients:
/// 2 q^{n(n+1)/2} mu_n(theta) / (isogeny_class_count_estimate * nu_n(theta)),
/// with the stated d_n. Differs from average_ppav_estimate by pi^{2n}.
double average_ppav_composed(int n, const Integer& q, const std::vector<double>& theta);

/// CSV of the densities on ascending tuples of a regular grid with `grid`
/// points per axis on [0, pi].
void write_density_grid(std::ostream& out, int n, int grid);

}  // namespace ppav
