#pragma once

#include <vector>

#include "ppav/arith.hpp"
#include "ppav/poly.hpp"

namespace ppav {

/// A validated Weil polynomial together with its derived data.
///
/// `f` has degree 2n and satisfies x^{2n} f(q/x) = q^n f(x); `g` is the real
/// Weil polynomial with f(x) = x^n g(x + q/x); `angles` are the Frobenius
/// angles in [0, pi], ascending.
struct IsogenyClassSpec {
    IntPoly f;
    Integer q;
    int n = 0;
    IntPoly g;
    std::vector<double> angles;
    /// Same angles in extended precision.
    std::vector<long double> angles_ld;
};

/// g with x^n g(x + q/x) = f(x). Throws NotWeilShape when f is not monic of
/// even degree or the functional equation fails.
IntPoly real_weil_polynomial(const IntPoly& f, const Integer& q);

bool satisfies_functional_equation(const IntPoly& f, const Integer& q);

/// f(x) = x^n g(x + q/x), the inverse of real_weil_polynomial.
IntPoly weil_from_real(const IntPoly& g, const Integer& q);

/// All roots of f have absolute value sqrt(q). Exact: the real Weil
/// polynomial must have only real roots r with r^2 <= 4q.
bool is_weil(const IntPoly& f, const Integer& q);

/// The coefficient of x^n is coprime to q. This is the ordinarity criterion
/// for n <= 2; for larger n it is used as a working definition only.
bool is_ordinary(const IntPoly& f, const Integer& q);

/// Irreducibility over Q for monic integer polynomials of degree <= 4.
/// Throws UnsupportedDegree above 4.
bool is_simple(const IntPoly& f);

/// Frobenius angles arccos(r / (2 sqrt q)) over the real roots r of g.
std::vector<long double> frobenius_angles(const IntPoly& g, const Integer& q);

/// Builds the spec; throws NotWeilShape or DomainError (not Weil, q not a
/// prime power). Simplicity and ordinarity are not required here.
IsogenyClassSpec make_spec(const IntPoly& f, const Integer& q);

/// Convenience: x^4 + a x^3 + b x^2 + a q x + q^2.
IntPoly quartic_weil(const Integer& a, const Integer& b, const Integer& q);

}  // namespace ppav
