#pragma once

#include <string>
#include <vector>

#include "ppav/arith.hpp"

namespace ppav {

/// delta = F^2 * delta0 with delta0 a fundamental discriminant.
struct QuadDiscriminant {
    Integer delta;
    Integer delta0;
    Integer conductor;
};

bool is_discriminant(const Integer& delta);
bool is_fundamental_discriminant(const Integer& delta);

/// Throws DomainError unless delta is a nonsquare integer congruent to 0 or 1
/// mod 4.
QuadDiscriminant decompose_discriminant(const Integer& delta);

/// Element a + b*sqrt(radicand) of a real or imaginary quadratic field.
struct QuadElement {
    Rational a;
    Rational b;
    Integer radicand;

    Rational norm() const { return a * a - b * b * radicand; }
    Rational trace() const { return 2 * a; }
    double approx() const;
    friend bool operator==(const QuadElement&, const QuadElement&) = default;
};

using RealQuadElement = QuadElement;

QuadElement operator*(const QuadElement& x, const QuadElement& y);
QuadElement operator+(const QuadElement& x, const QuadElement& y);
QuadElement operator-(const QuadElement& x, const QuadElement& y);

/// Integral in the maximal order of Q(sqrt radicand).
bool is_integral(const QuadElement& x);

/// Number of primitive reduced forms (a, b, c) of discriminant delta < 0.
Integer class_number_imaginary(const Integer& delta);

/// h(f^2 delta0) = h(delta0) f prod_{p | f} (1 - chi(p)/p) / [O* : O_f*], where
/// the unit index is 2 for delta0 = -4, 3 for delta0 = -3 (when f > 1).
Integer class_number_by_formula(const Integer& delta0, const Integer& f);

/// Kronecker class number: sum of h(f^2 delta0) over f dividing the conductor.
Integer kronecker_class_number(const Integer& delta);

struct HoverH {
    Rational ratio;
    Rational bound;
};

/// h(delta)/H(delta) and prod_{p | F} (p+1)/(p+2). When delta0 < -4 the
/// inequality ratio <= bound is checked and InternalError thrown on failure.
HoverH h_over_H_bound(const Integer& delta);

struct FundamentalUnit {
    RealQuadElement unit;
    int norm = 0;
};

/// Fundamental unit > 1 of the quadratic order of discriminant delta > 0,
/// from the continued fraction of (delta mod 2 + sqrt delta)/2.
FundamentalUnit fundamental_unit(const Integer& delta);

struct RealClassNumbers {
    Integer h;
    Integer hplus;
};

/// Class number and narrow class number of the order of discriminant delta >
/// 0. hplus is the number of cycles of reduced primitive indefinite forms.
RealClassNumbers class_numbers_real(const Integer& delta);

enum class PrimeType { split_plus, split_minus, inert, ramified };

std::string to_string(PrimeType t);

/// A prime ideal of the maximal order of Q(sqrt D) over the rational prime
/// `ell`. For split primes, `residue` is the root r of the minimal polynomial
/// of the standard generator w modulo ell such that the ideal is (ell, w - r);
/// split_plus carries the smaller root.
struct PrimeIdeal {
    Integer ell;
    PrimeType type;
    Integer residue;

    int residue_degree() const { return type == PrimeType::inert ? 2 : 1; }
    friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

struct IdealFactor {
    PrimeIdeal prime;
    unsigned valuation;
};

/// Factorization of the principal ideal (x) in the maximal order of
/// Q(sqrt D), D squarefree. DomainError for x = 0 or non-integral x.
std::vector<IdealFactor> factor_element_ideal(const Integer& radicand, const QuadElement& x);

/// Squarefree kernel with sign: the D with delta = s^2 D.
Integer squarefree_radicand(const Integer& delta);

}  // namespace ppav
