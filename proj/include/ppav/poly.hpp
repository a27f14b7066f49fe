#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ppav/arith.hpp"

namespace ppav {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly monomial(const T& coeff, std::size_t degree) {
        std::vector<T> c(degree + 1);
        c[degree] = coeff;
        return Poly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const T& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const std::vector<T>& coeffs() const noexcept { return c_; }
    /// Coefficient of x^i, zero past the degree.
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    template <class U>
    U eval(const U& x) const {
        U acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> c(a.c_);
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);
/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of p.
IntPoly primitive_part(const RatPoly& p);

/// Quotient and remainder over Q; DomainError for a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd over Q (zero when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// a / gcd(a, a'), as a primitive integer polynomial.
IntPoly squarefree_part(const IntPoly& a);
bool is_squarefree(const IntPoly& a);

/// p(-x).
IntPoly reflect(const IntPoly& p);

/// Res(a, b) = lc(a)^deg b * prod_{a(r)=0} b(r), via the Sylvester determinant.
/// DomainError if either argument is zero.
Integer resultant(const IntPoly& a, const IntPoly& b);
Integer discriminant(const IntPoly& a);

/// Number of distinct real roots of a squarefree polynomial in (lo, hi].
/// DomainError when `a` is not squarefree or lo >= hi.
Integer sturm_count(const IntPoly& a, const Rational& lo, const Rational& hi);
/// Number of distinct real roots of a squarefree polynomial.
Integer real_root_count(const IntPoly& a);

/// Cauchy bound: every complex root has absolute value below it.
Rational cauchy_root_bound(const IntPoly& a);

/// Disjoint intervals (lo, hi], one per real root of the squarefree
/// polynomial `a`, ascending.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPoly& a);

/// Real roots of a squarefree polynomial, ascending, each refined by exact
/// bisection until the bracket width is below rel_tol * max(1, |root|).
std::vector<long double> real_roots(const IntPoly& a, long double rel_tol = 1e-18L);

std::string to_string(const IntPoly& p, const std::string& var = "x");

}  // namespace ppav
