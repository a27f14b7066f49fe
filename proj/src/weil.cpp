#include "ppav/weil.hpp"

#include <algorithm>
#include <cmath>

#include "ppav/errors.hpp"

namespace ppav {

namespace {

// x^{n-k} (x^2 + q)^k
IntPoly shifted_power(const Integer& q, int n, int k) {
    IntPoly base{q, Integer(0), Integer(1)};
    IntPoly acc{Integer(1)};
    for (int i = 0; i < k; ++i) acc = acc * base;
    return IntPoly::monomial(Integer(1), static_cast<std::size_t>(n - k)) * acc;
}

}  // namespace

bool satisfies_functional_equation(const IntPoly& f, const Integer& q) {
    const int d = f.degree();
    if (d < 0 || d % 2 != 0) return false;
    const int n = d / 2;
    // Coefficient of x^{2n-i} must equal q^{n-i} times the coefficient of x^i.
    for (int i = 0; i <= n; ++i) {
        if (f[static_cast<std::size_t>(i)] !=
            pow(q, static_cast<unsigned long>(n - i)) * f[static_cast<std::size_t>(d - i)])
            return false;
    }
    return true;
}

IntPoly weil_from_real(const IntPoly& g, const Integer& q) {
    const int n = g.degree();
    IntPoly f;
    for (int k = 0; k <= n; ++k) f = f + g.coeffs()[k] * shifted_power(q, n, k);
    return f;
}

IntPoly real_weil_polynomial(const IntPoly& f, const Integer& q) {
    if (f.degree() < 2 || f.degree() % 2 != 0 || !f.is_monic())
        throw NotWeilShape("Weil polynomial must be monic of positive even degree");
    if (q < 1) throw NotWeilShape("q must be positive");
    if (!satisfies_functional_equation(f, q))
        throw NotWeilShape("functional equation x^{2n} f(q/x) = q^n f(x) fails");
    const int n = f.degree() / 2;
    std::vector<Integer> g(static_cast<std::size_t>(n + 1));
    IntPoly rest = f;
    for (int k = n; k >= 0; --k) {
        g[k] = rest[static_cast<std::size_t>(n + k)];
        rest = rest - g[k] * shifted_power(q, n, k);
    }
    if (!rest.is_zero()) throw InternalError("real Weil polynomial reconstruction failed");
    return IntPoly(std::move(g));
}

bool is_weil(const IntPoly& f, const Integer& q) {
    IntPoly g;
    try {
        g = real_weil_polynomial(f, q);
    } catch (const NotWeilShape&) {
        return false;
    }
    const IntPoly gs = squarefree_part(g);
    if (real_root_count(gs) != gs.degree()) return false;
    // gs(y) gs(-y) is even; its roots as a polynomial in z = y^2 are the r^2.
    const IntPoly even = gs * reflect(gs);
    std::vector<Integer> zc;
    for (std::size_t i = 0; i < even.coeffs().size(); i += 2) zc.push_back(even.coeffs()[i]);
    const IntPoly zs = squarefree_part(IntPoly(std::move(zc)));
    if (zs.degree() < 1) return true;
    return sturm_count(zs, Rational(-1), Rational(4 * q)) == zs.degree();
}

bool is_ordinary(const IntPoly& f, const Integer& q) {
    const int n = f.degree() / 2;
    return gcd(f[static_cast<std::size_t>(n)], q) == 1;
}

namespace {

bool has_integer_root(const IntPoly& f) {
    const Integer c0 = f[0];
    if (c0 == 0) return true;
    for (const auto& d : divisors(factorize(abs(c0)))) {
        if (f.eval(d) == 0 || f.eval(Integer(-d)) == 0) return true;
    }
    return false;
}

// Monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0 as a product of two monic
// integer quadratics (x^2 + u x + v)(x^2 + u' x + v'). For each v | a0 the
// coefficient u is a root of u^2 - a3 u + (a2 - v - v') = 0.
bool has_quadratic_factor(const IntPoly& f) {
    const Integer a0 = f[0], a1 = f[1], a2 = f[2], a3 = f[3];
    for (const auto& d : divisors(factorize(abs(a0)))) {
        for (const Integer& v : {Integer(d), Integer(-d)}) {
            const Integer w = a0 / v;
            const Integer disc = a3 * a3 - 4 * (a2 - v - w);
            if (!is_square(disc)) continue;
            const Integer s = isqrt(disc);
            for (const Integer& twice_u : {Integer(a3 + s), Integer(a3 - s)}) {
                if (twice_u % 2 != 0) continue;
                const Integer u = twice_u / 2;
                const Integer u2 = a3 - u;
                if (u * w + u2 * v == a1) return true;
            }
        }
    }
    return false;
}

}  // namespace

bool is_simple(const IntPoly& f) {
    if (f.degree() > 4) throw UnsupportedDegree("irreducibility test supports degree <= 4");
    if (f.degree() < 1) return false;
    if (!f.is_monic()) throw DomainError("is_simple expects a monic polynomial");
    if (f.degree() == 1) return true;
    if (has_integer_root(f)) return false;
    if (f.degree() <= 3) return true;
    return !has_quadratic_factor(f);
}

std::vector<long double> frobenius_angles(const IntPoly& g, const Integer& q) {
    std::vector<long double> roots;
    IntPoly rest = g;
    while (rest.degree() > 0) {
        const IntPoly s = squarefree_part(rest);
        for (long double r : real_roots(s)) roots.push_back(r);
        rest = primitive_part(divmod(to_rational(rest), to_rational(s)).first);
    }
    const long double two_sqrt_q = 2.0L * std::sqrt(static_cast<long double>(to_double(q)));
    std::vector<long double> angles;
    for (long double r : roots) {
        const long double c = std::clamp(r / two_sqrt_q, -1.0L, 1.0L);
        angles.push_back(std::acos(c));
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

IsogenyClassSpec make_spec(const IntPoly& f, const Integer& q) {
    if (prime_power_decomposition(q).second == 0)
        throw DomainError("q = " + to_string(q) + " is not a prime power");
    IsogenyClassSpec spec;
    spec.g = real_weil_polynomial(f, q);
    if (!is_weil(f, q)) throw NotWeil("not a Weil polynomial: some root has |root| != sqrt(q)");
    spec.f = f;
    spec.q = q;
    spec.n = f.degree() / 2;
    spec.angles_ld = frobenius_angles(spec.g, q);
    for (long double a : spec.angles_ld) spec.angles.push_back(static_cast<double>(a));
    return spec;
}

IntPoly quartic_weil(const Integer& a, const Integer& b, const Integer& q) {
    return IntPoly{q * q, a * q, b, a, Integer(1)};
}

}  // namespace ppav
