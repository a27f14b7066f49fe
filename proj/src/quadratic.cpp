#include "ppav/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "ppav/errors.hpp"

namespace ppav {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 to_i64(const Integer& n) {
    if (!n.fits_slong_p()) throw DomainError("discriminant too large for form enumeration");
    return n.get_si();
}

i64 gcd64(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 isqrt64(i64 n) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Square root of n modulo an odd prime p (n a nonzero square mod p).
Integer sqrt_mod_prime(const Integer& n, const Integer& p) {
    Integer a = mod_floor(n, p);
    if (a == 0) return Integer(0);
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (kronecker_symbol(z, p) != -1) ++z;
    auto powm = [&](const Integer& b, const Integer& e) {
        Integer r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    Integer m = s;
    Integer c = powm(z, q);
    Integer t = powm(a, q);
    Integer r = powm(a, (q + 1) / 2);
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + 1 < m.get_ui() - i; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

unsigned valuation(Integer n, const Integer& p) {
    unsigned v = 0;
    n = abs(n);
    while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

bool is_discriminant(const Integer& delta) {
    const Integer r = mod_floor(delta, Integer(4));
    return (r == 0 || r == 1) && !is_square(delta);
}

Integer squarefree_radicand(const Integer& delta) {
    if (delta == 0) throw DomainError("zero has no squarefree radicand");
    Integer d = sgn(delta);
    for (const auto& [p, e] : factorize(abs(delta)))
        if (e % 2) d *= p;
    return d;
}

bool is_fundamental_discriminant(const Integer& delta) {
    if (!is_discriminant(delta)) return false;
    return decompose_discriminant(delta).conductor == 1;
}

QuadDiscriminant decompose_discriminant(const Integer& delta) {
    if (!is_discriminant(delta))
        throw DomainError("not a nonsquare discriminant (0 or 1 mod 4): " + to_string(delta));
    Integer d = sgn(delta), f = 1;
    for (const auto& [p, e] : factorize(abs(delta))) {
        if (e % 2) d *= p;
        f *= pow(p, e / 2);
    }
    if (mod_floor(d, Integer(4)) == 1) return {delta, d, f};
    if (f % 2 != 0) throw InternalError("conductor parity");
    return {delta, 4 * d, f / 2};
}

double QuadElement::approx() const {
    return to_double(a) + to_double(b) * std::sqrt(to_double(radicand));
}

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
    return {x.a * y.a + x.b * y.b * x.radicand, x.a * y.b + x.b * y.a, x.radicand};
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
    return {x.a + y.a, x.b + y.b, x.radicand};
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) {
    return {x.a - y.a, x.b - y.b, x.radicand};
}

bool is_integral(const QuadElement& x) {
    return x.trace().get_den() == 1 && x.norm().get_den() == 1;
}

Integer class_number_imaginary(const Integer& delta) {
    if (delta >= 0) throw DomainError("class_number_imaginary needs a negative discriminant");
    if (!is_discriminant(delta)) throw DomainError("not a discriminant: " + to_string(delta));
    const i64 d = to_i64(delta);
    const i64 bmax = isqrt64(-d / 3);
    i64 count = 0;
    for (i64 b = (d & 1) ? 1 : 0; b <= bmax; b += 2) {
        const i64 n = (b * b - d) / 4;  // = a*c
        const i64 amax = isqrt64(n);
        for (i64 a = std::max<i64>(b, 1); a <= amax; ++a) {
            if (n % a != 0) continue;
            const i64 c = n / a;
            if (gcd64(gcd64(a, b), c) != 1) continue;
            count += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return Integer(static_cast<long>(count));
}

Integer class_number_by_formula(const Integer& delta0, const Integer& f) {
    if (delta0 >= 0 || !is_fundamental_discriminant(delta0))
        throw DomainError("class_number_by_formula needs a negative fundamental discriminant");
    if (f < 1) throw DomainError("conductor must be positive");
    Rational h = class_number_imaginary(delta0) * f;
    if (f > 1) {
        for (const auto& [p, e] : factorize(f)) {
            h *= Rational(1) - Rational(kronecker_symbol(delta0, p)) / p;
        }
        if (delta0 == -4) h /= 2;
        if (delta0 == -3) h /= 3;
    }
    if (h.get_den() != 1) throw InternalError("class number formula produced a non-integer");
    return h.get_num();
}

Integer kronecker_class_number(const Integer& delta) {
    if (delta >= 0) throw DomainError("kronecker_class_number needs a negative discriminant");
    const auto dd = decompose_discriminant(delta);
    Integer total = 0;
    for (const auto& f : divisors(factorize(dd.conductor)))
        total += class_number_by_formula(dd.delta0, f);
    return total;
}

HoverH h_over_H_bound(const Integer& delta) {
    const auto dd = decompose_discriminant(delta);
    const Integer h = class_number_by_formula(dd.delta0, dd.conductor);
    const Integer big_h = kronecker_class_number(delta);
    Rational bound = 1;
    if (dd.conductor > 1)
        for (const auto& [p, e] : factorize(dd.conductor)) bound *= Rational(p + 1) / (p + 2);
    HoverH out{make_rational(h, big_h), bound};
    if (dd.delta0 < -4 && out.ratio > out.bound)
        throw InternalError("h/H exceeds prod (p+1)/(p+2) for delta = " + to_string(delta));
    return out;
}

FundamentalUnit fundamental_unit(const Integer& delta) {
    if (delta <= 0) throw DomainError("fundamental_unit needs a positive discriminant");
    if (is_square(delta)) throw DomainError("square discriminant has no fundamental unit");
    if (!is_discriminant(delta)) throw DomainError("not a discriminant: " + to_string(delta));
    const Integer sq = isqrt(delta);
    const Integer p0 = mod_floor(delta, Integer(2));
    Integer p = p0, q = 2;
    Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (;;) {
        const Integer a = floor_div(p + sq, q);
        const Integer h = a * h1 + h2, k = a * k1 + k2;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        p = a * q - p;
        q = (delta - p * p) / q;
        if (q <= 0) throw InternalError("continued fraction left the reduced range");
        if (q == 2) break;
    }
    // unit = h - k * conj(omega), omega = (p0 + sqrt(delta))/2, sqrt(delta) = s sqrt(D).
    const Integer radicand = squarefree_radicand(delta);
    const Integer s = isqrt(delta / radicand);
    QuadElement u{Rational(h1) - Rational(k1 * p0, 2), Rational(k1 * s, 2), radicand};
    u.a.canonicalize();
    u.b.canonicalize();
    const Rational nm = u.norm();
    if (nm != 1 && nm != -1) throw InternalError("continued fraction unit has norm " + to_string(nm));
    return {u, nm == 1 ? 1 : -1};
}

RealClassNumbers class_numbers_real(const Integer& delta) {
    if (delta <= 0 || !is_discriminant(delta))
        throw DomainError("class_numbers_real needs a positive nonsquare discriminant");
    const i64 d = to_i64(delta);
    const i64 sq = isqrt64(d);
    using Form = std::tuple<i64, i64, i64>;
    std::set<Form> reduced;
    for (i64 b = (d & 1) ? 1 : 2; b <= sq; b += 2) {
        const i64 n = (b * b - d) / 4;  // a*c, negative
        const i64 lo = (sq - b + 2) / 2, hi = (sq + b) / 2;  // 2|a| in [sq-b+1, sq+b]
        for (i64 a = std::max<i64>(lo, 1); a <= hi; ++a) {
            if (n % a != 0) continue;
            for (i64 sa : {a, -a}) {
                const i64 c = n / sa;
                if (gcd64(gcd64(sa, b), c) == 1) reduced.emplace(sa, b, c);
            }
        }
    }
    auto rho = [&](const Form& f) {
        const auto [a, b, c] = f;
        const i64 ac = c < 0 ? -c : c;
        const i64 m = 2 * ac;
        const i64 lower = ac <= sq ? sq - 2 * ac + 1 : -ac + 1;
        const i64 target = ((-b) % m + m) % m;
        const i64 bp = lower + (((target - lower) % m) + m) % m;
        return Form{c, bp, (bp * bp - d) / (4 * c)};
    };
    std::set<Form> seen;
    i64 cycles = 0;
    for (const auto& start : reduced) {
        if (seen.count(start)) continue;
        ++cycles;
        Form f = start;
        do {
            if (!reduced.count(f)) throw InternalError("rho left the set of reduced forms");
            seen.insert(f);
            f = rho(f);
        } while (f != start);
    }
    const int unit_norm = fundamental_unit(delta).norm;
    RealClassNumbers out{Integer(static_cast<long>(cycles)), Integer(static_cast<long>(cycles))};
    if (unit_norm == 1) {
        if (cycles % 2 != 0) throw InternalError("odd narrow class number with norm +1 unit");
        out.h = cycles / 2;
    }
    return out;
}

std::string to_string(PrimeType t) {
    switch (t) {
        case PrimeType::split_plus: return "split+";
        case PrimeType::split_minus: return "split-";
        case PrimeType::inert: return "inert";
        case PrimeType::ramified: return "ramified";
    }
    return "?";
}

std::vector<IdealFactor> factor_element_ideal(const Integer& radicand, const QuadElement& x) {
    if (radicand == 1 || radicand == 0 || squarefree_radicand(radicand) != radicand)
        throw DomainError("radicand must be squarefree and not 0 or 1");
    if (x.a == 0 && x.b == 0) throw DomainError("cannot factor the zero ideal");
    if (!is_integral(x)) throw DomainError("element is not integral");
    const bool one_mod_4 = mod_floor(radicand, Integer(4)) == 1;
    // Coordinates over (1, w) with w = (1 + sqrt D)/2 or sqrt D.
    const Rational ur = one_mod_4 ? x.a - x.b : x.a;
    const Rational vr = one_mod_4 ? 2 * x.b : x.b;
    if (ur.get_den() != 1 || vr.get_den() != 1) throw InternalError("integral coordinates expected");
    const Integer u = ur.get_num(), v = vr.get_num();
    const Integer tr = one_mod_4 ? Integer(1) : Integer(0);
    const Integer nm = one_mod_4 ? Integer((1 - radicand) / 4) : Integer(-radicand);
    const Integer field_disc = one_mod_4 ? radicand : 4 * radicand;
    const Integer norm = abs(x.norm().get_num());

    std::vector<IdealFactor> out;
    if (norm == 1) return out;
    for (const auto& [ell, e] : factorize(norm)) {
        const int chi = kronecker_symbol(field_disc, ell);
        if (chi == 0) {
            out.push_back({{ell, PrimeType::ramified, Integer(0)}, e});
            continue;
        }
        if (chi == -1) {
            out.push_back({{ell, PrimeType::inert, Integer(0)}, e / 2});
            continue;
        }
        Integer r1, r2;
        if (ell == 2) {
            r1 = 0;
            r2 = 1;
        } else {
            const Integer s = sqrt_mod_prime(tr * tr - 4 * nm, ell);
            const Integer inv2 = (ell + 1) / 2;
            r1 = mod_floor((tr + s) * inv2, ell);
            r2 = mod_floor((tr - s) * inv2, ell);
            if (r1 > r2) std::swap(r1, r2);
        }
        // a zero coordinate is divisible by every power of ell
        const unsigned k = u == 0 ? valuation(v, ell) : v == 0 ? valuation(u, ell)
                                                               : std::min(valuation(u, ell), valuation(v, ell));
        const Integer lk = pow(ell, k);
        const Integer u1 = u / lk, v1 = v / lk;
        const unsigned rest = e - 2 * k;
        unsigned e1 = k, e2 = k;
        if (rest > 0) {
            if (mod_floor(u1 + v1 * r1, ell) == 0)
                e1 += rest;
            else if (mod_floor(u1 + v1 * r2, ell) == 0)
                e2 += rest;
            else
                throw InternalError("split prime valuation not located");
        }
        if (e1) out.push_back({{ell, PrimeType::split_plus, r1}, e1});
        if (e2) out.push_back({{ell, PrimeType::split_minus, r2}, e2});
    }
    return out;
}

}  // namespace ppav
