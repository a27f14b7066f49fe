#pragma once
// Independent reference computations for the test suite. Everything here is
// deliberately naive: brute force, different formulas, different algorithms.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "ppav/arith.hpp"
#include "ppav/orders.hpp"
#include "ppav/poly.hpp"
#include "ppav/stratum.hpp"
#include "ppav/weil.hpp"

namespace oracle {

using ppav::Integer;
using ppav::IntPoly;
using ppav::Rational;

inline std::vector<std::pair<std::int64_t, unsigned>> trial_factor(std::int64_t n) {
    std::vector<std::pair<std::int64_t, unsigned>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool trial_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Kronecker symbol from its definition: multiplicative in n, Legendre symbols
// by listing squares, the mod 8 rule at 2 and the sign rule at -1.
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) s = -1;
    }
    for (auto [p, e] : trial_factor(n)) {
        int chi;
        if (p == 2) {
            const std::int64_t r = mod(a, 8);
            chi = (r % 2 == 0) ? 0 : ((r == 1 || r == 7) ? 1 : -1);
        } else if (mod(a, p) == 0) {
            chi = 0;
        } else {
            chi = -1;
            for (std::int64_t x = 1; x < p; ++x)
                if (mod(x * x - a, p) == 0) {
                    chi = 1;
                    break;
                }
        }
        for (unsigned i = 0; i < e; ++i) s *= chi;
    }
    return s;
}

inline bool fundamental(std::int64_t d) {
    auto squarefree = [](std::int64_t m) {
        m = m < 0 ? -m : m;
        for (std::int64_t p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0) return false;
        return true;
    };
    if (mod(d, 4) == 1) return squarefree(d) && d != 1;
    if (mod(d, 4) != 0) return false;
    const std::int64_t m = d / 4;
    return (mod(m, 4) == 2 || mod(m, 4) == 3) && squarefree(m);
}

// Dirichlet's formula h = -(1/|d|) sum_{a<|d|} chi(a) a for fundamental d < -4.
inline std::int64_t class_number_dirichlet(std::int64_t d) {
    const std::int64_t n = -d;
    std::int64_t sum = 0;
    for (std::int64_t a = 1; a < n; ++a) sum += kronecker(d, a) * a;
    return -sum / n;
}

// Smallest unit (x + y sqrt d)/2 > 1 of the order of discriminant d > 0,
// found by scanning y. Returns {x, y, norm}.
struct Unit {
    Integer x, y;
    int norm;
};
inline Unit unit_by_search(const Integer& d) {
    for (Integer y = 1;; ++y) {
        for (int s : {-4, 4}) {
            const Integer x2 = d * y * y + s;
            if (x2 > 0 && ppav::is_square(x2)) return {ppav::isqrt(x2), y, s == -4 ? -1 : 1};
        }
    }
}

// Analytic class number of the maximal order of a real quadratic field with
// fundamental discriminant d: h log eps = -1/2 sum chi(a) log sin(pi a / d).
inline std::int64_t real_class_number_analytic(std::int64_t d) {
    const Unit u = unit_by_search(Integer(d));
    const long double eps =
        (ppav::to_long_double(Rational(u.x)) +
         ppav::to_long_double(Rational(u.y)) * std::sqrt(static_cast<long double>(d))) / 2;
    long double s = 0;
    for (std::int64_t a = 1; a < d; ++a)
        s += kronecker(d, a) * std::log(std::sin(std::numbers::pi_v<long double> * a / d));
    return std::llround(-s / (2 * std::log(eps)));
}

inline std::int64_t isqrt64(std::int64_t n) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Reduced primitive forms counted by looping over a and c rather than a and b.
inline std::int64_t class_number_by_ac(std::int64_t d) {
    const std::int64_t n = -d;
    std::int64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= n; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (mod(b * b - d, 4 * a) != 0) continue;
            const std::int64_t c = (b * b - d) / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) == 1) ++h;
        }
    return h;
}

// Fraction-free Gaussian elimination.
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Res(a, b) for monic a as det b(C_a), with C_a the companion matrix.
inline Integer resultant_companion(const IntPoly& a, const IntPoly& b) {
    const std::size_t d = static_cast<std::size_t>(a.degree());
    using M = std::vector<std::vector<Integer>>;
    M c(d, std::vector<Integer>(d));
    for (std::size_t i = 0; i + 1 < d; ++i) c[i + 1][i] = 1;
    for (std::size_t i = 0; i < d; ++i) c[i][d - 1] = -a[i];
    auto mul = [d](const M& x, const M& y) {
        M z(d, std::vector<Integer>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    M acc(d, std::vector<Integer>(d));
    for (int k = b.degree(); k >= 0; --k) {
        acc = mul(acc, c);
        for (std::size_t i = 0; i < d; ++i) acc[i][i] += b[static_cast<std::size_t>(k)];
    }
    return bareiss_det(acc);
}

// Product of (x - r) over distinct integer roots times (x^2 + s) factors with
// s > 0; the real root count is the number of linear factors.
struct KnownRoots {
    IntPoly poly;
    int real_roots;
};
template <class Rng>
KnownRoots random_known_roots(Rng& rng) {
    std::uniform_int_distribution<int> nlin(0, 4), nquad(0, 2), root(-30, 30), shift(1, 40);
    IntPoly p{Integer(1)};
    std::vector<int> used;
    const int k = nlin(rng);
    while (static_cast<int>(used.size()) < k) {
        const int r = root(rng);
        bool dup = false;
        for (int u : used) dup |= u == r;
        if (dup) continue;
        used.push_back(r);
        p = p * IntPoly{Integer(-r), Integer(1)};
    }
    std::vector<int> shifts;
    const int m = nquad(rng);
    while (static_cast<int>(shifts.size()) < m) {
        const int s = shift(rng);
        bool dup = false;
        for (int u : shifts) dup |= u == s;
        if (dup) continue;
        shifts.push_back(s);
        p = p * IntPoly{Integer(s), Integer(0), Integer(1)};
    }
    return {p, k};
}

// Prime powers up to `max` by trial division.
inline std::vector<std::int64_t> prime_powers(std::int64_t max) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q <= max; ++q) {
        const auto f = trial_factor(q);
        if (f.size() == 1) out.push_back(q);
    }
    return out;
}

// Random simple ordinary n = 2 Weil polynomial: (a, c) sampled uniformly
// from the box |a| <= 4 sqrt q, |c| <= 4q and kept when g = x^2 + a x + c has
// distinct roots strictly inside (-2 sqrt q, 2 sqrt q); then b = c + 2q.
template <class Rng>
ppav::IsogenyClassSpec random_surface(Rng& rng, std::int64_t qmax) {
    static thread_local std::vector<std::int64_t> cached;
    static thread_local std::int64_t cached_max = 0;
    if (cached_max != qmax) {
        cached = prime_powers(qmax);
        cached_max = qmax;
    }
    std::uniform_int_distribution<std::size_t> pick(0, cached.size() - 1);
    for (;;) {
        const std::int64_t q = cached[pick(rng)];
        const std::int64_t amax = isqrt64(16 * q);
        std::uniform_int_distribution<std::int64_t> da(-amax, amax), dc(-4 * q, 4 * q);
        const Integer a = da(rng), c = dc(rng), Q = q;
        // distinct real roots, both inside: disc > 0, g(+-2 sqrt q) > 0, vertex inside
        if (a * a - 4 * c <= 0) continue;
        const Integer shifted = 4 * Q + c;
        if (shifted <= 0 || shifted * shifted <= 4 * a * a * Q) continue;
        if (a * a >= 16 * Q) continue;
        const Integer b = c + 2 * Q;
        if (ppav::gcd(b, Q) != 1) continue;
        const IntPoly f = ppav::quartic_weil(a, b, Q);
        if (!ppav::is_simple(f)) continue;
        return ppav::make_spec(f, Q);
    }
}

// B = Z + c O_{K+} inside the real field of a CM field, for n = 2.
inline ppav::Lattice real_order_with_conductor(const ppav::FieldPtr& field,
                                               const ppav::RealQuadraticData& rq, const Integer& c) {
    // sqrt D = (alpha - a)/b in the basis 1, alpha of Q(alpha).
    const Rational a = rq.alpha.a, b = rq.alpha.b;
    std::vector<Rational> sqrt_d{-a / b, Rational(1) / b};
    std::vector<Rational> omega;
    if (rq.field_disc == rq.radicand)
        omega = {Rational(1, 2) + sqrt_d[0] / 2, sqrt_d[1] / 2};
    else
        omega = sqrt_d;
    for (auto& x : omega) {
        x *= c;
        x.canonicalize();
    }
    const auto& real = field->cm().real_field;
    return ppav::Lattice(real, std::vector<ppav::Element>{real->one(), omega});
}

}  // namespace oracle
