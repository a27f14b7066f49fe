#include "ppav/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "ppav/errors.hpp"

namespace ppav {

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Rational floor_rational(const Rational& x) {
    return Rational(floor_div(x.get_num(), x.get_den()));
}

int kronecker_symbol(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int sign(const Integer& n) { return sgn(n); }

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 3.3e24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool fits_u64(const Integer& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
    // mpz_get_ui is 64 bits on LP64 targets.
    static_assert(sizeof(unsigned long) == 8);
    return mpz_get_ui(n.get_mpz_t());
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0 when the
// budget runs out.
Integer pollard_rho(const Integer& n, std::uint64_t& budget) {
    if (mpz_even_p(n.get_mpz_t())) return Integer(2);
    for (unsigned long c = 1; budget > 0; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        auto f = [&](const Integer& v) {
            Integer w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        while (g == 1 && budget > 0) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
                budget = budget > m ? budget - m : 0;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return Integer(0);
}

void factor_rec(const Integer& n, std::vector<Integer>& primes, std::uint64_t& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    Integer d = pollard_rho(n, budget);
    if (d == 0) {
        std::ostringstream partial;
        for (const auto& p : primes) partial << p << ' ';
        partial << "unfactored:" << n;
        throw FactorError("factorization budget exhausted", partial.str());
    }
    factor_rec(d, primes, budget);
    factor_rec(n / d, primes, budget);
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return miller_rabin_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factorize(const Integer& n, const FactorOptions& opts) {
    if (n <= 0) throw DomainError("factorize expects a positive integer");
    if (n > opts.max_input) throw DomainError("factorize input exceeds configured range");
    Factorization out;
    Integer m = n;
    auto take = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(Integer(p), e);
    };
    take(2);
    take(3);
    for (unsigned long p = 5; p <= 1'000'000; p += 6) {
        if (Integer(p) * p > m) break;
        take(p);
        take(p + 2);
    }
    if (m == 1) return out;
    std::vector<Integer> primes;
    std::uint64_t budget = opts.rho_iterations;
    factor_rec(m, primes, budget);
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> divisors(const Factorization& fac) {
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::pair<Integer, unsigned> prime_power_decomposition(const Integer& q) {
    if (q < 2) return {Integer(0), 0};
    const auto fac = factorize(q);
    if (fac.size() != 1) return {Integer(0), 0};
    return fac.front();
}

Integer euler_phi_prime_power(const Integer& q) {
    const auto [p, k] = prime_power_decomposition(q);
    if (k == 0) throw DomainError("not a prime power: " + to_string(q));
    return q - q / p;
}

bool fits_double_exactly(const Integer& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 53;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Integer parse_integer(const std::string& s) {
    Integer n;
    std::string t = s;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (t.empty() || n.set_str(t, 10) != 0) throw DomainError("not an integer: '" + s + "'");
    return n;
}

namespace {

// Round-to-nearest a/b for a, b > 0. GMP's own conversions truncate.
double nearest_double(const Integer& a, const Integer& b) {
    const long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                   static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
    // quotient lands in [2^55, 2^57): three spare bits below the 53 kept
    const long s = 56 - e;
    Integer num = a, den = b;
    if (s > 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::uint64_t bits = mpz_get_ui(q.get_mpz_t());
    if (rem != 0) bits |= 1;  // sticky
    return std::ldexp(static_cast<double>(bits), static_cast<int>(-s));
}

}  // namespace

double to_double(const Integer& n) {
    if (n == 0) return 0.0;
    const double v = nearest_double(abs(n), Integer(1));
    return n < 0 ? -v : v;
}

double to_double(const Rational& r) {
    if (r == 0) return 0.0;
    const double v = nearest_double(abs(r.get_num()), r.get_den());
    return r < 0 ? -v : v;
}

long double to_long_double(const Rational& r) {
    if (r == 0) return 0.0L;
    const Integer num = abs(r.get_num());
    const Integer& den = r.get_den();
    // Scale so the integer quotient carries at least 64 significant bits.
    const long shift = 128 + static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) -
                       static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    Integer scaled = shift >= 0 ? Integer(num << shift) : Integer(num >> -shift);
    Integer quot = scaled / den;
    const long bits = static_cast<long>(mpz_sizeinbase(quot.get_mpz_t(), 2));
    const long drop = bits > 64 ? bits - 64 : 0;
    Integer top = quot >> drop;
    long double v = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
    v = std::ldexp(v, static_cast<int>(drop - shift));
    return sgn(r) < 0 ? -v : v;
}

}  // namespace ppav
