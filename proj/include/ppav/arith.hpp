#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ppav {

using Integer = mpz_class;
using Rational = mpq_class;

/// (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<Integer, unsigned>>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exp);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Rational floor_rational(const Rational& x);

/// Kronecker symbol (a | n), the usual extension of the Jacobi symbol to all n.
int kronecker_symbol(const Integer& a, const Integer& n);

/// Deterministic below 2^64; BPSW plus Miller-Rabin rounds above.
bool is_prime(const Integer& n);

/// Options bounding the work spent in factorize().
struct FactorOptions {
    Integer max_input = Integer(1) << 96;
    std::uint64_t rho_iterations = 50'000'000;
};

/// Prime factorization of n > 0. Throws FactorError when the iteration
/// budget is exhausted, DomainError for n <= 0 or n above max_input.
Factorization factorize(const Integer& n, const FactorOptions& opts = {});

/// Positive divisors of the number with the given factorization, ascending.
std::vector<Integer> divisors(const Factorization& fac);

/// p and k with q = p^k, or nullopt-like {0, 0} when q is not a prime power.
std::pair<Integer, unsigned> prime_power_decomposition(const Integer& q);

/// Euler phi of a prime power p^k.
Integer euler_phi_prime_power(const Integer& q);

int sign(const Integer& n);

/// True when |n| < 2^53, i.e. exactly representable as a double.
bool fits_double_exactly(const Integer& n);

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);
Integer parse_integer(const std::string& s);

double to_double(const Integer& n);
double to_double(const Rational& r);
long double to_long_double(const Rational& r);

}  // namespace ppav
