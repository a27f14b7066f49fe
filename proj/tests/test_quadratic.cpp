#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "ppav/errors.hpp"
#include "ppav/quadratic.hpp"

using namespace ppav;

namespace {

std::vector<std::int64_t> negative_fundamentals(std::int64_t below, std::int64_t above) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = -5; d >= above; --d)
        if (d <= below && oracle::fundamental(d)) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("discriminant decomposition") {
    const auto d = decompose_discriminant(-112);
    CHECK(d.delta0 == -7);
    CHECK(d.conductor == 4);
    CHECK(decompose_discriminant(-16).delta0 == -4);
    CHECK(decompose_discriminant(92).delta0 == 92);
    CHECK(decompose_discriminant(32).conductor == 2);
    CHECK_THROWS_AS(decompose_discriminant(-5), DomainError);
    CHECK_THROWS_AS(decompose_discriminant(9), DomainError);
    for (std::int64_t d0 = -3; d0 > -3000; --d0) REQUIRE(is_fundamental_discriminant(d0) == oracle::fundamental(d0));
    for (std::int64_t d0 = 2; d0 < 3000; ++d0) REQUIRE(is_fundamental_discriminant(d0) == oracle::fundamental(d0));
}

TEST_CASE("imaginary class numbers") {
    CHECK(class_number_imaginary(-4) == 1);
    CHECK(class_number_imaginary(-28) == 1);
    CHECK(class_number_imaginary(-112) == 2);
    CHECK(class_number_imaginary(-63) == 4);
    CHECK_THROWS_AS(class_number_imaginary(-5), DomainError);
    CHECK_THROWS_AS(class_number_imaginary(8), DomainError);
    for (std::int64_t d = -3; d > -4000; --d) {
        if (oracle::mod(d, 4) > 1) continue;
        REQUIRE(class_number_imaginary(d) == oracle::class_number_by_ac(d));
    }
}

TEST_CASE("Dirichlet's formula for fundamental discriminants") {
    for (std::int64_t d : negative_fundamentals(-5, -3000))
        REQUIRE(class_number_imaginary(d) == oracle::class_number_dirichlet(d));
}

TEST_CASE("class number formula examples") {
    CHECK(class_number_by_formula(-7, 1) == 1);
    CHECK(class_number_by_formula(-7, 4) == 2);
    CHECK(class_number_by_formula(-4, 2) == 1);
    CHECK(class_number_imaginary(-16) == 1);
    CHECK(class_number_by_formula(-3, 3) == class_number_imaginary(-27));
    CHECK(class_number_by_formula(-3, 7) == class_number_imaginary(-147));
    CHECK(class_number_by_formula(-4, 5) == class_number_imaginary(-100));
}

TEST_CASE("class number formula matches enumeration on 500 random pairs") {
    const auto fund = negative_fundamentals(-5, -2000);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> pick(0, fund.size() - 1);
    std::uniform_int_distribution<int> fd(1, 50);
    for (int it = 0; it < 500; ++it) {
        const Integer d0 = fund[pick(rng)], f = fd(rng);
        REQUIRE(class_number_by_formula(d0, f) == class_number_imaginary(f * f * d0));
    }
}

TEST_CASE("Kronecker class numbers") {
    CHECK(kronecker_class_number(-4) == 1);
    CHECK(kronecker_class_number(-16) == 2);
    CHECK(kronecker_class_number(-112) == 4);
    CHECK(kronecker_class_number(-63) == 5);
    for (std::int64_t d = -3; d > -3000; --d) {
        if (oracle::mod(d, 4) > 1) continue;
        const Integer H = kronecker_class_number(d), h = class_number_imaginary(d);
        CHECK(H >= h);
        if (oracle::fundamental(d)) CHECK(H == h);
        // direct sum over square divisors with an independent enumeration
        std::int64_t sum = 0;
        for (std::int64_t f = 1; f * f <= -d; ++f) {
            if (d % (f * f) != 0) continue;
            const std::int64_t e = d / (f * f);
            if (oracle::mod(e, 4) > 1) continue;
            sum += oracle::class_number_by_ac(e);
        }
        CHECK(H == sum);
    }
}

TEST_CASE("h over H bound") {
    const auto a = h_over_H_bound(-112);
    CHECK(a.ratio == Rational(1, 2));
    CHECK(a.bound == Rational(3, 4));
    const auto b = h_over_H_bound(-7);
    CHECK(b.ratio == 1);
    CHECK(b.bound == 1);
    const auto c = h_over_H_bound(-63);
    CHECK(c.ratio == Rational(4, 5));
    CHECK(c.bound == Rational(4, 5));
    CHECK(c.ratio <= c.bound);
}

TEST_CASE("h over H bound holds on 1000 random discriminants") {
    const auto fund = negative_fundamentals(-5, -500);
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<std::size_t> pick(0, fund.size() - 1);
    std::uniform_int_distribution<int> fd(1, 60);
    for (int it = 0; it < 1000; ++it) {
        const Integer f = fd(rng);
        const auto r = h_over_H_bound(f * f * fund[pick(rng)]);
        CHECK(r.ratio <= r.bound);
    }
}

TEST_CASE("fundamental units") {
    const auto u5 = fundamental_unit(5);
    CHECK(u5.unit == QuadElement{Rational(1, 2), Rational(1, 2), 5});
    CHECK(u5.norm == -1);
    const auto u8 = fundamental_unit(8);
    CHECK(u8.unit == QuadElement{1, 1, 2});
    CHECK(u8.norm == -1);
    const auto u32 = fundamental_unit(32);
    CHECK(u32.unit == QuadElement{3, 2, 2});
    CHECK(u32.norm == 1);
    CHECK_THROWS_AS(fundamental_unit(16), DomainError);
    CHECK_THROWS_AS(fundamental_unit(-7), DomainError);
}

TEST_CASE("fundamental units agree with a Pell search") {
    for (long d = 5; d < 400; ++d) {
        if (oracle::mod(d, 4) > 1 || is_square(d)) continue;
        const auto u = fundamental_unit(d);
        const auto o = oracle::unit_by_search(d);
        CHECK(u.norm == o.norm);
        CHECK(abs(u.unit.norm()) == 1);
        CHECK(u.unit.approx() > 1);
        // (x + y sqrt d)/2 written over sqrt D
        const Integer s = isqrt(Integer(d) / u.unit.radicand);
        CHECK(u.unit.a == Rational(o.x) / 2);
        CHECK(u.unit.b == Rational(o.y * s) / 2);
    }
}

TEST_CASE("real class numbers") {
    const auto c5 = class_numbers_real(5);
    CHECK(c5.h == 1);
    CHECK(c5.hplus == 1);
    const auto c32 = class_numbers_real(32);
    CHECK(c32.h == 1);
    CHECK(c32.hplus == 2);
    const auto c92 = class_numbers_real(92);
    CHECK(c92.h == 1);
    CHECK(c92.hplus == (fundamental_unit(92).norm == -1 ? 1 : 2));
    CHECK(class_numbers_real(92).hplus == 2);
}

TEST_CASE("real class numbers agree with the analytic formula") {
    for (long d = 5; d < 300; ++d) {
        if (!oracle::fundamental(d)) continue;
        const auto c = class_numbers_real(d);
        CHECK_MESSAGE(c.h == oracle::real_class_number_analytic(d), "d=" << d);
        const int nu = fundamental_unit(d).norm;
        CHECK((c.hplus == c.h || c.hplus == 2 * c.h));
        CHECK((c.hplus == c.h) == (nu == -1));
    }
}

TEST_CASE("ideal factorization examples") {
    CHECK(factor_element_ideal(5, QuadElement{2, 1, 5}).empty());
    const auto r = factor_element_ideal(5, QuadElement{0, 1, 5});
    REQUIRE(r.size() == 1);
    CHECK(r[0].prime.ell == 5);
    CHECK(r[0].prime.type == PrimeType::ramified);
    CHECK(r[0].valuation == 1);
    const auto s = factor_element_ideal(5, QuadElement{4, 1, 5});
    REQUIRE(s.size() == 1);
    CHECK(s[0].prime.ell == 11);
    CHECK((s[0].prime.type == PrimeType::split_plus || s[0].prime.type == PrimeType::split_minus));
    CHECK(s[0].valuation == 1);
    CHECK_THROWS_AS(factor_element_ideal(5, QuadElement{0, 0, 5}), DomainError);
    CHECK_THROWS_AS(factor_element_ideal(2, QuadElement{Rational(1, 2), 0, 2}), DomainError);
    // 11 = (4 + sqrt 5)(4 - sqrt 5): two distinct primes over 11
    const auto e = factor_element_ideal(5, QuadElement{11, 0, 5});
    REQUIRE(e.size() == 2);
    CHECK(e[0].prime.type != e[1].prime.type);
    // 3 is inert in Q(sqrt 5)
    const auto i = factor_element_ideal(5, QuadElement{9, 0, 5});
    REQUIRE(i.size() == 1);
    CHECK(i[0].prime.type == PrimeType::inert);
    CHECK(i[0].valuation == 2);
}

TEST_CASE("valuations times residue degrees recover the norm") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> rd(2, 60), cd(-300, 300);
    int done = 0;
    while (done < 500) {
        const Integer D = squarefree_radicand(rd(rng));
        if (D == 1) continue;
        const bool half = mod_floor(D, Integer(4)) == 1;
        Rational a = cd(rng), b = cd(rng);
        if (half && (cd(rng) & 1)) {
            a += Rational(1, 2);
            b += Rational(1, 2);
        }
        const QuadElement x{a, b, D};
        if (x.norm() == 0) continue;
        const Integer n = abs(x.norm().get_num());
        std::map<Integer, unsigned> weight;
        for (const auto& f : factor_element_ideal(D, x))
            weight[f.prime.ell] += f.valuation * static_cast<unsigned>(f.prime.residue_degree());
        std::map<Integer, unsigned> expect;
        for (const auto& [p, e] : factorize(n)) expect[p] = e;
        CHECK(weight == expect);
        ++done;
    }
}
