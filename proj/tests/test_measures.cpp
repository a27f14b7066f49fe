#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ppav/errors.hpp"
#include "ppav/measures.hpp"

using namespace ppav;

namespace {

constexpr double pi = std::numbers::pi;

double nu_stated(const std::vector<double>& t) { return density_nu(t, NuConstant::stated); }
double nu_effective(const std::vector<double>& t) { return density_nu(t, NuConstant::effective); }

// Midpoint rule on a fine grid over the ordered simplex, n <= 2.
double midpoint(int n, const SimplexDensity& f, int steps) {
    const double h = pi / steps;
    double s = 0;
    if (n == 1) {
        for (int i = 0; i < steps; ++i) s += f({(i + 0.5) * h});
        return s * h;
    }
    for (int i = 0; i < steps; ++i)
        for (int j = i; j < steps; ++j) {
            const double w = i == j ? 0.5 : 1.0;
            s += w * f({(i + 0.5) * h, (j + 0.5) * h});
        }
    return s * h * h;
}

}  // namespace

TEST_CASE("v_n") {
    CHECK(constant_v(1) == 4);
    CHECK(constant_v(2) == Rational(32, 3));
    // 2^3/3! (2)^3 (4/3)^2 (6/5)
    CHECK(constant_v(3) == Rational(8, 6) * 8 * Rational(16, 9) * Rational(6, 5));
    CHECK(constant_v(3) == Rational(1024, 45));
    CHECK(constant_v(3) > 0);
    CHECK_THROWS_AS(constant_v(0), DomainError);
}

TEST_CASE("c_n and stated d_n") {
    CHECK(constant_c(1) == doctest::Approx(2 / pi));
    CHECK(constant_c(2) == doctest::Approx(16 / (pi * pi)));
    CHECK(constant_d_stated(1) == doctest::Approx(1 / (4 * pi)));
}

TEST_CASE("density mu") {
    CHECK(density_mu({pi / 2}) == doctest::Approx(2 / pi));
    CHECK(density_mu({0.3}) == doctest::Approx(2 / pi * std::sin(0.3) * std::sin(0.3)));
    CHECK(density_mu({0.7, 0.7}) == 0);
    CHECK(density_mu({0.0, 1.0}) == 0);
    CHECK(density_mu({1.0, pi}) == doctest::Approx(0).epsilon(1e-30));
    CHECK_THROWS_AS(density_mu({-0.1}), DomainError);
    CHECK_THROWS_AS(density_mu({3.2}), DomainError);
}

TEST_CASE("density mu is symmetric") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0, pi);
    std::uniform_int_distribution<int> nd(2, 4);
    for (int it = 0; it < 1000; ++it) {
        std::vector<double> t(static_cast<std::size_t>(nd(rng)));
        for (auto& x : t) x = u(rng);
        std::vector<double> s = t;
        std::sort(s.begin(), s.end());
        std::shuffle(t.begin(), t.end(), rng);
        CHECK(density_mu(t) == doctest::Approx(density_mu(s)).epsilon(1e-12));
    }
}

TEST_CASE("density nu") {
    CHECK(density_nu({pi / 2}, NuConstant::effective) == doctest::Approx(0.5));
    CHECK(density_nu({pi / 2}, NuConstant::stated) == doctest::Approx(1 / (4 * pi)));
    CHECK(density_nu({0.4, 0.4}, NuConstant::effective) == 0);
    CHECK_THROWS_AS(density_nu({1.0, 0.5}, NuConstant::effective), DomainError);
}

TEST_CASE("quadrature masses") {
    for (int n = 1; n <= 3; ++n) {
        const auto mu = integrate_simplex(n, density_mu);
        CHECK(std::fabs(mu.value - 1) < 1e-6);
        const auto nu = integrate_simplex(n, nu_effective);
        CHECK(std::fabs(nu.value - 1) < 1e-6);
    }
    CHECK(std::fabs(integrate_simplex(1, density_mu).value - 1) < 1e-7);
    CHECK(std::fabs(integrate_simplex(1, nu_stated).value - 1 / (2 * pi)) < 1e-7);
    CHECK(std::fabs(constant_d_effective(1) - 0.5) < 1e-9);
    CHECK(std::fabs(constant_d_effective(2) - 0.75) < 1e-9);
    CHECK(std::fabs(constant_d_effective(3) - 45.0 / 16) < 1e-7);
    CHECK_THROWS_AS(integrate_simplex(5, density_mu), UnsupportedDegree);
}

TEST_CASE("quadrature agrees with a midpoint oracle") {
    const auto f = [](const std::vector<double>& t) {
        double v = std::exp(-t[0]);
        for (std::size_t i = 1; i < t.size(); ++i) v *= 1 + std::cos(t[i]) * t[0];
        return v;
    };
    for (int n = 1; n <= 2; ++n)
        CHECK(integrate_simplex(n, f).value == doctest::Approx(midpoint(n, f, 4000)).epsilon(1e-5));
    // the ordered square has area pi^2 / 2
    CHECK(integrate_simplex(2, [](const std::vector<double>&) { return 1.0; }).value ==
          doctest::Approx(pi * pi / 2).epsilon(1e-12));
    CHECK(integrate_simplex(3, [](const std::vector<double>&) { return 1.0; }).value ==
          doctest::Approx(pi * pi * pi / 6).epsilon(1e-12));
}

TEST_CASE("quadrature is deterministic across thread counts") {
    const auto a = integrate_simplex(2, density_mu, 1e-8, 1);
    const auto b = integrate_simplex(2, density_mu, 1e-8, 3);
    CHECK(a.value == b.value);
    CHECK(a.panels == b.panels);
}

TEST_CASE("isogeny class count estimate") {
    CHECK(isogeny_class_count_estimate(1, 7) == doctest::Approx(4 * (1 - 1.0 / 7) * std::sqrt(7.0)));
    CHECK(isogeny_class_count_estimate(1, 10007) == doctest::Approx(400.1).epsilon(1e-4));
    CHECK(isogeny_class_count_estimate(1, 49) / isogeny_class_count_estimate(1, 7) ==
          doctest::Approx(std::sqrt(7.0)));
    CHECK(isogeny_class_count_estimate(2, 9) ==
          doctest::Approx(32.0 / 3 * (2.0 / 3) * std::pow(9.0, 1.5)));
    CHECK_THROWS_AS(isogeny_class_count_estimate(1, 12), DomainError);
}

TEST_CASE("per-class average") {
    const long p = 11;
    CHECK(average_ppav_estimate(1, p, {pi / 2}) ==
          doctest::Approx(4 / (pi * pi) * (p / (p - 1.0)) * std::sqrt(double(p))));
    // q -> q Q at the same q/phi(q)
    const double a7 = average_ppav_estimate(2, 7, {0.5, 2.0});
    const double a343 = average_ppav_estimate(2, 343, {0.5, 2.0});
    CHECK(a343 / a7 == doctest::Approx(std::pow(49.0, 1.5)));
    CHECK(average_ppav_estimate(2, 7, {0.9, 0.9}) == 0);
}

TEST_CASE("the composed average differs from the displayed one by pi^(2n)") {
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> u(0.05, pi - 0.05);
    for (int n = 1; n <= 3; ++n)
        for (long q : {5L, 8L, 101L}) {
            std::vector<double> t(static_cast<std::size_t>(n));
            for (auto& x : t) x = u(rng);
            std::sort(t.begin(), t.end());
            const double ratio = average_ppav_composed(n, q, t) / average_ppav_estimate(n, q, t);
            CHECK(ratio == doctest::Approx(std::pow(pi, 2 * n)).epsilon(1e-12));
        }
}

TEST_CASE("density grid CSV") {
    std::ostringstream out;
    write_density_grid(out, 2, 5);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta1,theta2,mu,nu_stated,nu_effective");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 15);  // ascending pairs from 5 points
    CHECK_THROWS_AS(write_density_grid(out, 2, 1), DomainError);

    const auto m = measure_spec(2);
    CHECK(m.v == Rational(32, 3));
    CHECK(m.d_eff == doctest::Approx(0.75));
}
