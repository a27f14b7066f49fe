#include "ppav/measures.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>

#include <boost/math/quadrature/gauss.hpp>

#include "ppav/errors.hpp"
#include "ppav/parallel.hpp"

namespace ppav {

namespace {

constexpr double kPi = std::numbers::pi;

void check_n(int n) {
    if (n < 1) throw DomainError("dimension n must be positive");
}

void check_range(const std::vector<double>& theta) {
    for (double t : theta)
        if (!(t >= 0.0 && t <= kPi)) throw DomainError("angle outside [0, pi]");
}

void check_ascending(const std::vector<double>& theta) {
    check_range(theta);
    for (std::size_t i = 1; i < theta.size(); ++i)
        if (theta[i] < theta[i - 1]) throw DomainError("angles must be ascending");
}

// 64-point Gauss-Legendre rule on [-1, 1].
struct Rule {
    std::vector<double> x, w;
    Rule() {
        using G = boost::math::quadrature::gauss<double, 64>;
        const auto& a = G::abscissa();
        const auto& wt = G::weights();
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] == 0.0) continue;
            x.push_back(-a[i]);
            w.push_back(wt[i]);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            x.push_back(a[i]);
            w.push_back(wt[i]);
        }
    }
};

const Rule& rule() {
    static const Rule r;
    return r;
}

// Nodes and weights for `panels` equal panels on [lo, hi].
void panel_nodes(double lo, double hi, int panels, std::vector<double>& nodes,
                 std::vector<double>& weights) {
    const Rule& r = rule();
    nodes.clear();
    weights.clear();
    const double h = (hi - lo) / panels;
    for (int k = 0; k < panels; ++k) {
        const double a = lo + k * h, mid = a + h / 2, half = h / 2;
        for (std::size_t i = 0; i < r.x.size(); ++i) {
            nodes.push_back(mid + half * r.x[i]);
            weights.push_back(half * r.w[i]);
        }
    }
}

double integrate_from(int level, int n, double lo, int panels, std::vector<double>& theta,
                      const SimplexDensity& density) {
    if (level == n) return density(theta);
    std::vector<double> nodes, weights;
    panel_nodes(lo, kPi, panels, nodes, weights);
    double sum = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        theta[level] = nodes[i];
        sum += weights[i] * integrate_from(level + 1, n, nodes[i], panels, theta, density);
    }
    return sum;
}

double integrate_with(int n, const SimplexDensity& density, int panels, unsigned threads) {
    std::vector<double> nodes, weights;
    panel_nodes(0.0, kPi, panels, nodes, weights);
    const auto parts = parallel_map(
        nodes.size(),
        [&](std::size_t i) {
            std::vector<double> theta(n);
            theta[0] = nodes[i];
            return weights[i] * integrate_from(1, n, nodes[i], panels, theta, density);
        },
        threads);
    double sum = 0;
    for (double p : parts) sum += p;
    return sum;
}

}  // namespace

Rational constant_v(int n) {
    check_n(n);
    Rational v = Rational(pow(Integer(2), static_cast<unsigned long>(n)));
    for (int k = 2; k <= n; ++k) v /= k;
    for (int j = 1; j <= n; ++j) {
        const Rational f(2 * j, 2 * j - 1);
        for (int e = 0; e < n + 1 - j; ++e) v *= f;
    }
    v.canonicalize();
    return v;
}

double constant_c(int n) {
    check_n(n);
    return std::ldexp(1.0, n * n) / std::pow(kPi, n);
}

double constant_d_stated(int n) { return 1.0 / (to_double(constant_v(n)) * std::pow(kPi, n)); }

double constant_d_effective(int n) {
    check_n(n);
    if (n > 4) throw UnsupportedDegree("simplex quadrature supports n <= 4");
    static std::mutex mutex;
    static std::map<int, double> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    const double mass = integrate_simplex(n, vandermonde_sine).value;
    const double d = 1.0 / mass;
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(n, d);
    return d;
}

MeasureSpec measure_spec(int n) {
    return {n, constant_v(n), constant_c(n), constant_d_stated(n), constant_d_effective(n)};
}

double vandermonde_sine(const std::vector<double>& theta) {
    double v = 1;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        v *= std::sin(theta[i]);
        for (std::size_t j = i + 1; j < theta.size(); ++j) v *= std::cos(theta[i]) - std::cos(theta[j]);
    }
    return v;
}

double density_mu(const std::vector<double>& theta) {
    check_range(theta);
    const double v = vandermonde_sine(theta);
    return constant_c(static_cast<int>(theta.size())) * v * v;
}

double density_nu(const std::vector<double>& theta, NuConstant constant) {
    check_ascending(theta);
    const int n = static_cast<int>(theta.size());
    const double d = constant == NuConstant::stated ? constant_d_stated(n) : constant_d_effective(n);
    return d * vandermonde_sine(theta);
}

QuadratureResult integrate_simplex(int n, const SimplexDensity& density, double tol,
                                   unsigned threads) {
    check_n(n);
    if (n > 4) throw UnsupportedDegree("simplex quadrature supports n <= 4");
    double prev = integrate_with(n, density, 1, threads);
    const int max_panels = n <= 2 ? 64 : (n == 3 ? 8 : 4);
    for (int panels = 2; panels <= max_panels; panels *= 2) {
        const double cur = integrate_with(n, density, panels, threads);
        const double err = std::fabs(cur - prev);
        if (err < tol) return {cur, err, panels};
        prev = cur;
    }
    throw InternalError("simplex quadrature did not reach the requested tolerance");
}

double isogeny_class_count_estimate(int n, const Integer& q) {
    check_n(n);
    const auto [p, k] = prime_power_decomposition(q);
    if (k == 0) throw DomainError("q must be a prime power");
    const double phi_ratio = 1.0 - 1.0 / to_double(p);
    return to_double(constant_v(n)) * phi_ratio * std::pow(to_double(q), n * (n + 1) / 4.0);
}

double average_ppav_estimate(int n, const Integer& q, const std::vector<double>& theta) {
    check_n(n);
    if (static_cast<int>(theta.size()) != n) throw DomainError("expected n angles");
    check_ascending(theta);
    const auto [p, k] = prime_power_decomposition(q);
    if (k == 0) throw DomainError("q must be a prime power");
    const double q_over_phi = 1.0 / (1.0 - 1.0 / to_double(p));
    return std::ldexp(1.0, n * n + 1) / std::pow(kPi, 2 * n) * q_over_phi *
           std::pow(to_double(q), n * (n + 1) / 4.0) * vandermonde_sine(theta);
}

double average_ppav_composed(int n, const Integer& q, const std::vector<double>& theta) {
    check_n(n);
    if (static_cast<int>(theta.size()) != n) throw DomainError("expected n angles");
    check_ascending(theta);
    const double v = vandermonde_sine(theta);
    if (v == 0.0) return 0.0;
    const double ppav = 2.0 * std::pow(to_double(q), n * (n + 1) / 2.0) * density_mu(theta);
    const double classes = isogeny_class_count_estimate(n, q) * constant_d_stated(n) * v;
    return ppav / classes;
}

void write_density_grid(std::ostream& out, int n, int grid) {
    check_n(n);
    if (n > 4) throw UnsupportedDegree("density grids support n <= 4");
    if (grid < 2) throw DomainError("grid needs at least 2 points per axis");
    const double d_stated = constant_d_stated(n), d_eff = constant_d_effective(n);
    for (int i = 1; i <= n; ++i) out << "theta" << i << ',';
    out << "mu,nu_stated,nu_effective\n";
    std::vector<int> idx(n, 0);
    std::vector<double> theta(n);
    char buf[64];
    for (;;) {
        for (int i = 0; i < n; ++i) theta[i] = kPi * idx[i] / (grid - 1);
        const double v = vandermonde_sine(theta);
        for (int i = 0; i < n; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,", theta[i]);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g,", constant_c(n) * v * v);
        out << buf;
        std::snprintf(buf, sizeof buf, "%.17g,", d_stated * v);
        out << buf;
        std::snprintf(buf, sizeof buf, "%.17g\n", d_eff * v);
        out << buf;
        // Next non-decreasing index tuple.
        int k = n - 1;
        while (k >= 0 && idx[k] == grid - 1) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[k];
    }
}

}  // namespace ppav
