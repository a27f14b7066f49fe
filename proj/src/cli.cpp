#include "ppav/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ppav/census.hpp"
#include "ppav/errors.hpp"
#include "ppav/json_io.hpp"
#include "ppav/measures.hpp"
#include "ppav/orders.hpp"
#include "ppav/stratum.hpp"
#include "ppav/weil.hpp"

namespace ppav {

namespace {

std::vector<Integer> parse_coefficients(const std::string& text) {
    std::vector<Integer> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw DomainError("empty coefficient in --weil");
        c.push_back(parse_integer(item.substr(b, e - b + 1)));
    }
    if (c.empty()) throw DomainError("--weil needs at least one coefficient");
    return c;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    return f;
}

void finish_output(std::ofstream& f, const std::string& path) {
    f.flush();
    if (!f) throw IoError("error while writing '" + path + "'");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_report_text(std::ostream& out, const StratumReport& r) {
    const auto& s = r.spec;
    out << "f = " << to_string(s.f, "x") << " over F_" << to_string(s.q) << " (n = " << s.n << ")\n";
    out << "g = " << to_string(s.g, "x") << "\n";
    out << "angles:";
    for (double a : s.angles) out << ' ' << fmt(a);
    out << "\n";
    out << "weil: yes, simple: yes, ordinary: yes\n";
    const auto& c = r.convenience;
    out << "minimal order: " << (c.is_convenient ? "convenient" : "not convenient")
        << " (conjugation-stable " << (c.stable_under_conjugation ? "yes" : "no")
        << ", real subring Gorenstein " << (c.real_subring_gorenstein ? "yes" : "no")
        << ", pure imaginary index " << to_string(c.pure_imaginary_index) << ")\n";
    const auto& b = r.minimal_order.integer_basis();
    out << "minimal order basis (1/" << to_string(r.minimal_order.denominator()) << "):\n";
    for (std::size_t i = 0; i < b.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < b.cols(); ++j) out << (j ? ", " : "") << to_string(b(i, j));
        out << "]\n";
    }
    if (r.exact_count) {
        out << "exact_count (minimal stratum): " << to_string(*r.exact_count) << "\n";
        out << "strata:";
        for (const auto& st : r.strata)
            out << " f=" << to_string(st.conductor) << ":" << to_string(st.count);
        out << "\nisogeny_class_total (H): " << to_string(*r.isogeny_class_total) << "\n";
    }
    out << "ratio_exact: " << to_string(r.ratio_exact) << "\n";
    out << "ratio_trig: " << fmt(r.ratio_trig) << "\n";
    if (r.estimate) out << "estimate (order of magnitude only): " << fmt(*r.estimate) << "\n";
    out << "odd_ramified: " << to_string(r.odd_ramified) << "\n";
    out << "surjectivity: " << to_string(r.surjectivity) << "\n";
    out << "real_conductor: " << to_string(r.real_conductor) << "\n";
    out << "unit_index_real: " << r.unit_index_real << "\n";
    out << "norm_unit_index: " << r.norm_unit_index << "\n";
    out << "polarizations_per_variety: "
        << (r.polarizations_per_variety ? to_string(*r.polarizations_per_variety) : "undetermined")
        << "\n";
}

struct Options {
    unsigned threads = 0;

    std::string weil;
    std::string q;
    bool json = false;

    std::string p;
    int bins = 40;
    std::string out;
    std::string scan;

    std::string order_file;

    int n = 0;
    int grid = 0;

    std::string m;
    std::string d0;
    std::int64_t limit = 10000;

    std::string family;
    std::string pmax;
};

int cmd_analyze(const Options& o, std::ostream& out) {
    const IntPoly f(parse_coefficients(o.weil));
    const Integer q = parse_integer(o.q);
    const auto spec = make_spec(f, q);
    const auto report = analyze(spec);
    if (o.json)
        out << dump_json(to_json(report)) << "\n";
    else
        print_report_text(out, report);
    return exit_ok;
}

int cmd_census(const Options& o, std::ostream& out) {
    const Integer p = parse_integer(o.p);
    if (o.bins < 1) throw DomainError("--bins must be positive");
    const auto rows = enumerate_ec(p, o.threads);
    const auto summary = summarize(p, rows, o.bins);
    const auto scan = minus_fraction_scan(p, o.threads);
    Json j = to_json(summary);
    const auto& lo = scan.front();
    j["min_fraction"] = {{"t", json_integer(lo.t)},
                         {"delta", json_integer(lo.delta)},
                         {"fraction", json_rational(lo.fraction)},
                         {"bound", json_rational(lo.bound)}};
    if (!o.out.empty()) {
        auto f = open_output(o.out);
        write_census_csv(f, rows);
        finish_output(f, o.out);
    } else {
        Json list = Json::array();
        for (const auto& r : rows)
            list.push_back({{"t", json_integer(r.t)},
                            {"delta", json_integer(r.delta)},
                            {"H", json_integer(r.H)},
                            {"normalized_trace", r.normalized_trace}});
        j["rows"] = list;
    }
    if (!o.scan.empty()) {
        auto f = open_output(o.scan);
        f << "t,delta,fraction,bound\n";
        for (const auto& s : scan)
            f << to_string(s.t) << ',' << to_string(s.delta) << ',' << to_string(s.fraction) << ','
              << to_string(s.bound) << '\n';
        finish_output(f, o.scan);
    }
    out << dump_json(j) << "\n";
    return exit_ok;
}

int cmd_convenient(const Options& o, std::ostream& out) {
    std::ifstream in(o.order_file);
    if (!in) throw IoError("cannot open '" + o.order_file + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("order file is not valid JSON: ") + e.what());
    }
    const Lattice ring = lattice_from_json(doc);
    if (!ring.field()->is_cm())
        throw DomainError("order file does not describe a CM algebra (check f and q)");
    const auto cert = convenient_certificate(ring);
    Json j = to_json(cert);
    j["is_gorenstein"] = is_gorenstein(ring);
    out << dump_json(j) << "\n";
    return exit_ok;
}

int cmd_measures(const Options& o, std::ostream& out) {
    if (o.n < 1 || o.n > 4) throw DomainError("--n must be between 1 and 4");
    if (o.grid < 0 || o.grid == 1) throw DomainError("--grid needs at least 2 points");
    if (o.grid > 0 && o.out.empty()) {
        write_density_grid(out, o.n, o.grid);
        return exit_ok;
    }
    const auto spec = measure_spec(o.n);
    Json j = to_json(spec);
    const int n = o.n;
    j["mu_mass"] = integrate_simplex(n, density_mu, 1e-8, o.threads).value;
    j["nu_stated_mass"] = integrate_simplex(
        n, [](const std::vector<double>& t) { return density_nu(t, NuConstant::stated); }, 1e-8,
        o.threads).value;
    j["nu_effective_mass"] = integrate_simplex(
        n, [](const std::vector<double>& t) { return density_nu(t, NuConstant::effective); }, 1e-8,
        o.threads).value;
    j["average_composed_over_stated"] = std::pow(std::numbers::pi, 2 * n);
    if (o.grid > 0) {
        auto f = open_output(o.out);
        write_density_grid(f, n, o.grid);
        finish_output(f, o.out);
    }
    out << dump_json(j) << "\n";
    return exit_ok;
}

int cmd_find_heavy(const Options& o, std::ostream& out) {
    const Integer m = parse_integer(o.m), d0 = parse_integer(o.d0);
    const auto h = find_heavy_isogeny_class(m, d0, o.limit, o.threads);
    Json j;
    j["m"] = json_integer(m);
    j["d0"] = json_integer(d0);
    j["n"] = json_integer(m * m * abs(d0));
    const Json found = to_json(h);
    for (const auto& [k, v] : found.items()) j[k] = v;
    out << dump_json(j) << "\n";
    return exit_ok;
}

int cmd_examples(const Options& o, std::ostream& out, std::ostream& err) {
    const Family fam = parse_family(o.family);
    const Integer pmax = parse_integer(o.pmax);
    const auto members = family_sweep(fam, pmax, true, o.threads);
    const bool ok = members.empty() || members.back().ok();
    Json j;
    j["family"] = to_string(fam);
    j["pmax"] = json_integer(pmax);
    j["checked"] = members.size();
    j["all_hold"] = ok;
    Json list = Json::array();
    for (const auto& m : members) list.push_back(to_json(m));
    j["members"] = list;
    out << dump_json(j) << "\n";
    if (!ok) {
        err << "check failed for p = " << to_string(members.back().p) << "\n";
        return exit_check_failed;
    }
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Isogeny classes of ordinary abelian varieties: orders, strata and counts"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "Worker threads (default: PPAV_THREADS or all cores)");

    auto* analyze_cmd = app.add_subcommand("analyze", "Report on the minimal stratum of an isogeny class");
    analyze_cmd->add_option("--weil", o.weil, "Weil polynomial coefficients, ascending: c0,c1,...,c2n")
        ->required();
    analyze_cmd->add_option("--q", o.q, "Size of the base field")->required();
    analyze_cmd->add_flag("--json", o.json, "Emit JSON");

    auto* census_cmd = app.add_subcommand("ec-census", "Elliptic-curve trace census over F_p");
    census_cmd->add_option("--p", o.p, "Prime p >= 5")->required();
    census_cmd->add_option("--bins", o.bins, "Histogram bins on [-1, 1]");
    census_cmd->add_option("--out", o.out, "CSV of rows (t, delta, H, normalized_trace)");
    census_cmd->add_option("--scan", o.scan, "CSV of h/H fractions per trace");

    auto* conv_cmd = app.add_subcommand("convenient", "Convenience certificate for an order");
    conv_cmd->add_option("--order-file", o.order_file, "Order as JSON {f, q, den, basis}")->required();

    auto* meas_cmd = app.add_subcommand("measures", "Limiting measures on the angle simplex");
    meas_cmd->add_option("--n", o.n, "Dimension, 1 to 4")->required();
    meas_cmd->add_option("--grid", o.grid, "Grid points per axis for a density CSV");
    meas_cmd->add_option("--out", o.out, "Destination of the density CSV");

    auto* heavy_cmd = app.add_subcommand("find-heavy", "Search p = x^2 + m^2|d0| y^2");
    heavy_cmd->add_option("--m", o.m, "m >= 2")->required();
    heavy_cmd->add_option("--d0", o.d0, "Fundamental discriminant below -4")->required();
    heavy_cmd->add_option("--limit", o.limit, "Bound on x and y");

    auto* ex_cmd = app.add_subcommand("examples", "Sweep an explicit family over p = 7 mod 8");
    ex_cmd->add_option("--family", o.family, "small, smaller or smallest")->required();
    ex_cmd->add_option("--pmax", o.pmax, "Exclusive upper bound on p")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_domain;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(o, out);
        if (*census_cmd) return cmd_census(o, out);
        if (*conv_cmd) return cmd_convenient(o, out);
        if (*meas_cmd) return cmd_measures(o, out);
        if (*heavy_cmd) return cmd_find_heavy(o, out);
        if (*ex_cmd) return cmd_examples(o, out, err);
    } catch (const NotWeilShape& e) {
        err << "error: not a Weil polynomial: " << e.what() << "\n";
        return exit_not_weil;
    } catch (const NotWeil& e) {
        err << "error: " << e.what() << "\n";
        return exit_not_weil;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_domain;
}

}  // namespace ppav
