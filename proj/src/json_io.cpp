#include "ppav/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace ppav {

Json json_integer(const Integer& n) {
    if (fits_double_exactly(n)) return static_cast<std::int64_t>(n.get_si());
    return to_string(n);
}

Json json_decimal(const Integer& n) { return to_string(n); }

Json json_rational(const Rational& r) { return to_string(r); }

namespace {

void dump(const Json& j, int indent, int depth, std::string& out) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                break;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            break;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                dump(e, indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            break;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += '{';
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(k).dump();
                out += indent < 0 ? ":" : ": ";
                dump(v, indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            break;
        }
        default:
            out += j.dump();
    }
}

Json integer_list(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(json_decimal(x));
    return a;
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
    std::string out;
    dump(j, indent, 0, out);
    return out;
}

Json to_json(const Lattice& l) { return Json::parse(lattice_to_json(l).dump()); }

Json to_json(const ConvenienceCertificate& c) {
    Json j;
    j["stable_under_conjugation"] = c.stable_under_conjugation;
    j["real_subring_gorenstein"] = c.real_subring_gorenstein;
    j["pure_imaginary_index"] = json_integer(c.pure_imaginary_index);
    j["is_convenient"] = c.is_convenient;
    return j;
}

Json to_json(const StratumReport& r) {
    Json j;
    Json spec;
    spec["f"] = integer_list(r.spec.f.coeffs());
    spec["q"] = json_decimal(r.spec.q);
    spec["n"] = json_decimal(r.spec.n);
    spec["g"] = integer_list(r.spec.g.coeffs());
    spec["angles"] = r.spec.angles;
    j["spec"] = spec;
    j["weil"] = true;
    j["simple"] = true;
    j["ordinary"] = true;
    j["stratum"] = r.stratum;
    j["minimal_order"] = to_json(r.minimal_order);
    j["convenience"] = to_json(r.convenience);
    j["exact_count"] = r.exact_count ? json_decimal(*r.exact_count) : Json(nullptr);
    if (!r.strata.empty()) {
        Json strata = Json::array();
        for (const auto& s : r.strata)
            strata.push_back({{"conductor", json_decimal(s.conductor)}, {"count", json_decimal(s.count)}});
        j["strata"] = strata;
    }
    j["isogeny_class_total"] =
        r.isogeny_class_total ? json_decimal(*r.isogeny_class_total) : Json(nullptr);
    j["estimate"] = r.estimate ? Json(*r.estimate) : Json(nullptr);
    if (r.estimate) j["estimate_kind"] = "order of magnitude: sqrt of ratio_exact";
    j["ratio_exact"] = json_decimal(r.ratio_exact);
    j["ratio_trig"] = r.ratio_trig;
    j["surjectivity"] = to_string(r.surjectivity);
    j["odd_ramified"] = to_string(r.odd_ramified);
    j["real_conductor"] = json_decimal(r.real_conductor);
    j["unit_index_real"] = json_decimal(r.unit_index_real);
    j["norm_unit_index"] = r.norm_unit_index;
    j["polarizations_per_variety"] =
        r.polarizations_per_variety ? json_decimal(*r.polarizations_per_variety) : Json(nullptr);
    return j;
}

Json to_json(const HeavyClass& h) {
    Json j;
    j["x"] = json_integer(h.x);
    j["y"] = json_integer(h.y);
    j["p"] = json_integer(h.p);
    j["t"] = json_integer(h.t);
    j["delta"] = json_integer(h.delta);
    j["conductor"] = json_integer(h.conductor);
    j["ratio"] = json_rational(h.ratio);
    j["bound"] = json_rational(h.bound);
    j["ratio_value"] = to_double(h.ratio);
    j["bound_value"] = to_double(h.bound);
    return j;
}

Json to_json(const FamilyMember& m) {
    Json j;
    j["family"] = to_string(m.family);
    j["p"] = json_integer(m.p);
    if (m.family != Family::smaller) j["parameter"] = json_integer(m.parameter);
    j["f"] = Json::array();
    for (const auto& c : m.f.coeffs()) j["f"].push_back(json_integer(c));
    j["ratio"] = json_integer(m.ratio);
    j["weil"] = m.weil;
    j["ordinary"] = m.ordinary;
    j["simple"] = m.simple;
    j["bound_checked"] = m.bound_checked;
    j["bound_holds"] = m.bound_holds;
    return j;
}

Json to_json(const CensusSummary& s) {
    Json j;
    j["p"] = json_integer(s.p);
    j["class_count"] = json_integer(s.class_count);
    j["curve_total"] = json_integer(s.curve_total);
    j["predicted_class_count"] = s.predicted_class_count;
    j["count_ratio"] = to_double(s.class_count) / s.predicted_class_count;
    j["bins"] = s.histogram.size();
    j["histogram"] = s.histogram;
    j["semicircle"] = s.semicircle;
    j["tv_to_semicircle"] = s.tv_to_semicircle;
    return j;
}

Json to_json(const MeasureSpec& m) {
    Json j;
    j["n"] = m.n;
    j["v_n"] = json_rational(m.v);
    j["v_n_value"] = to_double(m.v);
    j["c_n"] = m.c;
    j["d_n_stated"] = m.d_stated;
    j["d_n_eff"] = m.d_eff;
    return j;
}

}  // namespace ppav
