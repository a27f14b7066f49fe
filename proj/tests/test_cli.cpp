#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppav/cli.hpp"

using ppav::run_cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ppav");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ppav_cli_test_" + name);
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

const std::string order_file = PPAV_SOURCE_DIR "/data/ex-inconvenient.json";

}  // namespace

TEST_CASE("analyze a surface") {
    const auto r = run({"analyze", "--weil", "529,-138,32,-6,1", "--q", "23", "--json"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j.at("ratio_exact") == "255024");
    CHECK(j.at("convenience").at("is_convenient") == true);
    CHECK(j.at("exact_count").is_null());
    CHECK(j.at("spec").at("n") == "2");
    CHECK(j.at("unit_index_real") == "2");
    CHECK(j.at("polarizations_per_variety") == "2");
    CHECK(j.at("surjectivity") == "certified");

    const auto text = run({"analyze", "--weil", "529,-138,32,-6,1", "--q", "23"});
    CHECK(text.code == 0);
    CHECK(text.out.find("ratio_exact: 255024") != std::string::npos);
}

TEST_CASE("analyze an elliptic curve") {
    const auto r = run({"analyze", "--weil", "5,-3,1", "--q", "5", "--json"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j.at("exact_count") == "1");
    CHECK(j.at("isogeny_class_total") == "1");
    CHECK(j.at("estimate").is_null());
    CHECK(j.at("ratio_exact") == "11");
    CHECK(j.at("polarizations_per_variety") == "1");
}

TEST_CASE("analyze rejects bad input with stable codes") {
    CHECK(run({"analyze", "--weil", "4,0,5,0,1", "--q", "2"}).code == 3);
    CHECK(run({"analyze", "--weil", "5,-5,1", "--q", "5"}).code == 3);
    CHECK(run({"analyze", "--weil", "7,0,7,0,1", "--q", "7"}).code == 3);
    CHECK(run({"analyze", "--weil", "5,-3,2", "--q", "5"}).code == 3);
    CHECK(run({"analyze", "--weil", "5,x,1", "--q", "5"}).code == 2);
    CHECK(run({"analyze", "--weil", "6,-3,1", "--q", "6"}).code == 2);
    CHECK(run({"analyze", "--weil", "5,-3,1"}).code == 2);
    CHECK(run({"analyze", "--weil", "5,-3,1", "--q", "5", "--bogus"}).code == 2);
    const auto r = run({"analyze", "--weil", "4,0,5,0,1", "--q", "2"});
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("help and unknown commands") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("ec-census") {
    const auto csv = temp_path("census.csv");
    const auto r = run({"ec-census", "--p", "101", "--bins", "20", "--out", csv.string()});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j.at("class_count") == 40);
    CHECK(j.at("bins") == 20);
    CHECK(j.at("histogram").size() == 20);
    std::ifstream in(csv);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto l = lines(buf.str());
    CHECK(l.size() == 41);
    CHECK(l.front() == "t,delta,H,normalized_trace");
    std::filesystem::remove(csv);

    const auto embedded = run({"ec-census", "--p", "101"});
    CHECK(parse(embedded).at("rows").size() == 40);
    CHECK(run({"ec-census", "--p", "100"}).code == 2);
    CHECK(run({"ec-census", "--p", "101", "--out", "/nonexistent-dir/x.csv"}).code == 4);
}

TEST_CASE("convenient") {
    const auto r = run({"convenient", "--order-file", order_file});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j.at("is_convenient") == false);
    CHECK(j.at("pure_imaginary_index") == 2);
    CHECK(j.at("stable_under_conjugation") == true);
    CHECK(j.at("real_subring_gorenstein") == true);
    CHECK(j.at("is_gorenstein") == true);

    CHECK(run({"convenient", "--order-file", "/nonexistent/order.json"}).code == 4);
    const auto bad = temp_path("bad.json");
    std::ofstream(bad) << "{not json";
    CHECK(run({"convenient", "--order-file", bad.string()}).code == 2);
    std::filesystem::remove(bad);
}

TEST_CASE("measures") {
    const auto r = run({"measures", "--n", "2"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j.at("v_n") == "32/3");
    CHECK(j.at("d_n_eff").get<double>() == doctest::Approx(0.75));
    CHECK(j.at("mu_mass").get<double>() == doctest::Approx(1).epsilon(1e-6));

    const auto grid = run({"measures", "--n", "1", "--grid", "5"});
    REQUIRE(grid.code == 0);
    const auto l = lines(grid.out);
    CHECK(l.size() == 6);
    CHECK(l.front() == "theta1,mu,nu_stated,nu_effective");
    CHECK(run({"measures", "--n", "0"}).code == 2);
    CHECK(run({"measures", "--n", "7"}).code == 2);
}

TEST_CASE("find-heavy") {
    const auto r = run({"find-heavy", "--m", "2", "--d0", "-7"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j.at("p") == 29);
    CHECK(j.at("delta") == -112);
    CHECK(j.at("conductor") == 4);
    CHECK(j.at("ratio") == "1/2");
    CHECK(j.at("bound") == "3/4");
    CHECK(run({"find-heavy", "--m", "2", "--d0", "-12"}).code == 2);
}

TEST_CASE("examples") {
    const auto r = run({"examples", "--family", "smaller", "--pmax", "1000"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j.at("all_hold") == true);
    CHECK(j.at("checked") == 43);
    CHECK(run({"examples", "--family", "huge", "--pmax", "100"}).code == 2);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
    const std::vector<std::vector<std::string>> cmds{
        {"analyze", "--weil", "529,-138,32,-6,1", "--q", "23", "--json"},
        {"ec-census", "--p", "1009"},
        {"measures", "--n", "2"},
        {"examples", "--family", "small", "--pmax", "2000"},
        {"find-heavy", "--m", "3", "--d0", "-11"},
    };
    for (const auto& c : cmds) {
        auto one = c, four = c;
        one.insert(one.end(), {"--threads", "1"});
        four.insert(four.end(), {"--threads", "4"});
        const auto a = run(c), b = run(one), d = run(four);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == d.out);
    }
}
