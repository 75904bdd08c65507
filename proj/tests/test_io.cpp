#include <doctest.h>

#include <nlohmann/json.hpp>
#include <cstdio>
#include <filesystem>

#include "dirac/io.hpp"
#include "helpers.hpp"

using namespace dirac;
using testutil::random_field;

namespace {

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name)
        : path((std::filesystem::temp_directory_path() / name).string()) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("field round trip, json and binary") {
    const GridSpec g(2, 8, 0.25);
    const auto f = random_field(g, 2, 314);
    for (const char* name : {"dwtest_field.json", "dwtest_field.bin"}) {
        TempPath tmp(name);
        save_field(f, tmp.path);
        const auto back = load_field(tmp.path);
        CHECK(back.grid == f.grid);
        CHECK(back.spinor_dim() == 2);
        CHECK((back.values - f.values).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("binary round trip preserves every bit for 3d spinors") {
    const GridSpec g(3, 4, 0.125);
    const auto f = random_field(g, 4, 2718);
    TempPath tmp("dwtest_field3.bin");
    save_field(f, tmp.path);
    const auto back = load_field(tmp.path);
    CHECK(std::memcmp(back.values.data(), f.values.data(),
                      sizeof(Complex) * static_cast<std::size_t>(f.values.size())) == 0);
}

TEST_CASE("walk description lists factors in product order") {
    const auto w = build_dirac_walk(3, 1.0, 0.1);
    const auto doc = describe_walk(w);
    CHECK(doc.at("dim") == 3);
    CHECK(doc.at("spinor_dim") == 4);
    CHECK(doc.at("factors").size() == 7);
    CHECK(doc.at("factors")[0].at("type") == "coin");
    CHECK(doc.at("factors")[2].at("type") == "shift");
    CHECK(doc.at("factors")[2].at("axis") == 0);
    const auto steps = doc.at("factors")[2].at("steps").get<std::vector<int>>();
    CHECK(steps == std::vector<int>{-1, 1, 1, -1});
}

TEST_CASE("csv report format") {
    ConvergenceReport rep{1, 1.0, 1.0, 0.0, 1.5, kLowPassConstant, {}, 1.02};
    rep.rows.push_back({8, 0.125, 1e-3, 2e-3, true});
    rep.rows.push_back({16, 0.0625, 5e-4, 1e-3, true});
    const std::string csv = report_to_csv(rep, "deadbeef00000000");
    CHECK(csv.find("# config_hash=deadbeef00000000") == 0);
    CHECK(csv.find("l,eps,error,bound,ratio\n") != std::string::npos);
    CHECK(csv.find("8,0.125,0.001,0.002,0.5\n") != std::string::npos);

    const auto js = report_to_json(rep);
    CHECK(js.at("rows").size() == 2);
    CHECK(js.at("constants").at("C") == 1.5);
    CHECK(js.at("fitted_order") == 1.02);
}

TEST_CASE("fnv hash is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("abc") != fnv1a_hex("abd"));
}

TEST_CASE("format_double round trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678901234567}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

}  // TEST_SUITE
