#include "harmap/cli.hpp"
#include "harmap/io.hpp"
#include "../support.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <unistd.h>

using namespace harmap;
using harmap::testing::fixture;

namespace {

int cli(std::vector<std::string> args) {
    args.insert(args.begin(), "harmap");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string tmp(const std::string& name) {
    static const auto dir = [] {
        auto p = std::filesystem::temp_directory_path() / ("harmap_unit_" + std::to_string(::getpid()));
        std::filesystem::create_directories(p);
        return p;
    }();
    return (dir / name).string();
}

io::json load(const std::string& path) { return io::json::parse(io::read_text(path)); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("certify report") {
        CHECK(cli({"certify", fixture("kneser_03.json"), "--report", tmp("k.json")}) == 0);
        const auto j = load(tmp("k.json"));
        CHECK(j["command"] == "certify");
        CHECK(j["grid_size"] == 1024);
        CHECK(j["verdict"] == "invertible");
        CHECK(j["mode"] == "full");
        CHECK(j["windings"]["wn_f"] == 1);
        CHECK(j["partition"]["gamma_nc_count"] > 0);  // not convex, still invertible
        CHECK(j["min_jacobian"].get<double>() == doctest::Approx(0.64).epsilon(1e-10));
    }

    TEST_CASE("nonconvex mode and grid size") {
        CHECK(cli({"certify", fixture("target_u.json"), "--nonconvex-only", "--samples", "512", "--report",
                   tmp("u.json")}) == 3);
        const auto j = load(tmp("u.json"));
        CHECK(j["mode"] == "nonconvex_only");
        CHECK(j["grid_size"] == 512);
        CHECK(j["checked_count"] == j["partition"]["gamma_nc_count"]);
        CHECK(cli({"certify", fixture("circle.json"), "--samples", "1000"}) == 2);
    }

    TEST_CASE("sample-format inputs keep their grid") {
        CHECK(cli({"shear", fixture("f_z.json"), fixture("omega_08z2.json"), "--report", tmp("s.json"), "--out-curve",
                   tmp("trace.json")}) == 0);
        CHECK(cli({"certify", tmp("trace.json"), "--samples", "256", "--report", tmp("t.json")}) == 0);
        const auto j = load(tmp("t.json"));
        CHECK(j["grid_size"] != 256);
        CHECK(j["warnings"].size() >= 1);
    }

    TEST_CASE("shear report") {
        CHECK(cli({"shear", fixture("f_z.json"), fixture("omega_06z.json"), "--order", "64", "--report", tmp("s.json")}) == 0);
        const auto j = load(tmp("s.json"));
        CHECK(j["order"] == 64);
        CHECK(j["sup_omega"].get<double>() == doctest::Approx(0.6));
        CHECK(j["dilatation_roundtrip"].get<double>() <= 1e-8);
        CHECK(j["f_coefficient_gap"].get<double>() == 0.0);
        CHECK(j["certify"]["verdict"] == "invertible");
        CHECK(cli({"shear", fixture("f_z.json"), fixture("omega_101.json"), "--report", tmp("s5.json")}) == 5);
        CHECK(load(tmp("s5.json"))["error"] == "dilatation bound");
    }

    TEST_CASE("extend csv") {
        CHECK(cli({"extend", fixture("circle.json"), "--rings", "2", "--spokes", "8", "--out-csv", tmp("e.csv")}) == 0);
        std::istringstream in(io::read_text(tmp("e.csv")));
        std::string line;
        std::getline(in, line);
        CHECK(line == "r,theta,u,v,detDU");
        int rows = 0;
        while (std::getline(in, line)) {
            ++rows;
            const double det = std::stod(line.substr(line.rfind(',') + 1));
            CHECK(det == doctest::Approx(1.0));
        }
        CHECK(rows == 16);
        CHECK(cli({"extend", fixture("circle.json"), "--rings", "0"}) == 2);
    }

    TEST_CASE("conformal report") {
        CHECK(cli({"conformal", fixture("near_circle.json"), "--center", "0", "0", "--report", tmp("c.json")}) == 0);
        const auto j = load(tmp("c.json"));
        CHECK(j["residual"].get<double>() <= 1e-10);
        CHECK(j["boundary_fidelity"].get<double>() <= 1e-7);
        CHECK(cli({"conformal", fixture("ellipse.json"), "--center", "9", "0", "--report", tmp("c7.json")}) == 7);
    }

    TEST_CASE("usage errors") {
        CHECK(cli({"bogus"}) == 2);
        CHECK(cli({"certify"}) == 2);
        CHECK(cli({"--help"}) == 0);
    }
}
