// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "gozinta/constructions.hpp"
#include "gozinta/format.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GOZINTA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string temp_instance_file(const gozinta::TrickInstance& w, const std::string& name) {
    std::string path = std::string("/tmp/gozinta_test_") + name + ".gz";
    std::ofstream out(path);
    out << gozinta::render(w);
    return path;
}

}  // namespace

TEST_CASE("coolness") {
    auto r = run_cli("coolness 4321");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "6\n");
    CHECK(run_cli("coolness 1234").output == "0\n");
    CHECK(run_cli("coolness 1223").exit_code == 2);
}

TEST_CASE("verify prints diagrams and OK") {
    auto path = temp_instance_file(gozinta::catalog().at("ex-6-8-10").instance, "triple");
    auto r = run_cli("verify " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("C: 8 × 10 × 12(6)") != std::string::npos);
    CHECK(r.output.find("OK") != std::string::npos);
}

TEST_CASE("verify rejects a bound violation unless --no-bound") {
    gozinta::TrickInstance w = gozinta::catalog().at("ex-3-4-5").instance;
    w.arrangements[0].presentation["B"] = gozinta::Presentation::expanded(gozinta::Scalar(7));
    auto path = temp_instance_file(w, "overexpanded");
    CHECK(run_cli("verify " + path).exit_code == 1);
    CHECK(run_cli("verify " + path + " --no-bound").exit_code == 0);
}

TEST_CASE("diagram matches the library renderer") {
    auto path = temp_instance_file(gozinta::catalog().at("ex-2d-quad").instance, "quad");
    auto r = run_cli("diagram " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("D: 12 × 20(10)") != std::string::npos);
    CHECK(r.output.find("A: 14 × 16(8)") != std::string::npos);
}

TEST_CASE("classify") {
    auto r = run_cli("classify 6,9,10 7,8,11");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Type 3") != std::string::npos);
    CHECK(run_cli("classify 1,2,3 5,6,7").exit_code == 1);
    CHECK(run_cli("classify 1,2 3,4").exit_code == 1);
    CHECK(run_cli("classify nonsense 1,2,3").exit_code == 2);
}

TEST_CASE("achieve emits a bound-restored witness") {
    auto r = run_cli("achieve --dim 3 --boxes 2 --perm 21 --emit /tmp/gozinta_achieve.gz");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Witness") != std::string::npos);
    auto check = run_cli("verify /tmp/gozinta_achieve.gz");
    CHECK(check.exit_code == 0);
}

TEST_CASE("achieve reports infeasibility with exit 1") {
    auto r = run_cli("achieve --dim 3 --boxes 4 --perm 4321");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("ProvedInfeasible") != std::string::npos);
}

TEST_CASE("achieve honors the closed-once restriction flag") {
    auto r = run_cli("achieve --dim 2 --boxes 4 --perm 4321 --normalize");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Witness") != std::string::npos);
    // the restriction is only defined for the natural+reverse problem
    CHECK(run_cli("achieve --dim 3 --boxes 4 --perm 2413 --normalize").exit_code == 1);
}

TEST_CASE("impossible reports counts and a verdict") {
    auto r = run_cli("impossible --dim 2 --boxes 4");
    CHECK(r.exit_code == 1);  // feasible cases exist
    CHECK(r.output.find("all_infeasible=false") != std::string::npos);
    auto r2 = run_cli("impossible --dim 3 --boxes 4");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("all_infeasible=true") != std::string::npos);
    CHECK(r2.output.find("cases_total=707281") != std::string::npos);
    auto all_six = run_cli(
        "impossible --dim 2 --boxes 3 --perm 132 --perm 213 --perm 231 --perm 312 --perm 321");
    CHECK(all_six.exit_code == 0);
    CHECK(all_six.output.find("all_infeasible=true") != std::string::npos);
}

TEST_CASE("brute finds, misses, and respects budgets") {
    CHECK(run_cli("brute --dim 3 --boxes 2 --max-side 5").exit_code == 0);
    auto none = run_cli("brute --dim 2 --boxes 2 --max-side 2");
    CHECK(none.exit_code == 1);
    CHECK(none.output.find("none found") != std::string::npos);
    auto capped = run_cli("brute --dim 3 --boxes 2 --max-side 6 --budget 5");
    CHECK(capped.exit_code == 1);
    CHECK(capped.output.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("catalog lists names and prints entries") {
    auto r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ex-6-8-10") != std::string::npos);
    CHECK(r.output.find("ex-butBAC") != std::string::npos);
    auto entry = run_cli("catalog ex-3-4-5");
    CHECK(entry.exit_code == 0);
    CHECK(gozinta::parse(entry.output) == gozinta::catalog().at("ex-3-4-5").instance);
    CHECK(run_cli("catalog no-such-entry").exit_code == 2);
}

TEST_CASE("constructive subcommands compose through files") {
    auto pair = temp_instance_file(gozinta::catalog().at("ex-3-4-5").instance, "pair");
    auto r = run_cli("boost dup " + pair + " 2 --emit /tmp/gozinta_dup.gz");
    CHECK(r.exit_code == 0);
    CHECK(run_cli("verify /tmp/gozinta_dup.gz --no-bound").exit_code == 0);

    auto triple = temp_instance_file(gozinta::catalog().at("ex-butBAC").instance, "butbac");
    CHECK(run_cli("reduce " + triple + " --emit /tmp/gozinta_red.gz").exit_code == 0);
    CHECK(run_cli("verify /tmp/gozinta_red.gz --no-bound").exit_code == 0);

    CHECK(run_cli("transform scale " + pair + " 2").exit_code == 0);
    CHECK(run_cli("transform shift " + pair + " 1000").exit_code == 0);
    CHECK(run_cli("transform restore /tmp/gozinta_dup.gz").exit_code == 0);
    CHECK(run_cli("transform scale " + pair + " 0").exit_code == 1);

    auto gen = run_cli("gen-triple 4");
    CHECK(gen.exit_code == 0);
    CHECK(gen.output.find("9/2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("verify /no/such/file").exit_code == 2);
    CHECK(run_cli("achieve --dim 3").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}
