#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QLS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 512> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), int(buf.size()), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

json run_json(const std::string& args) {
    RunResult r = run_cli(args + " --format json");
    REQUIRE(r.exit_code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("cst reports exact exponents") {
    json j = run_json("--q 2 cst --alpha \"[0;|Y]\" --f \"[0;|Y^2,Y^2]\"");
    CHECK(j["exponent"] == 2);
    CHECK(j["value"] == "q^-2");
}

TEST_CASE("hurwitz of the period-1 word") {
    json j = run_json("--q 2 hurwitz --alpha \"[0;|Y]\"");
    CHECK(j["exponent"] == 2);
}

TEST_CASE("spectrum json schema") {
    json j = run_json("--q 2 spectrum --alpha \"[0;|Y]\"");
    CHECK(j["q"] == 2);
    CHECK(j["alpha"] == "[0;|Y]");
    CHECK(j["hall_start"] == 4);
    CHECK(j["hall_bound_coarse"] == 4);
    CHECK(j["hurwitz_exponent"] == 2);
    CHECK(j["contains_zero"] == true);
    CHECK(j["zero_is_axiomatic"] == true);
    CHECK(j["exponents_below_bound"] == json::array({2, 3}));
    // every m in [2, hall_start + margin] is a member
    for (const auto& row : j["membership_rows"]) CHECK(row[1] == true);

    // identical run, determinism across worker counts
    json j1 = run_json("--q 2 --workers 1 spectrum --alpha \"[0;|Y]\"");
    json j2 = run_json("--q 2 --workers 2 spectrum --alpha \"[0;|Y]\"");
    CHECK(j1 == j2);
}

TEST_CASE("spectrum csv rows") {
    RunResult r = run_cli("--q 2 --format csv spectrum --alpha \"[0;|Y]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("exponent,member\n", 0) == 0);
    CHECK(r.out.find("2,1") != std::string::npos);
    CHECK(r.out.find("9,1") != std::string::npos);
}

TEST_CASE("height, stats, hall-bound, minpoly, equiv, dist, conjugate") {
    CHECK(run_json("--q 2 height --alpha \"[Y;|Y]\"")["exponent"] == -1);
    json st = run_json("--q 2 stats --alpha \"[0;|Y,Y^4,Y+1,Y^4]\"");
    CHECK(st["M"] == 4);
    CHECK(st["M2"] == 5);
    CHECK(st["m"] == 1);
    json hb = run_json("--q 2 hall-bound --alpha \"[0;|Y,Y^4,Y+1,Y^4]\"");
    CHECK(hb["coarse"] == 40);
    CHECK(hb["refined"] == 25);
    json mp = run_json("--q 2 minpoly --alpha \"[Y;|Y]\"");
    CHECK(mp["A"] == "1");
    CHECK(mp["B"] == "Y");
    CHECK(mp["C"] == "1");
    CHECK(run_json("--q 3 equiv --f \"[0;|2*Y]\" --g \"[0;|Y]\"")["equivalent"] == true);
    CHECK(run_json("--q 2 dist --f \"[0;Y,Y|Y^2]\" --g \"[0;Y,Y+1|Y^2]\"")["exponent"] == 4);
    CHECK(run_json("--q 2 dist --f \"[0;|Y]\" --g \"[0;|Y]\"")["equal"] == true);
    CHECK(run_json("--q 2 conjugate --alpha \"[Y;|Y]\"")["word"] == "[0;|Y]");
}

TEST_CASE("oracle-check passes on a pinned configuration") {
    json j = run_json("--q 2 --workers 2 oracle-check --alpha \"[0;|Y]\" --f \"[0;|Y^2]\" --deg-bound 2 --window-lo 2 --window-hi 8");
    CHECK(j["verdict"] == "PASS");
    CHECK(j["fast_exponent"] == 2);
    CHECK(j["min_ratio_exponent"] == 2);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("--q 2 height --alpha \"[0;Y\"").exit_code == 2);          // bad literal
    CHECK(run_cli("--q 2 height --alpha \"[0;Y]\"").exit_code == 2);         // rational word
    CHECK(run_cli("--q 12 height --alpha \"[0;|Y]\"").exit_code == 2);       // not a prime power
    CHECK(run_cli("--q 2 cst --alpha \"[0;|Y]\" --f \"[Y;|Y]\"").exit_code == 2);  // f in the orbit
    CHECK(run_cli("--q 3 height --alpha \"[0;|3*Y]\"").exit_code == 2);      // coefficient out of range
}

TEST_CASE("explicit modulus is accepted") {
    json j = run_json("--q 4 --modulus \"Y^2+Y+1\" stats --alpha \"[0;|Y,2*Y]\"");
    CHECK(j["M"] == 1);
}

TEST_CASE("every console example in the README runs verbatim") {
    std::ifstream readme(QLS_README_PATH);
    REQUIRE(readme.good());
    std::string line;
    bool in_console = false;
    std::string command;
    std::string expected;
    int examples = 0;
    auto flush = [&] {
        if (command.empty()) return;
        CAPTURE(command);
        RunResult r = run_cli(command.substr(4));  // strip "qls "
        CHECK(r.exit_code == 0);
        CHECK(r.out == expected);
        ++examples;
        command.clear();
        expected.clear();
    };
    while (std::getline(readme, line)) {
        if (!in_console) {
            if (line == "```console") in_console = true;
            continue;
        }
        if (line == "```") {
            flush();
            in_console = false;
            continue;
        }
        if (line.rfind("$ ", 0) == 0) {
            flush();
            command = line.substr(2);
            REQUIRE(command.rfind("qls ", 0) == 0);
        } else {
            expected += line;
            expected += '\n';
        }
    }
    CHECK(examples >= 10);
}
