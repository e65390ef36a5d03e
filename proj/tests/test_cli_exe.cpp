// End-to-end checks of the installed CLI binary: exit codes, output
// determinism, and the JSON round-trip, via real subprocesses.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SQUAREPROD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("exit code 0 for passing checks") {
    CHECK(run_cli("identity -a -4 -b 2 --x-lo -10 --x-hi 10").exit_code == 0);
    CHECK(run_cli("check-product -a -4 -b 2 --k0 4 -n 11 --mode both").exit_code == 0);
    CHECK(run_cli("reproduce-paper --scan-bound 50").exit_code == 0);
    // a non-square answer is still a successful check
    CHECK(run_cli("check-product -a -1 -b 1 --k0 1 -n 1").exit_code == 0);
}

TEST_CASE("exit code 2 for usage errors") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("pell -D 4 --sign negative").exit_code == 2);
    CHECK(run_cli("pell -D 1").exit_code == 2);
    CHECK(run_cli("identity -a x -b 2").exit_code == 2);
    CHECK(run_cli("identity -a 0 -b 0 --x-lo 5 --x-hi 4").exit_code == 2);
    CHECK(run_cli("scan-intro --which nonsense").exit_code == 2);
    CHECK(run_cli("check-product -a 1 -b 1 --k0 0 -n 99999 --mode brute").exit_code == 2);
}

TEST_CASE("brute-force range guard responds to the environment override") {
    const std::string base = "check-product -a 1 -b 1 --k0 0 -n 99999 --mode brute";
    CHECK(run_cli(base).exit_code == 2);
    const std::string lifted = "env SQUAREPROD_SCAN_LIMIT=100000 " + std::string(SQUAREPROD_CLI_PATH) +
                               " " + base + " 2>/dev/null";
    FILE* pipe = popen(lifted.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    while (fread(buffer.data(), 1, buffer.size(), pipe) > 0) {
    }
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("stdout is byte-identical across runs") {
    for (const char* args : {"reproduce-paper --scan-bound 50 --format json",
                             "check-product -a -4 -b 2 --k0 4 -n 11 --mode both --format text",
                             "classify-family -a -4 -b 2 --k0 4 --scan-bound 100 --format csv"}) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        REQUIRE(first.exit_code == 0);
        REQUIRE(first.stdout_text == second.stdout_text);
        REQUIRE_FALSE(first.stdout_text.empty());
    }
    // jobs must not perturb the output bytes
    const RunResult serial = run_cli("reproduce-paper --scan-bound 50 --format json");
    const RunResult parallel = run_cli("reproduce-paper --scan-bound 50 --format json --jobs 4");
    auto serial_json = nlohmann::ordered_json::parse(serial.stdout_text);
    auto parallel_json = nlohmann::ordered_json::parse(parallel.stdout_text);
    CHECK(serial_json["results"] == parallel_json["results"]);
}

TEST_CASE("JSON output parses and round-trips through the binary") {
    const RunResult r = run_cli("solve-square-values -a 0 -b 9 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.stdout_text);
    CHECK(j["command"] == "solve-square-values");
    CHECK(j["results"]["solutions"][0]["k"] == "-4");
    CHECK(j.dump(2) + "\n" == r.stdout_text);
}

TEST_CASE("CSV output carries one row per pair with a header") {
    const RunResult r = run_cli("solve-square-values -a 0 -b 9 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text == "k,z\n-4,5\n0,3\n4,5\n");

    const RunResult scan = run_cli("scan-intro --which cilleruelo --scan-bound 10 --format csv");
    CHECK(scan.stdout_text == "n,root\n3,10\n");
}
