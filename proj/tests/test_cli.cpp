#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

// End-to-end tests for the command-line tool. CMDEG_CLI_PATH is injected by
// the build so the tests always exercise the binary from the same tree.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the tool through the shell and captures stdout (stderr unless the
// caller redirects it inside `args`).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(CMDEG_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe)) {
        result.output += buffer.data();
    }
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path fresh_dir(const char* leaf) {
    const auto dir = std::filesystem::temp_directory_path() / leaf;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("degree emits one frozen JSON line per base field") {
    const RunResult both = run_cli("degree --delta -3 --m 1 --n 9 --over both");
    CHECK(both.exit_code == 0);
    CHECK(both.output ==
          "{\"delta_k\":-3,\"f\":1,\"delta\":-3,\"m_level\":1,\"n_level\":9,"
          "\"over\":\"kf\",\"degree\":3,\"clause\":\"kf-orbit-product\","
          "\"multiples_closed\":true}\n"
          "{\"delta_k\":-3,\"f\":1,\"delta\":-3,\"m_level\":1,\"n_level\":9,"
          "\"over\":\"qf\",\"degree\":3,\"clause\":\"pp-within-m\","
          "\"multiples_closed\":false}\n");

    const RunResult qf = run_cli("degree --delta -4 --m 2 --n 4 --over qf");
    CHECK(qf.exit_code == 0);
    CHECK(qf.output ==
          "{\"delta_k\":-4,\"f\":1,\"delta\":-4,\"m_level\":2,\"n_level\":4,"
          "\"over\":\"qf\",\"degree\":2,\"clause\":\"m2-gauss-doubled\","
          "\"multiples_closed\":false}\n");

    // --delta-k/--f spelling resolves to the same order as --delta.
    const RunResult split_form =
        run_cli("degree --delta-k -3 --f 2 --n 2 --over qf");
    const RunResult delta_form = run_cli("degree --delta -12 --n 2 --over qf");
    CHECK(split_form.exit_code == 0);
    CHECK(split_form.output == delta_form.output);
    CHECK(split_form.output.find("\"delta\":-12") != std::string::npos);
}

TEST_CASE("degree --human renders an aligned text block") {
    const RunResult human = run_cli("degree --delta -3 --n 9 --over both --human");
    CHECK(human.exit_code == 0);
    CHECK(human.output.find("order: delta_k=-3 f=1 delta=-3") != std::string::npos);
    CHECK(human.output.find("kf-orbit-product") != std::string::npos);
    CHECK(human.output.find("pp-within-m") != std::string::npos);
}

TEST_CASE("isogeny reports level and prime views") {
    const RunResult by_n = run_cli("isogeny --delta -16 --n 4");
    CHECK(by_n.exit_code == 0);
    CHECK(by_n.output ==
          "{\"delta_k\":-4,\"f\":2,\"delta\":-16,\"n_level\":4,\"qf\":true,"
          "\"structural\":true,\"kf\":true,\"depth\":{\"2\":{\"m\":2,\"M\":3}}}\n");

    // Below the fundamental bound the structural criterion does not apply and
    // the base-change answer for a mixed composite level is out of scope.
    const RunResult eisenstein = run_cli("isogeny --delta -3 --n 18");
    CHECK(eisenstein.exit_code == 0);
    CHECK(eisenstein.output ==
          "{\"delta_k\":-3,\"f\":1,\"delta\":-3,\"n_level\":18,\"qf\":false,"
          "\"structural\":null,\"kf\":\"unsupported\","
          "\"depth\":{\"2\":{\"m\":1,\"M\":1},\"3\":{\"m\":2,\"M\":2}}}\n");

    const RunResult by_ell = run_cli("isogeny --delta -7 --ell 2");
    CHECK(by_ell.exit_code == 0);
    CHECK(by_ell.output ==
          "{\"delta_k\":-7,\"f\":1,\"delta\":-7,\"ell\":2,\"m\":1,\"M\":\"inf\"}\n");
}

TEST_CASE("orbits, dual, and classnumber emit frozen JSON") {
    const RunResult orbits = run_cli("orbits --delta -4 --m 1 --n 2");
    CHECK(orbits.exit_code == 0);
    CHECK(orbits.output ==
          "{\"delta_k\":-4,\"f\":1,\"delta\":-4,\"m_level\":1,\"n_level\":2,"
          "\"pair_count\":3,\"min_size\":1,\"min_reduced_size\":1,"
          "\"orbit_sizes\":[1,2],\"reduced_orbit_sizes\":[1,1]}\n");

    const RunResult dual = run_cli("dual --case split --ell 2 --c 1 --a 1 --b 3");
    CHECK(dual.exit_code == 0);
    CHECK(dual.output ==
          "{\"case\":\"split\",\"ell\":2,\"c\":1,\"a\":1,\"b\":3,"
          "\"module\":[1,3],\"kernel\":1,\"image\":[0,3]}\n");

    const RunResult h = run_cli("classnumber --delta -47");
    CHECK(h.exit_code == 0);
    CHECK(h.output ==
          "{\"delta_k\":-47,\"f\":1,\"delta\":-47,\"class_number\":5}\n");

    const RunResult recount = run_cli("classnumber --delta -23 --recount");
    CHECK(recount.exit_code == 0);
    CHECK(recount.output ==
          "{\"delta_k\":-23,\"f\":1,\"delta\":-23,\"class_number\":3,"
          "\"recount\":3}\n");
}

TEST_CASE("exit codes follow the documented contract") {
    CHECK(run_cli("degree --delta -5 --n 2").exit_code == 2);   // not a discriminant
    CHECK(run_cli("degree --delta -3 --n 0").exit_code == 2);   // bad level
    CHECK(run_cli("orbits --delta -3 --m 1 --n 100").exit_code == 3);  // cap
    CHECK(run_cli("").exit_code == 2);                          // missing subcommand
    CHECK(run_cli("degree --delta -3 --n 2 --bogus").exit_code == 2);
    CHECK(run_cli("isogeny --delta -3").exit_code == 2);        // neither --n nor --ell
    CHECK(run_cli("table --max-abs-delta 8 --max-n 2 --no-cache"
                  " --out /nonexistent-dir/x.jsonl").exit_code == 4);
    CHECK(run_cli("--version").output == "0.1.0\n");
}

TEST_CASE("verify quick sweep passes and fault injection fails loudly") {
    const RunResult ok = run_cli("verify --quick", /*merge_stderr=*/true);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find(" 0 failed") != std::string::npos);
    CHECK(ok.output.find("dual-identities") != std::string::npos);

    const RunResult bad =
        run_cli("verify --quick --inject-fault", /*merge_stderr=*/true);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("t-tilde-oracle") != std::string::npos);
    CHECK(bad.output.find("1 failed") != std::string::npos);
}

TEST_CASE("table output is byte-stable and the cache round-trips") {
    const std::string grid = "table --max-abs-delta 12 --max-n 4 --no-cache";
    const RunResult serial = run_cli(grid + " --workers 1");
    const RunResult parallel = run_cli(grid + " --workers 8");
    CHECK(serial.exit_code == 0);
    CHECK(!serial.output.empty());
    CHECK(serial.output == parallel.output);
    CHECK(run_cli(grid + " --workers 1").output == serial.output);

    const auto dir = fresh_dir("cmdeg-cli-cache-test");
    const std::string cached =
        "table --max-abs-delta 12 --max-n 4 --cache-dir " + dir.string();
    const RunResult first = run_cli(cached, /*merge_stderr=*/true);
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("table: computed") != std::string::npos);
    const RunResult second = run_cli(cached, /*merge_stderr=*/true);
    CHECK(second.exit_code == 0);
    CHECK(second.output.find("table: cache hit") != std::string::npos);

    // Same bytes on both runs once the status line is stripped.
    const auto strip = [](const std::string& text) {
        std::string body;
        for (std::size_t pos = 0; pos < text.size();) {
            const std::size_t end = text.find('\n', pos);
            const std::string line = text.substr(pos, end - pos);
            if (line.rfind("table:", 0) != 0) body += line + "\n";
            pos = (end == std::string::npos) ? text.size() : end + 1;
        }
        return body;
    };
    CHECK(strip(first.output) == strip(second.output));
    std::filesystem::remove_all(dir);
}

TEST_CASE("a config file supplies subcommand flags") {
    const auto dir = fresh_dir("cmdeg-cli-config-test");
    const auto cfg = dir / "cfg.ini";
    {
        std::ofstream out(cfg);
        out << "[table]\nmax-abs-delta=8\nmax-n=2\nno-cache=true\n";
    }
    const RunResult from_config = run_cli("--config " + cfg.string() + " table");
    const RunResult from_flags = run_cli("table --max-abs-delta 8 --max-n 2 --no-cache");
    CHECK(from_config.exit_code == 0);
    CHECK(from_config.output == from_flags.output);
    CHECK(from_config.output.find("\"clause\":\"m2-gauss-b1\"") !=
          std::string::npos);
    std::filesystem::remove_all(dir);
}
