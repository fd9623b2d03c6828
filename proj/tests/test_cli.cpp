#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzcert/serialize.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

std::string binary_path() {
    const char* env = std::getenv("SYZCERT_BIN");
    REQUIRE_MESSAGE(env != nullptr, "SYZCERT_BIN must point at the CLI binary");
    return env;
}

RunResult run_cli(const std::string& args) {
    std::string command = binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("ci happy path and sharpness witness") {
    auto good = run_cli("ci --n 3 --degrees 4");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("\"poly\": \"2 0 2\"") != std::string::npos);
    CHECK(good.output.find("\"nonneg\": true") != std::string::npos);

    auto quintic = run_cli("ci --n 3 --degrees 5");
    CHECK(quintic.exit_code == 0);  // outside the hypothesis: expected, not a counterexample
    CHECK(quintic.output.find("\"nonneg\": false") != std::string::npos);
    CHECK(quintic.output.find("\"index\": 1") != std::string::npos);
    CHECK(quintic.output.find("-5/2") != std::string::npos);

    auto zero_dim = run_cli("ci --n 2 --degrees 1,2");
    CHECK(zero_dim.exit_code == 0);
    CHECK(zero_dim.output.find("\"poly\": \"2\"") != std::string::npos);
    CHECK(zero_dim.output.find("\"dim\": 0") != std::string::npos);

    CHECK(run_cli("ci --n 2 --degrees 1,2,3").exit_code == 2);
    CHECK(run_cli("ci --n 3 --degrees 0").exit_code == 2);
    CHECK(run_cli("ci --degrees 4").exit_code == 2);
    CHECK(run_cli("ci --n x").exit_code == 2);
}

TEST_CASE("verify campaign exit codes and summary") {
    auto small = run_cli("verify --n-max 2");
    CHECK(small.exit_code == 0);
    CHECK(small.output.find("cases=5 failures=0") != std::string::npos);

    CHECK(run_cli("verify --n-max 0").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("verify output is byte-identical across worker counts") {
    auto one = run_cli("verify --n-max 4 --workers 1");
    auto four = run_cli("verify --n-max 4 --workers 4");
    auto eight = run_cli("verify --n-max 4 --workers 8");
    CHECK(one.exit_code == 0);
    CHECK(one.output == four.output);
    CHECK(one.output == eight.output);

    auto json_one = run_cli("verify --n-max 4 --format json --workers 1");
    auto json_five = run_cli("verify --n-max 4 --format json --workers 5");
    CHECK(json_one.output == json_five.output);
}

TEST_CASE("certify exit codes: strict, weak, fail") {
    auto strict = run_cli("certify --ci 3:4 --ell 2");
    CHECK(strict.exit_code == 0);
    CHECK(strict.output.find("\"verdict\": \"PASS_STRICT\"") != std::string::npos);
    CHECK(strict.output.find("\"margin\": \"3/2\"") != std::string::npos);

    {
        std::ofstream out("boundary_cli.poly");
        out << "5 0 2\n";
    }
    auto weak = run_cli("certify --poly-file boundary_cli.poly --ell 2");
    CHECK(weak.exit_code == 3);
    CHECK(weak.output.find("\"verdict\": \"PASS_WEAK_AT_K1\"") != std::string::npos);
    std::remove("boundary_cli.poly");

    auto vacuous = run_cli("certify --abelian 2:2 --ell 1");
    CHECK(vacuous.exit_code == 0);
    CHECK(vacuous.output.find("\"rows\": []") != std::string::npos);

    {
        std::ofstream out("failing_cli.poly");
        out << "0 -1 0 1\n";  // t^3 - t: P(1) = 0
    }
    CHECK(run_cli("certify --poly-file failing_cli.poly --ell 2").exit_code == 1);
    std::remove("failing_cli.poly");

    {
        std::ofstream out("fail_verdict.poly");
        out << "10 0 1\n";  // t^2 + 10: criterion holds, margin at k = 1 negative
    }
    auto fail_verdict = run_cli("certify --poly-file fail_verdict.poly --ell 2");
    CHECK(fail_verdict.exit_code == 1);
    CHECK(fail_verdict.output.find("\"verdict\": \"FAIL\"") != std::string::npos);
    std::remove("fail_verdict.poly");

    CHECK(run_cli("certify --ci 3:4").exit_code == 2);               // missing --ell
    CHECK(run_cli("certify --ci 3:4 --ell 0").exit_code == 2);
    CHECK(run_cli("certify --poly-file missing.poly --ell 2").exit_code == 2);
    CHECK(run_cli("certify --ci 3:4 --abelian 2:2 --ell 2").exit_code == 2);
    CHECK(run_cli("certify --ell 2").exit_code == 2);                // no source
}

TEST_CASE("certify echoes assumed hypotheses") {
    auto cert = run_cli("certify --ci 3:4 --ell 2 --picard-rank-one --minus-k-nef");
    CHECK(cert.exit_code == 0);
    CHECK(cert.output.find("\"picard_rank_one\": true") != std::string::npos);
    CHECK(cert.output.find("\"minus_K_nef\": true") != std::string::npos);
}

TEST_CASE("homog matches the ci engine and rejects bad data") {
    auto quadric = run_cli("homog --type B --rank 2 --node 1");
    CHECK(quadric.exit_code == 0);
    auto ci = run_cli("ci --n 4 --degrees 2");
    // same polynomial through an unrelated engine
    auto extract_poly = [](const std::string& text) {
        auto pos = text.find("\"poly\": \"");
        REQUIRE(pos != std::string::npos);
        pos += 9;
        return text.substr(pos, text.find('"', pos) - pos);
    };
    CHECK(extract_poly(quadric.output) == extract_poly(ci.output));

    CHECK(run_cli("homog --type A --rank 0 --node 1").exit_code == 2);
    CHECK(run_cli("homog --type Q --rank 2 --node 1").exit_code == 2);
    CHECK(run_cli("homog --type A --rank 3 --node 9").exit_code == 2);
}

TEST_CASE("json reports round-trip byte-identically") {
    for (const std::string& args :
         {std::string("ci --n 3 --degrees 4 --criterion"), std::string("homog --type A --rank 3 --node 2"),
          std::string("certify --ci 6:2,2 --ell 3"), std::string("verify --n-max 3 --format json --out cli_report.json"),
          std::string("abelian --n 3 --Hn 6 --criterion")}) {
        auto run = run_cli(args);
        REQUIRE(run.exit_code == 0);
        std::string text = run.output;
        if (args.find("--out") != std::string::npos) {
            std::ifstream in("cli_report.json");
            REQUIRE(in.good());
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else {
            // strip the trailing summary line if present (verify prints one)
        }
        auto parsed = syzcert::Json::parse(text);
        CHECK(syzcert::dump_json(parsed) == text);
    }
    std::remove("cli_report.json");
}

TEST_CASE("tsv format for scalar reports") {
    auto tsv = run_cli("ci --n 3 --degrees 4 --format tsv");
    CHECK(tsv.exit_code == 0);
    CHECK(tsv.output.find("poly\t2 0 2\n") != std::string::npos);
    CHECK(tsv.output.find("nonneg\ttrue\n") != std::string::npos);
}

TEST_CASE("workers from environment variable") {
    auto run = run_cli("verify --n-max 3");
    std::string with_env_cmd = "SYZCERT_WORKERS=4 " + binary_path() + " verify --n-max 3 2>&1";
    FILE* pipe = popen(with_env_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(output == run.output);
}

TEST_CASE("todd subcommand via flags matches ci for the quartic surface") {
    auto todd = run_cli("todd --n 2 --Hn 4 --c2H 24 --chiO 2");
    CHECK(todd.exit_code == 0);
    CHECK(todd.output.find("\"poly\": \"2 0 2\"") != std::string::npos);
    CHECK(todd.output.find("\"warnings\": []") != std::string::npos);

    auto inconsistent = run_cli("todd --n 2 --Hn 4 --c2H 24 --chiO 3");
    CHECK(inconsistent.exit_code == 0);
    CHECK(inconsistent.output.find("does not equal chi(O)") != std::string::npos);

    CHECK(run_cli("todd --n 5 --Hn 1 --chiO 1").exit_code == 2);  // needs direct entries
    auto direct = run_cli("todd --entries 1,0,0,0,1,2");
    CHECK(direct.exit_code == 0);
    CHECK(direct.output.find("\"n\": 5") != std::string::npos);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("certify --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}
