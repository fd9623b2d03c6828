#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzcert/serialize.hpp"
#include "syzcert/verify.hpp"

#include <atomic>
#include <sstream>

using namespace syzcert;

TEST_CASE("small campaign matches the enumeration example") {
    VerifyReport report = run_verify({.n_max = 2, .t_max = 20, .workers = 1});
    REQUIRE(report.rows.size() == 5);
    CHECK(report.failures() == 0);
    CHECK(report.summary() == "cases=5 failures=0");

    const auto& p3 = report.rows[1];  // (n=2, degrees=[])
    CHECK(p3.n == 2);
    CHECK(p3.degrees.empty());
    CHECK(p3.poly.to_string() == "1 3/2 1/2");
    CHECK(!p3.removal_ok.has_value());     // k = 0: identity checks vacuous
    CHECK(!p3.parity_ok.has_value());

    const auto& cubic = report.rows.back();  // (n=2, degrees=[3]): boundary case
    CHECK(cubic.parity_ok.has_value());
    CHECK(*cubic.parity_ok);
    CHECK(cubic.removal_ok.has_value());
}

TEST_CASE("TSV rows are well formed") {
    VerifyReport report = run_verify({.n_max = 3, .t_max = 20, .workers = 1});
    std::string tsv = report.to_tsv();
    std::istringstream lines(tsv);
    std::string line;
    std::size_t count = 0;
    REQUIRE(std::getline(lines, line));
    CHECK(line ==
          "n\tdegrees\tdim\tpoly\tnonneg\tremoval\trecurrence\tparity\toracle\tengines\tcerts");
    while (std::getline(lines, line)) {
        ++count;
        CHECK(std::count(line.begin(), line.end(), '\t') == 10);
    }
    CHECK(count == report.rows.size());
}

TEST_CASE("certificate sweep") {
    VerifyReport off = run_verify({.n_max = 4, .t_max = 20, .ell_max = 0, .workers = 1});
    for (const auto& row : off.rows) CHECK(!row.certs_ok.has_value());

    VerifyReport on = run_verify({.n_max = 4, .t_max = 20, .ell_max = 8, .workers = 2});
    CHECK(on.failures() == 0);
    int swept = 0;
    for (const auto& row : on.rows) {
        if (row.dim >= 2) {
            REQUIRE(row.certs_ok.has_value());
            CHECK(*row.certs_ok);
            ++swept;
        } else {
            CHECK(!row.certs_ok.has_value());
        }
    }
    CHECK(swept > 0);
    CHECK_THROWS(run_verify({.n_max = 2, .t_max = 20, .ell_max = -1, .workers = 1}));
}

TEST_CASE("JSON mirror carries the same fields and round-trips") {
    VerifyReport report = run_verify({.n_max = 2, .t_max = 20, .workers = 1});
    std::string text = report.to_json();
    CHECK(text == dump_json(Json::parse(text)));
    Json j = Json::parse(text);
    REQUIRE(j["cases"].size() == 5);
    CHECK(j["summary"]["failures"] == 0);
    CHECK(j["cases"][0]["n"] == 1);
    CHECK(j["cases"][0]["removal"].is_null());
    CHECK(j["cases"][4]["parity"] == true);
    CHECK(j["cases"][4]["poly"] == "0 3");  // F_2(t;3) = 3t
}

TEST_CASE("output independent of worker count") {
    VerifyReport one = run_verify({.n_max = 5, .t_max = 20, .workers = 1});
    for (int workers : {2, 4, 8, 13}) {
        VerifyReport many = run_verify({.n_max = 5, .t_max = 20, .workers = workers});
        CHECK(one.to_tsv() == many.to_tsv());
        CHECK(one.to_json() == many.to_json());
    }
}

TEST_CASE("parallel_for_index covers every index exactly once") {
    constexpr std::size_t count = 1000;
    std::vector<std::atomic<int>> hits(count);
    parallel_for_index(count, 7, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);
    // degenerate widths
    parallel_for_index(0, 4, [&](std::size_t) { FAIL("must not be called"); });
    CHECK_THROWS(parallel_for_index(3, 0, [](std::size_t) {}));
}

TEST_CASE("propagates worker exceptions") {
    CHECK_THROWS_AS(parallel_for_index(64, 4,
                                       [](std::size_t i) {
                                           if (i == 33) throw std::runtime_error("boom");
                                       }),
                    std::runtime_error);
}

TEST_CASE("config validation") {
    CHECK_THROWS(run_verify({.n_max = 0, .t_max = 20, .workers = 1}));
    CHECK_THROWS(run_verify({.n_max = 5, .t_max = 2, .workers = 1}));
    CHECK_THROWS(run_verify({.n_max = 2, .t_max = 20, .workers = 0}));
}
