#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ssc/verify.hpp"

using namespace ssc;

TEST_CASE("verify M6 over a small range, including the converse") {
    RunOptions run;
    run.pmax = 13;
    run.threads = 2;
    auto reports = verify_family(FamilyLabel::M6, run);
    REQUIRE(reports.size() == 5);  // 2, 5, 7, 11, 13 (3 skipped: bad reduction)

    for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].p < reports[i].p);
    for (const auto& r : reports) {
        REQUIRE(r.verdict.has_value());
        CHECK(*r.verdict == Verdict::Pass);
        CHECK(r.model_valid);
        CHECK(r.genus == 3);
        if (r.p % 3 == 2) {
            CHECK(r.expected == Expectation::Supersingular);
            CHECK(r.supersingular);
            CHECK(r.p_rank == 0);
        } else {
            CHECK(r.expected == Expectation::NotSupersingular);
            CHECK_FALSE(r.supersingular);
        }
        REQUIRE(r.galois.has_value());
        CHECK(r.galois->even_order == (r.p % 3 == 2));
    }
    CHECK(all_pass(reports));
}

TEST_CASE("verify M8 at the exceptional prime") {
    RunOptions run;
    run.pmax = 3;
    auto reports = verify_family(FamilyLabel::M8, run);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].p == 3);
    CHECK(reports[0].f == std::vector<std::int64_t>{0, 7, 0, 14, 0, 7, 0, 1});
    CHECK(reports[0].supersingular);
    CHECK(*reports[0].verdict == Verdict::Pass);
    CHECK_FALSE(reports[0].galois.has_value());  // 3 ramifies in Q(zeta9)+(i)
}

TEST_CASE("inspect reports have no verdict") {
    RunOptions run;
    auto ok = inspect_curve(2, {0, 1, 0, 1}, 3, run);
    CHECK_FALSE(ok.verdict.has_value());
    CHECK(ok.supersingular);
    REQUIRE(ok.newton_slopes.size() == 1);
    CHECK(ok.newton_slopes[0].num == 1);
    CHECK(ok.newton_slopes[0].den == 2);
    CHECK(ok.newton_slopes[0].mult == 2);

    auto not_ss = inspect_curve(3, {0, -1, 0, 0, 1}, 7, run);
    CHECK(not_ss.model_valid);
    CHECK_FALSE(not_ss.supersingular);

    auto bad = inspect_curve(3, {0, -1, 0, 0, 1}, 3, run);
    CHECK_FALSE(bad.model_valid);
    CHECK(bad.error.find("gcd(f, f')") != std::string::npos);
    CHECK_FALSE(bad.verdict.has_value());
}

TEST_CASE("budget exhaustion becomes SKIPPED, not FAIL") {
    RunOptions run;
    run.pmin = 17;
    run.pmax = 17;
    run.budget = 1000;
    auto reports = verify_family(FamilyLabel::M16, run);
    REQUIRE(reports.size() == 1);
    CHECK(*reports[0].verdict == Verdict::Skipped);
    CHECK_FALSE(reports[0].skip_reason.empty());
    CHECK(all_pass(reports));  // skips do not fail the run
}

TEST_CASE("canonical jsonl is byte-stable across runs") {
    RunOptions run;
    run.pmax = 7;
    run.threads = 2;
    auto a = canonical_jsonl(verify_family(FamilyLabel::M6, run));
    auto b = canonical_jsonl(verify_family(FamilyLabel::M6, run));
    CHECK(a == b);
    CHECK(a.find("timings") == std::string::npos);

    // Every line parses and carries the snake_case keys.
    std::istringstream lines(a);
    std::string line;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("family"));
        CHECK(j.contains("l_coefficients"));
        CHECK(j.contains("newton_slopes"));
        CHECK(j.contains("supersingular"));
        CHECK(j.contains("p_rank"));
        CHECK(j.contains("verdict"));
    }
}

TEST_CASE("render formats") {
    RunOptions run;
    run.pmax = 5;
    auto reports = verify_family(FamilyLabel::M6, run);

    auto table = render_reports(reports, OutputFormat::Table);
    CHECK(table.find("PASS") != std::string::npos);
    CHECK(table.find("pass=2 fail=0 skipped=0") != std::string::npos);

    auto csv = render_reports(reports, OutputFormat::Csv);
    CHECK(csv.rfind("family,name,p,m,genus,supersingular", 0) == 0);

    auto jsonl = render_reports(reports, OutputFormat::Jsonl);
    CHECK(jsonl.find("\"timings_ms\"") != std::string::npos);
}

TEST_CASE("M16 reports carry the informational discriminant") {
    RunOptions run;
    run.pmin = 2;
    run.pmax = 2;
    auto reports = verify_family(FamilyLabel::M16, run);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].info.find("59049") != std::string::npos);
    CHECK(reports[0].info.find("3^10") != std::string::npos);
}

TEST_CASE("galois scan rows and flags") {
    auto rows = galois_scan(2, 200);
    REQUIRE(!rows.empty());
    CHECK(rows[0].p == 2);
    CHECK(rows[0].cells[0].order == 6);
    CHECK(rows[0].cells[0].even);
    CHECK(rows[0].cells[0].splits == 1);
    CHECK(rows[0].cells[1].ramified);  // 2 ramifies in the n=36 field
    CHECK(rows[0].cells[2].order == 12);
    for (const auto& row : rows) CHECK(row.violations.empty());

    auto table = render_galois(rows, OutputFormat::Table);
    CHECK(table.find("Q(zeta9)") != std::string::npos);
    auto jsonl = render_galois(rows, OutputFormat::Jsonl);
    auto first = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
    CHECK(first["p"] == 2);
    CHECK(first["Q(zeta9)"]["frobenius_order"] == 6);
}

TEST_CASE("user catalog files load and verify") {
    // y^2 = x^3 + x is supersingular exactly for p = 3 mod 4; run the
    // supersingular direction as a user-supplied entry.
    const char* path = "test_catalog_tmp.json";
    {
        std::ofstream out(path);
        out << R"([{"label":"Other","name":"ss-elliptic","m":2,"f":[0,1,0,1],
                    "prime_condition":{"modulus":4,"residues":[3]},
                    "exceptional_primes":[]}])";
    }
    auto entries = load_catalog_file(path);
    std::remove(path);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].label == FamilyLabel::Other);
    CHECK(entries[0].m == 2);

    RunOptions run;
    run.pmax = 23;
    auto reports = verify_entry(entries[0], run);
    REQUIRE(reports.size() == 5);  // 3, 7, 11, 19, 23
    for (const auto& r : reports) {
        CHECK(r.genus == 1);
        CHECK(r.supersingular);
        CHECK(*r.verdict == Verdict::Pass);
    }
}
