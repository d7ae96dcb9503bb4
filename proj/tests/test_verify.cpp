#include "doctest.h"

#include "wildram/verify.hpp"

#include "json.hpp"

#include <algorithm>

using namespace wildram;

TEST_CASE("an empty prime list yields an empty report") {
    SuiteConfig cfg;
    cfg.max_m = 7;
    auto rep = run_suite(cfg);
    CHECK(rep.records.empty());
    CHECK(rep.ok());
}

TEST_CASE("primes {3,5} with max_m 7: every thmbeta check passes") {
    SuiteConfig cfg;
    cfg.primes = {3, 5};
    cfg.max_m = 7;
    auto rep = run_suite(cfg);
    long thmbeta = 0;
    for (const auto& r : rep.records) {
        if (r.id.rfind("thmbeta/", 0) == 0) {
            CHECK(r.status == "pass");
            ++thmbeta;
        }
    }
    CHECK(thmbeta == 5 + 6); // m in 1..7 prime to 3, resp. to 5
    CHECK(rep.n_fail == 0);
}

TEST_CASE("primes {5} with max_m 2 includes the (5,2) record with dimension 1") {
    SuiteConfig cfg;
    cfg.primes = {5};
    cfg.max_m = 2;
    auto rep = run_suite(cfg);
    auto it = std::find_if(rep.records.begin(), rep.records.end(),
                           [](const CheckRecord& r) { return r.id == "thmbeta/p5/m02"; });
    REQUIRE(it != rep.records.end());
    CHECK(it->status == "pass");
    CHECK(it->observed.find("brute H^1 = 1") != std::string::npos);
}

TEST_CASE("the report is a pure function of the config") {
    SuiteConfig cfg;
    cfg.primes = {3};
    cfg.max_m = 4;
    cfg.polar_samples = 5;
    cfg.census_samples = 5;
    auto a = run_suite(cfg);
    auto b = run_suite(cfg);
    CHECK(a.to_json_text() == b.to_json_text());
}

TEST_CASE("emitted JSON reparses and re-serializes byte-identically") {
    SuiteConfig cfg;
    cfg.primes = {3};
    cfg.max_m = 2;
    auto rep = run_suite(cfg);
    std::string text = rep.to_json_text();
    auto parsed = nlohmann::ordered_json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
}

TEST_CASE("config serialization round-trips") {
    auto cfg = SuiteConfig::default_config();
    auto back = SuiteConfig::from_json_text(cfg.to_json_text());
    CHECK(back.to_json_text() == cfg.to_json_text());
    CHECK(back.primes == cfg.primes);
    CHECK(back.seed == cfg.seed);
}

TEST_CASE("records are sorted by id with no duplicates") {
    SuiteConfig cfg;
    cfg.primes = {3, 5};
    cfg.max_m = 4;
    cfg.polar_samples = 3;
    auto rep = run_suite(cfg);
    for (size_t i = 1; i < rep.records.size(); ++i)
        CHECK(rep.records[i - 1].id < rep.records[i].id);
}
