#pragma once

#include "wildram/cohomology.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wildram {

/// What the batch verifier sweeps. Empty lists / zero bounds disable the
/// corresponding check families, so a default-constructed config runs nothing.
struct SuiteConfig {
    std::vector<long> primes;           // thmbeta, eltH1, defsig, condobs, krull, global
    long max_m = 0;                     // conductor range for thmbeta/krull sweeps
    long elth1_max_m = 0;
    std::vector<long> defsig_ms;        // conductors for the defsig instance sweep
    long defsig_instances = 0;          // minimum (ring, a) instances per (p, m)
    std::vector<long> chebyshev_primes;
    std::vector<long> versal_primes;    // sigma_X order check over Z/p^3[X]/(psi)
    std::vector<long> structure_primes; // H^1 module structure sweep
    long structure_max_m = 0;
    std::vector<long> lem425_primes;
    long lem425_max_q = 0;
    long census_samples = 0; // random conductor multisets for the Harbater census
    long polar_samples = 0;  // random polar-reduction property checks
    std::uint64_t seed = 0x77110d5a2026ULL;

    static SuiteConfig default_config();
    static SuiteConfig from_json_text(const std::string& text);
    std::string to_json_text() const;
};

struct CheckRecord {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string provenance; // "paper" | "trivial" | "derived"
    std::string observed;
    std::string status; // "pass" | "fail" | "flagged"
};

struct SuiteReport {
    std::string version;
    std::string config_text;
    std::vector<CheckRecord> records; // sorted by id
    long n_pass = 0, n_fail = 0, n_flagged = 0;

    bool ok() const { return n_fail == 0; }
    std::string to_json_text() const; // byte-stable for a fixed config and version
};

SuiteReport run_suite(const SuiteConfig& config);

} // namespace wildram
