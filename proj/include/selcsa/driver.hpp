#pragma once

#include <string>

#include <json.hpp>

#include "selcsa/steinitz.hpp"

namespace selcsa {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "selcsa-report/1";

// How a config names a prime of k: the rational prime plus a selector.
// For split primes the root picks the factor (omega = root mod the
// ideal); "ramified"/"inert" select the unique such prime; over Q only
// the rational prime is needed.
struct PrimeSpec {
    i64 p = 2;
    enum class Kind { Rational, Root, Ramified, Inert } kind = Kind::Rational;
    i64 root = 0;
};

PrimeIdeal resolve_prime(const BaseField& k, const PrimeSpec& spec);

struct ScenarioConfig {
    i64 base_discriminant = 0;  // 0 = rationals
    int degree = 3;
    std::vector<QuadInt> min_poly;  // index = exponent, coefficient pairs (a, b)
    std::vector<std::pair<PrimeSpec, Frac>> invariants;
    std::vector<std::pair<PrimeSpec, LocalType>> order_local_types;
    i64 sampling_bound = 1000;
    bool oracle = false;
    std::uint64_t seed = 0;
};

ScenarioConfig parse_config(const nlohmann::json& j);
nlohmann::json serialize_config(const ScenarioConfig& config);

// Full pipeline. The returned document carries the schema id, the config
// echo, class-group data, the per-prime local table, subgroup listings
// and the selectivity report; with config.oracle also the lattice-oracle
// verdict. Identical configs give identical documents except for the
// "generated_at" timestamp.
nlohmann::json run(const ScenarioConfig& config);

// Human-readable narrative for a report document.
std::string explain(const nlohmann::json& report);

// 0 ok, 1 validation error, 2 undetermined prime, 3 oracle mismatch.
int exit_code_for(const nlohmann::json& report);

}  // namespace selcsa
