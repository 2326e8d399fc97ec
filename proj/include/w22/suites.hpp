#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "w22/omega.hpp"
#include "w22/restricted.hpp"

namespace w22 {

using Json = nlohmann::ordered_json;

/// Raised for malformed or out-of-contract configuration; the CLI maps it
/// to exit code 2.  The message names the offending location.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic 64-bit generator (splitmix64).  Every check gets its own
/// stream seeded from the run seed and the check id, so reports are
/// reproducible regardless of scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform-ish integer in [lo, hi], inclusive; lo <= hi required.
    std::int64_t range(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

/// FNV-1a hash of a string, used to derive per-check seeds.
std::uint64_t fnv1a(std::string_view text);

/// One tensor-module configuration: m polynomial factors over a restricted
/// module (trivial, or Verma-type with the given highest weight).
struct TensorSpec {
    std::string name;
    std::vector<OmegaParams> factors;
    std::optional<HighestWeight> verma; // nullopt: trivial V

    RestrictedModulePtr make_v() const;
    Json to_json() const;
};

struct HomCase {
    OmegaParams source, target;
};

/**
 * Run configuration: explicit parameter sets plus desk-scale bounds.  All
 * scalars are exact; the JSON form writes them as fraction strings.
 */
struct RunConfig {
    std::uint64_t seed = 0;
    std::int64_t index_window = 4;   // |n| bound for Lie-axiom sweeps
    std::int64_t pair_window = 3;    // |n| bound for module-compatibility pairs
    std::int64_t deg_bound = 4;      // degree bound for intertwiner search
    std::int64_t exponent_bound = 2; // monomial exponent bound in module sweeps
    std::int64_t r_bound = 3;        // degenerate-submodule spanning bound
    std::int64_t n_window = 4;       // degenerate-submodule operator window

    std::vector<OmegaParams> omega_params;     // rank-two parameters, alpha != 0
    std::vector<OmegaParams> omega_alpha_zero; // rank-two parameters with alpha = 0
    std::vector<TensorSpec> tensor_modules;
    std::vector<HomCase> hom_cases;
    std::vector<OmegaParams> degenerate_pair; // two factors with equal lambda

    static RunConfig defaults();
    /// Parses a config document over the defaults; unknown keys, malformed
    /// scalars, and contract violations raise ConfigError naming the spot.
    static RunConfig from_json(const Json& doc);
};

/// Result of one check body.
struct CheckOutcome {
    std::string result = "pass"; // "pass" | "fail" | "skipped: precondition"
    Json witness;                // null unless the body recorded one

    static CheckOutcome pass() { return {}; }
    static CheckOutcome fail(Json witness) { return {"fail", std::move(witness)}; }
    static CheckOutcome skip() { return {"skipped: precondition", Json()}; }
};

/// A runnable check: stable id, claim label, parameters for the report, and
/// the body (pure up to its private Rng).
struct CheckJob {
    std::string check_id;
    std::string paper_ref;
    Json params;
    std::function<CheckOutcome(Rng&)> run;
};

struct CheckRecord {
    std::string check_id;
    std::string paper_ref;
    Json params;
    std::string result;
    Json witness;
    std::int64_t millis = 0;
};

struct SuiteRun {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks; // sorted by check_id
    std::size_t passed = 0, failed = 0, skipped = 0;

    bool all_passed() const { return failed == 0; }
};

/// The suite names accepted by the CLI, in canonical order ("all" excluded).
const std::vector<std::string>& suite_names();

/**
 * Builds the jobs of one suite ("all": every suite) from the configuration.
 * Randomized instances are drawn here from the config seed, so the job list
 * itself is deterministic.  Unknown suite names and configuration-contract
 * violations (for example a zero alpha handed to a suite that requires
 * alpha != 0) raise ConfigError.
 */
std::vector<CheckJob> build_suite(const std::string& suite, const RunConfig& cfg);

/// Runs jobs on a bounded worker pool; the record list is sorted by
/// check_id, so the report does not depend on scheduling.
SuiteRun execute_jobs(const std::string& suite, std::vector<CheckJob> jobs, std::uint64_t seed,
                      std::size_t workers);

/// Stable report document: {suite, seed, checks: [{check_id, paper_ref,
/// params, result, witness?, millis?}], summary}.  Per-check millis appear
/// only when with_timings is set, keeping default reports byte-reproducible.
Json report_json(const SuiteRun& run, bool with_timings);

} // namespace w22
