#pragma once

// Property-suite runner and report format.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gformlab/number_fields.hpp"

namespace gformlab {

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::int64_t conductor_bound = 100;  // degree-3 field corpus
  bool timings = false;                // off keeps reports byte-identical
  std::string tolerance = "exact";     // retained for schema stability
};

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct CheckResult {
  std::string id;
  int criterion = 0;  // acceptance criterion number, 0 for auxiliary sweeps
  Status status = Status::Fail;
  nlohmann::json inputs;   // enough to replay the check
  nlohmann::json details;  // witnesses, counts, failures
  double seconds = 0;
};

inline constexpr int kReportSchemaVersion = 1;

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool ok() const;
  nlohmann::json to_json() const;
  std::string dump() const;  // canonical text, 2-space indent, trailing newline
};

/// stickelberger, resolvend, fields, gform, theorem11, factorization, all.
const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown suite.
Report run_suite(const std::string& name, const SuiteConfig& config);
/// One acceptance criterion (1..10).
CheckResult run_criterion(int criterion, const SuiteConfig& config);
/// Suite that owns a criterion.
std::string suite_of_criterion(int criterion);

/// Squarefree f <= bound with every prime factor = 1 mod p (so p does not
/// divide f). p must be an odd prime.
std::vector<std::int64_t> sieve_conductors(std::int64_t p, std::int64_t bound);

/// Named boolean invariants of the field's ideals: A^2 = d^-1, dual(A) = A,
/// Gram determinants, and the two routes to the different.
nlohmann::json field_invariant_checks(const FieldPtr& k);
/// True iff every value of a flat JSON object of booleans is true.
bool all_true(const nlohmann::json& checks);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

}  // namespace gformlab
