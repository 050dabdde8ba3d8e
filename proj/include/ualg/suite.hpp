#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ualg/corpus.hpp"

namespace ualg {

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

/// Evidence for one check on one subject (an algebra, a product or a pair).
struct SuiteRecord {
  std::string subject;
  Verdict verdict = Verdict::pass;
  std::size_t instances = 0;
  /// Summary on a pass, witness on a fail, reason on a skip.
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::string statement;
  Verdict verdict = Verdict::skipped;
  std::size_t instances = 0;
  /// Ordered by subject.
  std::vector<SuiteRecord> records;
  /// First failing record's subject and detail.
  std::string witness;
};

struct SuiteOptions {
  /// Check names to run; empty runs all of them.
  std::vector<std::string> checks;
  /// Builtin corpus names; empty selects the whole corpus.
  std::vector<std::string> corpus;
  /// Shuffles the order in which subjects are processed. Reports do not
  /// depend on it.
  std::optional<std::uint64_t> seed;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::size_t count(Verdict v) const;
};

struct CheckInfo {
  std::string name;
  std::string statement;
};

/// Every registered check, ordered by name.
const std::vector<CheckInfo>& suite_checks();

/// Names the suite must cover that are missing from the registry, followed by
/// names registered more than once. Empty when the registry is complete.
std::vector<std::string> coverage_gaps();

/// Throws InvalidInput on an unknown check or corpus name.
SuiteReport run_suite(const SuiteOptions& options = {});

/// Plain-text report, one block per check.
std::string format_report(const SuiteReport& report);

}  // namespace ualg
