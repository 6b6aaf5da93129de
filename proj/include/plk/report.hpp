#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plk {

enum class CheckMode { Exact, Float };

struct CheckResult {
  std::string check;     // stable identifier, e.g. "jacobi"
  std::string eq;        // the identity being tested, in index notation
  CheckMode mode = CheckMode::Exact;
  std::string residual;  // "0", a "p/q" max-abs, or a float max-abs
  std::string tol;       // "0" for exact checks
  bool pass = false;
  std::string note;      // optional detail (failing component, sample count)
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> entries;
  std::vector<std::string> skipped;  // "<suite>: <reason>"
  std::optional<std::uint64_t> seed;
  std::string digest;

  /// Throws InvalidArgument if a check of the same name is already present.
  void add(CheckResult result);
  bool overall() const;
};

enum class ReportFormat { Human, Machine };

/// Throws InvalidArgument unless `name` is "human" or "machine".
ReportFormat parse_report_format(std::string_view name);

/// Human: an aligned table. Machine: JSON with keys check, eq, mode,
/// residual, tol, pass per entry; byte-identical for identical reports.
std::string emit_report(const VerificationReport& report, ReportFormat format);

/// Lowercase hex SHA-256 of `text`.
std::string sha256_hex(std::string_view text);

}  // namespace plk
