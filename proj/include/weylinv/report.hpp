#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weylinv {

inline constexpr int kReportSchemaVersion = 1;
const char* tool_version();

/// pass: holds as displayed.  patched-pass: fails as displayed, holds with
/// the erratum.  bad-erratum: an erratum exists and its corrected form
/// does not hold.  skipped: not applicable (e.g. another prime).
enum class Status { Pass, Fail, PatchedPass, Skipped, BadErratum };

std::string_view status_name(Status s);
/// fail and bad-erratum.
bool is_failure(Status s);

struct AppliedErratum {
  std::string corrected;
  std::string note;
  std::string author;
};

struct CheckResult {
  std::string id;
  std::string citation;
  Status status = Status::Pass;
  std::string detail;
  /// Residual of the displayed form when it fails.
  std::optional<std::string> residual;
  std::size_t residual_terms = 0;
  std::optional<AppliedErratum> erratum;
  double elapsed_ms = 0;
};

struct Summary {
  std::size_t pass = 0, fail = 0, patched_pass = 0, skipped = 0, bad_erratum = 0;
  std::size_t total() const { return pass + fail + patched_pass + skipped + bad_erratum; }
};

struct Report {
  std::string suite;
  std::uint32_t prime = 3;
  std::uint64_t seed = 0;
  std::string errata_source;
  std::vector<CheckResult> checks;
  /// Informational key/value lines that are not checks.
  std::vector<std::pair<std::string, std::string>> info;

  Summary summary() const;
  /// 0 unless some check failed, then 1.
  int exit_code() const;
  const CheckResult* find(const std::string& id) const;
};

struct EmitOptions {
  bool timing = false;               // include elapsed_ms
  std::size_t residual_chars = 400;  // text format truncates residuals
};

std::string emit_text(const Report& r, const EmitOptions& opts = {});
std::string emit_json(const Report& r, const EmitOptions& opts = {});

}  // namespace weylinv
