#include "weylinv/report.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <sstream>

namespace weylinv {

const char* tool_version() { return "1.0.0"; }

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::PatchedPass:
      return "patched-pass";
    case Status::Skipped:
      return "skipped";
    case Status::BadErratum:
      return "bad-erratum";
  }
  return "fail";
}

bool is_failure(Status s) { return s == Status::Fail || s == Status::BadErratum; }

Summary Report::summary() const {
  Summary s;
  for (const auto& c : checks) switch (c.status) {
      case Status::Pass:
        ++s.pass;
        break;
      case Status::Fail:
        ++s.fail;
        break;
      case Status::PatchedPass:
        ++s.patched_pass;
        break;
      case Status::Skipped:
        ++s.skipped;
        break;
      case Status::BadErratum:
        ++s.bad_erratum;
        break;
    }
  return s;
}

int Report::exit_code() const {
  for (const auto& c : checks)
    if (is_failure(c.status)) return 1;
  return 0;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

std::string ms_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

std::string emit_text(const Report& r, const EmitOptions& opts) {
  std::ostringstream out;
  out << "suite " << r.suite << "  (p = " << r.prime << ", seed " << r.seed << ", errata "
      << (r.errata_source.empty() ? "none" : r.errata_source) << ")\n";
  for (const auto& c : r.checks) {
    std::string tag(status_name(c.status));
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << tag << std::string(tag.size() < 13 ? 13 - tag.size() : 1, ' ') << c.id << "  [" << c.citation
        << "]";
    if (opts.timing) out << "  " << ms_text(c.elapsed_ms) << " ms";
    out << "\n";
    if (!c.detail.empty() && c.status != Status::Pass) out << "    " << c.detail << "\n";
    if (c.residual) {
      std::string res = *c.residual;
      if (res.size() > opts.residual_chars) res = res.substr(0, opts.residual_chars) + " ...";
      out << "    residual (" << c.residual_terms << " terms): " << res << "\n";
    }
    if (c.erratum) {
      out << "    erratum: " << c.erratum->note;
      if (!c.erratum->author.empty()) out << " (" << c.erratum->author << ")";
      out << "\n";
    }
  }
  for (const auto& [k, v] : r.info) out << "info  " << k << ": " << v << "\n";
  Summary s = r.summary();
  out << "summary: " << s.pass << " pass, " << s.patched_pass << " patched-pass, " << s.fail << " fail, "
      << s.bad_erratum << " bad-erratum, " << s.skipped << " skipped\n";
  return out.str();
}

std::string emit_json(const Report& r, const EmitOptions& opts) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "weylinv";
  j["version"] = tool_version();
  j["suite"] = r.suite;
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["errata_source"] = r.errata_source;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["id"] = c.id;
    e["citation"] = c.citation;
    e["status"] = std::string(status_name(c.status));
    e["detail"] = c.detail;
    if (c.residual) {
      e["residual"] = *c.residual;
      e["residual_terms"] = c.residual_terms;
    }
    if (c.erratum)
      e["erratum"] = {{"corrected", c.erratum->corrected},
                      {"note", c.erratum->note},
                      {"author", c.erratum->author}};
    if (opts.timing) e["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  ordered_json info = ordered_json::object();
  for (const auto& [k, v] : r.info) info[k] = v;
  j["info"] = std::move(info);
  Summary s = r.summary();
  j["summary"] = {{"pass", s.pass},
                  {"fail", s.fail},
                  {"patched-pass", s.patched_pass},
                  {"skipped", s.skipped},
                  {"bad-erratum", s.bad_erratum},
                  {"total", s.total()}};
  return j.dump(2) + "\n";
}

}  // namespace weylinv
