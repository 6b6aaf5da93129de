#include "plk/report.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "plk/error.hpp"

namespace plk {

void VerificationReport::add(CheckResult result) {
  const bool duplicate = std::any_of(entries.begin(), entries.end(),
                                     [&](const CheckResult& e) { return e.check == result.check; });
  if (duplicate) raise(ErrorKind::InvalidArgument, "check \"" + result.check + "\" reported twice");
  entries.push_back(std::move(result));
}

bool VerificationReport::overall() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckResult& e) { return e.pass; });
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "human") return ReportFormat::Human;
  if (name == "machine") return ReportFormat::Machine;
  raise(ErrorKind::InvalidArgument, "unknown report format \"" + std::string(name) + "\"");
}

namespace {

std::string_view mode_name(CheckMode mode) { return mode == CheckMode::Exact ? "exact" : "float"; }

std::string machine(const VerificationReport& report) {
  nlohmann::ordered_json root;
  root["suite"] = report.suite;
  root["overall"] = report.overall();
  root["seed"] = report.seed ? nlohmann::ordered_json(*report.seed) : nlohmann::ordered_json(nullptr);
  root["digest"] = report.digest;
  root["checks"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json row;
    row["check"] = e.check;
    row["eq"] = e.eq;
    row["mode"] = mode_name(e.mode);
    row["residual"] = e.residual;
    row["tol"] = e.tol;
    row["pass"] = e.pass;
    if (!e.note.empty()) row["note"] = e.note;
    root["checks"].push_back(std::move(row));
  }
  root["skipped"] = report.skipped;
  return root.dump(2) + "\n";
}

std::string human(const VerificationReport& report) {
  const std::array<std::string, 5> header = {"check", "mode", "residual", "tol", "status"};
  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& e : report.entries) {
    width[0] = std::max(width[0], e.check.size());
    width[2] = std::max(width[2], e.residual.size());
    width[3] = std::max(width[3], e.tol.size());
  }
  std::ostringstream out;
  auto row = [&](const std::array<std::string, 5>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << '\n';
  };
  row(header);
  for (const auto& e : report.entries) {
    row({e.check, std::string(mode_name(e.mode)), e.residual, e.tol, e.pass ? "pass" : "FAIL"});
    if (!e.note.empty()) out << "    " << e.note << '\n';
  }
  if (report.entries.empty()) return out.str();
  for (const auto& s : report.skipped) out << "skipped: " << s << '\n';
  out << "suite " << report.suite << ": " << (report.overall() ? "pass" : "FAIL");
  if (report.seed) out << "  seed " << *report.seed;
  out << '\n';
  return out.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::Machine ? machine(report) : human(report);
}

std::string sha256_hex(std::string_view text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    raise(ErrorKind::InvalidArgument, "sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", digest[k]);
    hex += buf;
  }
  return hex;
}

}  // namespace plk
