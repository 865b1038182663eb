#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfsign {

struct CheckResult {
  std::string suite;
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Informational lines that are not pass/fail checks.
struct Note {
  std::string suite;
  std::string topic;
  std::string detail;
};

struct SuiteOutcome {
  std::vector<CheckResult> checks;
  std::vector<Note> notes;

  bool all_passed() const;
};

std::span<const std::string_view> suite_names();

/// Runs one of inverse, kernels, encodings, signs, asymptotics, or all.
/// Throws NameError for an unknown suite.
SuiteOutcome run_suite(std::string_view suite);

/// `PASS|FAIL <suite>.<check> <detail>`.
std::string format_check(const CheckResult& c);
std::string format_note(const Note& n);

}  // namespace pfsign
