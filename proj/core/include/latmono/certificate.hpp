#pragma once

#include <functional>
#include <string>
#include <vector>

namespace latmono {

const char* toolkit_version();

struct CheckResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct SuiteCertificate {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// Runs `compute` and records it; exceptions become failed checks whose
  /// computed value is the error message.
  void check(std::string id, std::string description, std::string expected,
             const std::function<std::string()>& compute);
};

struct Certificate {
  std::string toolkit_version;
  std::vector<SuiteCertificate> suites;

  bool all_passed() const;
  std::size_t check_count() const;
  std::size_t pass_count() const;
};

std::string to_text(const Certificate& cert);
/// {"toolkit_version": …, "suites": {name: [checks…]}}; every number is a
/// decimal string.
std::string to_json(const Certificate& cert);

}  // namespace latmono
