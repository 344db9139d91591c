#include "latmono/certificate.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>

#include "json.hpp"

namespace latmono {
namespace {

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

const char* toolkit_version() { return LATMONO_VERSION; }

bool SuiteCertificate::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void SuiteCertificate::check(std::string id, std::string description, std::string expected,
                             const std::function<std::string()>& compute) {
  CheckResult r{std::move(id), std::move(description), std::move(expected), {}, false, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.computed = compute();
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.pass = r.computed == r.expected;
  checks.push_back(std::move(r));
}

bool Certificate::all_passed() const {
  for (const auto& s : suites)
    if (!s.all_passed()) return false;
  return true;
}

std::size_t Certificate::check_count() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.checks.size();
  return n;
}

std::size_t Certificate::pass_count() const {
  std::size_t n = 0;
  for (const auto& s : suites)
    for (const auto& c : s.checks) n += c.pass ? 1 : 0;
  return n;
}

std::string to_text(const Certificate& cert) {
  std::ostringstream os;
  os << "latmono " << cert.toolkit_version << '\n';
  for (const auto& s : cert.suites) {
    std::size_t passed = 0;
    os << "\nsuite " << s.suite << '\n';
    for (const auto& c : s.checks) {
      passed += c.pass ? 1 : 0;
      os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.description << '\n'
         << "        expected: " << c.expected << '\n'
         << "        computed: " << c.computed << "  (" << format_ms(c.elapsed_ms) << " ms)\n";
    }
    os << "  " << passed << "/" << s.checks.size() << " checks passed\n";
  }
  os << "\ntotal: " << cert.pass_count() << "/" << cert.check_count() << " checks passed\n";
  return os.str();
}

std::string to_json(const Certificate& cert) {
  nlohmann::ordered_json root;
  root["toolkit_version"] = cert.toolkit_version;
  nlohmann::ordered_json suites = nlohmann::ordered_json::object();
  for (const auto& s : cert.suites) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      nlohmann::ordered_json j;
      j["id"] = c.id;
      j["description"] = c.description;
      j["expected"] = c.expected;
      j["computed"] = c.computed;
      j["status"] = c.pass ? "pass" : "fail";
      j["elapsed"] = format_ms(c.elapsed_ms);
      arr.push_back(std::move(j));
    }
    suites[s.suite] = std::move(arr);
  }
  root["suites"] = std::move(suites);
  return root.dump(2) + "\n";
}

}  // namespace latmono
