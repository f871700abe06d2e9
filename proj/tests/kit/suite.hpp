#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace kit {

struct SuiteResult {
  std::string name;
  long instances = 0;
  long checks = 0;
  long violations = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++violations;
    if (failures.size() < 20) failures.push_back(what);
  }
  bool passed() const { return violations == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << name << ": " << instances << " instances, " << checks << " checks, " << violations << " violations";
    for (const auto& f : failures) os << "\n    " << f;
    return os.str();
  }
};

}  // namespace kit
