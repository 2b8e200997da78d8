#include "steinberg/error.hpp"

#include <algorithm>
#include <sstream>

namespace steinberg {

std::string to_string(const Violation& v) {
  return v.rule + ": " + v.message;
}

std::string to_string(const Violations& vs) {
  std::ostringstream os;
  for (const auto& v : vs) os << to_string(v) << "\n";
  return os.str();
}

bool has_violation(const Violations& vs, const std::string& rule, const std::string& witness) {
  for (const auto& v : vs) {
    if (v.rule != rule) continue;
    if (witness.empty()) return true;
    if (std::find(v.witnesses.begin(), v.witnesses.end(), witness) != v.witnesses.end()) return true;
  }
  return false;
}

}  // namespace steinberg
