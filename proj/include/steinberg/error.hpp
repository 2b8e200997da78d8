#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace steinberg {

/// Thrown on precondition failures and malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated axiom. `rule` is a stable identifier; `witnesses` names the
/// offending arrows (or pairs/triples flattened in order).
struct Violation {
  std::string rule;
  std::vector<std::string> witnesses;
  std::string message;
};

using Violations = std::vector<Violation>;

std::string to_string(const Violation& v);
std::string to_string(const Violations& vs);

/// True iff some violation has the given rule and mentions `witness`
/// (or any witness when `witness` is empty).
bool has_violation(const Violations& vs, const std::string& rule,
                   const std::string& witness = {});

}  // namespace steinberg
