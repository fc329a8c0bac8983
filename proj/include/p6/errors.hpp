#pragma once

#include <stdexcept>
#include <string>

namespace p6 {

// Error taxonomy; the CLI maps these onto its exit-code table.
struct ParseError : std::runtime_error {
  int line_no;
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "parse error (line " + std::to_string(line) + "): " + msg
                                    : "parse error: " + msg),
        line_no(line) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error("budget exceeded: " + msg) {}
};

struct LimitExceeded : BudgetExceeded {
  explicit LimitExceeded(const std::string& msg) : BudgetExceeded("oracle limit: " + msg) {}
};

struct StructureViolation : std::runtime_error {
  explicit StructureViolation(const std::string& msg) : std::runtime_error("structure violation: " + msg) {}
};

struct PreconditionViolation : StructureViolation {
  explicit PreconditionViolation(const std::string& msg) : StructureViolation("precondition: " + msg) {}
};

struct CentralBagNotFound : StructureViolation {
  explicit CentralBagNotFound(const std::string& msg) : StructureViolation("central bag not found: " + msg) {}
};

struct GenerationFailed : std::runtime_error {
  explicit GenerationFailed(const std::string& msg) : std::runtime_error("generation failed: " + msg) {}
};

}  // namespace p6
