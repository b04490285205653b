#ifndef HYPERLOCI_ERROR_HPP
#define HYPERLOCI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyperloci {

// Base class for all computational failures in the engine.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// A numeric root could not be matched to an exact element of the working
// cyclotomic field.  Carries the offending approximation for diagnostics.
struct RootNotInField : Error {
  std::string approximation;
  explicit RootNotInField(std::string approx)
      : Error("root not in working field: " + approx),
        approximation(std::move(approx)) {}
};

// A structural consistency check failed (wrong group/map pairing,
// non-uniform fiber multiplicities, degree bookkeeping mismatch, ...).
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

// Closure or enumeration exceeded its configured cap.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// A backtracking search ran out of its step budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// A parameter specialization produced a singular family member.
struct DegenerateMember : Error {
  explicit DegenerateMember(const std::string& msg) : Error(msg) {}
};

}  // namespace hyperloci

#endif
