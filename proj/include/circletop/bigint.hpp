#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace circletop {

// Every count in this library is an exact integer.  Row totals of the
// triple-intersection family outgrow 64 bits around N = 31, so all
// coefficient and cell arithmetic runs on arbitrary precision integers.
using Int = boost::multiprecision::cpp_int;

/// Broken precondition on a public operation (mismatched series orders,
/// out-of-range cell access, unsupported arguments).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// An exact division left a remainder.  The recurrences of this library
/// divide only where integrality is guaranteed, so a remainder means some
/// input sequence or formula is wrong; failing loudly is the integrity alarm.
class ExactnessError : public std::logic_error {
public:
    explicit ExactnessError(const std::string& what) : std::logic_error(what) {}
};

/// Enumeration request beyond the supported brute-force budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace circletop
