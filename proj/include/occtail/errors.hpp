#pragma once

#include <stdexcept>
#include <string>

namespace occtail {

/// Invalid parameters, malformed input files, violated invariants. CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed its configured step budget. CLI exit code 3.
/// Raised up front, before any work is discarded; never silent truncation.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace occtail
