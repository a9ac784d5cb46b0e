#pragma once

#include <stdexcept>
#include <string>

namespace packing {

/// Malformed input: bad file syntax, out-of-range indices, invalid parameters.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of a solution map was violated, e.g. the caller
/// handed in an infeasible packing.
class ContractError : public std::runtime_error {
public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace packing
