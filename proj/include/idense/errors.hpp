/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <stdexcept>
#include <string>

namespace idense {

// Input failed structural validation (bad JSON, broken invariant on a
// user-supplied value). CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented operation precondition does not hold. Exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant broke; indicates a bug, not bad input. Exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// Named error conditions from the operation contracts.

struct DensityUndefined : ValidationError {
  explicit DensityUndefined(const std::string& m) : ValidationError(m) {}
};
struct InvalidPartition : ValidationError {
  explicit InvalidPartition(const std::string& m) : ValidationError(m) {}
};
struct UnsolvableRadius : ValidationError {
  explicit UnsolvableRadius(const std::string& m) : ValidationError(m) {}
};
struct ZeroLengthInterval : ValidationError {
  explicit ZeroLengthInterval(const std::string& m) : ValidationError(m) {}
};
struct UnboundedSetExpandingGenerator : PreconditionError {
  explicit UnboundedSetExpandingGenerator(const std::string& m) : PreconditionError(m) {}
};
struct PreconditionDensity : PreconditionError {
  explicit PreconditionDensity(const std::string& m) : PreconditionError(m) {}
};
struct HostNotSuitable : PreconditionError {
  explicit HostNotSuitable(const std::string& m) : PreconditionError(m) {}
};
struct PointInClosedSet : PreconditionError {
  explicit PointInClosedSet(const std::string& m) : PreconditionError(m) {}
};

}  // namespace idense
