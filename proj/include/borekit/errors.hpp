#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace borekit {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (files, ids, tables).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid data: broken simplicial identities, bad actions, maps that
/// do not commute with faces.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Index, degree or truncation outside the range an operation accepts.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Collected failures of a structural check. Empty means the check passed.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
  void merge(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations) violations.push_back(prefix + v);
  }
};

}  // namespace borekit
