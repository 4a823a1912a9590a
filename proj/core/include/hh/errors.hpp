#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// Invalid arguments are reported with std::invalid_argument. The types below
// cover the remaining failure modes a caller may want to tell apart.

/// The sketch saw no sampled element, so there is nothing to report.
class NoSampleError : public std::runtime_error {
 public:
  explicit NoSampleError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact query over an empty stream.
class NoDataError : public std::runtime_error {
 public:
  explicit NoDataError(const std::string& what) : std::runtime_error(what) {}
};

/// Column estimates are only defined for keys held in the candidate table.
class NotCandidateError : public std::runtime_error {
 public:
  explicit NotCandidateError(const std::string& what) : std::runtime_error(what) {}
};

/// Maximin needs at least one opponent, i.e. n >= 2.
class UndefinedMaximinError : public std::runtime_error {
 public:
  explicit UndefinedMaximinError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the optional worst-case space guard.
class SpaceBudgetExceeded : public std::runtime_error {
 public:
  explicit SpaceBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hh
