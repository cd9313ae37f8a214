#pragma once

#include <stdexcept>
#include <string>

namespace toricsym {

/// The input document does not have the expected shape (wrong field types,
/// length mismatches, unparsable numbers).
class MalformedInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.  Carries a diagnostic dump of the
/// state that violated it.
class InvariantViolation : public std::runtime_error {
public:
  InvariantViolation(const std::string &what, std::string dump = {})
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const std::string &dump() const { return dump_; }

private:
  std::string dump_;
};

} // namespace toricsym
