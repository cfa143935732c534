#ifndef NETC_ERRORS_HPP
#define NETC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netc {

// Malformed input files / CLI arguments.  CLI exit code 2.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

// Precondition violations on operation arguments.  CLI exit code 2.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string &msg) : std::invalid_argument(msg) {}
};

// A configurable budget (automorphism backtrack nodes) was exhausted.
// CLI exit code 3.  Never a silently wrong answer.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string &msg) : std::runtime_error(msg) {}
};

// Non-finite state or other numeric failure.  CLI exit code 4.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace netc

#endif
