#ifndef SENSOBS_ERRORS_HPP_
#define SENSOBS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sensobs {

/// Invalid model or configuration input (dimension mismatch, bad values).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed description file (syntax or schema violation).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Chain does not meet an operation's structural requirements
/// (e.g. a prismatic joint where only revolute joints are supported).
class UnsupportedChainError : public std::runtime_error {
 public:
  explicit UnsupportedChainError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace sensobs

#endif  // SENSOBS_ERRORS_HPP_
