#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onlinecolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid generator, prediction or experiment parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list text; carries the 1-based line number.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised by the shore-tracking algorithms when the revealed graph has an odd cycle.
class NonBipartiteError : public Error {
 public:
  using Error::Error;
};

/// An algorithm returned a color that clashes with a revealed neighbor.
class ProtocolViolation : public Error {
 public:
  ProtocolViolation(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// An algorithm was wired up without something it needs (e.g. advice).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A closed-form bound was evaluated outside its stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace onlinecolor
