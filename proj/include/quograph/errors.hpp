#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quograph {

// Every error carries the module it was raised in, so the CLI can report
// provenance and pick an exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }
  virtual const char* kind() const noexcept = 0;

 private:
  std::string module_;
};

// Caller supplied something malformed (bad edge, bad residue, bad index).
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input_error"; }
};

// Text could not be decoded. `offset` is the byte offset of the failure.
class ParseError : public InputError {
 public:
  ParseError(std::string module, const std::string& what, std::size_t offset)
      : InputError(std::move(module),
                   what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  const char* kind() const noexcept override { return "parse_error"; }

 private:
  std::size_t offset_;
};

// The input is well formed but outside what an analysis accepts
// (e.g. a disconnected graph).
class AnalysisError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "analysis_error"; }
};

// Graph too large for a brute-force routine.
class SizeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "size_error"; }
};

// An exact identity that must hold did not. Always a bug.
class ContractViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "contract_violation"; }
};

// Floating-point cross-check disagreed beyond its tolerance.
class ToleranceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "tolerance_error"; }
};

}  // namespace quograph
