#pragma once

#include <stdexcept>
#include <string>

namespace legnet {

/// Broad failure category; the CLI maps it onto its exit code.
enum class ErrorKind {
  usage,    // bad configuration or arguments
  data,     // malformed or inconsistent corpus data
  compute,  // a metric is undefined for the given input
};

/// Base of every error raised by the library. Carries the name of the module
/// that raised it so the CLI can report where a failure originated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(const std::string& id)
      : Error(ErrorKind::data, "graph-core", "duplicate document id '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string module, const std::string& what)
      : Error(ErrorKind::data, std::move(module), what) {}
};

class LookupError : public Error {
 public:
  explicit LookupError(const std::string& id)
      : Error(ErrorKind::data, "graph-core", "unknown document id '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Mutation attempted on a sealed graph, or analysis on an unsealed one.
class PhaseError : public Error {
 public:
  explicit PhaseError(const std::string& what) : Error(ErrorKind::usage, "graph-core", what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::data, "corpus-io", "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DanglingReferenceError : public Error {
 public:
  DanglingReferenceError(const std::string& source, const std::string& target)
      : Error(ErrorKind::data, "corpus-io",
              "document '" + source + "' references unknown document '" + target + "'"),
        source_(source),
        target_(target) {}
  const std::string& source() const noexcept { return source_; }
  const std::string& target() const noexcept { return target_; }

 private:
  std::string source_;
  std::string target_;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string module, const std::string& what)
      : Error(ErrorKind::usage, std::move(module), what) {}
};

/// A quantity is undefined for the input (empty graph, zero variance, ...).
class ComputeError : public Error {
 public:
  ComputeError(std::string module, const std::string& what)
      : Error(ErrorKind::compute, std::move(module), what) {}
};

}  // namespace legnet
