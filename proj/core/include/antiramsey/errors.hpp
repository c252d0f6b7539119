#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"

namespace antiramsey {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: malformed data or a violated operation precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The input contains a subgraph at least as dense as the allowed ceiling.
class DensityViolation : public DomainError {
 public:
  DensityViolation(const std::string& what, std::vector<Vertex> witness, Rational density)
      : DomainError(what), witness_(std::move(witness)), density_(density) {}
  /// Vertex set (in the caller's labels) of a subgraph attaining the density.
  [[nodiscard]] const std::vector<Vertex>& witness() const noexcept { return witness_; }
  [[nodiscard]] Rational density() const noexcept { return density_; }

 private:
  std::vector<Vertex> witness_;
  Rational density_;
};

/// An exhaustive search was asked to run beyond its configured size or time budget.
class GuardExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A structural claim that must hold on every valid input failed. These are
/// findings (a bug or a gap in the argument), never silently recovered from.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace antiramsey
