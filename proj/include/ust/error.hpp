#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ust {

// Base class for every error raised by the library. The CLI maps subclasses
// onto exit codes: UsageError -> 2, DataError -> 3, SolverTimeout -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public DataError {
 public:
  DegenerateInput(int i, int j, int k, const std::string& what)
      : DataError(what), triple{i, j, k} {}
  int triple[3];
};

class TruncatedFile : public DataError {
 public:
  using DataError::DataError;
};

class InvalidEntry : public DataError {
 public:
  InvalidEntry(std::size_t record, std::size_t offset, const std::string& what)
      : DataError(what), record(record), offset(offset) {}
  std::size_t record;
  std::size_t offset;
};

class AxiomViolation : public DataError {
 public:
  AxiomViolation(std::size_t record, const std::string& what)
      : DataError(what), record(record) {}
  std::size_t record;
};

class IndexOverlap : public DataError {
 public:
  using DataError::DataError;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : DataError(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

class DuplicateEdge : public DataError {
 public:
  using DataError::DataError;
};

class LoopEdge : public DataError {
 public:
  using DataError::DataError;
};

class NotStacked : public DataError {
 public:
  using DataError::DataError;
};

class TooManyVertices : public DataError {
 public:
  using DataError::DataError;
};

class WrongSize : public DataError {
 public:
  using DataError::DataError;
};

class OutOfRange : public DataError {
 public:
  using DataError::DataError;
};

class Infeasible : public DataError {
 public:
  Infeasible(std::size_t row, const std::string& what) : DataError(what), row(row) {}
  std::size_t row;
};

class SolverTimeout : public Error {
 public:
  using Error::Error;
};

// A satisfying assignment failed independent verification. Always a bug.
class WitnessInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace ust
