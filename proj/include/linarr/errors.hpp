#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linarr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction errors. `index` is the 0-based position of the offending
// pair in the edge list handed to Graph::build; parsers rethrow these with
// a "line N" location instead.
class EdgeError : public Error {
 public:
  EdgeError(const std::string& msg, int u, int v, std::size_t index)
      : Error(msg), u(u), v(v), index(index) {}
  int u;
  int v;
  std::size_t index;
};

class LoopEdge : public EdgeError {
 public:
  LoopEdge(int u, int v, std::size_t index, const std::string& where)
      : EdgeError("loop edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") at " + where,
                  u, v, index) {}
};

class DuplicateEdge : public EdgeError {
 public:
  DuplicateEdge(int u, int v, std::size_t index, const std::string& where)
      : EdgeError("duplicate edge (" + std::to_string(u) + "," +
                      std::to_string(v) + ") at " + where,
                  u, v, index) {}
};

class EndpointOutOfRange : public EdgeError {
 public:
  EndpointOutOfRange(int u, int v, std::size_t index, const std::string& where)
      : EdgeError("edge endpoint out of range in (" + std::to_string(u) + "," +
                      std::to_string(v) + ") at " + where,
                  u, v, index) {}
};

class ArrangementMismatch : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class NotABridge : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

class RecordMismatch : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

// Input file errors carry the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
  std::size_t line;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

}  // namespace linarr
