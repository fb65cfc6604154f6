#pragma once

#include <stdexcept>
#include <string>

namespace netcap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed document; line is 1-based, 0 when unknown
struct ParseError : Error {
  std::size_t line = 0;
  std::string field;
  ParseError(const std::string& msg, std::size_t l = 0, std::string f = {})
      : Error(msg), line(l), field(std::move(f)) {}
};

struct ValidationError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  std::string cap;
  CapExceeded(std::string name, const std::string& msg) : Error(msg), cap(std::move(name)) {}
};

struct FieldError : Error {
  using Error::Error;
};

struct ScriptError : Error {
  using Error::Error;
};

struct InfeasibleRay : Error {
  using Error::Error;
};

}  // namespace netcap
