#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace starkit {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands carry different manifold models.
class ModelMismatchError : public Error {
  public:
    using Error::Error;
};

// Chart coordinates outside the model domain (e.g. on/after the Klein circle).
class DomainError : public Error {
  public:
    using Error::Error;
};

// Coincident anchors, zero-length segments and the like.
class DegenerateError : public Error {
  public:
    using Error::Error;
};

class RangeError : public Error {
  public:
    using Error::Error;
};

// Collinear overlap of traces (segments sharing more than a point),
// including coincident geodesics. Callers must handle this distinctly.
class OverlapError : public Error {
  public:
    using Error::Error;
};

class PreconditionError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(int line, int col, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

class ValidationError : public Error {
  public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid polygon:";
        for (const auto& s : v) out += "\n  " + s;
        return out;
    }
    std::vector<std::string> violations_;
};

}  // namespace starkit
