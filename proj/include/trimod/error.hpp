#pragma once

#include <stdexcept>
#include <string>

namespace trimod {

/* Error categories; the CLI maps each to its exit code. */
enum class ErrorKind {
    Usage = 1,
    Parse = 2,
    Validation = 3,
    CheckFail = 4,
    Inconclusive = 5,
    Resource = 6,
    Internal = 7,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline Error parse_error(std::size_t line, std::size_t column, const std::string& expected)
{
    return Error(ErrorKind::Parse, "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " + expected);
}

inline Error validation_error(const std::string& msg) { return Error(ErrorKind::Validation, msg); }
inline Error inconclusive_error(const std::string& msg) { return Error(ErrorKind::Inconclusive, msg); }
inline Error resource_error(const std::string& msg) { return Error(ErrorKind::Resource, msg); }
inline Error internal_error(const std::string& msg) { return Error(ErrorKind::Internal, msg); }

}  // namespace trimod
