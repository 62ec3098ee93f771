#pragma once

#include <stdexcept>
#include <string>

namespace plp {

struct SourceLocation {
  int line = 0;    // 1-based; 0 when unknown
  int column = 0;  // 1-based; 0 when unknown
};

/// Base of every error raised while reading or constructing a program.
class ProgramError : public std::runtime_error {
 public:
  ProgramError(const std::string& what, SourceLocation loc = {});
  const SourceLocation& location() const noexcept { return loc_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  SourceLocation loc_;
};

struct SyntaxError : public ProgramError {
  using ProgramError::ProgramError;
};
struct DuplicateName : public ProgramError {
  using ProgramError::ProgramError;
};
struct NameOnStrictRule : public ProgramError {
  using ProgramError::ProgramError;
};
struct UnboundVariable : public ProgramError {
  using ProgramError::ProgramError;
};

/// Answer-set enumeration refused because the search space exceeds the guard.
struct TooLarge : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace plp
