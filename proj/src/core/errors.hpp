#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  UndeclaredSymbol,
  DimensionMismatch,
  NotSmall,
  MissingChi,
  TInCoefficient,
  FractionalPowerUnevaluable,
  BadParams,
  SizeLimit,
  BudgetExceeded,
  NotCoprime,
  NotExpandable,
  Io,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(const std::string &message, int line, int column)
      : Error(ErrorKind::ParseError, std::to_string(line) + ":" + std::to_string(column) +
                                         ": " + message),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace qzeta
