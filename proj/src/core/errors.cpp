#include "errors.hpp"

namespace qzeta {

const char *error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::NotSmall: return "NotSmall";
  case ErrorKind::MissingChi: return "MissingChi";
  case ErrorKind::TInCoefficient: return "TInCoefficient";
  case ErrorKind::FractionalPowerUnevaluable: return "FractionalPowerUnevaluable";
  case ErrorKind::BadParams: return "BadParams";
  case ErrorKind::SizeLimit: return "SizeLimit";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::NotCoprime: return "NotCoprime";
  case ErrorKind::NotExpandable: return "NotExpandable";
  case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace qzeta
