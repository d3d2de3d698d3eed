#pragma once

#include "zeta_expr.hpp"

#include <string>

namespace qzeta {

// Exponent suffix as printed after '^': "2", "-2", "(3/4)".
std::string exponent_text(const Rat &e);

std::string to_text(const MotPoly &p);
std::string to_text(const StdFactor &f);
std::string to_text(const ZetaExpr &z);
std::string to_text(const RatFunc &r);
std::string to_text(const SPoly &p);
std::string to_text(const TopZeta &t);

std::string to_latex(const MotPoly &p);
std::string to_latex(const StdFactor &f);
std::string to_latex(const ZetaExpr &z);
std::string to_latex(const TopZeta &t);

}  // namespace qzeta
