#pragma once

#include "zeta_expr.hpp"

#include "json.hpp"

namespace qzeta {

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as strings.
nlohmann::json int_json(const Int &v);
// {"num": .., "den": ..}
nlohmann::json to_json(const Rat &r);
nlohmann::json to_json(const MotPoly &p);
nlohmann::json to_json(const StdFactor &f);
nlohmann::json to_json(const ZetaExpr &z);
nlohmann::json to_json(const TopZeta &t);

}  // namespace qzeta
