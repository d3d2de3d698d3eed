#include "json_io.hpp"

#include "render.hpp"

namespace qzeta {

using nlohmann::json;

json int_json(const Int &v) {
  if (v.fits_slong_p())
    return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json to_json(const Rat &r) { return json{{"num", int_json(r.num())}, {"den", int_json(r.den())}}; }

json to_json(const MotPoly &p) {
  json terms = json::array();
  for (const auto &[m, c] : p.terms()) {
    json sym = json::object();
    for (const auto &[name, e] : m.sym.factors())
      sym[name] = e;
    terms.push_back({{"coeff", int_json(c)}, {"L", to_json(m.l)}, {"T", to_json(m.t)}, {"symbols", sym}});
  }
  return terms;
}

json to_json(const StdFactor &f) { return json{{"N", to_json(f.N)}, {"nu", to_json(f.nu)}}; }

json to_json(const ZetaExpr &z) {
  json terms = json::array();
  for (const auto &[factors, coeff] : z.terms()) {
    json fs = json::array();
    for (const auto &f : factors)
      fs.push_back(to_json(f));
    terms.push_back({{"coeff", to_json(coeff)}, {"factors", fs}});
  }
  return json{{"terms", terms}, {"text", to_text(z)}};
}

json to_json(const TopZeta &t) {
  json numer = json::array();
  for (const auto &c : t.numer().coeffs())
    numer.push_back(to_json(c));
  json denom = json::array();
  for (const auto &[r, k] : t.denom_roots())
    denom.push_back({{"root", to_json(r)}, {"mult", k}});
  json parts = json::array();
  for (const auto &p : t.parts()) {
    json fs = json::array();
    for (const auto &f : p.factors)
      fs.push_back(to_json(f));
    parts.push_back({{"coeff", to_json(p.coeff)}, {"factors", fs}});
  }
  return json{{"numerator", numer}, {"denominator", denom}, {"parts", parts}, {"text", to_text(t)}};
}

}  // namespace qzeta
