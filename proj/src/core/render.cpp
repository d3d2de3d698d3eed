#include "render.hpp"

#include <vector>

namespace qzeta {

std::string exponent_text(const Rat &e) {
  if (e.is_integer())
    return e.str();
  return "(" + e.str() + ")";
}

namespace {

std::string power_text(const std::string &base, const Rat &e) {
  if (e == Rat(1))
    return base;
  return base + "^" + exponent_text(e);
}

std::vector<std::string> monomial_parts(const Monomial &m) {
  std::vector<std::string> parts;
  if (!m.l.is_zero())
    parts.push_back(power_text("L", m.l));
  if (!m.t.is_zero())
    parts.push_back(power_text("T", m.t));
  for (const auto &[name, e] : m.sym.factors())
    parts.push_back(power_text("[" + name + "]", e));
  return parts;
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += sep;
    out += parts[i];
  }
  return out;
}

// Expanded sum, no common factor pulled out.
std::string expanded_text(const MotPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    auto parts = monomial_parts(m);
    std::string body;
    if (parts.empty())
      body = mag.get_str();
    else if (mag == 1)
      body = join(parts, " * ");
    else
      body = mag.get_str() + " * " + join(parts, " * ");
    if (first)
      out += (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

bool is_single_term(const MotPoly &p) { return p.size() <= 1; }

std::string latex_power(const std::string &base, const Rat &e) {
  if (e == Rat(1))
    return base;
  return base + "^{" + e.str() + "}";
}

std::string latex_expanded(const MotPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    std::string body;
    auto put = [&body](const std::string &x) { body += (body.empty() ? "" : " ") + x; };
    if (!m.l.is_zero())
      put(latex_power("\\mathbb{L}", m.l));
    if (!m.t.is_zero())
      put(latex_power("T", m.t));
    for (const auto &[name, e] : m.sym.factors())
      put(e == 1 ? "[" + name + "]" : "[" + name + "]^{" + std::to_string(e) + "}");
    if (body.empty())
      body = mag.get_str();
    else if (mag != 1)
      body = mag.get_str() + body;
    if (first)
      out += (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// "N s + nu" in LaTeX.
std::string latex_linear(const StdFactor &f) {
  auto coef = [](const Rat &r) {
    return r.is_integer() ? r.str()
                          : "\\frac{" + r.num().get_str() + "}{" + r.den().get_str() + "}";
  };
  if (f.N.is_zero())
    return coef(f.nu);
  std::string s = f.N == Rat(1) ? "s" : coef(f.N) + "s";
  return s + "+" + coef(f.nu);
}

}  // namespace

std::string to_text(const MotPoly &p) {
  if (p.size() >= 2) {
    Rat ml = p.min_l();
    if (ml.sign() < 0) {
      MotPoly rest = p.times_monomial(Monomial{-ml, 0, {}});
      return power_text("L", ml) + " * (" + expanded_text(rest) + ")";
    }
  }
  return expanded_text(p);
}

std::string to_text(const StdFactor &f) { return "Fac(" + f.N.str() + "; " + f.nu.str() + ")"; }

std::string to_text(const ZetaExpr &z) {
  if (z.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[factors, coeff] : z.terms()) {
    std::vector<std::string> fs;
    for (const auto &f : factors)
      fs.push_back(to_text(f));
    bool negative = false;
    std::string body;
    if (factors.empty()) {
      body = to_text(coeff);
    } else if (coeff == MotPoly(1)) {
      body = join(fs, " * ");
    } else if (coeff == MotPoly(-1)) {
      negative = true;
      body = join(fs, " * ");
    } else if (is_single_term(coeff)) {
      const auto &[m, c] = *coeff.terms().begin();
      negative = c < 0;
      MotPoly mag = negative ? -coeff : coeff;
      body = to_text(mag) + " * " + join(fs, " * ");
    } else {
      body = "(" + to_text(coeff) + ") * " + join(fs, " * ");
    }
    if (factors.empty() && !body.empty() && body[0] == '-' && !first) {
      negative = true;
      body = body.substr(1);
    }
    if (first)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string to_text(const RatFunc &r) {
  std::string num = "(" + to_text(r.numer) + ")";
  if (r.denom.empty())
    return num;
  std::vector<std::string> ds;
  for (const auto &[f, k] : r.denom) {
    MotPoly x = MotPoly::monomial(1, -f.nu, f.N);
    std::string d = "(1 - " + expanded_text(x) + ")";
    if (k != 1)
      d += "^" + std::to_string(k);
    ds.push_back(d);
  }
  return num + " / (" + join(ds, " * ") + ")";
}

std::string to_text(const SPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  const auto &c = p.coeffs();
  for (int i = p.degree(); i >= 0; --i) {
    const Rat &a = c[static_cast<std::size_t>(i)];
    if (a.is_zero())
      continue;
    Rat mag = abs(a);
    std::string mono = i == 0 ? "" : (i == 1 ? "s" : "s^" + std::to_string(i));
    std::string body;
    if (mono.empty())
      body = mag.str();
    else if (mag == Rat(1))
      body = mono;
    else
      body = mag.str() + "*" + mono;
    if (first)
      out += (a.sign() < 0 ? "-" : "") + body;
    else
      out += (a.sign() < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

struct DisplayForm {
  SPoly numer;                                  // integer coefficients
  Int scale;                                    // positive
  std::vector<std::pair<SPoly, int>> factors;   // primitive integer linear factors
};

// numer / prod (s - r)^k  ==  numer' / (scale * prod (q s - p)^k), r = p/q.
DisplayForm display_form(const TopZeta &t) {
  DisplayForm f;
  SPoly num = t.numer();
  for (const auto &[r, k] : t.denom_roots()) {
    Rat q = r.den();
    for (int i = 0; i < k; ++i)
      num = q * num;
    f.factors.push_back({SPoly({Rat(Int(-r.num())), Rat(r.den())}), k});
  }
  Int den = 1;
  for (const auto &a : num.coeffs())
    den = lcm(den, a.den());
  f.numer = Rat(den) * num;
  f.scale = den;
  return f;
}

}  // namespace

std::string to_text(const TopZeta &t) {
  DisplayForm f = display_form(t);
  std::string num = to_text(f.numer);
  int nonzero = 0;
  for (const auto &a : f.numer.coeffs())
    nonzero += !a.is_zero();
  bool num_compound = nonzero > 1;
  if (f.factors.empty() && f.scale == 1)
    return num;
  std::vector<std::string> ds;
  if (f.scale != 1)
    ds.push_back(f.scale.get_str());
  for (const auto &[lin, k] : f.factors) {
    std::string l = "(" + to_text(lin) + ")";
    if (k != 1)
      l += "^" + std::to_string(k);
    ds.push_back(l);
  }
  std::string den = join(ds, " * ");
  bool bare = ds.size() == 1;
  return (num_compound ? "(" + num + ")" : num) + " / " + (bare ? den : "(" + den + ")");
}

std::string to_latex(const MotPoly &p) {
  if (p.size() >= 2) {
    Rat ml = p.min_l();
    if (ml.sign() < 0) {
      MotPoly rest = p.times_monomial(Monomial{-ml, 0, {}});
      return latex_power("\\mathbb{L}", ml) + "\\left(" + latex_expanded(rest) + "\\right)";
    }
  }
  return latex_expanded(p);
}

std::string to_latex(const StdFactor &f) {
  std::string e = f.N.is_zero() && f.nu.is_integer() ? "-" + f.nu.str()
                                                     : "-(" + latex_linear(f) + ")";
  return "\\frac{(\\mathbb{L}-1)\\mathbb{L}^{" + e + "}}{1-\\mathbb{L}^{" + e + "}}";
}

std::string to_latex(const ZetaExpr &z) {
  if (z.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[factors, coeff] : z.terms()) {
    std::string fs;
    for (const auto &f : factors)
      fs += to_latex(f);
    std::string body;
    if (factors.empty())
      body = to_latex(coeff);
    else if (coeff == MotPoly(1))
      body = fs;
    else if (is_single_term(coeff))
      body = to_latex(coeff) + fs;
    else
      body = "\\left(" + to_latex(coeff) + "\\right)" + fs;
    if (!first)
      out += body.starts_with("-") ? " " : " + ";
    out += body;
    first = false;
  }
  return out;
}

std::string to_latex(const TopZeta &t) {
  DisplayForm f = display_form(t);
  std::string num = to_text(f.numer);
  auto strip = [](std::string s) {
    std::string out;
    for (char c : s)
      if (c != '*')
        out += c;
    return out;
  };
  if (f.factors.empty() && f.scale == 1)
    return strip(num);
  std::string den = f.scale != 1 ? f.scale.get_str() : "";
  for (const auto &[lin, k] : f.factors) {
    den += "(" + strip(to_text(lin)) + ")";
    if (k != 1)
      den += "^{" + std::to_string(k) + "}";
  }
  return "\\frac{" + strip(num) + "}{" + den + "}";
}

}  // namespace qzeta
