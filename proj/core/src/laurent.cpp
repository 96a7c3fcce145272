#include "qgr/laurent.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace qgr {

LaurentPoly LaurentPoly::constant(int nvars, Int c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.emplace(Exp(nvars, 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(Exp e, Int c) {
  LaurentPoly p(static_cast<int>(e.size()));
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int power) {
  if (i < 0 || i >= nvars) throw ValidationError("variable index out of range");
  Exp e(nvars, 0);
  e[i] = power;
  return monomial(std::move(e), 1);
}

void LaurentPoly::check_vars(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_)
    throw ValidationError("variable-count mismatch between Laurent polynomials");
}

void LaurentPoly::add_term(const Exp& e, const Int& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw ValidationError("exponent size mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_vars(b);
  LaurentPoly r(a.nvars_);
  LaurentPoly::Exp e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
  LaurentPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative power of a Laurent polynomial");
  LaurentPoly base = *this, acc = constant(nvars_, 1);
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

Int LaurentPoly::value_at_ones() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

DimVector denominator_vector(const LaurentPoly& l) {
  if (l.is_zero()) throw DomainError("denominator vector of the zero polynomial");
  DimVector den(l.vars());
  bool first = true;
  for (const auto& [e, c] : l.terms()) {
    for (int i = 0; i < l.vars(); ++i)
      den[i] = first ? -e[i] : std::max(den[i], -e[i]);
    first = false;
  }
  return den;
}

bool is_nonnegative(const LaurentPoly& l) {
  for (const auto& [e, c] : l.terms())
    if (c < 0) return false;
  return true;
}

namespace {

// per-variable minimal exponents across terms
LaurentPoly::Exp min_exponents(const LaurentPoly& p) {
  LaurentPoly::Exp m(p.vars(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.vars(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

LaurentPoly shift(const LaurentPoly& p, const LaurentPoly::Exp& by) {
  LaurentPoly r(p.vars());
  LaurentPoly::Exp e(p.vars());
  for (const auto& [ep, c] : p.terms()) {
    for (int i = 0; i < p.vars(); ++i) e[i] = ep[i] + by[i];
    r.add_term(e, c);
  }
  return r;
}

} // namespace

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionError("division by zero polynomial");
  if (num.vars() != den.vars())
    throw ValidationError("variable-count mismatch between Laurent polynomials");
  int n = num.vars();
  if (num.is_zero()) return LaurentPoly::zero(n);

  // Normalize so both operands are honest polynomials with per-variable
  // minimal exponent 0. Minimal exponents are additive under multiplication
  // (integral domain), so the quotient, when it exists, is a polynomial
  // shifted by the difference of the normalizations.
  auto mn = min_exponents(num), md = min_exponents(den);
  LaurentPoly::Exp neg_mn(n), neg_md(n), back(n);
  for (int i = 0; i < n; ++i) {
    neg_mn[i] = -mn[i];
    neg_md[i] = -md[i];
    back[i] = mn[i] - md[i];
  }
  LaurentPoly rem = shift(num, neg_mn);
  LaurentPoly d = shift(den, neg_md);

  // lex leading-term reduction; leading exponents strictly decrease within
  // a finite box, so this terminates
  const auto& dlead = *d.terms().rbegin();
  LaurentPoly q(n);
  LaurentPoly::Exp qe(n);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    for (int i = 0; i < n; ++i) {
      qe[i] = rlead.first[i] - dlead.first[i];
      if (qe[i] < 0) throw DivisionError("non-exact Laurent division");
    }
    Int qc = rlead.second / dlead.second;
    if (qc * dlead.second != rlead.second)
      throw DivisionError("non-exact Laurent division");
    LaurentPoly qt = LaurentPoly::monomial(qe, qc);
    q += qt;
    rem -= qt * d;
  }
  return shift(q, back);
}

LaurentPoly substitute(const LaurentPoly& l, const std::vector<LaurentPoly>& args) {
  if (static_cast<int>(args.size()) != l.vars())
    throw ValidationError("substitute: wrong argument count");
  for (const auto& a : args)
    if (a.is_zero()) throw DomainError("substitute: zero argument is not invertible");
  int out_vars = args.empty() ? 0 : args[0].vars();
  for (const auto& a : args)
    if (a.vars() != out_vars)
      throw ValidationError("substitute: arguments disagree on variable count");
  if (l.is_zero()) return LaurentPoly::zero(out_vars);

  // write l = P(u) / prod u_i^{d_i} with P an honest polynomial
  auto mn = min_exponents(l);
  LaurentPoly::Exp d(l.vars());
  for (int i = 0; i < l.vars(); ++i) d[i] = std::max(0, -mn[i]);

  // powers of each argument computed on demand
  std::vector<std::vector<LaurentPoly>> pow_cache(args.size());
  auto arg_pow = [&](int i, int k) -> const LaurentPoly& {
    auto& cache = pow_cache[i];
    if (cache.empty()) cache.push_back(LaurentPoly::constant(out_vars, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * args[i]);
    return cache[k];
  };

  LaurentPoly numer(out_vars);
  for (const auto& [e, c] : l.terms()) {
    LaurentPoly t = LaurentPoly::constant(out_vars, c);
    for (int i = 0; i < l.vars(); ++i) {
      int k = e[i] + d[i];
      if (k > 0) t *= arg_pow(i, k);
    }
    numer += t;
  }
  LaurentPoly denom = LaurentPoly::constant(out_vars, 1);
  for (int i = 0; i < l.vars(); ++i)
    if (d[i] > 0) denom *= arg_pow(i, d[i]);
  return exact_divide(numer, denom);
}

std::string to_string(const LaurentPoly& l) {
  if (l.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // lex-descending: leading term first
  for (auto it = l.terms().rbegin(); it != l.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "u" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << a.str();
    } else if (a == 1) {
      out << mono;
    } else {
      out << a.str() << " * " << mono;
    }
  }
  return out.str();
}

std::string laurent_to_json(const LaurentPoly& l) {
  nlohmann::json j;
  j["vars"] = l.vars();
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : l.terms()) {
    nlohmann::json t;
    t["exp"] = e;
    t["coeff"] = c.str();
    arr.push_back(std::move(t));
  }
  j["terms"] = std::move(arr);
  return j.dump();
}

LaurentPoly laurent_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
  try {
    int n = j.at("vars").get<int>();
    LaurentPoly p(n);
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exp").get<std::vector<int>>();
      if (static_cast<int>(e.size()) != n)
        throw ParseError("exponent length disagrees with 'vars'");
      Int c(t.at("coeff").get<std::string>());
      p.add_term(e, c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

} // namespace qgr
