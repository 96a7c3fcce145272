#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgr/bigint.hpp"
#include "qgr/dimvec.hpp"
#include "qgr/error.hpp"

namespace qgr {

// Element of Z[u_1^{±1}, ..., u_n^{±1}]. Canonical: the term map never
// stores a zero coefficient, so value equality is map equality.
class LaurentPoly {
 public:
  using Exp = std::vector<int>;
  using TermMap = std::map<Exp, Int>; // lex-ascending iteration order

  LaurentPoly() = default; // zero in 0 variables; useful only as placeholder
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
  static LaurentPoly constant(int nvars, Int c);
  static LaurentPoly monomial(Exp e, Int c);
  // u_i^power, 0-based index
  static LaurentPoly variable(int nvars, int i, int power = 1);

  int vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  void add_term(const Exp& e, const Int& c); // merges, drops zeros

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly operator*(const Int& c) const;

  LaurentPoly pow(int k) const; // k >= 0

  bool operator==(const LaurentPoly&) const = default;

  // sum of coefficients = value at u_i = 1
  Int value_at_ones() const;

 private:
  int nvars_ = 0;
  TermMap terms_;
  void check_vars(const LaurentPoly& o) const;
};

// den(L): i-th entry is minus the minimal exponent of u_i across terms,
// so that L * u^{den} is a polynomial not divisible by any u_i ... except
// that entries may be negative when every term has positive u_i-exponent.
DimVector denominator_vector(const LaurentPoly& l);

// true iff every coefficient is positive (or L = 0)
bool is_nonnegative(const LaurentPoly& l);

// quotient num/den when it exists in the Laurent ring; DivisionError when
// the division is not exact (always a bug in this codebase, never data)
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

// L(args[0], ..., args[n-1]); requires every negative power of a variable
// to resolve by exact division once the arguments are substituted in
LaurentPoly substitute(const LaurentPoly& l, const std::vector<LaurentPoly>& args);

// text form, lex-descending terms: "u1^2 u2^-1 + 3 * u2 - 1"
std::string to_string(const LaurentPoly& l);

// {"vars": n, "terms": [{"exp": [...], "coeff": "<decimal>"}...]}, terms
// lex-ascending by exponent vector
std::string laurent_to_json(const LaurentPoly& l);
LaurentPoly laurent_from_json(const std::string& json_text);

} // namespace qgr
