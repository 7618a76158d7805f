#pragma once
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace weaveclust {

using Coef = boost::multiprecision::cpp_int;

// Multivariate integer polynomial; terms kept sorted in descending
// graded-lex order with nonzero coefficients.
struct Poly {
  struct Term {
    std::vector<int> e;
    Coef c;
    friend bool operator==(const Term&, const Term&) = default;
  };
  int nvars = 0;
  std::vector<Term> terms;

  static Poly zero(int nvars);
  static Poly constant(int nvars, Coef c);
  static Poly variable(int nvars, int i);

  bool is_zero() const { return terms.empty(); }
  bool is_one() const;
  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly pow(const Poly& a, int k);

// Exact division; throws std::domain_error when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

// GCD normalized to positive leading coefficient (graded-lex).
Poly gcd(const Poly& a, const Poly& b);

std::string to_string(const Poly& p, const std::string& var_prefix = "y");

// Fraction of coprime integer polynomials; the denominator is nonzero with
// positive graded-lex leading coefficient. Unique per rational function.
struct RationalFunction {
  Poly num, den;

  static RationalFunction from(Poly n, Poly d);
  static RationalFunction zero(int nvars);
  static RationalFunction constant(int nvars, Coef c);
  static RationalFunction variable(int nvars, int i);

  int nvars() const { return num.nvars; }
  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
RationalFunction pow(const RationalFunction& a, int k);  // k may be negative

std::string to_string(const RationalFunction& r, const std::string& var_prefix = "y");

// Grammar: integers, <prefix><k> variables (1-based), + - * / ^ and
// parentheses. nullopt on malformed input or variable index > nvars.
std::optional<RationalFunction> parse_ratfun(const std::string& s, int nvars,
                                             const std::string& var_prefix = "y");

}  // namespace weaveclust
