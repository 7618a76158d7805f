#include "weaveclust/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace weaveclust {

namespace {

int total_deg(const std::vector<int>& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Graded-lex: higher total degree first, then lexicographic on exponents.
bool grlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  int da = total_deg(a), db = total_deg(b);
  if (da != db) return da < db;
  return a < b;
}

void normalize(Poly& p) {
  std::sort(p.terms.begin(), p.terms.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return grlex_less(y.e, x.e); });
  std::vector<Poly::Term> out;
  for (auto& t : p.terms) {
    if (!out.empty() && out.back().e == t.e)
      out.back().c += t.c;
    else
      out.push_back(t);
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  p.terms = std::move(out);
}

Coef content_signless(const Poly& p) {
  Coef g = 0;
  for (auto& t : p.terms) g = boost::multiprecision::gcd(g, t.c);
  return g;
}

}  // namespace

Poly Poly::zero(int nvars) { return Poly{nvars, {}}; }

Poly Poly::constant(int nvars, Coef c) {
  Poly p{nvars, {}};
  if (c != 0) p.terms.push_back({std::vector<int>(nvars, 0), std::move(c)});
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p{nvars, {}};
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms.push_back({std::move(e), 1});
  return p;
}

bool Poly::is_one() const {
  return terms.size() == 1 && terms[0].c == 1 && total_deg(terms[0].e) == 0;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r{a.nvars, a.terms};
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  normalize(r);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& t : r.terms) t.c = -t.c;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r{a.nvars, {}};
  r.terms.reserve(a.terms.size() * b.terms.size());
  for (auto& x : a.terms)
    for (auto& y : b.terms) {
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = x.e[i] + y.e[i];
      r.terms.push_back({std::move(e), x.c * y.c});
    }
  normalize(r);
  return r;
}

Poly pow(const Poly& a, int k) {
  if (k < 0) throw std::invalid_argument("Poly pow: negative exponent");
  Poly r = Poly::constant(a.nvars, 1);
  Poly base = a;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  Poly rem = a, q = Poly::zero(a.nvars);
  const auto& lb = b.terms.front();
  while (!rem.is_zero()) {
    const auto& lr = rem.terms.front();
    std::vector<int> e(a.nvars);
    for (int i = 0; i < a.nvars; ++i) {
      e[i] = lr.e[i] - lb.e[i];
      if (e[i] < 0) throw std::domain_error("divide_exact: not divisible");
    }
    if (lr.c % lb.c != 0) throw std::domain_error("divide_exact: not divisible");
    Poly t{a.nvars, {{std::move(e), lr.c / lb.c}}};
    q = q + t;
    rem = rem - t * b;
  }
  return q;
}

namespace {

int deg_in(const Poly& p, int v) {
  int d = 0;
  for (auto& t : p.terms) d = std::max(d, t.e[v]);
  return d;
}

// Coefficients of p as a polynomial in variable v (exponent of v zeroed out).
std::map<int, Poly> coeffs_in(const Poly& p, int v) {
  std::map<int, Poly> out;
  for (auto& t : p.terms) {
    Poly::Term tt = t;
    int d = tt.e[v];
    tt.e[v] = 0;
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Poly::zero(p.nvars)).first;
    it->second.terms.push_back(std::move(tt));
  }
  for (auto& [d, c] : out) normalize(c);
  return out;
}

Poly times_vpow(const Poly& p, int v, int k) {
  Poly r = p;
  for (auto& t : r.terms) t.e[v] += k;
  return r;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int v) {
  Poly g = Poly::zero(p.nvars);
  for (auto& [d, c] : coeffs_in(p, v)) g = gcd_impl(g, c);
  return g;
}

// Pseudo-remainder of f by g in variable v.
Poly prem(const Poly& f, const Poly& g, int v) {
  const int dg = deg_in(g, v);
  auto gc = coeffs_in(g, v);
  const Poly lcg = gc.rbegin()->second;
  Poly r = f;
  while (!r.is_zero()) {
    int dr = deg_in(r, v);
    if (dr < dg) break;
    auto rc = coeffs_in(r, v);
    const Poly lcr = rc.rbegin()->second;
    r = lcg * r - times_vpow(lcr * g, v, dr - dg);
  }
  return r;
}

Poly positive_leading(Poly p) {
  if (!p.terms.empty() && p.terms.front().c < 0)
    for (auto& t : p.terms) t.c = -t.c;
  return p;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  int v = -1;
  for (int i = a.nvars - 1; i >= 0; --i)
    if (deg_in(a, i) > 0 || deg_in(b, i) > 0) { v = i; break; }
  if (v == -1) {
    return Poly::constant(a.nvars, boost::multiprecision::gcd(content_signless(a), content_signless(b)));
  }
  if (deg_in(a, v) == 0) return gcd_impl(a, content_in(b, v));
  if (deg_in(b, v) == 0) return gcd_impl(content_in(a, v), b);
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly f = divide_exact(a, ca), g = divide_exact(b, cb);
  if (deg_in(f, v) < deg_in(g, v)) std::swap(f, g);
  Poly result;
  while (true) {
    Poly r = prem(f, g, v);
    if (r.is_zero()) {
      result = divide_exact(g, content_in(g, v));
      break;
    }
    if (deg_in(r, v) == 0) {
      result = Poly::constant(a.nvars, 1);
      break;
    }
    f = std::move(g);
    g = divide_exact(r, content_in(r, v));
  }
  return positive_leading(gcd_impl(ca, cb) * result);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

std::string to_string(const Poly& p, const std::string& var_prefix) {
  if (p.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    const auto& t = p.terms[i];
    Coef c = t.c;
    if (i == 0) {
      if (c < 0) { s += "-"; c = -c; }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mono;
    for (int v = 0; v < p.nvars; ++v) {
      if (t.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(v + 1);
      if (t.e[v] > 1) mono += "^" + std::to_string(t.e[v]);
    }
    if (mono.empty()) {
      s += c.str();
    } else {
      if (c != 1) s += c.str() + "*";
      s += mono;
    }
  }
  return s;
}

RationalFunction RationalFunction::from(Poly n, Poly d) {
  if (d.is_zero()) throw std::domain_error("rational function: zero denominator");
  if (n.is_zero()) return {Poly::zero(n.nvars), Poly::constant(n.nvars, 1)};
  Poly g = gcd(n, d);
  n = divide_exact(n, g);
  d = divide_exact(d, g);
  if (d.terms.front().c < 0) {
    n = -n;
    d = -d;
  }
  return {std::move(n), std::move(d)};
}

RationalFunction RationalFunction::zero(int nvars) {
  return {Poly::zero(nvars), Poly::constant(nvars, 1)};
}

RationalFunction RationalFunction::constant(int nvars, Coef c) {
  return {Poly::constant(nvars, std::move(c)), Poly::constant(nvars, 1)};
}

RationalFunction RationalFunction::variable(int nvars, int i) {
  return {Poly::variable(nvars, i), Poly::constant(nvars, 1)};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::from(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::from(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::from(a.num * b.num, a.den * b.den);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function: division by zero");
  return RationalFunction::from(a.num * b.den, a.den * b.num);
}

RationalFunction pow(const RationalFunction& a, int k) {
  if (k < 0) {
    if (a.is_zero()) throw std::domain_error("rational function: negative power of zero");
    return pow(RationalFunction::from(a.den, a.num), -k);
  }
  return {pow(a.num, k), pow(a.den, k)};  // already coprime and normalized
}

std::string to_string(const RationalFunction& r, const std::string& var_prefix) {
  if (r.den.is_one()) return to_string(r.num, var_prefix);
  return "(" + to_string(r.num, var_prefix) + ")/(" + to_string(r.den, var_prefix) + ")";
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int nvars;
  const std::string& prefix;
  bool fail = false;

  void skip() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  RationalFunction expr() {
    RationalFunction r = term();
    while (!fail) {
      skip();
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else break;
    }
    return r;
  }
  RationalFunction term() {
    RationalFunction r = factor();
    while (!fail) {
      skip();
      if (eat('*')) r = r * factor();
      else if (eat('/')) {
        RationalFunction d = factor();
        if (!fail && d.is_zero()) { fail = true; break; }
        if (!fail) r = r / d;
      } else break;
    }
    return r;
  }
  RationalFunction factor() {
    RationalFunction b = base();
    skip();
    if (!fail && eat('^')) {
      skip();
      bool neg = eat('-');
      if (pos >= s.size() || !isdigit((unsigned char)s[pos])) { fail = true; return b; }
      long k = 0;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) k = k * 10 + (s[pos++] - '0');
      if (neg && b.is_zero()) { fail = true; return b; }
      b = pow(b, (int)(neg ? -k : k));
    }
    return b;
  }
  RationalFunction base() {
    skip();
    if (eat('-')) return RationalFunction::zero(nvars) - factor();
    if (eat('(')) {
      RationalFunction r = expr();
      if (!eat(')')) fail = true;
      return r;
    }
    if (pos < s.size() && isdigit((unsigned char)s[pos])) {
      Coef c = 0;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) c = c * 10 + (s[pos++] - '0');
      return RationalFunction::constant(nvars, c);
    }
    if (s.compare(pos, prefix.size(), prefix) == 0) {
      pos += prefix.size();
      if (pos >= s.size() || !isdigit((unsigned char)s[pos])) { fail = true; return RationalFunction::zero(nvars); }
      int idx = 0;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) idx = idx * 10 + (s[pos++] - '0');
      if (idx < 1 || idx > nvars) { fail = true; return RationalFunction::zero(nvars); }
      return RationalFunction::variable(nvars, idx - 1);
    }
    fail = true;
    return RationalFunction::zero(nvars);
  }
};

}  // namespace

std::optional<RationalFunction> parse_ratfun(const std::string& s, int nvars,
                                             const std::string& var_prefix) {
  Parser p{s, 0, nvars, var_prefix};
  RationalFunction r = p.expr();
  p.skip();
  if (p.fail || p.pos != s.size()) return std::nullopt;
  return r;
}

}  // namespace weaveclust
