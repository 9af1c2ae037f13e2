#include "fc/rings.hpp"

#include <cctype>
#include <sstream>

namespace fc {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

std::string to_string(const Rational& x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw DivisionByZero("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("malformed rational: " + std::string(text));
  }
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(Exponent{0, 0, 0, 0}, c); }

LaurentPoly LaurentPoly::monomial(const Exponent& e, const BigInt& c) {
  if (e[3] < 0) throw DomainError("theta carries a negative exponent");
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int power) {
  Exponent e{0, 0, 0, 0};
  e[static_cast<int>(v)] = power;
  return monomial(e);
}

void LaurentPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(1), base = *this;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

namespace {
Rational rpow(const Rational& x, int k) {
  Rational r = 1;
  Rational b = k < 0 ? Rational(1) / x : x;
  for (int i = 0; i < std::abs(k); ++i) r *= b;
  return r;
}
const char* kVarNames[kNumVars] = {"q", "qn", "q0", "t"};
}  // namespace

Rational LaurentPoly::eval(const Assignment& a) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = Rational(c);
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!a.values[i]) throw DomainError(std::string("unassigned variable ") + kVarNames[i]);
      if (e[i] < 0 && *a.values[i] == 0)
        throw DivisionByZero(std::string("negative power of zero-valued ") + kVarNames[i]);
      term *= rpow(*a.values[i], e[i]);
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += kVarNames[i];
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << vars;
    }
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty polynomial");
  LaurentPoly result;
  size_t i = 0;
  auto fail = [&](const std::string& why) -> DomainError {
    return DomainError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw fail("expected integer");
    return std::stoi(s.substr(start, i - start));
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw fail("expected sign");
    }
    BigInt coef = 1;
    Exponent e{0, 0, 0, 0};
    bool any = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      coef = BigInt(s.substr(start, i - start));
      any = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      int v;
      if (s.compare(i, 5, "theta") == 0) {
        v = 3;
        i += 5;
      } else if (s.compare(i, 2, "qn") == 0) {
        v = 1;
        i += 2;
      } else if (s.compare(i, 2, "q0") == 0) {
        v = 2;
        i += 2;
      } else if (s[i] == 'q') {
        v = 0;
        i += 1;
      } else if (s[i] == 't') {
        v = 3;
        i += 1;
      } else {
        throw fail("unknown symbol");
      }
      int p = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        p = read_int();
      }
      e[v] += p;
      any = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (!any) throw fail("empty term");
    result += monomial(e, sign * coef);
  }
  return result;
}

LaurentPoly laurent_arith(const LaurentPoly& lhs, const LaurentPoly& rhs, LaurentOp op) {
  switch (op) {
    case LaurentOp::add: return lhs + rhs;
    case LaurentOp::sub: return lhs - rhs;
    case LaurentOp::mul: return lhs * rhs;
  }
  throw DomainError("unknown op");
}

LaurentPoly tau() { return -(LaurentPoly::variable(Var::q) + LaurentPoly::variable(Var::q, -1)); }
LaurentPoly tau_even() { return -(LaurentPoly::variable(Var::qn) + LaurentPoly::variable(Var::qn, -1)); }
LaurentPoly tau_odd() {
  return LaurentPoly::monomial({1, -1, 0, 0}) + LaurentPoly::monomial({-1, 1, 0, 0});
}
LaurentPoly tau_left_even() {
  return -(LaurentPoly::variable(Var::q0) + LaurentPoly::variable(Var::q0, -1));
}
LaurentPoly tau_left_odd() {
  return LaurentPoly::monomial({1, 0, -1, 0}) + LaurentPoly::monomial({-1, 0, 1, 0});
}
LaurentPoly theta() { return LaurentPoly::variable(Var::theta); }

LaurentPoly tau_p(int p, int n) {
  return ((p - n) % 2 == 0) ? tau_even() : tau_odd();
}

LaurentPoly tau_prime_p(int p) { return (p % 2 == 0) ? tau_left_even() : tau_left_odd(); }

namespace {
void check_d(const QuadExt& x, const QuadExt& y) {
  if (x.d() != y.d()) throw MismatchedDiscriminant("quadratic extension discriminants differ");
}
}  // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  check_d(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
}
QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  check_d(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
}
QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  check_d(x, y);
  return {x.a_ * y.a_ + x.d_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_};
}
QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  check_d(x, y);
  if (y.is_zero()) throw DivisionByZero("division by zero in quadratic extension");
  Rational nrm = y.norm();
  if (nrm == 0) throw DivisionByZero("divisor has zero norm");
  QuadExt num = x * y.conjugate();
  return {num.a_ / nrm, num.b_ / nrm, x.d_};
}

std::string QuadExt::to_string() const {
  return fc::to_string(a_) + " + (" + fc::to_string(b_) + ")*C1 [C1^2=" + fc::to_string(d_) + "]";
}

QuadExt quadext_arith(const QuadExt& lhs, const QuadExt& rhs, QuadOp op) {
  switch (op) {
    case QuadOp::add: return lhs + rhs;
    case QuadOp::sub: return lhs - rhs;
    case QuadOp::mul: return lhs * rhs;
    case QuadOp::div: return lhs / rhs;
  }
  throw DomainError("unknown op");
}

}  // namespace fc
