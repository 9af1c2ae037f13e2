#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct MismatchedDiscriminant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BigInt binomial(unsigned n, unsigned k);
BigInt catalan(unsigned n);
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

enum class Var : int { q = 0, qn = 1, q0 = 2, theta = 3 };
inline constexpr int kNumVars = 4;
using Exponent = std::array<int, kNumVars>;

struct Assignment {
  std::array<std::optional<Rational>, kNumVars> values;
  Assignment& set(Var v, Rational x) {
    values[static_cast<int>(v)] = std::move(x);
    return *this;
  }
};

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const Exponent& e, const BigInt& c = 1);
  static LaurentPoly variable(Var v, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  LaurentPoly pow(unsigned k) const;
  Rational eval(const Assignment& a) const;
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(const Exponent& e, const BigInt& c);
  Terms terms_;
};

enum class LaurentOp { add, sub, mul };
LaurentPoly laurent_arith(const LaurentPoly& lhs, const LaurentPoly& rhs, LaurentOp op);

// Loop and boundary weights.
LaurentPoly tau();
LaurentPoly tau_even();       // -(qn + qn^-1)
LaurentPoly tau_odd();        // q qn^-1 + q^-1 qn
LaurentPoly tau_left_even();  // -(q0 + q0^-1)
LaurentPoly tau_left_odd();   // q q0^-1 + q^-1 q0
LaurentPoly theta();
LaurentPoly tau_p(int p, int n);
LaurentPoly tau_prime_p(int p);

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  static QuadExt scalar(Rational a, Rational d) { return {std::move(a), 0, std::move(d)}; }
  static QuadExt generator(Rational d) { return {0, 1, std::move(d)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt operator-() const { return {-a_, -b_, d_}; }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt conjugate() const { return {a_, -b_, d_}; }
  Rational norm() const { return a_ * a_ - d_ * b_ * b_; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  std::string to_string() const;

 private:
  Rational a_{0}, b_{0}, d_{0};
};

enum class QuadOp { add, sub, mul, div };
QuadExt quadext_arith(const QuadExt& lhs, const QuadExt& rhs, QuadOp op);

inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

}  // namespace fc
