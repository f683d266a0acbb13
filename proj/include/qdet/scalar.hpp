#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>

#include "qdet/error.hpp"

namespace qdet {

using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in q over the rationals, stored as a finitely
/// supported exponent -> coefficient map.  No zero coefficients are kept.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(Rational constant);
  static LaurentPoly monomial(Rational coeff, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int min_exp() const;  // lowest exponent; requires nonzero
  int max_exp() const;
  Rational coeff(int exp) const;
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  void add_term(int exp, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int k) const;  // multiply by q^k

  Rational evaluate(const Rational& q0) const;  // q0 must be nonzero

  std::string str() const;
  bool operator==(const LaurentPoly&) const = default;

private:
  std::map<int, Rational> coeffs_;
};

/// Element of Q(q), kept in canonical form: the denominator is an ordinary
/// polynomial with constant term 1, coprime to the numerator after clearing
/// q-powers; all q-power content sits in the numerator's exponents.
/// Zero is num=0, den=1.  Equality is structural.
class RatFunc {
public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(int n) : RatFunc(Rational(n)) {}
  explicit RatFunc(const Rational& c)
      : num_(LaurentPoly(c)), den_(Rational(1)) {}
  explicit RatFunc(LaurentPoly num)
      : num_(std::move(num)), den_(Rational(1)) {}
  RatFunc(LaurentPoly num, LaurentPoly den);  // canonicalizes

  static RatFunc q_power(int k);
  static RatFunc one() { return RatFunc(1); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return den_.is_one(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // o != 0
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;
  RatFunc pow(int k) const;

  Rational evaluate_at(const Rational& q0) const;

  std::string str() const;
  bool operator==(const RatFunc&) const = default;

private:
  LaurentPoly num_;
  LaurentPoly den_;
  void canonicalize();
};

/// (n)_nu = 1 + nu + ... + nu^{n-1}, computed as the explicit sum.
RatFunc quantum_int(int n, const RatFunc& base);
/// (n)_nu! = (1)_nu (2)_nu ... (n)_nu, with (0)_nu! = 1.
RatFunc quantum_factorial(int n, const RatFunc& base);
/// (m+n)_nu! / ((m)_nu! (n)_nu!), an exact Laurent polynomial.
RatFunc gauss_binomial(int m, int n, const RatFunc& base);

/// Coefficient expression grammar used by the braiding file loader:
///   expr := term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom := 'q' | int | int '/' int | '(' expr ')'
/// Whitespace ignored.  Parse failures carry the offending position.
RatFunc parse_coeff(std::string_view text);

std::string rational_str(const Rational& c);

}  // namespace qdet
