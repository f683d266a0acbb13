#include "qdet/scalar.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qdet {

LaurentPoly::LaurentPoly(Rational constant) {
  if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Rational coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exp, const Rational& c) {
  if (c == 0) return;
  auto it = coeffs_.find(exp);
  if (it == coeffs_.end()) {
    coeffs_[exp] = c;
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
  if (q0 == 0) fail(ErrorCode::InvalidArgument, "evaluation at q=0");
  Rational acc(0);
  for (const auto& [e, c] : coeffs_) {
    Rational p(1);
    int n = e < 0 ? -e : e;
    for (int i = 0; i < n; ++i) p *= q0;
    if (e < 0) p = Rational(1) / p;
    acc += c * p;
  }
  return acc;
}

std::string rational_str(const Rational& c) {
  std::ostringstream os;
  os << numerator(c);
  if (denominator(c) != 1) os << "/" << denominator(c);
  return os.str();
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest power first
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational c = it->second;
    int e = it->first;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = neg ? Rational(-c) : c;
    if (e == 0) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Ordinary-polynomial helpers for canonicalization (ascending coefficients).

namespace {

using Poly = std::vector<Rational>;

Poly to_poly(const LaurentPoly& p, int shift) {
  // p * q^{-shift} must be an ordinary polynomial.
  Poly out;
  if (p.is_zero()) return out;
  out.assign(static_cast<size_t>(p.max_exp() - shift) + 1, Rational(0));
  for (const auto& [e, c] : p.coeffs()) out[static_cast<size_t>(e - shift)] = c;
  return out;
}

LaurentPoly from_poly(const Poly& p, int shift) {
  LaurentPoly out;
  for (size_t i = 0; i < p.size(); ++i)
    out.add_term(static_cast<int>(i) + shift, p[i]);
  return out;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of a by b, b nonzero.
void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  rem = a;
  trim(rem);
  quo.assign(rem.size() > b.size() ? rem.size() - b.size() + 1 : 1,
             Rational(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational f = rem.back() / b.back();
    size_t off = rem.size() - b.size();
    quo[off] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
    trim(rem);
  }
  trim(quo);
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    // keep monic to tame coefficient growth
    if (!b.empty()) {
      Rational lead = b.back();
      for (auto& c : b) c /= lead;
    }
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly div_exact(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  return q;
}

}  // namespace

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  int a = num_.min_exp();
  int b = den_.min_exp();
  Poly n0 = to_poly(num_, a);
  Poly d0 = to_poly(den_, b);
  Poly g = gcd(n0, d0);
  if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
    n0 = div_exact(n0, g);
    d0 = div_exact(d0, g);
  }
  Rational c = d0[0];  // nonzero constant term by construction
  if (c != 1) {
    for (auto& x : n0) x /= c;
    for (auto& x : d0) x /= c;
  }
  num_ = from_poly(n0, a - b);
  den_ = from_poly(d0, 0);
}

RatFunc RatFunc::q_power(int k) {
  return RatFunc(LaurentPoly::monomial(Rational(1), k));
}

bool RatFunc::is_one() const { return num_.is_one() && den_.is_one(); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k == 0) return RatFunc(1);
  RatFunc base = k < 0 ? inverse() : *this;
  int n = k < 0 ? -k : k;
  RatFunc acc(1);
  for (int i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

Rational RatFunc::evaluate_at(const Rational& q0) const {
  if (q0 == 0) fail(ErrorCode::InvalidArgument, "evaluation at q=0");
  Rational d = den_.evaluate(q0);
  if (d == 0) fail(ErrorCode::Pole, "pole at q0");
  return num_.evaluate(q0) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc quantum_int(int n, const RatFunc& base) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "quantum_int of negative n");
  RatFunc acc;
  RatFunc p(1);
  for (int k = 0; k < n; ++k) {
    acc += p;
    p = p * base;
  }
  return acc;
}

RatFunc quantum_factorial(int n, const RatFunc& base) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "quantum_factorial of negative n");
  RatFunc acc(1);
  for (int k = 1; k <= n; ++k) acc = acc * quantum_int(k, base);
  return acc;
}

RatFunc gauss_binomial(int m, int n, const RatFunc& base) {
  if (m < 0 || n < 0) fail(ErrorCode::InvalidArgument, "negative binomial args");
  return quantum_factorial(m + n, base) /
         (quantum_factorial(m, base) * quantum_factorial(n, base));
}

// ---------------------------------------------------------------------------
// Coefficient expression parser.

namespace {

class CoeffParser {
public:
  explicit CoeffParser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail(ErrorCode::ParseError,
           "coefficient parse error at position " + std::to_string(pos_) +
               ": trailing input");
    return v;
  }

private:
  std::string_view text_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::ParseError, "coefficient parse error at position " +
                                    std::to_string(pos_) + ": " + what);
  }

  RatFunc expr() {
    // leading unary minus is accepted as a superset of the grammar
    bool neg = eat('-');
    RatFunc acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  RatFunc factor() {
    RatFunc a = atom();
    skip_ws();
    if (eat('^')) {
      long e = integer();
      if (e > 1000 || e < -1000) error("exponent out of range");
      a = a.pow(static_cast<int>(e));
    }
    return a;
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == 'q') {
      ++pos_;
      return RatFunc::q_power(1);
    }
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      Rational n = big_integer();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/' && digit_after_slash()) {
        ++pos_;  // '/'
        Rational d = big_integer();
        if (d == 0) error("zero denominator in rational literal");
        return RatFunc(n / d);
      }
      return RatFunc(n);
    }
    error(std::string("unexpected character '") + c + "'");
  }

  bool digit_after_slash() {
    size_t p = pos_ + 1;
    while (p < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[p])) ||
            text_[p] == '-');
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      error("expected integer");
    long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) error("integer literal too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  Rational big_integer() {
    skip_ws();
    std::string digits;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      digits += '-';
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      error("expected integer");
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      ++pos_;
    }
    return Rational(boost::multiprecision::cpp_int(digits));
  }
};

}  // namespace

RatFunc parse_coeff(std::string_view text) { return CoeffParser(text).parse(); }

}  // namespace qdet
