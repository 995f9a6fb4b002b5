#include "rational.hpp"

#include <numeric>

namespace afb {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw AfbError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked_sub(0, num_);
    den_ = checked_sub(0, den_);
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_sub(0, num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  // a/b + c/d with gcd reduction before the cross multiplication.
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t lhs = checked_mul(num_, o.den_ / g);
  std::int64_t rhs = checked_mul(o.num_, den_ / g);
  num_ = checked_add(lhs, rhs);
  den_ = checked_mul(den_, o.den_ / g);
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  num_ = checked_mul(num_ / g1, o.num_ / g2);
  den_ = checked_mul(den_ / g2, o.den_ / g1);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw AfbError("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  // a.num/a.den < b.num/b.den with positive denominators.
  return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw AfbError("scalar division by zero");
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  Rational norm = o.re * o.re + o.im * o.im;
  Scalar num = *this * o.conj();
  re = num.re / norm;
  im = num.im / norm;
  return *this;
}

std::string Scalar::str() const {
  if (im.is_zero()) return re.str();
  std::string s;
  if (!re.is_zero()) s += re.str();
  if (im.sign() >= 0 && !s.empty()) s += "+";
  if (im == Rational(1)) {
    s += "i";
  } else if (im == Rational(-1)) {
    s += "-i";
  } else {
    s += im.str() + "i";
  }
  return s;
}

} // namespace afb
