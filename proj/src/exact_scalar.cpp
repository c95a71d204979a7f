#include "diracsym/exact_scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace diracsym {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + std::string(text));
  if (sgn(q.get_den()) == 0) throw std::domain_error("rational with zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  const Rational n = norm2();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  // Short-circuit the common real-times-real and unit cases.
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

std::string ExactScalar::to_string() const {
  if (sgn(im_) == 0) return diracsym::to_string(re_);
  std::string imag;
  const Rational mag = abs(im_);
  if (mag != 1) imag = diracsym::to_string(mag);
  imag += "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return diracsym::to_string(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& z) { return os << z.to_string(); }

}  // namespace diracsym
