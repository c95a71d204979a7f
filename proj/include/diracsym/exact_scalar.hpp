#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace diracsym {

/// Arbitrary-precision rational; GMP keeps it canonical after every operation.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal integers of any length).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Complex number with rational real and imaginary parts. Equality is exact.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error for zero.
  ExactScalar inverse() const;

  ExactScalar operator-() const { return {-re_, -im_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form such as "1/2 - 3i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& z);

}  // namespace diracsym
