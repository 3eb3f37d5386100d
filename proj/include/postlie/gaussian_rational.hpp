#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace postlie {

using ComplexDouble = std::complex<double>;

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// gmpxx keeps every mpq_class canonical (positive denominator, lowest terms)
/// after each arithmetic operation; values built from raw numerator and
/// denominator go through canonicalize() in the constructors below.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }
  static GaussianRational fraction(long num, long den, long im_num = 0, long im_den = 1);

  /// Parses the "p/q" (or "p") decimal encoding of each part.
  static GaussianRational parse(std::string_view re, std::string_view im);
  static mpq_class parse_rational(std::string_view text);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  ComplexDouble to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Human-readable form such as "-1/2+1/2i".
  std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Rational "p/q" text with an explicit denominator, e.g. "3/1", "-1/2".
std::string rational_to_string(const mpq_class& q);

}  // namespace postlie
