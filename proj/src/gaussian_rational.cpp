#include "postlie/gaussian_rational.hpp"

#include <regex>

#include "postlie/errors.hpp"

namespace postlie {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotAdjointForm: return "NotAdjointForm";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
  }
  return "Error";
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den, long im_num, long im_den) {
  if (den == 0 || im_den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return {mpq_class(num, den), mpq_class(im_num, im_den)};
}

mpq_class GaussianRational::parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) {
    throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
  }
  mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den(1);
  if (m[2].matched) {
    std::string d = m[2].str();
    den = mpz_class(d.front() == '+' ? d.substr(1) : d);
  }
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational GaussianRational::parse(std::string_view re, std::string_view im) {
  return {parse_rational(re), parse_rational(im)};
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  std::string im = im_.get_str();
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  return out + im + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  mpq_class n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorKind::DivisionByZero, "division by zero Gaussian rational");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

}  // namespace postlie
