#pragma once

#include <array>
#include <cmath>
#include <initializer_list>

#include "postlie/errors.hpp"
#include "postlie/scalar.hpp"

namespace postlie {

/// Row coordinate vector in the basis {e1, e2, e3}.
template <Scalar S>
struct Vec3 {
  std::array<S, 3> v{};

  Vec3() = default;
  Vec3(S a, S b, S c) : v{std::move(a), std::move(b), std::move(c)} {}

  static Vec3 basis(int i) {
    Vec3 e;
    e.v[i] = S(1);
    return e;
  }

  S& operator[](int i) { return v[i]; }
  const S& operator[](int i) const { return v[i]; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
  friend Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
  friend Vec3 operator*(const S& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.v == b.v; }
};

/// Dense 3x3 matrix, row-major. Homogeneous in its scalar kind by construction.
template <Scalar S>
struct Mat3 {
  std::array<std::array<S, 3>, 3> a{};

  Mat3() = default;

  /// Rejects anything but 3 rows of 3 entries, and non-finite floating entries.
  Mat3(std::initializer_list<std::initializer_list<S>> rows) {
    if (rows.size() != 3) throw Error(ErrorKind::Parse, "matrix must have 3 rows");
    int i = 0;
    for (const auto& r : rows) {
      if (r.size() != 3) throw Error(ErrorKind::Parse, "matrix rows must have 3 entries");
      int j = 0;
      for (const auto& x : r) a[i][j++] = x;
      ++i;
    }
    validate();
  }

  static Mat3 zero() { return {}; }
  static Mat3 identity() { return diag(S(1), S(1), S(1)); }
  static Mat3 diag(S x, S y, S z) {
    Mat3 m;
    m.a[0][0] = std::move(x);
    m.a[1][1] = std::move(y);
    m.a[2][2] = std::move(z);
    return m;
  }

  S& operator()(int i, int j) { return a[i][j]; }
  const S& operator()(int i, int j) const { return a[i][j]; }

  Vec3<S> row(int i) const { return {a[i][0], a[i][1], a[i][2]}; }
  Vec3<S> col(int j) const { return {a[0][j], a[1][j], a[2][j]}; }
  void set_row(int i, const Vec3<S>& r) {
    for (int j = 0; j < 3; ++j) a[i][j] = r[j];
  }

  void validate() const {
    if constexpr (!is_exact_v<S>) {
      for (const auto& r : a)
        for (const auto& x : r)
          if (!is_finite(x)) throw Error(ErrorKind::NonFinite, "matrix entry is NaN or infinite");
    }
  }

  friend Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.a[i][j] = x.a[i][j] + y.a[i][j];
    return m;
  }
  friend Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.a[i][j] = x.a[i][j] - y.a[i][j];
    return m;
  }
  friend Mat3 operator-(const Mat3& x) { return Mat3{} - x; }
  friend Mat3 operator*(const S& s, const Mat3& x) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.a[i][j] = s * x.a[i][j];
    return m;
  }
  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S acc = x.a[i][0] * y.a[0][j];
        acc += x.a[i][1] * y.a[1][j];
        acc += x.a[i][2] * y.a[2][j];
        m.a[i][j] = std::move(acc);
      }
    return m;
  }
  /// Row vector times matrix.
  friend Vec3<S> operator*(const Vec3<S>& x, const Mat3& m) {
    Vec3<S> out;
    for (int j = 0; j < 3; ++j) out[j] = x[0] * m.a[0][j] + x[1] * m.a[1][j] + x[2] * m.a[2][j];
    return out;
  }
  friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }
};

using Mat3q = Mat3<GaussianRational>;
using Mat3d = Mat3<ComplexDouble>;
using Vec3q = Vec3<GaussianRational>;
using Vec3d = Vec3<ComplexDouble>;

template <Scalar S>
Mat3<S> transpose(const Mat3<S>& m) {
  Mat3<S> t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = m(j, i);
  return t;
}

template <Scalar S>
S trace(const Mat3<S>& m) {
  return m(0, 0) + m(1, 1) + m(2, 2);
}

template <Scalar S>
S det(const Mat3<S>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Transposed cofactor matrix: m * adjugate(m) = det(m) I.
template <Scalar S>
Mat3<S> adjugate(const Mat3<S>& m) {
  Mat3<S> r;
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    for (int j = 0; j < 3; ++j) {
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // cyclic index choice folds the (-1)^(i+j) sign into the minor
      r(j, i) = m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1);
    }
  }
  return r;
}

template <Scalar S>
Mat3<S> sym_part(const Mat3<S>& m) {
  return (S(1) / S(2)) * (m + transpose(m));
}

template <Scalar S>
Mat3<S> antisym_part(const Mat3<S>& m) {
  return (S(1) / S(2)) * (m - transpose(m));
}

template <Scalar S>
double frobenius_norm(const Mat3<S>& m) {
  if constexpr (is_exact_v<S>) {
    mpq_class acc = 0;
    for (const auto& r : m.a)
      for (const auto& x : r) acc += x.norm();
    return std::sqrt(acc.get_d());
  } else {
    double acc = 0;
    for (const auto& r : m.a)
      for (const auto& x : r) acc += std::norm(x);
    return std::sqrt(acc);
  }
}

template <Scalar S>
double max_abs(const Mat3<S>& m) {
  double best = 0;
  for (const auto& r : m.a)
    for (const auto& x : r) best = std::max(best, magnitude(x));
  return best;
}

template <Scalar S>
bool is_zero(const Mat3<S>& m, double tol) {
  if constexpr (is_exact_v<S>) {
    return m == Mat3<S>::zero();
  } else {
    return frobenius_norm(m) <= tol;
  }
}

/// Column alpha times row beta.
template <Scalar S>
Mat3<S> outer(const Vec3<S>& alpha, const Vec3<S>& beta) {
  Mat3<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = alpha[i] * beta[j];
  return m;
}

inline Mat3d to_numeric(const Mat3d& m) { return m; }
inline Mat3d to_numeric(const Mat3q& m) {
  Mat3d out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m(i, j).to_complex();
  return out;
}
inline Vec3d to_numeric(const Vec3q& v) { return {v[0].to_complex(), v[1].to_complex(), v[2].to_complex()}; }
inline Vec3d to_numeric(const Vec3d& v) { return v; }

}  // namespace postlie
