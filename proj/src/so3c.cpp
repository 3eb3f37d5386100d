#include "postlie/so3c.hpp"

#include "postlie/random.hpp"

namespace postlie::so3c {

namespace {

constexpr int kMaxAttempts = 100;

}  // namespace

template <Scalar S>
bool is_special_orthogonal(const Mat3<S>& t, double tol) {
  const Mat3<S> gram = transpose(t) * t - Mat3<S>::identity();
  const S d = det(t) - S(1);
  if constexpr (is_exact_v<S>) {
    return is_zero(gram, 0.0) && d.is_zero();
  } else {
    return frobenius_norm(gram) <= tol && std::abs(d) <= tol;
  }
}

template <Scalar S>
Mat3<S> antisymmetric(const Vec3<S>& k) {
  Mat3<S> m;
  m(0, 1) = k[2];
  m(1, 0) = -k[2];
  m(0, 2) = -k[1];
  m(2, 0) = k[1];
  m(1, 2) = k[0];
  m(2, 1) = -k[0];
  return m;
}

template <Scalar S>
Mat3<S> cayley(const Mat3<S>& k) {
  const Mat3<S> id = Mat3<S>::identity();
  const Mat3<S> minus = id - k;
  const S d = det(minus);
  if constexpr (is_exact_v<S>) {
    if (d.is_zero()) throw Error(ErrorKind::Singular, "I - K is singular");
  } else {
    if (std::abs(d) < 1e-6) throw Error(ErrorKind::Singular, "I - K is numerically singular");
  }
  return (S(1) / d) * (adjugate(minus) * (id + k));
}

OrthogonalMatrix<ComplexDouble> random_so3(std::uint64_t seed, double radius) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Vec3d k{uniform_disk(rng, radius), uniform_disk(rng, radius), uniform_disk(rng, radius)};
    const Mat3d kk = antisymmetric(k);
    if (std::abs(det(Mat3d::identity() - kk)) < 1e-6) continue;
    return {cayley(kk), 1e-10};
  }
  throw Error(ErrorKind::Singular, "random_so3: no admissible Cayley parameter after 100 draws");
}

OrthogonalMatrix<GaussianRational> random_so3_exact(std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
  auto draw = [&] {
    const long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
    return GaussianRational::fraction(p, q, r, s);
  };
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Vec3q k{draw(), draw(), draw()};
    const Mat3q kk = antisymmetric(k);
    if (det(Mat3q::identity() - kk).is_zero()) continue;
    return {cayley(kk), 0.0};
  }
  throw Error(ErrorKind::Singular, "random_so3_exact: no admissible Cayley parameter after 100 draws");
}

template <Scalar S>
Mat3<S> adjoint_rep(const Mat2<S>& p) {
  const S d = det(p);
  double scale = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) scale = std::max(scale, magnitude(p(i, j)));
  if (is_zero(d, 1e-14 * scale * scale)) throw Error(ErrorKind::Singular, "P is singular");
  Mat2<S> inv;
  inv(0, 0) = p(1, 1) / d;
  inv(0, 1) = -p(0, 1) / d;
  inv(1, 0) = -p(1, 0) / d;
  inv(1, 1) = p(0, 0) / d;
  Mat3<S> out;
  for (int i = 0; i < 3; ++i) out.set_row(i, sl2::coordinates(p * sl2::basis_2x2<S>(i) * inv));
  return out;
}

template <Scalar S>
bool automorphism_check(const Mat3<S>& t, double tol) {
  if (is_zero(det(t), tol)) return false;
  const double scale = std::max(1.0, max_abs(t) * max_abs(t));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Vec3<S> lhs = sl2::bracket(t.row(i), t.row(j));
      const Vec3<S> rhs = sl2::bracket(Vec3<S>::basis(i), Vec3<S>::basis(j)) * t;
      const Vec3<S> diff = lhs - rhs;
      for (int k = 0; k < 3; ++k) {
        if constexpr (is_exact_v<S>) {
          if (!diff[k].is_zero()) return false;
        } else {
          if (std::abs(diff[k]) > tol * scale) return false;
        }
      }
    }
  return true;
}

double adjugate_transpose_residual(const Mat3d& t) { return frobenius_norm(transpose(adjugate(t)) - t); }

template bool is_special_orthogonal(const Mat3q&, double);
template bool is_special_orthogonal(const Mat3d&, double);
template Mat3q antisymmetric(const Vec3q&);
template Mat3d antisymmetric(const Vec3d&);
template Mat3q cayley(const Mat3q&);
template Mat3d cayley(const Mat3d&);
template Mat3q adjoint_rep(const Mat2q&);
template Mat3d adjoint_rep(const Mat2d&);
template bool automorphism_check(const Mat3q&, double);
template bool automorphism_check(const Mat3d&, double);

}  // namespace postlie::so3c
