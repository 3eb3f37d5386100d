#pragma once

#include <array>
#include <string>
#include <vector>

#include "postlie/linalg.hpp"

namespace postlie {

/// 2x2 matrix, row-major.
template <Scalar S>
struct Mat2 {
  std::array<std::array<S, 2>, 2> a{};

  S& operator()(int i, int j) { return a[i][j]; }
  const S& operator()(int i, int j) const { return a[i][j]; }

  static Mat2 identity() {
    Mat2 m;
    m.a[0][0] = S(1);
    m.a[1][1] = S(1);
    return m;
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][j] + y.a[i][j];
    return m;
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][j] - y.a[i][j];
    return m;
  }
  friend Mat2 operator*(const S& s, const Mat2& x) {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.a[i][j] = s * x.a[i][j];
    return m;
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
    return m;
  }
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a; }
};

using Mat2q = Mat2<GaussianRational>;
using Mat2d = Mat2<ComplexDouble>;

template <Scalar S>
S det(const Mat2<S>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <Scalar S>
S trace(const Mat2<S>& m) {
  return m(0, 0) + m(1, 1);
}

/// Bilinear product on a 3-dimensional space: e_i o e_j = sum_k c[i][j][k] e_k.
template <Scalar S>
struct StructureConstants {
  std::array<std::array<Vec3<S>, 3>, 3> c{};

  Vec3<S>& operator()(int i, int j) { return c[i][j]; }
  const Vec3<S>& operator()(int i, int j) const { return c[i][j]; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

using StructureConstantsq = StructureConstants<GaussianRational>;
using StructureConstantsd = StructureConstants<ComplexDouble>;

/// A basis tuple on which an identity fails. Indices are 1-based (e1..e3).
struct IdentityViolation {
  std::string identity;  // postlie-3 | postlie-4 | jacobi | antisymmetry | rota-baxter
  std::vector<int> indices;
  std::array<ComplexValue, 3> residual;
};

namespace sl2 {

/// [x, y] in coordinates: [e2,e3] = e1, [e3,e1] = e2, [e1,e2] = e3, i.e. the cross product.
template <Scalar S>
Vec3<S> bracket(const Vec3<S>& x, const Vec3<S>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

/// e1 = 1/2 [[0,1],[-1,0]], e2 = 1/(2i) [[0,1],[1,0]], e3 = 1/(2i) [[1,0],[0,-1]].
/// All entries are Gaussian rationals, so this works in exact mode too.
template <Scalar S>
Mat2<S> basis_2x2(int k);

/// Sum_k x_k e_k as a traceless 2x2 matrix.
template <Scalar S>
Mat2<S> embed(const Vec3<S>& x);

/// Coordinates of a traceless 2x2 matrix via the pairing <X,Y> = -2 tr(XY),
/// under which e1, e2, e3 are orthonormal.
template <Scalar S>
Vec3<S> coordinates(const Mat2<S>& x);

/// Bracket computed as a 2x2 commutator through embed/coordinates.
template <Scalar S>
Vec3<S> bracket_via_2x2(const Vec3<S>& x, const Vec3<S>& y);

/// Structure constants of the fixed sl(2,C) bracket.
template <Scalar S>
StructureConstants<S> lie_bracket();

/// x o y from structure constants, by bilinearity.
template <Scalar S>
Vec3<S> product(const StructureConstants<S>& c, const Vec3<S>& x, const Vec3<S>& y);

/// e_i o e_j = [f(e_i), e_j] with f(e_i) = row i of A.
template <Scalar S>
StructureConstants<S> circ_from_matrix(const Mat3<S>& a);

/// The unique A with circ_from_matrix(A) = c; throws NotAdjointForm when the
/// per-row systems [f_i, e_j] = e_i o e_j are inconsistent.
template <Scalar S>
Mat3<S> matrix_from_circ(const StructureConstants<S>& c, double tol = 1e-10);

/// Axioms (3) and (4) of a PostLie algebra over the fixed bracket, on all
/// 27 basis triples. Empty iff the product is a PostLie structure.
template <Scalar S>
std::vector<IdentityViolation> check_postlie(const StructureConstants<S>& c, double tol = 1e-10);

/// {x,y} = x o y - y o x + [x,y]
template <Scalar S>
StructureConstants<S> derived_bracket(const StructureConstants<S>& c);

/// Antisymmetry on all pairs and the Jacobi identity on all triples.
template <Scalar S>
std::vector<IdentityViolation> check_jacobi(const StructureConstants<S>& b, double tol = 1e-10);

/// [f(x),f(y)] - f([f(x),y] + [x,f(y)] + [x,y]) on all 9 basis pairs.
template <Scalar S>
std::vector<IdentityViolation> check_rota_baxter(const Mat3<S>& a, double tol = 1e-10);

/// Antisymmetry and Jacobi of the fixed bracket, and agreement of the cross
/// product with the 2x2 commutator on basis pairs. Evaluated once per process.
bool fixed_bracket_is_lie();

}  // namespace sl2
}  // namespace postlie
