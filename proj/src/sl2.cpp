#include "postlie/sl2.hpp"

namespace postlie::sl2 {

namespace {

template <Scalar S>
bool nonzero(const Vec3<S>& v, double tol) {
  for (int k = 0; k < 3; ++k)
    if (!is_zero(v[k], tol)) return true;
  return false;
}

template <Scalar S>
void record(std::vector<IdentityViolation>& out, const char* name, std::vector<int> idx, const Vec3<S>& r,
            double tol) {
  if (!nonzero(r, tol)) return;
  for (int& i : idx) ++i;
  out.push_back({name, std::move(idx), {ComplexValue::of(r[0]), ComplexValue::of(r[1]), ComplexValue::of(r[2])}});
}

template <Scalar S>
Vec3<S> e(int i) {
  return Vec3<S>::basis(i);
}

}  // namespace

template <Scalar S>
Mat2<S> basis_2x2(int k) {
  const S half = S(1) / S(2);
  const S i_half = [] {
    if constexpr (is_exact_v<S>) return GaussianRational::i() / GaussianRational(2);
    else return ComplexDouble(0, 0.5);
  }();
  Mat2<S> m;
  switch (k) {
    case 0:
      m(0, 1) = half;
      m(1, 0) = -half;
      break;
    case 1:
      m(0, 1) = -i_half;
      m(1, 0) = -i_half;
      break;
    case 2:
      m(0, 0) = -i_half;
      m(1, 1) = i_half;
      break;
    default: throw Error(ErrorKind::OutOfRange, "basis index must be 0, 1 or 2");
  }
  return m;
}

template <Scalar S>
Mat2<S> embed(const Vec3<S>& x) {
  return x[0] * basis_2x2<S>(0) + x[1] * basis_2x2<S>(1) + x[2] * basis_2x2<S>(2);
}

template <Scalar S>
Vec3<S> coordinates(const Mat2<S>& x) {
  Vec3<S> out;
  for (int k = 0; k < 3; ++k) out[k] = S(-2) * trace(x * basis_2x2<S>(k));
  return out;
}

template <Scalar S>
Vec3<S> bracket_via_2x2(const Vec3<S>& x, const Vec3<S>& y) {
  const Mat2<S> X = embed(x), Y = embed(y);
  return coordinates(X * Y - Y * X);
}

template <Scalar S>
StructureConstants<S> lie_bracket() {
  StructureConstants<S> b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = bracket(e<S>(i), e<S>(j));
  return b;
}

template <Scalar S>
Vec3<S> product(const StructureConstants<S>& c, const Vec3<S>& x, const Vec3<S>& y) {
  Vec3<S> out;
  for (int i = 0; i < 3; ++i) {
    if constexpr (is_exact_v<S>) {
      if (x[i].is_zero()) continue;
    }
    for (int j = 0; j < 3; ++j) out = out + (x[i] * y[j]) * c(i, j);
  }
  return out;
}

template <Scalar S>
StructureConstants<S> circ_from_matrix(const Mat3<S>& a) {
  StructureConstants<S> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = bracket(a.row(i), e<S>(j));
  return c;
}

template <Scalar S>
Mat3<S> matrix_from_circ(const StructureConstants<S>& c, double tol) {
  // [f, e_j] is linear in f = (f1, f2, f3); stack the three j-blocks into a
  // 9x3 coefficient matrix shared by all rows i.
  std::vector<std::vector<S>> coeff;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      std::vector<S> row(3);
      for (int m = 0; m < 3; ++m) row[m] = bracket(e<S>(m), e<S>(j))[k];
      coeff.push_back(std::move(row));
    }
  const int coeff_rank = rank_of(coeff, tol);

  Mat3<S> a;
  for (int i = 0; i < 3; ++i) {
    auto augmented = coeff;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) augmented[3 * j + k].push_back(c(i, j)[k]);
    if (rank_of(augmented, tol) != coeff_rank) {
      throw Error(ErrorKind::NotAdjointForm,
                  "e" + std::to_string(i + 1) + " o e_j is not of the form [f(e" + std::to_string(i + 1) + "), e_j]");
    }
    // f x e2 = (-f3, 0, f1), f x e3 = (f2, -f1, 0), f x e1 = (0, f3, -f2)
    a(i, 0) = c(i, 1)[2];
    a(i, 1) = c(i, 2)[0];
    a(i, 2) = c(i, 0)[1];
  }
  return a;
}

template <Scalar S>
std::vector<IdentityViolation> check_postlie(const StructureConstants<S>& c, double tol) {
  std::vector<IdentityViolation> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Vec3<S> x = e<S>(i), y = e<S>(j), z = e<S>(k);
        // z o (y o x) - y o (z o x) + (y o z) o x - (z o y) o x + [y,z] o x
        const Vec3<S> r3 = product(c, z, product(c, y, x)) - product(c, y, product(c, z, x)) +
                           product(c, c(j, k), x) - product(c, c(k, j), x) + product(c, bracket(y, z), x);
        record(out, "postlie-3", {i, j, k}, r3, tol);
        // z o [x,y] - [z o x, y] - [x, z o y]
        const Vec3<S> r4 = product(c, z, bracket(x, y)) - bracket(c(k, i), y) - bracket(x, c(k, j));
        record(out, "postlie-4", {i, j, k}, r4, tol);
      }
  return out;
}

template <Scalar S>
StructureConstants<S> derived_bracket(const StructureConstants<S>& c) {
  StructureConstants<S> b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = c(i, j) - c(j, i) + bracket(e<S>(i), e<S>(j));
  return b;
}

template <Scalar S>
std::vector<IdentityViolation> check_jacobi(const StructureConstants<S>& b, double tol) {
  std::vector<IdentityViolation> out;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) record(out, "antisymmetry", {i, j}, b(i, j) + b(j, i), tol);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Vec3<S> x = e<S>(i), y = e<S>(j), z = e<S>(k);
        const Vec3<S> r = product(b, b(i, j), z) + product(b, b(k, i), y) + product(b, b(j, k), x);
        record(out, "jacobi", {i, j, k}, r, tol);
      }
  return out;
}

template <Scalar S>
std::vector<IdentityViolation> check_rota_baxter(const Mat3<S>& a, double tol) {
  std::vector<IdentityViolation> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Vec3<S> fx = a.row(i), fy = a.row(j);
      const Vec3<S> inner = bracket(fx, e<S>(j)) + bracket(e<S>(i), fy) + bracket(e<S>(i), e<S>(j));
      record(out, "rota-baxter", {i, j}, bracket(fx, fy) - inner * a, tol);
    }
  return out;
}

bool fixed_bracket_is_lie() {
  static const bool ok = [] {
    const auto b = lie_bracket<GaussianRational>();
    if (!check_jacobi(b, 0.0).empty()) return false;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(bracket_via_2x2(e<GaussianRational>(i), e<GaussianRational>(j)) == b(i, j))) return false;
    return true;
  }();
  return ok;
}

#define POSTLIE_SL2_INSTANTIATE(S)                                                                     \
  template Mat2<S> basis_2x2<S>(int);                                                                  \
  template Mat2<S> embed<S>(const Vec3<S>&);                                                           \
  template Vec3<S> coordinates<S>(const Mat2<S>&);                                                     \
  template Vec3<S> bracket_via_2x2<S>(const Vec3<S>&, const Vec3<S>&);                                 \
  template StructureConstants<S> lie_bracket<S>();                                                     \
  template Vec3<S> product<S>(const StructureConstants<S>&, const Vec3<S>&, const Vec3<S>&);           \
  template StructureConstants<S> circ_from_matrix<S>(const Mat3<S>&);                                  \
  template Mat3<S> matrix_from_circ<S>(const StructureConstants<S>&, double);                          \
  template std::vector<IdentityViolation> check_postlie<S>(const StructureConstants<S>&, double);      \
  template StructureConstants<S> derived_bracket<S>(const StructureConstants<S>&);                     \
  template std::vector<IdentityViolation> check_jacobi<S>(const StructureConstants<S>&, double);       \
  template std::vector<IdentityViolation> check_rota_baxter<S>(const Mat3<S>&, double);

POSTLIE_SL2_INSTANTIATE(GaussianRational)
POSTLIE_SL2_INSTANTIATE(ComplexDouble)

}  // namespace postlie::sl2
