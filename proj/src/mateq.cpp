#include "postlie/mateq.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "postlie/random.hpp"

namespace postlie {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Zero: return "Zero";
    case Family::MinusIdentity: return "MinusIdentity";
    case Family::TraceMinus2: return "TraceMinus2";
    case Family::KFamily: return "KFamily";
    case Family::NonSymRank1: return "NonSymRank1";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::Zero, Family::MinusIdentity, Family::TraceMinus2, Family::KFamily, Family::NonSymRank1})
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::Parse, "unknown family '" + std::string(name) + "'");
}

bool FamilyTag::equals(const FamilyTag& other, double tol) const {
  if (family != other.family) return false;
  if (family != Family::KFamily) return true;
  return k.approx_equal(other.k, tol);
}

std::string_view CongruenceVerdict::kind_name(Kind k) {
  switch (k) {
    case Kind::Congruent: return "congruent";
    case Kind::NotCongruent: return "not_congruent";
    case Kind::Unknown: return "unknown";
  }
  return "?";
}

namespace mateq {

template <Scalar S>
Mat3<S> residual(const Mat3<S>& a) {
  const S s = trace(a) + S(1);
  return transpose(a) * (Mat3<S>::diag(s, s, s) - a) - adjugate(a);
}

template <Scalar S>
bool is_solution(const Mat3<S>& a, double tol) {
  const Mat3<S> r = residual(a);
  if constexpr (is_exact_v<S>) {
    return is_zero(r, 0.0);
  } else {
    const double n = frobenius_norm(a);
    return frobenius_norm(r) <= tol * std::max(1.0, n * n);
  }
}

Mat3q representative(const FamilyTag& tag) {
  using Q = GaussianRational;
  const Q i = Q::i();
  const Q half = Q::fraction(1, 2);
  switch (tag.family) {
    case Family::Zero: return Mat3q::zero();
    case Family::MinusIdentity: return Q(-1) * Mat3q::identity();
    case Family::TraceMinus2: {
      const Q x = -(Q(1) + i) * half, y = (i - Q(1)) * half;
      return {{Q(-1), 0, 0}, {0, x, y}, {0, x, y}};
    }
    case Family::KFamily: {
      if (!tag.k.exact) throw Error(ErrorKind::InvalidParameter, "exact representative needs an exact k");
      return {{*tag.k.exact, 0, 0}, {0, -half, i * half}, {0, -(i * half), -half}};
    }
    case Family::NonSymRank1:
      return {{-half + i, Q(1) - i * half, 0}, {Q(1) + i * half, -half - i, 0}, {0, 0, 0}};
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family");
}

Mat3d representative_numeric(const FamilyTag& tag) {
  if (tag.family == Family::KFamily && !tag.k.exact) {
    const ComplexDouble i(0, 1);
    return {{tag.k.value, 0.0, 0.0}, {0.0, -0.5, 0.5 * i}, {0.0, -0.5 * i, -0.5}};
  }
  return to_numeric(representative(tag));
}

template <Scalar S>
Mat3<S> congruate(const Mat3<S>& a, const Mat3<S>& t, double tol) {
  if (!so3c::is_special_orthogonal(t, tol)) throw Error(ErrorKind::NotOrthogonal, "T is not in SO(3,C)");
  return transpose(t) * a * t;
}

template <Scalar S>
Mat3<S> rank2_identity_residual(const Mat3<S>& a) {
  const Mat3<S> g = transpose(a) * a;
  return (trace(a) + S(1)) * g - g * a;
}

template <Scalar S>
Mat3<S> rank1_identity_residual(const Mat3<S>& a) {
  return (trace(a) + S(1)) * transpose(a) - transpose(a) * a;
}

namespace {

template <Scalar S>
int rank_at(const Mat3<S>& m, double tol, double scale) {
  // absolute threshold: a derived matrix that vanishes exactly must not be judged against its own noise
  if constexpr (is_exact_v<S>) return rank(m);
  else return rank_above(m, tol * scale);
}

ComplexValue k_value(const GaussianRational& k, double) { return ComplexValue::of(k); }
ComplexValue k_value(ComplexDouble k, double) {
  if (auto snapped = snap_to_small_rational(k, 1e-9)) return ComplexValue{k, *snapped};
  return ComplexValue::of(k);
}

}  // namespace

template <Scalar S>
ClassificationReport classify(const Mat3<S>& a, const ClassifyOptions& opts) {
  ClassificationReport rep;
  const Mat3<S> r = residual(a);
  rep.residual_norm = frobenius_norm(r);
  if (!is_solution(a, opts.tol)) {
    throw Error(ErrorKind::NotASolution, "residual norm " + std::to_string(rep.residual_norm) + " exceeds tolerance");
  }
  const double scale = std::max(1.0, frobenius_norm(a));
  const int rk = rank_at(a, opts.tol, scale);
  rep.invariants.push_back({"rank(A)", rk});

  const S half = S(1) / S(2);
  switch (rk) {
    case 0: rep.tag = FamilyTag::zero(); break;
    case 3: rep.tag = FamilyTag::minus_identity(); break;
    case 1: {
      const int rs = rank_at(sym_part(a) + Mat3<S>::diag(half, half, half), opts.tol, scale);
      rep.invariants.push_back({"rank(sym(A)+½I)", rs});
      if (rs == 1) rep.tag = FamilyTag::k_family(GaussianRational(0));
      else if (rs == 2) rep.tag = FamilyTag::nonsym_rank1();
      else throw Error(ErrorKind::Inconclusive, "rank 1 with rank(sym(A)+½I) = " + std::to_string(rs));
      break;
    }
    case 2: {
      const S tr = trace(a);
      rep.invariants.push_back({"tr(A)", ComplexValue::of(tr)});
      if (!is_zero(tr + S(2), opts.tol * scale)) {
        rep.tag.family = Family::KFamily;
        rep.tag.k = k_value(tr + S(1), opts.tol);
        break;
      }
      const int rg = rank_at(transpose(a) * a, opts.tol, scale * scale);
      rep.invariants.push_back({"rank(A′A)", rg});
      if (rg == 2) rep.tag = FamilyTag::trace_minus2();
      else if (rg == 1) rep.tag = FamilyTag::k_family(GaussianRational(-1));
      else throw Error(ErrorKind::Inconclusive, "rank 2, trace -2 with rank(A′A) = " + std::to_string(rg));
      break;
    }
    default: throw Error(ErrorKind::Inconclusive, "unexpected rank");
  }

  if (opts.find_witness) {
    const Mat3d target = to_numeric(a);
    const Mat3d canon = representative_numeric(rep.tag);
    auto verdict = congruence_test(canon, target, opts.witness);
    if (verdict.kind == CongruenceVerdict::Kind::Congruent) rep.witness = verdict.witness;
  }
  return rep;
}

namespace {

using Mat9 = Eigen::Matrix<ComplexDouble, 9, 9>;
using Vec9 = Eigen::Matrix<ComplexDouble, 9, 1>;

double poly_scale(double s, int degree) { return std::pow(std::max(1.0, s), degree); }

template <Scalar S>
bool poly_differs(const CharPoly<S>& x, const CharPoly<S>& y, double s, double tol) {
  if constexpr (is_exact_v<S>) {
    return !(x == y);
  } else {
    return std::abs(x.c2 - y.c2) > 10 * tol * poly_scale(s, 1) || std::abs(x.c1 - y.c1) > 10 * tol * poly_scale(s, 2) ||
           std::abs(x.c0 - y.c0) > 10 * tol * poly_scale(s, 3);
  }
}

template <Scalar S>
std::optional<std::string> separating_invariant(const Mat3<S>& a, const Mat3<S>& b, double tol) {
  const double s = std::max(frobenius_norm(a), frobenius_norm(b));
  if (poly_differs(char_poly(a), char_poly(b), s, tol)) return "char_poly";
  const double sc = std::max(1.0, s);
  if (rank_at(a, tol, sc) != rank_at(b, tol, sc)) return "rank(A)";
  const Mat3<S> ga = transpose(a) * a, gb = transpose(b) * b;
  if (poly_differs(char_poly(ga), char_poly(gb), s * s, tol)) return "char_poly(A′A)";
  if (rank_at(ga, tol, sc * sc) != rank_at(gb, tol, sc * sc)) return "rank(A′A)";
  const Mat3<S> sa = sym_part(a), sb = sym_part(b);
  if (poly_differs(char_poly(sa), char_poly(sb), s, tol)) return "char_poly(sym(A))";
  try {
    const JordanSignature ja = jordan_signature(sa, kDefaultJordanTol), jb = jordan_signature(sb, kDefaultJordanTol);
    if (!ja.matches(jb, 10 * tol * std::max(1.0, s))) return "jordan(sym(A))";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IllConditioned) throw;
  }
  return std::nullopt;
}

Mat3d from_vec(const Vec9& v) {
  Mat3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v(3 * i + j);
  return m;
}

Vec9 to_vec(const Mat3d& m) {
  Vec9 v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(3 * i + j) = m(i, j);
  return v;
}

bool verify_witness(const Mat3d& t, const Mat3d& a, const Mat3d& b, double tol) {
  const double scale = std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
  return so3c::is_special_orthogonal(t, tol) && frobenius_norm(transpose(t) * a * t - b) <= tol * scale;
}

/// Gauss-Newton on T'T = I with T = sum_m z_m N_m.
std::optional<Mat3d> orthogonal_in_span(const std::vector<Mat3d>& basis, Rng& rng) {
  const int d = static_cast<int>(basis.size());
  std::normal_distribution<double> normal;
  Eigen::VectorXcd z(d);
  for (int m = 0; m < d; ++m) z(m) = {normal(rng), normal(rng)};

  auto assemble = [&](const Eigen::VectorXcd& w) {
    Mat3d t;
    for (int m = 0; m < d; ++m) t = t + w(m) * basis[m];
    return t;
  };
  auto defect = [](const Mat3d& t) { return to_vec(transpose(t) * t - Mat3d::identity()); };

  Mat3d t = assemble(z);
  Vec9 f = defect(t);
  for (int iter = 0; iter < 100; ++iter) {
    const double fn = f.norm();
    if (fn < 1e-14) return t;
    Eigen::MatrixXcd jac(9, d);
    for (int m = 0; m < d; ++m) jac.col(m) = to_vec(transpose(basis[m]) * t + transpose(t) * basis[m]);
    const Eigen::VectorXcd step = jac.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(-f);
    double damping = 1.0;
    bool improved = false;
    for (int h = 0; h < 30; ++h, damping *= 0.5) {
      const Eigen::VectorXcd trial = z + damping * step;
      const Mat3d tt = assemble(trial);
      const Vec9 ft = defect(tt);
      if (ft.norm() < fn) {
        z = trial;
        t = tt;
        f = ft;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (f.norm() < 1e-12) return t;
  return std::nullopt;
}

std::optional<Mat3d> search_witness(const Mat3d& a, const Mat3d& b, const CongruenceOptions& opts) {
  const double s = std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
  const Mat3d an = (1.0 / s) * a, bn = (1.0 / s) * b;

  // T'AT = B with T' = T^-1 is AT = TB; rows index (i,j) of AT - TB, columns entries T(k,l)
  Mat9 lin = Mat9::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        lin(3 * i + j, 3 * k + j) += an(i, k);
        lin(3 * i + j, 3 * i + k) -= bn(k, j);
      }
  Eigen::JacobiSVD<Mat9> svd(lin, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = 1e-8 * std::max(sv(0), 1.0);
  std::vector<Mat3d> basis;
  for (int c = 0; c < 9; ++c)
    if (sv(c) <= cut) basis.push_back(from_vec(svd.matrixV().col(c)));
  if (basis.empty()) return std::nullopt;

  for (int start = 0; start < opts.budget; ++start) {
    Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(start)));
    auto t = orthogonal_in_span(basis, rng);
    if (!t) continue;
    if (std::real(det(*t)) < 0) *t = -*t;
    if (verify_witness(*t, a, b, opts.witness_tol)) return t;
  }
  return std::nullopt;
}

}  // namespace

template <Scalar S>
CongruenceVerdict congruence_test(const Mat3<S>& a, const Mat3<S>& b, const CongruenceOptions& opts) {
  CongruenceVerdict v;
  const Mat3d an = to_numeric(a), bn = to_numeric(b);
  if (a == b) {
    v.kind = CongruenceVerdict::Kind::Congruent;
    v.witness = Mat3d::identity();
    return v;
  }
  if (auto name = separating_invariant(a, b, opts.invariant_tol)) {
    v.kind = CongruenceVerdict::Kind::NotCongruent;
    v.separating_invariant = *name;
    return v;
  }
  if (auto t = search_witness(an, bn, opts)) {
    v.kind = CongruenceVerdict::Kind::Congruent;
    v.witness = *t;
    return v;
  }
  v.kind = CongruenceVerdict::Kind::Unknown;
  v.attempts = opts.budget;
  return v;
}

#define POSTLIE_MATEQ_INSTANTIATE(S)                                                            \
  template Mat3<S> residual<S>(const Mat3<S>&);                                                 \
  template bool is_solution<S>(const Mat3<S>&, double);                                         \
  template Mat3<S> congruate<S>(const Mat3<S>&, const Mat3<S>&, double);                        \
  template Mat3<S> rank2_identity_residual<S>(const Mat3<S>&);                                  \
  template Mat3<S> rank1_identity_residual<S>(const Mat3<S>&);                                  \
  template ClassificationReport classify<S>(const Mat3<S>&, const ClassifyOptions&);            \
  template CongruenceVerdict congruence_test<S>(const Mat3<S>&, const Mat3<S>&, const CongruenceOptions&);

POSTLIE_MATEQ_INSTANTIATE(GaussianRational)
POSTLIE_MATEQ_INSTANTIATE(ComplexDouble)

}  // namespace mateq
}  // namespace postlie
