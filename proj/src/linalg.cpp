#include "postlie/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace postlie {

mpq_class best_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "cannot approximate a non-finite value");
  // convergents h/k of the continued fraction of x
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-15) {
    double inv = 1.0 / frac;
    double a_d = std::floor(inv);
    if (a_d > 1e12) break;
    long a = static_cast<long>(a_d);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - a_d;
  }
  mpq_class q(h, k);
  q.canonicalize();
  return q;
}

std::optional<GaussianRational> snap_to_small_rational(ComplexDouble z, double tol, long max_den) {
  if (!is_finite(z)) return std::nullopt;
  mpq_class re = best_rational(z.real(), max_den);
  mpq_class im = best_rational(z.imag(), max_den);
  if (std::abs(re.get_d() - z.real()) > tol || std::abs(im.get_d() - z.imag()) > tol) return std::nullopt;
  return GaussianRational(re, im);
}

// ---------------------------------------------------------------------------
// rank

int rank_of(std::vector<std::vector<GaussianRational>> rows, double /*tol*/) {
  if (rows.empty()) return 0;
  const std::size_t n_rows = rows.size(), n_cols = rows.front().size();
  int r = 0;
  for (std::size_t col = 0; col < n_cols && static_cast<std::size_t>(r) < n_rows; ++col) {
    std::size_t pivot = r;
    while (pivot < n_rows && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      if (rows[i][col].is_zero()) continue;
      GaussianRational f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n_cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

int rank_of(std::vector<std::vector<ComplexDouble>> rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t n_rows = rows.size(), n_cols = rows.front().size();
  double scale = 0;
  for (const auto& row : rows)
    for (const auto& x : row) scale = std::max(scale, std::abs(x));
  if (scale == 0) return 0;
  const double threshold = tol * scale;
  int r = 0;
  for (std::size_t col = 0; col < n_cols && static_cast<std::size_t>(r) < n_rows; ++col) {
    std::size_t pivot = r;
    for (std::size_t i = r + 1; i < n_rows; ++i)
      if (std::abs(rows[i][col]) > std::abs(rows[pivot][col])) pivot = i;
    if (std::abs(rows[pivot][col]) <= threshold) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      ComplexDouble f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n_cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

template <Scalar S>
std::vector<std::vector<S>> rows_of(const Mat3<S>& m) {
  std::vector<std::vector<S>> rows(3, std::vector<S>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[i][j] = m(i, j);
  return rows;
}

Eigen::Matrix3cd to_eigen(const Mat3d& m) {
  Eigen::Matrix3cd e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

int rank(const Mat3q& m, double /*tol*/) { return rank_of(rows_of(m), 0.0); }

std::array<double, 3> singular_values(const Mat3d& m) {
  const Eigen::Vector3d s = Eigen::JacobiSVD<Eigen::Matrix3cd>(to_eigen(m)).singularValues();
  return {s(0), s(1), s(2)};
}

int rank(const Mat3d& m, double tol) {
  auto s = singular_values(m);
  if (s[0] == 0) return 0;
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](double x) { return x > tol * s[0]; }));
}

int rank_above(const Mat3d& m, double threshold) {
  auto s = singular_values(m);
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](double x) { return x > threshold; }));
}

// ---------------------------------------------------------------------------
// eigenvalues

std::array<ComplexDouble, 3> cubic_roots(ComplexDouble c2, ComplexDouble c1, ComplexDouble c0) {
  const ComplexDouble mu = -c2 / 3.0;
  const ComplexDouble p = c1 - c2 * c2 / 3.0;
  const ComplexDouble q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const ComplexDouble omega(-0.5, std::sqrt(3.0) / 2.0);

  std::array<ComplexDouble, 3> t;
  if (p == 0.0) {
    const ComplexDouble u = std::pow(-q, 1.0 / 3.0);
    t = {u, u * omega, u * omega * omega};
  } else {
    const ComplexDouble sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    // larger-magnitude branch keeps u away from cancellation
    ComplexDouble w = -q / 2.0 + sq;
    if (std::abs(-q / 2.0 - sq) > std::abs(w)) w = -q / 2.0 - sq;
    ComplexDouble u = std::pow(w, 1.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
      t[k] = u - p / (3.0 * u);
      u *= omega;
    }
  }

  auto f = [&](ComplexDouble x) { return ((x + c2) * x + c1) * x + c0; };
  auto df = [&](ComplexDouble x) { return (3.0 * x + 2.0 * c2) * x + c1; };
  std::array<ComplexDouble, 3> roots;
  for (int k = 0; k < 3; ++k) {
    ComplexDouble x = t[k] + mu;
    const ComplexDouble d = df(x);
    if (std::abs(d) > 0) {
      const ComplexDouble polished = x - f(x) / d;
      if (is_finite(polished) && std::abs(f(polished)) <= std::abs(f(x))) x = polished;
    }
    roots[k] = x;
  }
  return roots;
}

std::array<ComplexDouble, 3> eigenvalues(const Mat3d& m) {
  auto cp = char_poly(m);
  return cubic_roots(cp.c2, cp.c1, cp.c0);
}

// ---------------------------------------------------------------------------
// Jordan signatures

int JordanSignature::algebraic_multiplicity(std::size_t g) const {
  int total = 0;
  for (int b : groups.at(g).block_sizes) total += b;
  return total;
}

bool JordanSignature::matches(const JordanSignature& other, double tol) const {
  if (groups.size() != other.groups.size()) return false;
  std::vector<bool> used(other.groups.size(), false);
  for (const auto& g : groups) {
    bool found = false;
    for (std::size_t j = 0; j < other.groups.size(); ++j) {
      if (used[j]) continue;
      if (g.eigenvalue.approx_equal(other.groups[j].eigenvalue, tol) && g.block_sizes == other.groups[j].block_sizes) {
        used[j] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

bool lex_less(ComplexDouble a, ComplexDouble b, double tol) {
  if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
  return a.imag() < b.imag();
}

void sort_groups(JordanSignature& sig, double tol) {
  std::sort(sig.groups.begin(), sig.groups.end(), [&](const JordanGroup& x, const JordanGroup& y) {
    return lex_less(x.eigenvalue.value, y.eigenvalue.value, tol);
  });
}

/// Blocks from r_k = rank(N^k), k = 0..3, for algebraic multiplicity mult.
std::optional<std::vector<int>> partition_from_ranks(const std::array<int, 4>& r, int mult) {
  std::array<int, 5> at_least{};  // at_least[k] = number of blocks of size >= k
  for (int k = 1; k <= 3; ++k) at_least[k] = r[k - 1] - r[k];
  std::vector<int> sizes;
  int total = 0;
  for (int k = 3; k >= 1; --k) {
    int exactly = at_least[k] - at_least[k + 1];
    if (exactly < 0) return std::nullopt;
    for (int c = 0; c < exactly; ++c) sizes.push_back(k);
    total += k * exactly;
  }
  if (total != mult) return std::nullopt;
  return sizes;
}

}  // namespace

JordanSignature jordan_signature(const Mat3d& m, double tol) {
  const double scale = singular_values(m)[0];
  JordanSignature sig;
  if (scale == 0) {
    sig.groups.push_back({ComplexValue::of(GaussianRational(0)), {1, 1, 1}});
    return sig;
  }
  const Mat3d b = (1.0 / scale) * m;
  const auto cp = char_poly(b);
  const ComplexDouble mu = -cp.c2 / 3.0;
  const ComplexDouble p = cp.c1 - cp.c2 * cp.c2 / 3.0;
  const ComplexDouble q = 2.0 * cp.c2 * cp.c2 * cp.c2 / 27.0 - cp.c2 * cp.c1 / 3.0 + cp.c0;

  std::vector<std::pair<ComplexDouble, int>> clusters;  // eigenvalue of b, multiplicity
  const double triple_stat = std::max(std::abs(p), std::abs(q));
  if (triple_stat <= tol) {
    clusters.push_back({mu, 3});
  } else if (triple_stat <= 10 * tol) {
    throw Error(ErrorKind::IllConditioned, "triple-eigenvalue test is ambiguous at this tolerance");
  } else {
    // closest pair of roots; its squared gap plays the role of the discriminant
    auto roots = cubic_roots(cp.c2, cp.c1, cp.c0);
    int pi = 0, pj = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (std::abs(roots[i] - roots[j]) < std::abs(roots[pi] - roots[pj])) pi = i, pj = j;
    const double gap_sq = std::norm(roots[pi] - roots[pj]);
    if (gap_sq <= tol) {
      clusters.push_back({0.5 * (roots[pi] + roots[pj]), 2});
      clusters.push_back({roots[3 - pi - pj], 1});
    } else if (gap_sq <= 10 * tol) {
      throw Error(ErrorKind::IllConditioned, "double-eigenvalue test is ambiguous at this tolerance");
    } else {
      for (auto r : roots) clusters.push_back({r, 1});
    }
  }

  for (const auto& [lambda, mult] : clusters) {
    // powers beyond the multiplicity add nothing and only shrink the other blocks below tol
    const Mat3d n = b - Mat3d::diag(lambda, lambda, lambda);
    std::array<int, 4> r{3, 0, 0, 0};
    Mat3d power = n;
    for (int p = 1; p <= 3; ++p) {
      r[p] = p <= mult ? rank_above(power, tol) : r[p - 1];
      power = power * n;
    }
    auto sizes = partition_from_ranks(r, mult);
    if (!sizes) throw Error(ErrorKind::IllConditioned, "block sizes inconsistent with eigenvalue multiplicity");
    sig.groups.push_back({ComplexValue::of(lambda * scale), std::move(*sizes)});
  }
  sort_groups(sig, tol * scale);
  return sig;
}

JordanSignature jordan_signature(const Mat3q& m, const std::array<GaussianRational, 3>& ev) {
  const auto cp = char_poly(m);
  const GaussianRational e2 = -(ev[0] + ev[1] + ev[2]);
  const GaussianRational e1 = ev[0] * ev[1] + ev[1] * ev[2] + ev[0] * ev[2];
  const GaussianRational e0 = -(ev[0] * ev[1] * ev[2]);
  if (!(cp.c2 == e2 && cp.c1 == e1 && cp.c0 == e0)) {
    throw Error(ErrorKind::InvalidParameter, "supplied values are not the eigenvalues of the matrix");
  }
  JordanSignature sig;
  std::vector<GaussianRational> distinct;
  for (const auto& e : ev)
    if (std::find(distinct.begin(), distinct.end(), e) == distinct.end()) distinct.push_back(e);
  for (const auto& lambda : distinct) {
    const int mult = static_cast<int>(std::count(ev.begin(), ev.end(), lambda));
    const Mat3q n = m - Mat3q::diag(lambda, lambda, lambda);
    const Mat3q n2 = n * n;
    const std::array<int, 4> r{3, rank(n), rank(n2), rank(n2 * n)};
    auto sizes = partition_from_ranks(r, mult);
    if (!sizes) throw Error(ErrorKind::InvalidParameter, "inconsistent exact ranks");
    sig.groups.push_back({ComplexValue::of(lambda), std::move(*sizes)});
  }
  sort_groups(sig, 0.0);
  return sig;
}

std::optional<std::array<GaussianRational, 3>> exact_eigenvalues(const Mat3q& m) {
  const auto cp = char_poly(m);
  const GaussianRational three(3);
  const GaussianRational mu = -cp.c2 / three;
  const GaussianRational p = cp.c1 - cp.c2 * cp.c2 / three;
  const GaussianRational q =
      GaussianRational(2) * cp.c2 * cp.c2 * cp.c2 / GaussianRational(27) - cp.c2 * cp.c1 / three + cp.c0;
  if (p.is_zero() && q.is_zero()) return std::array{mu, mu, mu};
  if ((GaussianRational(4) * p * p * p + GaussianRational(27) * q * q).is_zero()) {
    const GaussianRational dbl = mu - three * q / (GaussianRational(2) * p);
    return std::array{dbl, dbl, mu + three * q / p};
  }
  auto approx = cubic_roots(cp.c2.to_complex(), cp.c1.to_complex(), cp.c0.to_complex());
  std::array<GaussianRational, 3> ev;
  for (int k = 0; k < 3; ++k) {
    auto snapped = snap_to_small_rational(approx[k], 1e-9 * std::max(1.0, std::abs(approx[k])), 100000);
    if (!snapped) return std::nullopt;
    ev[k] = *snapped;
  }
  const GaussianRational e2 = -(ev[0] + ev[1] + ev[2]);
  const GaussianRational e1 = ev[0] * ev[1] + ev[1] * ev[2] + ev[0] * ev[2];
  const GaussianRational e0 = -(ev[0] * ev[1] * ev[2]);
  if (!(cp.c2 == e2 && cp.c1 == e1 && cp.c0 == e0)) return std::nullopt;
  return ev;
}

JordanSignature jordan_signature(const Mat3q& m, double tol) {
  if (auto ev = exact_eigenvalues(m)) return jordan_signature(m, *ev);
  return jordan_signature(to_numeric(m), tol);
}

// ---------------------------------------------------------------------------

template <Scalar S>
std::pair<Vec3<S>, Vec3<S>> rank1_factorization(const Mat3<S>& m, double tol) {
  const int r = [&] {
    if constexpr (is_exact_v<S>) return rank(m);
    else return rank(m, tol);
  }();
  if (r != 1) throw Error(ErrorKind::RankMismatch, "rank-1 factorization needs rank 1, got " + std::to_string(r));

  // first nonzero row fixes alpha's leading 1; the pivot column scales alpha
  int i0 = -1, j0 = -1;
  for (int i = 0; i < 3 && i0 < 0; ++i) {
    if constexpr (is_exact_v<S>) {
      for (int j = 0; j < 3; ++j)
        if (!m(i, j).is_zero()) {
          i0 = i;
          j0 = j;
          break;
        }
    } else {
      const double row_scale = std::max({std::abs(m(i, 0)), std::abs(m(i, 1)), std::abs(m(i, 2))});
      if (row_scale > tol * max_abs(m)) {
        i0 = i;
        j0 = 0;
        for (int j = 1; j < 3; ++j)
          if (std::abs(m(i, j)) > std::abs(m(i, j0))) j0 = j;
      }
    }
  }
  Vec3<S> beta = m.row(i0);
  Vec3<S> alpha;
  for (int i = 0; i < 3; ++i) alpha[i] = i < i0 ? S(0) : m(i, j0) / m(i0, j0);
  alpha[i0] = S(1);
  return {alpha, beta};
}

template std::pair<Vec3q, Vec3q> rank1_factorization(const Mat3q&, double);
template std::pair<Vec3d, Vec3d> rank1_factorization(const Mat3d&, double);

}  // namespace postlie
