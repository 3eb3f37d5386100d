#include "postlie/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <thread>

#include "postlie/random.hpp"

namespace postlie::solver {

RealVec pack(const Mat3d& a) {
  RealVec x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      x(3 * i + j) = a(i, j).real();
      x(9 + 3 * i + j) = a(i, j).imag();
    }
  return x;
}

Mat3d unpack(const RealVec& x) {
  Mat3d a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = {x(3 * i + j), x(9 + 3 * i + j)};
  return a;
}

Jacobian residual_jacobian(const Mat3d& a) {
  // complex derivative along each unit entry E = E_kl; the residual is
  // holomorphic, so the real Jacobian is [[Re, -Im], [Im, Re]] of it
  const ComplexDouble s = trace(a) + 1.0;
  const Mat3d shifted = Mat3d::diag(s, s, s) - a;
  const Mat3d at = transpose(a);
  const Mat3d adj_a = adjugate(a);
  Jacobian jac;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      Mat3d e;
      e(k, l) = 1.0;
      const ComplexDouble tr_e = k == l ? 1.0 : 0.0;
      // adjugate is quadratic: adj(A + E) = adj(A) + D + adj(E)
      const Mat3d d_adj = adjugate(a + e) - adj_a - adjugate(e);
      const Mat3d d = transpose(e) * shifted + at * (Mat3d::diag(tr_e, tr_e, tr_e) - e) - d_adj;
      const int q = 3 * k + l;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const int p = 3 * i + j;
          jac(p, q) = d(i, j).real();
          jac(p, 9 + q) = -d(i, j).imag();
          jac(9 + p, q) = d(i, j).imag();
          jac(9 + p, 9 + q) = d(i, j).real();
        }
    }
  return jac;
}

SolveResult newton_solve(const Mat3d& a0, int max_iter, double tol, double classify_tol) {
  if (max_iter < 1) throw Error(ErrorKind::InvalidParameter, "max_iter must be at least 1");
  if (!(tol > 0)) throw Error(ErrorKind::InvalidParameter, "tol must be positive");
  a0.validate();

  SolveResult res;
  RealVec x = pack(a0);
  RealVec f = pack(mateq::residual(a0));
  double fn = f.norm();
  int iter = 0;
  for (; iter < max_iter && fn >= tol; ++iter) {
    const Jacobian jac = residual_jacobian(unpack(x));
    Eigen::PartialPivLU<Jacobian> lu(jac);
    RealVec dx;
    if (lu.rcond() > 1e-10) {
      dx = lu.solve(-f);
    } else {
      const Jacobian normal = jac.transpose() * jac + 1e-10 * Jacobian::Identity();
      dx = normal.ldlt().solve(-jac.transpose() * f);
    }
    double damping = 1.0;
    bool accepted = false;
    for (int h = 0; h <= 20; ++h, damping *= 0.5) {
      const RealVec trial = x + damping * dx;
      const RealVec ft = pack(mateq::residual(unpack(trial)));
      const double tn = ft.norm();
      if (std::isfinite(tn) && tn < fn) {
        x = trial;
        f = ft;
        fn = tn;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  res.a_final = unpack(x);
  res.residual_norm = fn;
  res.iterations = iter;
  res.converged = fn < tol;
  if (res.converged) {
    try {
      ClassifyOptions copts;
      copts.tol = classify_tol;
      res.classification = mateq::classify(res.a_final, copts);
    } catch (const Error& e) {
      res.classification_error = e.what();
    }
  }
  return res;
}

Mat3d start_point(std::uint64_t seed, int index, double radius) {
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
  Mat3d a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = uniform_disk(rng, radius);
  return a;
}

SurveyReport multistart(const SearchOptions& opts, std::vector<SolveResult>& results) {
  if (opts.starts < 1) throw Error(ErrorKind::InvalidParameter, "starts must be at least 1");
  if (opts.radius < 0) throw Error(ErrorKind::InvalidParameter, "radius must be non-negative");
  results.assign(opts.starts, {});
  auto run = [&](int index) {
    results[index] = newton_solve(start_point(opts.seed, index, opts.radius), opts.max_iter, opts.tol, opts.classify_tol);
  };
  const int threads = std::clamp(opts.threads, 1, opts.starts);
  if (threads == 1) {
    for (int k = 0; k < opts.starts; ++k) run(k);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (int k = t; k < opts.starts; k += threads) run(k);
      });
    for (auto& th : pool) th.join();
  }

  SurveyReport rep;
  rep.starts = opts.starts;
  for (const auto& r : results) {
    if (!r.converged) {
      ++rep.failures;
      continue;
    }
    ++rep.converged_count;
    if (!r.classification) {
      ++rep.unclassified;
      continue;
    }
    const FamilyTag& tag = r.classification->tag;
    ++rep.family_histogram[std::string(to_string(tag.family))];
    if (tag.family == Family::KFamily) rep.k_values.push_back(tag.k);
  }
  return rep;
}

SurveyReport multistart(const SearchOptions& opts) {
  std::vector<SolveResult> results;
  return multistart(opts, results);
}

}  // namespace postlie::solver
