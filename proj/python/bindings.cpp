#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "postlie/cli.hpp"
#include "postlie/json_io.hpp"

namespace py = pybind11;
using namespace postlie;
using json_io::json;

namespace {

template <class S, int N>
using Mat = std::conditional_t<N == 3, Mat3<S>, Mat2<S>>;

using ComplexArray = py::array_t<ComplexDouble, py::array::c_style | py::array::forcecast>;
/// Exact entries cross the boundary as (re, im) pairs of "p/q" strings.
using ExactGrid = std::vector<std::vector<std::pair<std::string, std::string>>>;

template <int N>
Mat<ComplexDouble, N> to_mat(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != N || a.shape(1) != N)
    throw Error(ErrorKind::Parse, "expected a " + std::to_string(N) + "x" + std::to_string(N) + " array");
  Mat<ComplexDouble, N> m;
  auto r = a.unchecked<2>();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      m(i, j) = r(i, j);
      if (!is_finite(m(i, j))) throw Error(ErrorKind::NonFinite, "matrix entry is not finite");
    }
  return m;
}

template <class M>
constexpr int order_v = std::is_same_v<M, Mat2<typename std::decay_t<decltype(M{}(0, 0))>>> ? 2 : 3;

template <class M>
ComplexArray from_mat(const M& m) {
  constexpr int N = order_v<M>;
  ComplexArray out({N, N});
  auto w = out.mutable_unchecked<2>();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) w(i, j) = m(i, j);
  return out;
}

template <int N>
Mat<GaussianRational, N> to_exact(const ExactGrid& g) {
  if (static_cast<int>(g.size()) != N) throw Error(ErrorKind::Parse, "wrong number of rows");
  Mat<GaussianRational, N> m;
  for (int i = 0; i < N; ++i) {
    if (static_cast<int>(g[i].size()) != N) throw Error(ErrorKind::Parse, "wrong number of columns");
    for (int j = 0; j < N; ++j) m(i, j) = GaussianRational::parse(g[i][j].first, g[i][j].second);
  }
  return m;
}

template <class M>
ExactGrid from_exact(const M& m) {
  constexpr int N = order_v<M>;
  ExactGrid g(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) g[i].emplace_back(rational_to_string(m(i, j).real()), rational_to_string(m(i, j).imag()));
  return g;
}

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

FamilyTag make_tag(const std::string& family, const std::optional<std::pair<std::string, std::string>>& k) {
  const Family f = family_from_string(family);
  if (f == Family::KFamily) {
    if (!k) throw Error(ErrorKind::InvalidParameter, "KFamily needs k");
    return FamilyTag::k_family(GaussianRational::parse(k->first, k->second));
  }
  if (k) throw Error(ErrorKind::InvalidParameter, "only KFamily takes k");
  FamilyTag tag;
  tag.family = f;
  return tag;
}

ClassifyOptions classify_options(double tol, bool witness, std::uint64_t seed) {
  ClassifyOptions opts;
  opts.tol = tol;
  opts.find_witness = witness;
  opts.witness.seed = seed;
  return opts;
}

CongruenceOptions congruence_options(int budget, std::uint64_t seed) {
  if (budget < 0) throw Error(ErrorKind::InvalidParameter, "budget must be non-negative");
  CongruenceOptions opts;
  opts.budget = budget;
  opts.seed = seed;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Post-Lie structures on sl(2,C) via the matrix equation A'((trA+1)I - A) = adj(A)";

  static py::exception<Error> error_type(m, "PostlieError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  m.def("residual_numeric", [](const ComplexArray& a) { return from_mat(mateq::residual(to_mat<3>(a))); });
  m.def("residual_exact", [](const ExactGrid& a) { return from_exact(mateq::residual(to_exact<3>(a))); });

  m.def("is_solution_numeric", [](const ComplexArray& a, double tol) { return mateq::is_solution(to_mat<3>(a), tol); });
  m.def("is_solution_exact", [](const ExactGrid& a) { return mateq::is_solution(to_exact<3>(a)); });

  m.def("classify_numeric", [](const ComplexArray& a, double tol, bool witness, std::uint64_t seed) {
    return to_python(json_io::encode(mateq::classify(to_mat<3>(a), classify_options(tol, witness, seed))));
  });
  m.def("classify_exact", [](const ExactGrid& a, bool witness, std::uint64_t seed) {
    return to_python(json_io::encode(mateq::classify(to_exact<3>(a), classify_options(0.0, witness, seed))));
  });

  m.def("representative_exact", [](const std::string& family, std::optional<std::pair<std::string, std::string>> k) {
    return from_exact(mateq::representative(make_tag(family, k)));
  });

  m.def("congruate_numeric", [](const ComplexArray& a, const ComplexArray& t, double tol) {
    return from_mat(mateq::congruate(to_mat<3>(a), to_mat<3>(t), tol));
  });
  m.def("congruate_exact", [](const ExactGrid& a, const ExactGrid& t) {
    return from_exact(mateq::congruate(to_exact<3>(a), to_exact<3>(t)));
  });

  m.def("congruence_test_numeric", [](const ComplexArray& a, const ComplexArray& b, int budget, std::uint64_t seed) {
    return to_python(json_io::encode(mateq::congruence_test(to_mat<3>(a), to_mat<3>(b), congruence_options(budget, seed))));
  });
  m.def("congruence_test_exact", [](const ExactGrid& a, const ExactGrid& b, int budget, std::uint64_t seed) {
    return to_python(
        json_io::encode(mateq::congruence_test(to_exact<3>(a), to_exact<3>(b), congruence_options(budget, seed))));
  });

  m.def("random_so3_numeric", [](std::uint64_t seed, double radius) { return from_mat(so3c::random_so3(seed, radius).t); });
  m.def("random_so3_exact", [](std::uint64_t seed) { return from_exact(so3c::random_so3_exact(seed).t); });

  m.def("adjoint_rep_numeric", [](const ComplexArray& p) { return from_mat(so3c::adjoint_rep(to_mat<2>(p))); });
  m.def("adjoint_rep_exact", [](const ExactGrid& p) { return from_exact(so3c::adjoint_rep(to_exact<2>(p))); });

  m.def("automorphism_check", [](const ComplexArray& t, double tol) { return so3c::automorphism_check(to_mat<3>(t), tol); });

  m.def("check_postlie_numeric", [](const ComplexArray& a, double tol) {
    return to_python(json_io::encode(sl2::check_postlie(sl2::circ_from_matrix(to_mat<3>(a)), tol)));
  });
  m.def("check_postlie_exact", [](const ExactGrid& a) {
    return to_python(json_io::encode(sl2::check_postlie(sl2::circ_from_matrix(to_exact<3>(a)), 0.0)));
  });

  m.def("classify_symmetric_numeric", [](const ComplexArray& s, double tol) {
    return to_python(json_io::encode(symcanon::classify_symmetric(to_mat<3>(s), tol)));
  });
  m.def("classify_symmetric_exact", [](const ExactGrid& s) {
    return to_python(json_io::encode(symcanon::classify_symmetric(to_exact<3>(s))));
  });

  m.def("multistart", [](int starts, std::uint64_t seed, double radius, double tol, int max_iter, int threads) {
    SearchOptions opts;
    opts.starts = starts;
    opts.seed = seed;
    opts.radius = radius;
    opts.tol = tol;
    opts.max_iter = max_iter;
    opts.threads = threads;
    SurveyReport rep;
    {
      py::gil_scoped_release release;
      rep = solver::multistart(opts);
    }
    return to_python(json_io::encode(rep));
  });

  m.def("newton_solve", [](const ComplexArray& a0, int max_iter, double tol) {
    return to_python(json_io::encode(solver::newton_solve(to_mat<3>(a0), max_iter, tol)));
  });

  m.def("verify_canon", [] {
    const auto rep = cli::cmd_verify_canon();
    return to_python(rep.to_json());
  });
}
