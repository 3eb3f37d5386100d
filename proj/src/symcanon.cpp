#include "postlie/symcanon.hpp"

#include <algorithm>

namespace postlie {

namespace {

constexpr SymForm kAllForms[] = {SymForm::Rank3Diag,  SymForm::Rank3OneBlock, SymForm::Rank3BigBlock,
                                 SymForm::Rank2Diag,  SymForm::Rank2Block,    SymForm::Rank2Nilp,
                                 SymForm::Rank2BigNilp, SymForm::Rank1Diag,   SymForm::Rank1Nilp,
                                 SymForm::ZeroForm};

}  // namespace

std::string_view to_string(SymForm f) {
  switch (f) {
    case SymForm::Rank3Diag: return "Rank3Diag";
    case SymForm::Rank3OneBlock: return "Rank3OneBlock";
    case SymForm::Rank3BigBlock: return "Rank3BigBlock";
    case SymForm::Rank2Diag: return "Rank2Diag";
    case SymForm::Rank2Block: return "Rank2Block";
    case SymForm::Rank2Nilp: return "Rank2Nilp";
    case SymForm::Rank2BigNilp: return "Rank2BigNilp";
    case SymForm::Rank1Diag: return "Rank1Diag";
    case SymForm::Rank1Nilp: return "Rank1Nilp";
    case SymForm::ZeroForm: return "ZeroForm";
  }
  return "?";
}

SymForm sym_form_from_string(std::string_view name) {
  for (SymForm f : kAllForms)
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::Parse, "unknown symmetric form '" + std::string(name) + "'");
}

int param_count(SymForm f) {
  switch (f) {
    case SymForm::Rank3Diag: return 3;
    case SymForm::Rank3OneBlock:
    case SymForm::Rank2Diag: return 2;
    case SymForm::Rank3BigBlock:
    case SymForm::Rank2Block:
    case SymForm::Rank2Nilp:
    case SymForm::Rank1Diag: return 1;
    case SymForm::Rank2BigNilp:
    case SymForm::Rank1Nilp:
    case SymForm::ZeroForm: return 0;
  }
  return 0;
}

bool SymCanonicalForm::equals(const SymCanonicalForm& other, double tol) const {
  if (form != other.form || params.size() != other.params.size()) return false;
  for (std::size_t k = 0; k < params.size(); ++k)
    if (!params[k].approx_equal(other.params[k], tol)) return false;
  return true;
}

namespace symcanon {

std::vector<std::vector<GaussianRational>> d_k_block(int k) {
  using Q = GaussianRational;
  const Q i = Q::i();
  switch (k) {
    case 1: return {{Q(0)}};
    case 2: return {{i, Q(1)}, {Q(1), -i}};
    case 3: return {{Q(0), Q(1) + i, Q(0)}, {Q(1) + i, Q(0), Q(1) - i}, {Q(0), Q(1) - i, Q(0)}};
    default: throw Error(ErrorKind::OutOfRange, "d_k_block needs 1 <= k <= 3");
  }
}

namespace {

template <Scalar S>
Mat3<S> build(SymForm form, const std::vector<S>& p) {
  const S zero(0), one(1);
  const S i = [] {
    if constexpr (is_exact_v<S>) return GaussianRational::i();
    else return ComplexDouble(0, 1);
  }();
  switch (form) {
    case SymForm::Rank3Diag: return Mat3<S>::diag(p[0], p[1], p[2]);
    case SymForm::Rank3OneBlock: return {{p[0], zero, zero}, {zero, p[1] + i, one}, {zero, one, p[1] - i}};
    case SymForm::Rank3BigBlock:
      return {{p[0], one + i, zero}, {one + i, p[0], one - i}, {zero, one - i, p[0]}};
    case SymForm::Rank2Diag: return Mat3<S>::diag(p[0], p[1], zero);
    case SymForm::Rank2Block: return {{p[0] + i, one, zero}, {one, p[0] - i, zero}, {zero, zero, zero}};
    case SymForm::Rank2Nilp: return {{p[0], zero, zero}, {zero, i, one}, {zero, one, -i}};
    case SymForm::Rank2BigNilp: return {{zero, one + i, zero}, {one + i, zero, one - i}, {zero, one - i, zero}};
    case SymForm::Rank1Diag: return Mat3<S>::diag(p[0], zero, zero);
    case SymForm::Rank1Nilp: return {{i, one, zero}, {one, -i, zero}, {zero, zero, zero}};
    case SymForm::ZeroForm: return Mat3<S>::zero();
  }
  throw Error(ErrorKind::InvalidParameter, "unknown form");
}

void check_params(const SymCanonicalForm& f) {
  if (static_cast<int>(f.params.size()) != param_count(f.form)) {
    throw Error(ErrorKind::InvalidParameter, std::string(to_string(f.form)) + " takes " +
                                                 std::to_string(param_count(f.form)) + " parameter(s)");
  }
  for (const auto& p : f.params)
    if (p.value == ComplexDouble(0) && (!p.exact || p.exact->is_zero()))
      throw Error(ErrorKind::InvalidParameter, "all constants of the list must be non-zero");
}

bool lex_less(ComplexDouble a, ComplexDouble b, double tol) {
  if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
  return a.imag() < b.imag();
}

ComplexValue as_parameter(const ComplexValue& v) {
  if (v.exact) return v;
  if (auto snapped = snap_to_small_rational(v.value, 1e-9 * std::max(1.0, std::abs(v.value))))
    return {v.value, *snapped};
  return v;
}

}  // namespace

Mat3q canonical_matrix(const SymCanonicalForm& f) {
  check_params(f);
  std::vector<GaussianRational> p;
  for (const auto& v : f.params) {
    if (!v.exact) throw Error(ErrorKind::InvalidParameter, "exact canonical matrix needs exact parameters");
    p.push_back(*v.exact);
  }
  return build(f.form, p);
}

Mat3d canonical_matrix_numeric(const SymCanonicalForm& f) {
  check_params(f);
  std::vector<ComplexDouble> p;
  for (const auto& v : f.params) p.push_back(v.value);
  return build(f.form, p);
}

template <Scalar S>
SymCanonicalForm classify_symmetric(const Mat3<S>& s, double tol) {
  const double scale = std::max(1.0, frobenius_norm(s));
  if constexpr (is_exact_v<S>) {
    if (!(s == transpose(s))) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
  } else {
    if (frobenius_norm(s - transpose(s)) > tol * scale) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
  }
  const JordanSignature sig = jordan_signature(s, tol);
  const double zero_tol = is_exact_v<S> ? 0.0 : 10 * tol * scale;
  auto is_null = [&](const ComplexValue& v) { return v.exact ? v.exact->is_zero() : std::abs(v.value) <= zero_tol; };

  SymCanonicalForm out;
  int block2 = -1, block3 = -1;
  std::vector<ComplexValue> simple;  // eigenvalues of 1x1 blocks, with repetition
  for (std::size_t g = 0; g < sig.groups.size(); ++g) {
    for (int b : sig.groups[g].block_sizes) {
      if (b == 3) block3 = static_cast<int>(g);
      else if (b == 2) block2 = static_cast<int>(g);
      else simple.push_back(sig.groups[g].eigenvalue);
    }
  }

  if (block3 >= 0) {
    const ComplexValue& l = sig.groups[block3].eigenvalue;
    if (is_null(l)) {
      out.form = SymForm::Rank2BigNilp;
    } else {
      out.form = SymForm::Rank3BigBlock;
      out.params = {as_parameter(l)};
    }
    return out;
  }
  if (block2 >= 0) {
    const ComplexValue& l = sig.groups[block2].eigenvalue;
    const ComplexValue& m = simple.at(0);
    const bool l0 = is_null(l), m0 = is_null(m);
    if (!l0 && !m0) {
      out.form = SymForm::Rank3OneBlock;
      out.params = {as_parameter(m), as_parameter(l)};
    } else if (!l0) {
      out.form = SymForm::Rank2Block;
      out.params = {as_parameter(l)};
    } else if (!m0) {
      out.form = SymForm::Rank2Nilp;
      out.params = {as_parameter(m)};
    } else {
      out.form = SymForm::Rank1Nilp;
    }
    return out;
  }

  std::vector<ComplexValue> nonzero;
  for (const auto& v : simple)
    if (!is_null(v)) nonzero.push_back(as_parameter(v));
  std::sort(nonzero.begin(), nonzero.end(), [&](const ComplexValue& x, const ComplexValue& y) {
    return lex_less(x.value, y.value, tol * scale);
  });
  static constexpr SymForm by_count[] = {SymForm::ZeroForm, SymForm::Rank1Diag, SymForm::Rank2Diag, SymForm::Rank3Diag};
  out.form = by_count[nonzero.size()];
  out.params = std::move(nonzero);
  return out;
}

template <Scalar S>
CongruenceVerdict find_orthogonal_similarity(const Mat3<S>& s1, const Mat3<S>& s2, const CongruenceOptions& opts,
                                             double tol) {
  for (const Mat3<S>* s : {&s1, &s2}) {
    const double scale = std::max(1.0, frobenius_norm(*s));
    if (!is_zero(*s - transpose(*s), tol * scale)) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
  }
  return mateq::congruence_test(s1, s2, opts);
}

template SymCanonicalForm classify_symmetric(const Mat3q&, double);
template SymCanonicalForm classify_symmetric(const Mat3d&, double);
template CongruenceVerdict find_orthogonal_similarity(const Mat3q&, const Mat3q&, const CongruenceOptions&, double);
template CongruenceVerdict find_orthogonal_similarity(const Mat3d&, const Mat3d&, const CongruenceOptions&, double);

}  // namespace symcanon
}  // namespace postlie
