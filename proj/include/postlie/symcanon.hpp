#pragma once

#include <string_view>
#include <vector>

#include "postlie/mateq.hpp"

namespace postlie {

enum class SymForm {
  Rank3Diag,      // diag(l1, l2, l3)
  Rank3OneBlock,  // l1 (+) [[l2+i, 1], [1, l2-i]]
  Rank3BigBlock,  // l I + D_3
  Rank2Diag,      // diag(l1, l2, 0)
  Rank2Block,     // [[l+i, 1], [1, l-i]] (+) 0
  Rank2Nilp,      // l (+) D_2
  Rank2BigNilp,   // D_3
  Rank1Diag,      // diag(l, 0, 0)
  Rank1Nilp,      // D_2 (+) 0
  ZeroForm,
};

std::string_view to_string(SymForm f);
SymForm sym_form_from_string(std::string_view name);

/// Number of lambda parameters the form carries.
int param_count(SymForm f);

/// A list entry for 3x3 complex symmetric matrices under SO(3,C) similarity.
struct SymCanonicalForm {
  SymForm form = SymForm::ZeroForm;
  std::vector<ComplexValue> params;

  /// Same form and parameters pairwise equal within tol (exact when both exact).
  bool equals(const SymCanonicalForm& other, double tol) const;
};

namespace symcanon {

/// k x k block, k in {1, 2, 3}, as nested rows.
std::vector<std::vector<GaussianRational>> d_k_block(int k);

/// The list matrix. Throws InvalidParameter on a zero parameter, a parameter
/// count mismatch, or a floating-only parameter.
Mat3q canonical_matrix(const SymCanonicalForm& f);
/// Floating version accepting floating parameters.
Mat3d canonical_matrix_numeric(const SymCanonicalForm& f);

/// Form with the same Jordan signature as S. Diagonal parameters are sorted by
/// (re, im). Throws NotSymmetric, and IllConditioned from the signature.
template <Scalar S>
SymCanonicalForm classify_symmetric(const Mat3<S>& s, double tol = kDefaultJordanTol);

/// congruence_test restricted to symmetric inputs.
template <Scalar S>
CongruenceVerdict find_orthogonal_similarity(const Mat3<S>& s1, const Mat3<S>& s2, const CongruenceOptions& opts = {},
                                             double tol = 1e-10);

}  // namespace symcanon
}  // namespace postlie
