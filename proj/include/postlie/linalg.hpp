#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "postlie/mat3.hpp"

namespace postlie {

inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr double kDefaultJordanTol = 1e-6;

/// lambda^3 + c2 lambda^2 + c1 lambda + c0
template <Scalar S>
struct CharPoly {
  S c2, c1, c0;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

template <Scalar S>
CharPoly<S> char_poly(const Mat3<S>& m) {
  return {-trace(m), trace(adjugate(m)), -det(m)};
}

/// Rank of an m x n matrix given as rows. Exact scalars: exact elimination,
/// tol ignored. Floating: elimination with partial pivoting, entries with
/// magnitude <= tol * (largest entry) treated as zero.
int rank_of(std::vector<std::vector<GaussianRational>> rows, double tol);
int rank_of(std::vector<std::vector<ComplexDouble>> rows, double tol);

/// Exact: row-reduction rank over Q(i) (tol must be 0 and is ignored).
/// Floating: number of singular values > tol * sigma_max; 0 for the zero matrix.
int rank(const Mat3q& m, double tol = 0.0);
int rank(const Mat3d& m, double tol = kDefaultRankTol);

/// Number of singular values strictly above an absolute threshold.
int rank_above(const Mat3d& m, double threshold);

std::array<double, 3> singular_values(const Mat3d& m);

/// Roots of lambda^3 + c2 lambda^2 + c1 lambda + c0 (Cardano, then one
/// Newton polish per root). Repeated roots are returned with repetition.
std::array<ComplexDouble, 3> cubic_roots(ComplexDouble c2, ComplexDouble c1, ComplexDouble c0);

std::array<ComplexDouble, 3> eigenvalues(const Mat3d& m);

struct JordanGroup {
  ComplexValue eigenvalue;
  std::vector<int> block_sizes;  // descending
};

/// Eigenvalues with their Jordan block partitions, sorted by (re, im).
struct JordanSignature {
  std::vector<JordanGroup> groups;

  int algebraic_multiplicity(std::size_t g) const;
  /// Same eigenvalues (within tol) carrying identical block partitions.
  bool matches(const JordanSignature& other, double tol) const;
};

/// Multiple eigenvalues are detected from the depressed cubic t^3 + p t + q of
/// the characteristic polynomial (triple: p = q = 0, double: 4p^3 + 27q^2 = 0,
/// each relative to the eigenvalue scale and tol). These quantities move
/// linearly under perturbation, unlike the split roots themselves. Block sizes
/// come from ranks of (A - lambda I)^p, p = 1, 2, 3.
///
/// Throws IllConditioned when a decision falls within a factor 10 of tol or
/// when distinct eigenvalues are closer than 10 tol.
JordanSignature jordan_signature(const Mat3d& m, double tol = kDefaultJordanTol);

/// Exact signature from supplied Gaussian-rational eigenvalues (with
/// repetition). Throws InvalidParameter when they are not the roots of the
/// characteristic polynomial.
JordanSignature jordan_signature(const Mat3q& m, const std::array<GaussianRational, 3>& eigenvalues);

/// Exact eigenvalues of an exact matrix when all of them lie in Q(i).
/// Repeated roots are found exactly from the depressed cubic; simple roots are
/// recovered from floating approximations by small-denominator rounding and
/// accepted only after an exact check against the characteristic polynomial.
std::optional<std::array<GaussianRational, 3>> exact_eigenvalues(const Mat3q& m);

/// Exact path when all eigenvalues are Gaussian-rational, floating otherwise.
JordanSignature jordan_signature(const Mat3q& m, double tol = kDefaultJordanTol);

/// A = alpha' * beta with the first nonzero entry of alpha equal to 1.
/// Throws RankMismatch unless rank(A) = 1.
template <Scalar S>
std::pair<Vec3<S>, Vec3<S>> rank1_factorization(const Mat3<S>& m, double tol = kDefaultRankTol);

}  // namespace postlie
