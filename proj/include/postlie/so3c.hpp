#pragma once

#include <cstdint>

#include "postlie/sl2.hpp"

namespace postlie {

/// T together with the tolerance at which T'T = I and det T = 1 were checked.
template <Scalar S>
struct OrthogonalMatrix {
  Mat3<S> t;
  double tol = 0.0;
};

namespace so3c {

/// ||T'T - I||_F <= tol and |det T - 1| <= tol (exact: both hold exactly).
template <Scalar S>
bool is_special_orthogonal(const Mat3<S>& t, double tol = 1e-10);

/// Antisymmetric K with K(0,1) = k3, K(0,2) = -k2, K(1,2) = k1.
template <Scalar S>
Mat3<S> antisymmetric(const Vec3<S>& k);

/// (I - K)^-1 (I + K); throws Singular when det(I - K) = 0 (floating: |det| < 1e-6).
template <Scalar S>
Mat3<S> cayley(const Mat3<S>& k);

/// Cayley transform of K with entries drawn uniformly from the complex disk of
/// the given radius. Deterministic in seed.
OrthogonalMatrix<ComplexDouble> random_so3(std::uint64_t seed, double radius = 0.5);

/// Exact variant: K entries are Gaussian rationals p/q + (r/s) i with
/// p, r in [-4, 4] and q, s in [1, 4].
OrthogonalMatrix<GaussianRational> random_so3_exact(std::uint64_t seed);

/// Matrix of X -> P X P^-1 on sl(2,C): row i holds the coordinates of P e_i P^-1.
/// With row vectors, adjoint_rep(P Q) = adjoint_rep(Q) adjoint_rep(P).
/// Throws Singular when det P = 0.
template <Scalar S>
Mat3<S> adjoint_rep(const Mat2<S>& p);

/// Coordinates of [phi(e_i), phi(e_j)] versus phi([e_i, e_j]) on all pairs,
/// phi(e_i) = row i of T.
template <Scalar S>
bool automorphism_check(const Mat3<S>& t, double tol = 1e-10);

/// ||adjugate(T)' - T||_F. Zero exactly for Lie automorphisms of the cross product.
double adjugate_transpose_residual(const Mat3d& t);

}  // namespace so3c
}  // namespace postlie
