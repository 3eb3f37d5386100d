#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "postlie/so3c.hpp"

namespace postlie {

enum class Family { Zero, MinusIdentity, TraceMinus2, KFamily, NonSymRank1 };

std::string_view to_string(Family f);
/// Inverse of to_string; throws Parse on unknown names.
Family family_from_string(std::string_view name);

/// One of the five congruence classes; k is meaningful only for KFamily.
struct FamilyTag {
  Family family = Family::Zero;
  ComplexValue k;

  static FamilyTag zero() { return {Family::Zero, {}}; }
  static FamilyTag minus_identity() { return {Family::MinusIdentity, {}}; }
  static FamilyTag trace_minus2() { return {Family::TraceMinus2, {}}; }
  static FamilyTag nonsym_rank1() { return {Family::NonSymRank1, {}}; }
  static FamilyTag k_family(const GaussianRational& k) { return {Family::KFamily, ComplexValue::of(k)}; }
  static FamilyTag k_family(ComplexDouble k) { return {Family::KFamily, ComplexValue::of(k)}; }

  /// Same family, and for KFamily equal k (exact) or |dk| <= tol.
  bool equals(const FamilyTag& other, double tol) const;
};

using InvariantValue = std::variant<int, ComplexValue>;

struct Invariant {
  std::string name;
  InvariantValue value;
};

struct ClassificationReport {
  FamilyTag tag;
  double residual_norm = 0.0;
  std::vector<Invariant> invariants;  // in the order the decision tree consulted them
  /// T in SO(3,C) with T' representative(tag) T = input, when requested and found.
  std::optional<Mat3d> witness;
};

struct CongruenceVerdict {
  enum class Kind { Congruent, NotCongruent, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Mat3d> witness;      // Congruent: T' A T = B
  std::string separating_invariant;  // NotCongruent
  int attempts = 0;                  // Unknown

  static std::string_view kind_name(Kind k);
};

struct CongruenceOptions {
  int budget = 64;
  std::uint64_t seed = 0;
  double invariant_tol = 1e-6;  // relative; mismatch declared beyond 10x this
  double witness_tol = 1e-8;    // relative to max(1, |A|, |B|)
};

struct ClassifyOptions {
  double tol = 1e-6;
  bool find_witness = false;
  CongruenceOptions witness{};
};

namespace mateq {

/// A'((tr A + 1) I - A) - adjugate(A)
template <Scalar S>
Mat3<S> residual(const Mat3<S>& a);

/// Exact: residual is exactly zero. Floating: ||residual||_F <= tol * max(1, ||A||_F^2).
template <Scalar S>
bool is_solution(const Mat3<S>& a, double tol = 1e-10);

/// The canonical matrix of a family. KFamily needs an exact k (InvalidParameter otherwise).
Mat3q representative(const FamilyTag& tag);
/// Floating representative; accepts floating k.
Mat3d representative_numeric(const FamilyTag& tag);

/// T'AT. Throws NotOrthogonal unless T is in SO(3,C) to tol (exact: exactly).
template <Scalar S>
Mat3<S> congruate(const Mat3<S>& a, const Mat3<S>& t, double tol = 1e-10);

/// (tr A + 1) A'A - A'A A, zero for rank-2 solutions.
template <Scalar S>
Mat3<S> rank2_identity_residual(const Mat3<S>& a);

/// (tr A + 1) A' - A'A, zero for rank-1 solutions.
template <Scalar S>
Mat3<S> rank1_identity_residual(const Mat3<S>& a);

/// Decision tree on congruence invariants:
///   rank 0 -> Zero, rank 3 -> MinusIdentity,
///   rank 1 -> KFamily(0) if rank(sym(A) + I/2) = 1, NonSymRank1 if 2,
///   rank 2 -> KFamily(tr A + 1) if tr A != -2, else TraceMinus2 if
///             rank(A'A) = 2 and KFamily(-1) if rank(A'A) = 1.
/// Throws NotASolution when the residual exceeds tol, Inconclusive when no
/// branch matches.
template <Scalar S>
ClassificationReport classify(const Mat3<S>& a, const ClassifyOptions& opts = {});

/// Decides whether T'AT = B for some T in SO(3,C). Invariant prefilter first
/// (char_poly, rank(A), char_poly(A'A), rank(A'A), char_poly(sym(A)),
/// jordan(sym(A))), then a witness search: Gauss-Newton on T'T = I over the
/// solution space of AT = TB from `budget` seeded starts. A failed search
/// gives Unknown, never NotCongruent.
template <Scalar S>
CongruenceVerdict congruence_test(const Mat3<S>& a, const Mat3<S>& b, const CongruenceOptions& opts = {});

}  // namespace mateq
}  // namespace postlie
