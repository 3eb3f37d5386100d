#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <type_traits>

#include "postlie/gaussian_rational.hpp"

namespace postlie {

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, GaussianRational>;

template <class S>
concept Scalar = std::is_same_v<S, GaussianRational> || std::is_same_v<S, ComplexDouble>;

inline ComplexDouble to_complex(const ComplexDouble& z) { return z; }
inline ComplexDouble to_complex(const GaussianRational& z) { return z.to_complex(); }

inline double magnitude(const ComplexDouble& z) { return std::abs(z); }
inline double magnitude(const GaussianRational& z) { return std::abs(z.to_complex()); }

/// Exact scalars ignore tol.
inline bool is_zero(const GaussianRational& z, double /*tol*/) { return z.is_zero(); }
inline bool is_zero(const ComplexDouble& z, double tol) { return std::abs(z) <= tol; }

inline bool is_finite(const ComplexDouble& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// A complex number reported by the library: always carries a floating
/// value, and additionally the exact value when it was computed exactly
/// (or snapped to a small rational).
struct ComplexValue {
  ComplexDouble value{};
  std::optional<GaussianRational> exact;

  static ComplexValue of(const GaussianRational& z) { return {z.to_complex(), z}; }
  static ComplexValue of(const ComplexDouble& z) { return {z, std::nullopt}; }

  bool is_exact() const { return exact.has_value(); }

  /// Exact comparison when both sides are exact, |delta| <= tol otherwise.
  bool approx_equal(const ComplexValue& other, double tol) const {
    if (exact && other.exact) return *exact == *other.exact;
    return std::abs(value - other.value) <= tol;
  }
};

/// Best rational approximation p/q of x with q <= max_den (continued fractions).
mpq_class best_rational(double x, long max_den);

/// Rounds each part of z to the nearest rational with denominator <= max_den
/// and keeps the result only when both parts land within tol.
std::optional<GaussianRational> snap_to_small_rational(ComplexDouble z, double tol, long max_den = 64);

}  // namespace postlie
