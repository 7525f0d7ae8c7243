#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 64;

/// Truncated power series c_0 + c_1 z + ... + c_N z^N with complex coefficients.
///
/// The truncation order N is part of the value: binary operations require
/// equal orders, and nothing in this header changes N implicitly. Coefficients
/// are checked finite on construction.
class TaylorSeries {
 public:
  /// The zero series of order `order`.
  explicit TaylorSeries(std::size_t order = kDefaultOrder);

  /// Coefficients beyond `coeffs.size()` are zero; throws if more than
  /// order+1 coefficients are supplied or any is non-finite.
  TaylorSeries(std::span<const Complex> coeffs, std::size_t order);
  TaylorSeries(std::initializer_list<Complex> coeffs, std::size_t order);

  static TaylorSeries constant(Complex c, std::size_t order = kDefaultOrder);
  /// The series of z.
  static TaylorSeries identity(std::size_t order = kDefaultOrder);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  /// Index of the last nonzero coefficient (0 for the zero series).
  std::size_t degree() const noexcept { return degree_; }

  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Horner evaluation of the truncated polynomial.
  Complex eval(Complex z) const noexcept;

  /// Re-truncate (or zero-pad) to a different order.
  TaylorSeries with_order(std::size_t order) const;

  /// Multiply by z, dropping the coefficient that falls beyond N.
  TaylorSeries shift_up() const;
  /// Divide by z; requires c_0 == 0. The vacated top coefficient is zero.
  TaylorSeries shift_down() const;

  TaylorSeries operator-() const;
  TaylorSeries scaled(Complex s) const;

 private:
  explicit TaylorSeries(std::vector<Complex> coeffs);
  void refresh_degree() noexcept;

  std::vector<Complex> coeffs_;
  std::size_t degree_ = 0;
};

TaylorSeries series_add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries series_sub(const TaylorSeries& a, const TaylorSeries& b);
/// Cauchy product truncated at the common order.
TaylorSeries series_mul(const TaylorSeries& a, const TaylorSeries& b);
/// Quotient q with q*b = a through order N; b[0] must be nonzero.
TaylorSeries series_div(const TaylorSeries& a, const TaylorSeries& b);
/// Termwise derivative, re-padded to the same order with a trailing zero.
TaylorSeries series_derivative(const TaylorSeries& a);
/// Termwise antiderivative vanishing at 0, truncated at the same order.
TaylorSeries series_antiderivative(const TaylorSeries& a);
/// exp( integral_0^z a(t)/t dt ); a[0] must be zero.
TaylorSeries series_exp_integral(const TaylorSeries& a);
Complex series_eval(const TaylorSeries& a, Complex z) noexcept;

inline TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) { return series_add(a, b); }
inline TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) { return series_sub(a, b); }
inline TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) { return series_mul(a, b); }
inline TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) { return series_div(a, b); }

/// Largest coefficientwise modulus difference; orders must match.
double max_coeff_diff(const TaylorSeries& a, const TaylorSeries& b);

}  // namespace gft
