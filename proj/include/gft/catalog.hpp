#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gft/series.hpp"

namespace gft {

enum class Family { Identity, Koebe, Quad, ExpScaled, Poly, Series, SchwarzC, SchwarzSstar };

const char* to_string(Family family);
Family family_from_string(const std::string& name);

/// How a function was built. `coeffs` holds the coefficients of f for
/// Poly/Series and of the Schwarz function w for SchwarzC/SchwarzSstar.
/// `param` is c for Quad and a for ExpScaled; `alpha` is used by SchwarzSstar.
struct FunctionSpec {
  Family family = Family::Identity;
  Complex param{};
  std::vector<Complex> coeffs;
  double alpha = 0.0;
  std::size_t order = kDefaultOrder;

  bool operator==(const FunctionSpec&) const = default;
};

/// Exact evaluators attached to families with known closed forms.
/// G and Gp (z f'/f and its derivative) are optional.
struct ClosedForm {
  std::function<Complex(Complex)> f, fp, fpp;
  std::function<Complex(Complex)> G, Gp;
};

/// Analytic w with w(0) = 0. Being bounded by one on the disk is not
/// enforced here; see `sampled_sup`.
class SchwarzFunction {
 public:
  explicit SchwarzFunction(TaylorSeries series);
  static SchwarzFunction from_coeffs(std::span<const Complex> coeffs, std::size_t order = kDefaultOrder);

  const TaylorSeries& series() const noexcept { return series_; }
  Complex eval(Complex z) const noexcept { return series_.eval(z); }
  Complex eval_prime(Complex z) const noexcept { return derivative_.eval(z); }
  /// w(z)/z without cancellation near the origin.
  Complex eval_over_z(Complex z) const noexcept { return over_z_.eval(z); }

  /// max |w| over `samples` equally spaced points of |z| = r (no refinement).
  double sampled_sup(double r, std::size_t samples = 4096) const;

 private:
  TaylorSeries series_;
  TaylorSeries derivative_;
  TaylorSeries over_z_;
};

/// Member of class A (f(0) = 0, f'(0) = 1) with its Taylor series always
/// materialized. Point evaluation prefers the closed form when one exists.
class AnalyticFunction {
 public:
  AnalyticFunction(FunctionSpec spec, TaylorSeries series, std::optional<ClosedForm> closed_form = {});

  const FunctionSpec& spec() const noexcept { return spec_; }
  const TaylorSeries& series() const noexcept { return f_; }
  std::size_t order() const noexcept { return f_.order(); }
  bool has_closed_form() const noexcept { return closed_.has_value(); }
  const std::optional<ClosedForm>& closed_form() const noexcept { return closed_; }

  Complex f(Complex z) const;
  Complex fp(Complex z) const;
  Complex fpp(Complex z) const;

  Complex series_f(Complex z) const noexcept { return f_.eval(z); }
  Complex series_fp(Complex z) const noexcept { return fp_.eval(z); }
  Complex series_fpp(Complex z) const noexcept { return fpp_.eval(z); }
  /// f(z)/z and its derivative, from the shifted series.
  Complex series_f_over_z(Complex z) const noexcept { return h_.eval(z); }
  Complex series_f_over_z_prime(Complex z) const noexcept { return hp_.eval(z); }

  /// Series of z f'/f, valid through order N-1.
  TaylorSeries G_series() const;

 private:
  FunctionSpec spec_;
  TaylorSeries f_, fp_, fpp_, h_, hp_;
  std::optional<ClosedForm> closed_;
};

struct ZeroReport {
  double radius = 0.0;
  int winding = 0;
  int extra_zeros = 0;
  double min_modulus = 0.0;
};

inline constexpr std::size_t kDefaultZeroSamples = 8192;
inline constexpr double kContourZeroThreshold = 1e-8;

AnalyticFunction make_identity(std::size_t order = kDefaultOrder);
AnalyticFunction make_koebe(std::size_t order = kDefaultOrder);
AnalyticFunction make_quad(Complex c, std::size_t order = kDefaultOrder);
AnalyticFunction make_exp_scaled(Complex a, std::size_t order = kDefaultOrder);
/// Coefficients c_0, c_1, ... of f; must start 0, 1.
AnalyticFunction make_poly(std::span<const Complex> coeffs, std::size_t order = kDefaultOrder);
AnalyticFunction make_series(std::span<const Complex> coeffs, std::size_t order = kDefaultOrder);

/// Builds any catalog member from its spec.
AnalyticFunction make_function(const FunctionSpec& spec);

/// f' = 1 + w, f(0) = 0.
AnalyticFunction synthesize_from_schwarz_C(const SchwarzFunction& w);
/// z f'/f = (1 + (1 - 2 alpha) w) / (1 - w), via f = z exp( int_0^z (G - 1)/t dt ).
AnalyticFunction synthesize_from_schwarz_Sstar(const SchwarzFunction& w, double alpha);

/// Winding number of f about 0 along |z| = r by accumulated argument.
ZeroReport count_zeros(const AnalyticFunction& f, double r, std::size_t samples = kDefaultZeroSamples);

/// Largest |closed form f - series f| over a polar sample grid of |z| <= radius.
double closed_form_discrepancy(const AnalyticFunction& f, double radius, std::size_t radii = 16,
                               std::size_t angles = 64);

/// Seeded polynomials f = z + sum_{k=2}^{d} c_k z^k, d uniform in [2, max_degree],
/// c_k uniform in the disk of radius rho/k.
std::vector<FunctionSpec> random_polynomial_corpus(std::size_t count, double rho, std::uint64_t seed,
                                                   std::size_t max_degree = 6,
                                                   std::size_t order = kDefaultOrder);

}  // namespace gft
