#include "gft/catalog.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "gft/error.hpp"

namespace gft {
namespace {

constexpr double kNormalizationTol = 1e-12;
// Below this radius the Schwarz-S* series is exact to rounding and cheaper than quadrature.
constexpr double kSeriesRadius = 0.25;

void check_normalized(const TaylorSeries& f) {
  if (std::abs(f[0]) > kNormalizationTol || std::abs(f[1] - 1.0) > kNormalizationTol) {
    throw Error(ErrorKind::InvalidFunction,
                "function is not normalized: need f(0) = 0 and f'(0) = 1");
  }
}

void check_order(std::size_t order) {
  if (order < 2) throw Error(ErrorKind::InvalidFunction, "series order must be at least 2");
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::Identity: return "identity";
    case Family::Koebe: return "koebe";
    case Family::Quad: return "quad";
    case Family::ExpScaled: return "exp_scaled";
    case Family::Poly: return "poly";
    case Family::Series: return "series";
    case Family::SchwarzC: return "schwarz_C";
    case Family::SchwarzSstar: return "schwarz_Sstar";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::Identity, Family::Koebe, Family::Quad, Family::ExpScaled, Family::Poly,
                   Family::Series, Family::SchwarzC, Family::SchwarzSstar}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorKind::InvalidFunction, "unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------

SchwarzFunction::SchwarzFunction(TaylorSeries series)
    : series_(std::move(series)),
      derivative_(series_derivative(series_)),
      over_z_(series_.order()) {
  if (series_[0] != Complex{}) {
    throw Error(ErrorKind::InvalidFunction, "Schwarz function must satisfy w(0) = 0");
  }
  over_z_ = series_.shift_down();
}

SchwarzFunction SchwarzFunction::from_coeffs(std::span<const Complex> coeffs, std::size_t order) {
  return SchwarzFunction(TaylorSeries(coeffs, order));
}

double SchwarzFunction::sampled_sup(double r, std::size_t samples) const {
  double best = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    best = std::max(best, std::abs(eval(std::polar(r, theta))));
  }
  return best;
}

// ---------------------------------------------------------------------------

AnalyticFunction::AnalyticFunction(FunctionSpec spec, TaylorSeries series,
                                   std::optional<ClosedForm> closed_form)
    : spec_(std::move(spec)),
      f_(std::move(series)),
      fp_(series_derivative(f_)),
      fpp_(series_derivative(fp_)),
      h_(f_.order()),
      hp_(f_.order()),
      closed_(std::move(closed_form)) {
  check_order(f_.order());
  check_normalized(f_);
  // Normalization is checked to tolerance; the shift needs an exact zero.
  std::vector<Complex> c(f_.coeffs().begin(), f_.coeffs().end());
  c[0] = 0.0;
  h_ = TaylorSeries(c, f_.order()).shift_down();
  hp_ = series_derivative(h_);
}

Complex AnalyticFunction::f(Complex z) const { return closed_ ? closed_->f(z) : f_.eval(z); }
Complex AnalyticFunction::fp(Complex z) const { return closed_ ? closed_->fp(z) : fp_.eval(z); }
Complex AnalyticFunction::fpp(Complex z) const { return closed_ ? closed_->fpp(z) : fpp_.eval(z); }

TaylorSeries AnalyticFunction::G_series() const {
  // z f'/f = f' / (f/z); f/z is exact only through order N-1.
  return series_div(fp_, h_);
}

// ---------------------------------------------------------------------------

AnalyticFunction make_identity(std::size_t order) {
  check_order(order);
  ClosedForm cf;
  cf.f = [](Complex z) { return z; };
  cf.fp = [](Complex) { return Complex(1.0); };
  cf.fpp = [](Complex) { return Complex(0.0); };
  cf.G = [](Complex) { return Complex(1.0); };
  cf.Gp = [](Complex) { return Complex(0.0); };
  FunctionSpec spec{.family = Family::Identity, .order = order};
  return AnalyticFunction(spec, TaylorSeries::identity(order), cf);
}

AnalyticFunction make_koebe(std::size_t order) {
  check_order(order);
  std::vector<Complex> c(order + 1);
  for (std::size_t k = 1; k <= order; ++k) c[k] = static_cast<double>(k);
  ClosedForm cf;
  cf.f = [](Complex z) { return z / ((1.0 - z) * (1.0 - z)); };
  cf.fp = [](Complex z) { return (1.0 + z) / std::pow(1.0 - z, 3); };
  cf.fpp = [](Complex z) { return (4.0 + 2.0 * z) / std::pow(1.0 - z, 4); };
  cf.G = [](Complex z) { return (1.0 + z) / (1.0 - z); };
  cf.Gp = [](Complex z) { return 2.0 / ((1.0 - z) * (1.0 - z)); };
  FunctionSpec spec{.family = Family::Koebe, .order = order};
  return AnalyticFunction(spec, TaylorSeries(c, order), cf);
}

AnalyticFunction make_quad(Complex c, std::size_t order) {
  check_order(order);
  ClosedForm cf;
  cf.f = [c](Complex z) { return z + c * z * z; };
  cf.fp = [c](Complex z) { return 1.0 + 2.0 * c * z; };
  cf.fpp = [c](Complex) { return 2.0 * c; };
  cf.G = [c](Complex z) { return (1.0 + 2.0 * c * z) / (1.0 + c * z); };
  cf.Gp = [c](Complex z) { return c / ((1.0 + c * z) * (1.0 + c * z)); };
  FunctionSpec spec{.family = Family::Quad, .param = c, .order = order};
  return AnalyticFunction(spec, TaylorSeries({0.0, 1.0, c}, order), cf);
}

AnalyticFunction make_exp_scaled(Complex a, std::size_t order) {
  check_order(order);
  // z e^{az} = sum_k a^{k-1}/(k-1)! z^k
  std::vector<Complex> c(order + 1);
  Complex term = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    c[k] = term;
    term *= a / static_cast<double>(k);
  }
  ClosedForm cf;
  cf.f = [a](Complex z) { return z * std::exp(a * z); };
  cf.fp = [a](Complex z) { return std::exp(a * z) * (1.0 + a * z); };
  cf.fpp = [a](Complex z) { return std::exp(a * z) * (2.0 * a + a * a * z); };
  cf.G = [a](Complex z) { return 1.0 + a * z; };
  cf.Gp = [a](Complex) { return a; };
  FunctionSpec spec{.family = Family::ExpScaled, .param = a, .order = order};
  return AnalyticFunction(spec, TaylorSeries(c, order), cf);
}

AnalyticFunction make_poly(std::span<const Complex> coeffs, std::size_t order) {
  check_order(order);
  FunctionSpec spec{.family = Family::Poly, .coeffs = {coeffs.begin(), coeffs.end()}, .order = order};
  return AnalyticFunction(spec, TaylorSeries(coeffs, order));
}

AnalyticFunction make_series(std::span<const Complex> coeffs, std::size_t order) {
  check_order(order);
  FunctionSpec spec{.family = Family::Series, .coeffs = {coeffs.begin(), coeffs.end()}, .order = order};
  return AnalyticFunction(spec, TaylorSeries(coeffs, order));
}

AnalyticFunction synthesize_from_schwarz_C(const SchwarzFunction& w) {
  const std::size_t n = w.series().order();
  check_order(n);
  const TaylorSeries fp = series_add(TaylorSeries::constant(1.0, n), w.series());
  FunctionSpec spec{.family = Family::SchwarzC,
                    .coeffs = {w.series().coeffs().begin(), w.series().coeffs().end()},
                    .order = n};
  return AnalyticFunction(spec, series_antiderivative(fp));
}

AnalyticFunction synthesize_from_schwarz_Sstar(const SchwarzFunction& w, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::InvalidSpec, "synthesize_from_schwarz_Sstar: need 0 <= alpha < 1");
  }
  if (w.sampled_sup(0.999) >= 1.0) {
    throw Error(ErrorKind::InvalidFunction,
                "synthesize_from_schwarz_Sstar: sampled sup |w| on |z| = 0.999 is not below 1");
  }
  const std::size_t n = w.series().order();
  check_order(n);
  const TaylorSeries one = TaylorSeries::constant(1.0, n);
  // G - 1 = 2(1 - alpha) w / (1 - w)
  const TaylorSeries g_minus_1 = series_div(w.series().scaled(2.0 * (1.0 - alpha)), one - w.series());
  const TaylorSeries f = series_exp_integral(g_minus_1).shift_up();

  const double s = 1.0 - 2.0 * alpha;
  ClosedForm cf;
  cf.G = [w, s](Complex z) { return (1.0 + s * w.eval(z)) / (1.0 - w.eval(z)); };
  cf.Gp = [w, alpha](Complex z) {
    const Complex d = 1.0 - w.eval(z);
    return 2.0 * (1.0 - alpha) * w.eval_prime(z) / (d * d);
  };
  // log(f/z) = int_0^1 (G(tz) - 1)/t dt, written without the 0/0 at t = 0.
  cf.f = [w, alpha, f](Complex z) {
    if (std::abs(z) <= kSeriesRadius) return f.eval(z);
    auto integrand = [&](double t) {
      const Complex zt = t * z;
      return 2.0 * (1.0 - alpha) * z * w.eval_over_z(zt) / (1.0 - w.eval(zt));
    };
    const Complex log_ratio =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 15, 1e-14);
    return z * std::exp(log_ratio);
  };
  const TaylorSeries fp = series_derivative(f);
  const TaylorSeries fpp = series_derivative(fp);
  // From z f' = G f:  f' + z f'' = G' f + G f'.
  cf.fp = [cf, fp](Complex z) {
    if (std::abs(z) <= kSeriesRadius) return fp.eval(z);
    return cf.f(z) * cf.G(z) / z;
  };
  cf.fpp = [cf, fpp](Complex z) {
    if (std::abs(z) <= kSeriesRadius) return fpp.eval(z);
    const Complex fz = cf.f(z);
    const Complex g = cf.G(z);
    const Complex fpz = fz * g / z;
    return (cf.Gp(z) * fz + (g - 1.0) * fpz) / z;
  };

  FunctionSpec spec{.family = Family::SchwarzSstar,
                    .coeffs = {w.series().coeffs().begin(), w.series().coeffs().end()},
                    .alpha = alpha,
                    .order = n};
  return AnalyticFunction(spec, f, cf);
}

AnalyticFunction make_function(const FunctionSpec& spec) {
  switch (spec.family) {
    case Family::Identity: return make_identity(spec.order);
    case Family::Koebe: return make_koebe(spec.order);
    case Family::Quad: return make_quad(spec.param, spec.order);
    case Family::ExpScaled: return make_exp_scaled(spec.param, spec.order);
    case Family::Poly: return make_poly(spec.coeffs, spec.order);
    case Family::Series: return make_series(spec.coeffs, spec.order);
    case Family::SchwarzC: return synthesize_from_schwarz_C(SchwarzFunction::from_coeffs(spec.coeffs, spec.order));
    case Family::SchwarzSstar:
      return synthesize_from_schwarz_Sstar(SchwarzFunction::from_coeffs(spec.coeffs, spec.order), spec.alpha);
  }
  throw Error(ErrorKind::InvalidFunction, "unknown family");
}

// ---------------------------------------------------------------------------

ZeroReport count_zeros(const AnalyticFunction& f, double r, std::size_t samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::ContractViolation, "count_zeros: need 0 < r < 1");
  if (samples < 8) throw Error(ErrorKind::ContractViolation, "count_zeros: too few samples");
  ZeroReport report{.radius = r};
  double min_mod = std::numeric_limits<double>::infinity();
  double total_arg = 0.0;
  const Complex first = f.f(Complex(r, 0.0));
  Complex prev = first;
  min_mod = std::abs(first);
  for (std::size_t j = 1; j <= samples; ++j) {
    const Complex cur = j == samples
                            ? first
                            : f.f(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                                    static_cast<double>(samples)));
    min_mod = std::min(min_mod, std::abs(cur));
    total_arg += std::arg(cur / prev);
    prev = cur;
  }
  report.min_modulus = min_mod;
  if (min_mod < kContourZeroThreshold) {
    throw Error(ErrorKind::IndeterminateContour,
                "count_zeros: f nearly vanishes on |z| = " + std::to_string(r));
  }
  report.winding = static_cast<int>(std::lround(total_arg / (2.0 * std::numbers::pi)));
  report.extra_zeros = report.winding - 1;
  return report;
}

double closed_form_discrepancy(const AnalyticFunction& f, double radius, std::size_t radii,
                               std::size_t angles) {
  if (!f.has_closed_form()) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i <= radii; ++i) {
    const double r = radius * static_cast<double>(i) / static_cast<double>(radii);
    for (std::size_t j = 0; j < angles; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles));
      worst = std::max(worst, std::abs(f.f(z) - f.series_f(z)));
    }
  }
  return worst;
}

std::vector<FunctionSpec> random_polynomial_corpus(std::size_t count, double rho, std::uint64_t seed,
                                                   std::size_t max_degree, std::size_t order) {
  if (max_degree < 2 || max_degree > order) {
    throw Error(ErrorKind::ContractViolation, "random_polynomial_corpus: need 2 <= max_degree <= order");
  }
  // Explicit bit-to-double mapping keeps corpora identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<FunctionSpec> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t degree = 2 + static_cast<std::size_t>(unit() * static_cast<double>(max_degree - 1));
    std::vector<Complex> c(degree + 1);
    c[1] = 1.0;
    for (std::size_t k = 2; k <= degree; ++k) {
      const double modulus = rho / static_cast<double>(k) * std::sqrt(unit());
      c[k] = std::polar(modulus, 2.0 * std::numbers::pi * unit());
    }
    corpus.push_back(FunctionSpec{.family = Family::Poly, .coeffs = std::move(c), .order = order});
  }
  return corpus;
}

}  // namespace gft
