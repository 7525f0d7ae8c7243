#include "gft/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gft/error.hpp"

namespace gft {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_same_order(const TaylorSeries& a, const TaylorSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::ContractViolation,
                std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                    std::to_string(b.order()) + ")");
  }
}

}  // namespace

TaylorSeries::TaylorSeries(std::size_t order) : coeffs_(order + 1) {}

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!finite(c)) throw Error(ErrorKind::ContractViolation, "non-finite series coefficient");
  }
  refresh_degree();
}

TaylorSeries::TaylorSeries(std::span<const Complex> coeffs, std::size_t order)
    : coeffs_(order + 1) {
  if (coeffs.size() > order + 1) {
    throw Error(ErrorKind::ContractViolation,
                std::to_string(coeffs.size()) + " coefficients exceed order " + std::to_string(order));
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!finite(coeffs[k])) throw Error(ErrorKind::ContractViolation, "non-finite series coefficient");
    coeffs_[k] = coeffs[k];
  }
  refresh_degree();
}

TaylorSeries::TaylorSeries(std::initializer_list<Complex> coeffs, std::size_t order)
    : TaylorSeries(std::span<const Complex>(coeffs.begin(), coeffs.size()), order) {}

TaylorSeries TaylorSeries::constant(Complex c, std::size_t order) { return TaylorSeries({c}, order); }

TaylorSeries TaylorSeries::identity(std::size_t order) {
  if (order == 0) return TaylorSeries(0);
  return TaylorSeries({0.0, 1.0}, order);
}

void TaylorSeries::refresh_degree() noexcept {
  degree_ = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != Complex{}) {
      degree_ = k;
      break;
    }
  }
}

Complex TaylorSeries::eval(Complex z) const noexcept {
  Complex acc = coeffs_[degree_];
  for (std::size_t k = degree_; k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

TaylorSeries TaylorSeries::with_order(std::size_t order) const {
  std::vector<Complex> out(order + 1);
  std::copy_n(coeffs_.begin(), std::min(out.size(), coeffs_.size()), out.begin());
  return TaylorSeries(std::move(out));
}

TaylorSeries TaylorSeries::shift_up() const {
  std::vector<Complex> out(coeffs_.size());
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = coeffs_[k - 1];
  return TaylorSeries(std::move(out));
}

TaylorSeries TaylorSeries::shift_down() const {
  if (coeffs_[0] != Complex{}) {
    throw Error(ErrorKind::RemovableSingularity, "shift_down: constant term is nonzero");
  }
  std::vector<Complex> out(coeffs_.size());
  for (std::size_t k = 0; k + 1 < out.size(); ++k) out[k] = coeffs_[k + 1];
  return TaylorSeries(std::move(out));
}

TaylorSeries TaylorSeries::operator-() const { return scaled(-1.0); }

TaylorSeries TaylorSeries::scaled(Complex s) const {
  std::vector<Complex> out(coeffs_);
  for (auto& c : out) c *= s;
  return TaylorSeries(std::move(out));
}

TaylorSeries series_add(const TaylorSeries& a, const TaylorSeries& b) {
  require_same_order(a, b, "series_add");
  std::vector<Complex> out(a.order() + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
  return TaylorSeries(out, a.order());
}

TaylorSeries series_sub(const TaylorSeries& a, const TaylorSeries& b) {
  require_same_order(a, b, "series_sub");
  std::vector<Complex> out(a.order() + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
  return TaylorSeries(out, a.order());
}

TaylorSeries series_mul(const TaylorSeries& a, const TaylorSeries& b) {
  require_same_order(a, b, "series_mul");
  const std::size_t n = a.order();
  std::vector<Complex> out(n + 1);
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    for (std::size_t j = 0; j <= b.degree() && i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return TaylorSeries(out, n);
}

TaylorSeries series_div(const TaylorSeries& a, const TaylorSeries& b) {
  require_same_order(a, b, "series_div");
  if (b[0] == Complex{}) {
    throw Error(ErrorKind::NonInvertible, "series_div: divisor has zero constant term");
  }
  const std::size_t n = a.order();
  std::vector<Complex> q(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    Complex acc = a[m];
    for (std::size_t k = 1; k <= std::min(m, b.degree()); ++k) acc -= b[k] * q[m - k];
    q[m] = acc / b[0];
  }
  return TaylorSeries(q, n);
}

TaylorSeries series_derivative(const TaylorSeries& a) {
  const std::size_t n = a.order();
  std::vector<Complex> out(n + 1);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = static_cast<double>(k) * a[k];
  return TaylorSeries(out, n);
}

TaylorSeries series_antiderivative(const TaylorSeries& a) {
  const std::size_t n = a.order();
  std::vector<Complex> out(n + 1);
  for (std::size_t k = 0; k < n; ++k) out[k + 1] = a[k] / static_cast<double>(k + 1);
  return TaylorSeries(out, n);
}

TaylorSeries series_exp_integral(const TaylorSeries& a) {
  if (a[0] != Complex{}) {
    throw Error(ErrorKind::RemovableSingularity,
                "series_exp_integral: a(t)/t has a pole at t = 0 (constant term nonzero)");
  }
  // E = exp(B) with z B' = a, so n E_n = sum_{k=1..n} a_k E_{n-k}.
  const std::size_t n = a.order();
  std::vector<Complex> e(n + 1);
  e[0] = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    Complex acc{};
    for (std::size_t k = 1; k <= std::min(m, a.degree()); ++k) acc += a[k] * e[m - k];
    e[m] = acc / static_cast<double>(m);
  }
  return TaylorSeries(e, n);
}

Complex series_eval(const TaylorSeries& a, Complex z) noexcept { return a.eval(z); }

double max_coeff_diff(const TaylorSeries& a, const TaylorSeries& b) {
  require_same_order(a, b, "max_coeff_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k <= a.order(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace gft
