#include "gft/functionals.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gft/error.hpp"

namespace gft {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDerivativeZeroThreshold = 1e-14;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidSpec, message);
}

void require_kind(const CriterionSpec& spec, std::initializer_list<CriterionKind> kinds, const char* op) {
  for (auto k : kinds) {
    if (spec.kind == k) return;
  }
  throw Error(ErrorKind::InvalidSpec, std::string(op) + ": wrong criterion kind " + to_string(spec.kind));
}

// Product of factors where an infinite factor dominates a zero one.
double flagged_product(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return kInf;
  return a * b;
}

PointValue pole_value(Complex z, bool margin) {
  return {margin ? -kInf : kInf, z, PointFlags::FunctionZero};
}

}  // namespace

const char* to_string(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::T1: return "T1";
    case CriterionKind::C1: return "C1";
    case CriterionKind::C2: return "C2";
    case CriterionKind::T2Minus: return "T2_minus";
    case CriterionKind::T2Plus: return "T2_plus";
    case CriterionKind::T3: return "T3";
    case CriterionKind::T4: return "T4";
    case CriterionKind::MembC: return "memb_C";
    case CriterionKind::MembSstar: return "memb_Sstar";
    case CriterionKind::MembSTS: return "memb_STS";
  }
  return "unknown";
}

CriterionKind criterion_kind_from_string(const std::string& name) {
  for (auto k : {CriterionKind::T1, CriterionKind::C1, CriterionKind::C2, CriterionKind::T2Minus,
                 CriterionKind::T2Plus, CriterionKind::T3, CriterionKind::T4, CriterionKind::MembC,
                 CriterionKind::MembSstar, CriterionKind::MembSTS}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown criterion kind '" + name + "'");
}

// --- CriterionSpec ---------------------------------------------------------

CriterionSpec CriterionSpec::t1(double beta, double gamma, double delta) {
  return {.kind = CriterionKind::T1, .beta = beta, .gamma = gamma, .delta = delta};
}
CriterionSpec CriterionSpec::c1(double lambda) { return {.kind = CriterionKind::C1, .lambda = lambda}; }
CriterionSpec CriterionSpec::c2(double beta, double gamma) {
  return {.kind = CriterionKind::C2, .beta = beta, .gamma = gamma};
}
CriterionSpec CriterionSpec::t2_minus(double beta, double gamma) {
  return {.kind = CriterionKind::T2Minus, .beta = beta, .gamma = gamma};
}
CriterionSpec CriterionSpec::t2_plus(double beta, double gamma) {
  return {.kind = CriterionKind::T2Plus, .beta = beta, .gamma = gamma};
}
CriterionSpec CriterionSpec::t3(double alpha, double beta, double gamma) {
  return {.kind = CriterionKind::T3, .beta = beta, .gamma = gamma, .alpha = alpha};
}
CriterionSpec CriterionSpec::t4(double alpha, double beta) {
  CriterionSpec s{.kind = CriterionKind::T4, .beta = beta, .alpha = alpha};
  s.mu = (alpha + beta) != 0.0 ? beta / (alpha + beta) : 0.0;
  return s;
}
CriterionSpec CriterionSpec::memb_C(double alpha) { return {.kind = CriterionKind::MembC, .alpha = alpha}; }
CriterionSpec CriterionSpec::memb_Sstar(double alpha) {
  return {.kind = CriterionKind::MembSstar, .alpha = alpha};
}
CriterionSpec CriterionSpec::memb_STS(double mu) { return {.kind = CriterionKind::MembSTS, .mu = mu}; }

void CriterionSpec::validate() const {
  for (double v : {beta, gamma, delta, alpha, lambda, mu}) require(std::isfinite(v), "non-finite parameter");
  switch (kind) {
    case CriterionKind::T1:
      require(beta >= 0.0 && gamma >= 0.0, "T1 needs beta >= 0 and gamma >= 0");
      require(delta > -0.5, "T1 needs delta > -1/2");
      break;
    case CriterionKind::C1: require(lambda >= 0.0, "C1 needs lambda >= 0"); break;
    case CriterionKind::C2: require(gamma >= 0.0, "C2 needs gamma >= 0"); break;
    case CriterionKind::T2Minus:
    case CriterionKind::T2Plus: require(beta + 2.0 * gamma >= 0.0, "T2 needs beta + 2 gamma >= 0"); break;
    case CriterionKind::T3:
      require(beta + 2.0 * gamma >= 0.0, "T3 needs beta + 2 gamma >= 0");
      require(alpha >= 0.0 && alpha < 1.0, "T3 needs 0 <= alpha < 1");
      break;
    case CriterionKind::T4:
      require(alpha >= 0.0 && beta > 0.0, "T4 needs alpha >= 0 and beta > 0");
      require(std::abs(mu - beta / (alpha + beta)) <= 1e-15, "T4 mu must equal beta/(alpha+beta)");
      break;
    case CriterionKind::MembC:
    case CriterionKind::MembSstar: require(alpha >= 0.0 && alpha < 1.0, "membership needs 0 <= alpha < 1"); break;
    case CriterionKind::MembSTS: require(mu > 0.0 && mu <= 1.0, "memb_STS needs 0 < mu <= 1"); break;
  }
}

bool CriterionSpec::is_membership() const noexcept {
  return kind == CriterionKind::MembC || kind == CriterionKind::MembSstar || kind == CriterionKind::MembSTS;
}

bool CriterionSpec::uses_G() const noexcept {
  switch (kind) {
    case CriterionKind::T1:
    case CriterionKind::C1:
    case CriterionKind::C2:
    case CriterionKind::MembC: return false;
    default: return true;
  }
}

bool CriterionSpec::has_negative_exponent() const noexcept {
  switch (kind) {
    case CriterionKind::T1:
    case CriterionKind::C2:
    case CriterionKind::T2Minus:
    case CriterionKind::T2Plus:
    case CriterionKind::T3: return beta < 0.0 || gamma < 0.0;
    case CriterionKind::C1: return lambda > 1.0;
    case CriterionKind::T4: return alpha < 0.0 || beta < 0.0;
    default: return false;
  }
}

bool CriterionSpec::extended_range() const noexcept {
  switch (kind) {
    case CriterionKind::T2Minus:
    case CriterionKind::T2Plus:
    case CriterionKind::T3: return gamma < 0.0;
    default: return false;
  }
}

// --- PointFlags ------------------------------------------------------------

namespace {
constexpr std::pair<PointFlags::Bit, const char*> kFlagNames[] = {
    {PointFlags::DerivativeZero, "derivative_zero"},
    {PointFlags::FunctionZero, "function_zero"},
    {PointFlags::BranchCut, "branch_cut"},
    {PointFlags::ZeroBase, "zero_base"},
};
}  // namespace

std::vector<std::string> PointFlags::names() const {
  std::vector<std::string> out;
  for (auto [bit, name] : kFlagNames) {
    if (has(bit)) out.emplace_back(name);
  }
  return out;
}

std::string PointFlags::joined() const {
  std::string out;
  for (const auto& n : names()) {
    if (!out.empty()) out += '|';
    out += n;
  }
  return out;
}

PointFlags PointFlags::from_names(const std::vector<std::string>& names) {
  PointFlags flags;
  for (const auto& n : names) {
    bool found = false;
    for (auto [bit, name] : kFlagNames) {
      if (n == name) {
        flags |= bit;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::Parse, "unknown flag '" + n + "'");
  }
  return flags;
}

// --- point evaluations -----------------------------------------------------

double flagged_pow(double base, double exponent, PointFlags& flags) {
  if (exponent == 0.0) return 1.0;
  if (base == 0.0) {
    if (exponent > 0.0) return 0.0;
    flags |= PointFlags::ZeroBase;
    return kInf;
  }
  return std::pow(base, exponent);
}

GValues eval_G(const AnalyticFunction& f, Complex z) {
  if (z == Complex{}) {
    // Removable singularity: G(0) = 1, G'(0) = f''(0)/2.
    return {1.0, f.series()[2], false};
  }
  const auto& cf = f.closed_form();
  if (cf && cf->G && cf->Gp) {
    const Complex g = cf->G(z);
    const Complex gp = cf->Gp(z);
    const bool finite = std::isfinite(g.real()) && std::isfinite(g.imag()) && std::isfinite(gp.real()) &&
                        std::isfinite(gp.imag());
    if (!finite) return {g, gp, true};
    return {g, gp, false};
  }
  // G = f'/h and G' = (f'' h - f' h')/h^2 with h = f/z; exact for polynomial f.
  const Complex h = f.series_f_over_z(z);
  if (std::abs(z * h) < kPoleThreshold) return {{}, {}, true};
  const Complex fp = f.fp(z);
  const Complex fpp = f.fpp(z);
  const Complex hp = f.series_f_over_z_prime(z);
  return {fp / h, (fpp * h - fp * hp) / (h * h), false};
}

Complex G(const AnalyticFunction& f, Complex z) {
  const GValues g = eval_G(f, z);
  if (g.pole) throw Error(ErrorKind::Pole, "G: f vanishes at a point off the origin");
  return g.G;
}

Complex G_prime(const AnalyticFunction& f, Complex z) {
  const GValues g = eval_G(f, z);
  if (g.pole) throw Error(ErrorKind::Pole, "G': f vanishes at a point off the origin");
  return g.Gp;
}

namespace {

// |f' - 1|^beta |delta + z f''/f'|^gamma, shared by T1 and its specializations.
PointValue derivative_functional(const AnalyticFunction& f, Complex z, double beta, double gamma,
                                 double delta) {
  PointValue out{.z = z};
  const Complex fp = f.fp(z);
  const double first = flagged_pow(std::abs(fp - 1.0), beta, out.flags);
  double second = 1.0;
  if (gamma != 0.0) {
    if (std::abs(fp) < kDerivativeZeroThreshold) {
      out.flags |= PointFlags::DerivativeZero;
      second = gamma > 0.0 ? kInf : 0.0;
    } else {
      second = flagged_pow(std::abs(delta + z * f.fpp(z) / fp), gamma, out.flags);
    }
  }
  out.value = flagged_product(first, second);
  return out;
}

}  // namespace

PointValue t1_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec) {
  require_kind(spec, {CriterionKind::T1}, "t1_value");
  return derivative_functional(f, z, spec.beta, spec.gamma, spec.delta);
}

double t1_bound(const CriterionSpec& spec) {
  require(spec.delta > -0.5, "t1_bound needs delta > -1/2");
  if (spec.gamma == 0.0) return 1.0;
  return std::pow((1.0 + 2.0 * spec.delta) / 2.0, spec.gamma);
}

PointValue c1_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec) {
  require_kind(spec, {CriterionKind::C1}, "c1_value");
  // |f' - 1|^{1 - lambda} |1 + z f''/f'|^lambda
  PointValue out{.z = z};
  const double lambda = spec.lambda;
  const Complex fp = f.fp(z);
  const double base = flagged_pow(std::abs(fp - 1.0), 1.0 - lambda, out.flags);
  double tail = 1.0;
  if (lambda != 0.0) {
    if (std::abs(fp) < kDerivativeZeroThreshold) {
      out.flags |= PointFlags::DerivativeZero;
      tail = kInf;
    } else {
      tail = flagged_pow(std::abs((fp + z * f.fpp(z)) / fp), lambda, out.flags);
    }
  }
  out.value = flagged_product(base, tail);
  return out;
}

double c1_bound(const CriterionSpec& spec) {
  require(spec.lambda >= 0.0, "c1_bound needs lambda >= 0");
  return std::pow(1.5, spec.lambda);
}

PointValue c2_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec) {
  require_kind(spec, {CriterionKind::C2}, "c2_value");
  // |f' - 1|^beta |z f''/f'|^gamma
  PointValue out{.z = z};
  const Complex fp = f.fp(z);
  const double head = flagged_pow(std::abs(fp - 1.0), spec.beta, out.flags);
  double tail = 1.0;
  if (spec.gamma != 0.0) {
    if (std::abs(fp) < kDerivativeZeroThreshold) {
      out.flags |= PointFlags::DerivativeZero;
      tail = kInf;
    } else {
      tail = flagged_pow(std::abs(z * f.fpp(z) / fp), spec.gamma, out.flags);
    }
  }
  out.value = flagged_product(head, tail);
  return out;
}

double c2_bound(const CriterionSpec& spec) { return std::pow(0.5, spec.gamma); }

PointValue t2_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec) {
  require_kind(spec, {CriterionKind::T2Minus, CriterionKind::T2Plus, CriterionKind::T3}, "t2_value");
  const GValues g = eval_G(f, z);
  if (g.pole) return pole_value(z, false);
  PointValue out{.z = z};
  const double shift = spec.kind == CriterionKind::T2Plus ? 1.0 : -1.0;
  const double head = flagged_pow(std::abs(g.G + shift), spec.beta, out.flags);
  const double tail = flagged_pow(std::abs(z * g.Gp), spec.gamma, out.flags);
  out.value = flagged_product(head, tail);
  return out;
}

double t2_bound(const CriterionSpec& spec) { return std::pow(0.5, spec.gamma); }

double t3_bound(const CriterionSpec& spec) {
  require(spec.alpha >= 0.0 && spec.alpha < 1.0, "t3_bound needs 0 <= alpha < 1");
  return std::pow(0.5, spec.gamma) * std::pow(1.0 - spec.alpha, spec.beta + spec.gamma);
}

PointValue t4_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec) {
  require_kind(spec, {CriterionKind::T4}, "t4_value");
  const GValues g = eval_G(f, z);
  if (g.pole) return pole_value(z, false);
  PointValue out{.z = z};
  const double head = flagged_pow(std::abs(g.G), spec.alpha, out.flags);
  const double tail = flagged_pow(std::abs(z * g.Gp), spec.beta, out.flags);
  out.value = flagged_product(head, tail);
  return out;
}

double t4_bound(const CriterionSpec& spec) {
  require(spec.alpha >= 0.0 && spec.beta > 0.0, "t4_bound needs alpha >= 0 and beta > 0");
  const double mu = spec.beta / (spec.alpha + spec.beta);
  return std::pow(mu / 2.0, spec.beta);
}

PointValue membership_value(const AnalyticFunction& f, Complex z, const CriterionSpec& class_spec) {
  PointValue out{.z = z};
  switch (class_spec.kind) {
    case CriterionKind::MembC:
      out.value = (1.0 - class_spec.alpha) - std::abs(f.fp(z) - 1.0);
      return out;
    case CriterionKind::MembSstar: {
      const GValues g = eval_G(f, z);
      if (g.pole) return pole_value(z, true);
      out.value = g.G.real() - class_spec.alpha;
      return out;
    }
    case CriterionKind::MembSTS: {
      const GValues g = eval_G(f, z);
      if (g.pole) return pole_value(z, true);
      if (g.G == Complex{}) {
        out.flags |= PointFlags::DerivativeZero;
        out.value = 0.0;
        return out;
      }
      if (g.G.real() <= 0.0 && g.G.imag() == 0.0) {
        out.flags |= PointFlags::BranchCut;
        out.value = -kInf;
        return out;
      }
      // Principal branch: |G|^{1/mu} cos(Arg G / mu), Arg in (-pi, pi].
      const double inv_mu = 1.0 / class_spec.mu;
      out.value = std::pow(std::abs(g.G), inv_mu) * std::cos(std::arg(g.G) * inv_mu);
      return out;
    }
    default:
      throw Error(ErrorKind::InvalidSpec,
                  std::string("membership_value: not a class kind: ") + to_string(class_spec.kind));
  }
}

PointValue criterion_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec) {
  switch (spec.kind) {
    case CriterionKind::T1: return t1_value(f, z, spec);
    case CriterionKind::C1: return c1_value(f, z, spec);
    case CriterionKind::C2: return c2_value(f, z, spec);
    case CriterionKind::T2Minus:
    case CriterionKind::T2Plus:
    case CriterionKind::T3: return t2_value(f, z, spec);
    case CriterionKind::T4: return t4_value(f, z, spec);
    default: return membership_value(f, z, spec);
  }
}

double criterion_bound(const CriterionSpec& spec) {
  switch (spec.kind) {
    case CriterionKind::T1: return t1_bound(spec);
    case CriterionKind::C1: return c1_bound(spec);
    case CriterionKind::C2: return c2_bound(spec);
    case CriterionKind::T2Minus:
    case CriterionKind::T2Plus: return t2_bound(spec);
    case CriterionKind::T3: return t3_bound(spec);
    case CriterionKind::T4: return t4_bound(spec);
    default: return 0.0;
  }
}

CriterionSpec conclusion_class(const CriterionSpec& spec) {
  switch (spec.kind) {
    case CriterionKind::T1:
    case CriterionKind::C1:
    case CriterionKind::C2: return CriterionSpec::memb_C(0.0);
    case CriterionKind::T2Minus:
    case CriterionKind::T2Plus: return CriterionSpec::memb_Sstar(0.0);
    case CriterionKind::T3: return CriterionSpec::memb_Sstar(spec.alpha);
    case CriterionKind::T4: return CriterionSpec::memb_STS(spec.beta / (spec.alpha + spec.beta));
    default: return spec;
  }
}

}  // namespace gft
