#pragma once

#include <string>
#include <vector>

#include "gft/catalog.hpp"

namespace gft {

enum class CriterionKind { T1, C1, C2, T2Minus, T2Plus, T3, T4, MembC, MembSstar, MembSTS };

const char* to_string(CriterionKind kind);
CriterionKind criterion_kind_from_string(const std::string& name);

/// Criterion (hypothesis functional + bound) or class-membership test with its
/// real parameters. Only the fields relevant to `kind` are meaningful:
///   T1: beta, gamma, delta      C1: lambda       C2: beta, gamma
///   T2*: beta, gamma            T3: alpha, beta, gamma
///   T4: alpha, beta (mu derived) memb_C / memb_Sstar: alpha   memb_STS: mu
struct CriterionSpec {
  CriterionKind kind = CriterionKind::T1;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double mu = 1.0;

  static CriterionSpec t1(double beta, double gamma, double delta);
  static CriterionSpec c1(double lambda);
  static CriterionSpec c2(double beta, double gamma);
  static CriterionSpec t2_minus(double beta, double gamma);
  static CriterionSpec t2_plus(double beta, double gamma);
  static CriterionSpec t3(double alpha, double beta, double gamma);
  static CriterionSpec t4(double alpha, double beta);
  static CriterionSpec memb_C(double alpha = 0.0);
  static CriterionSpec memb_Sstar(double alpha = 0.0);
  static CriterionSpec memb_STS(double mu = 1.0);

  /// Throws InvalidSpec when the parameters leave the admissible range.
  void validate() const;

  bool is_membership() const noexcept;
  /// Depends on z f'/f, so needs f != 0 on the punctured disk.
  bool uses_G() const noexcept;
  /// Some exponent is negative: the functional is no longer subharmonic.
  bool has_negative_exponent() const noexcept;
  /// gamma < 0 for the starlike criteria; allowed but outside the usual reading.
  bool extended_range() const noexcept;

  bool operator==(const CriterionSpec&) const = default;
};

/// Bit set of reasons a point value is degenerate.
class PointFlags {
 public:
  enum Bit : unsigned {
    DerivativeZero = 1u << 0,
    FunctionZero = 1u << 1,
    BranchCut = 1u << 2,
    ZeroBase = 1u << 3,  // zero raised to a negative power
  };

  constexpr PointFlags() = default;
  constexpr PointFlags(Bit b) : bits_(b) {}  // NOLINT(google-explicit-constructor)

  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool has(Bit b) const noexcept { return (bits_ & b) != 0; }
  constexpr unsigned bits() const noexcept { return bits_; }
  constexpr PointFlags& operator|=(PointFlags other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr PointFlags operator|(PointFlags a, PointFlags b) noexcept { return a |= b; }
  constexpr bool operator==(const PointFlags&) const = default;

  std::vector<std::string> names() const;
  /// Names joined with '|'; empty string when no flag is set.
  std::string joined() const;
  static PointFlags from_names(const std::vector<std::string>& names);

 private:
  unsigned bits_ = 0;
};

/// Functional values are nonnegative and +inf only with a flag set;
/// membership margins are signed and -inf only with a flag set.
struct PointValue {
  double value = 0.0;
  Complex z{};
  PointFlags flags{};
};

/// G = z f'/f and G' at one point; `pole` is set where f vanishes off the origin.
struct GValues {
  Complex G{1.0};
  Complex Gp{};
  bool pole = false;
};

inline constexpr double kPoleThreshold = 1e-14;

GValues eval_G(const AnalyticFunction& f, Complex z);
/// z f'(z)/f(z); returns 1 at z = 0. Throws Pole where f vanishes.
Complex G(const AnalyticFunction& f, Complex z);
Complex G_prime(const AnalyticFunction& f, Complex z);

PointValue t1_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec);
double t1_bound(const CriterionSpec& spec);
PointValue c1_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec);
double c1_bound(const CriterionSpec& spec);
PointValue c2_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec);
double c2_bound(const CriterionSpec& spec);
/// |G -+ 1|^beta |z G'|^gamma; the sign comes from spec.kind (T3 uses the minus form).
PointValue t2_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec);
double t2_bound(const CriterionSpec& spec);
double t3_bound(const CriterionSpec& spec);
PointValue t4_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec);
double t4_bound(const CriterionSpec& spec);

/// Signed membership margin; positive inside the class at z.
PointValue membership_value(const AnalyticFunction& f, Complex z, const CriterionSpec& class_spec);

/// Dispatch on spec.kind.
PointValue criterion_value(const AnalyticFunction& f, Complex z, const CriterionSpec& spec);
double criterion_bound(const CriterionSpec& spec);
/// The class a hypothesis concludes membership in.
CriterionSpec conclusion_class(const CriterionSpec& spec);

/// |base|^exponent with 0^0 = 1 and 0^negative = +inf (flagged ZeroBase).
double flagged_pow(double base, double exponent, PointFlags& flags);

}  // namespace gft
