#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gft/functionals.hpp"

namespace gft {

struct GridDensity {
  std::size_t radii = 64;
  std::size_t angles = 1024;
  bool operator==(const GridDensity&) const = default;
};

/// How extrema over circles |z| = r and over the disk are estimated.
struct ScanConfig {
  std::vector<double> radius_ladder{0.5, 0.9, 0.99, 0.999};
  std::size_t base_samples = 4096;
  double refine_tol = 1e-12;
  /// Polar grid used for functionals that are not subharmonic.
  std::optional<GridDensity> interior_grid = GridDensity{};

  void validate() const;
  double outer_radius() const { return radius_ladder.back(); }
  bool operator==(const ScanConfig&) const = default;
};

enum class ScanMode { Max, Min };

using Quantity = std::function<PointValue(Complex)>;

struct CircleExtremum {
  double radius = 0.0;
  double value = 0.0;
  double theta = 0.0;
  Complex witness{};
  PointFlags witness_flags{};
  /// Union of the flags seen on the circle.
  PointFlags flags{};
};

/// Dense sampling at cfg.base_samples angles, then golden-section refinement
/// of the three best local extrema to cfg.refine_tol in theta.
CircleExtremum circle_extremum(const Quantity& q, double r, const ScanConfig& cfg, ScanMode mode);

struct RadiusExtremum {
  double radius = 0.0;
  double value = 0.0;
};

struct SupEstimate {
  double value = 0.0;
  Complex witness{};
  double radius = 0.0;
  std::vector<RadiusExtremum> per_radius;
  /// Circle extrema are nondecreasing in r (Max) or nonincreasing (Min).
  bool monotone = true;
  PointFlags flags{};
  PointFlags witness_flags{};
  bool from_interior_grid = false;
};

struct DiskScanOptions {
  bool interior = false;
  std::size_t workers = 1;
};

/// Extremum over the ladder circles, merged with the interior polar grid when
/// `options.interior` is set. Ties go to the smaller radius, then smaller theta.
SupEstimate disk_sup(const Quantity& q, const ScanConfig& cfg, ScanMode mode, DiskScanOptions options = {});

struct GridSample {
  double r = 0.0;
  double theta = 0.0;
  PointValue value;
};

/// Radii i/n for i = 1..n-1 below the outer ladder radius, then the outer radius.
std::vector<double> interior_grid_radii(const ScanConfig& cfg);

/// Row-major (radius, then angle) samples of q on the interior polar grid.
std::vector<GridSample> polar_grid(const Quantity& q, const ScanConfig& cfg, std::size_t workers = 1);

/// Bisection for the radius where the circle extremum crosses `threshold`,
/// given it is on the passing side at r_pass and failing side at r_fail.
double crossing_radius(const Quantity& q, double r_pass, double r_fail, double threshold,
                       const ScanConfig& cfg, ScanMode mode, double tol = 1e-6);

}  // namespace gft
