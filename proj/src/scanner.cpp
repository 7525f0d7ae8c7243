#include "gft/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gft/error.hpp"
#include "gft/parallel.hpp"

namespace gft {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kRefineCandidates = 3;
constexpr double kMonotoneTol = 1e-12;

bool undefined(const PointValue& v) { return v.flags.has(PointFlags::FunctionZero) || std::isnan(v.value); }

// Orientation-free score: larger is better in both modes.
double score(double value, ScanMode mode) { return mode == ScanMode::Max ? value : -value; }

struct Candidate {
  double value;
  double radius;
  double theta;
};

// Strictly better value wins; ties go to the smaller radius, then the smaller angle.
bool better(const Candidate& a, const Candidate& b, ScanMode mode) {
  const double sa = score(a.value, mode);
  const double sb = score(b.value, mode);
  if (sa != sb) return sa > sb;
  if (a.radius != b.radius) return a.radius < b.radius;
  return a.theta < b.theta;
}

double normalize_angle(double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  return theta;
}

// Golden-section search for the best score of g on [lo, hi]; returns the final midpoint.
template <typename G>
double golden_section(G&& g, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double gc = g(c);
  double gd = g(d);
  for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
    if (gc >= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void ScanConfig::validate() const {
  if (radius_ladder.empty()) throw Error(ErrorKind::InvalidSpec, "scan: radius_ladder is empty");
  for (std::size_t i = 0; i < radius_ladder.size(); ++i) {
    const double r = radius_ladder[i];
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidSpec, "scan: radii must lie in (0, 1)");
    if (i > 0 && !(r > radius_ladder[i - 1])) {
      throw Error(ErrorKind::InvalidSpec, "scan: radius_ladder must be strictly increasing");
    }
  }
  if (base_samples < 8) throw Error(ErrorKind::InvalidSpec, "scan: base_samples must be at least 8");
  if (!(refine_tol > 0.0)) throw Error(ErrorKind::InvalidSpec, "scan: refine_tol must be positive");
  if (interior_grid && (interior_grid->radii < 1 || interior_grid->angles < 1)) {
    throw Error(ErrorKind::InvalidSpec, "scan: interior_grid densities must be positive");
  }
}

CircleExtremum circle_extremum(const Quantity& q, double r, const ScanConfig& cfg, ScanMode mode) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::ContractViolation, "circle_extremum: need 0 < r < 1");
  const std::size_t n = cfg.base_samples;
  const double step = kTwoPi / static_cast<double>(n);

  std::vector<PointValue> samples(n);
  CircleExtremum out{.radius = r};
  std::size_t defined = 0;
  for (std::size_t j = 0; j < n; ++j) {
    samples[j] = q(std::polar(r, step * static_cast<double>(j)));
    out.flags |= samples[j].flags;
    if (!undefined(samples[j])) ++defined;
  }
  if (defined == 0) {
    throw Error(ErrorKind::UnscannableCircle,
                "circle_extremum: quantity undefined at every sample of |z| = " + std::to_string(r));
  }

  // Best sample over everything that is not NaN (flagged infinities included).
  std::size_t best = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isnan(samples[j].value)) continue;
    if (best == n || score(samples[j].value, mode) > score(samples[best].value, mode)) best = j;
  }
  if (best == n) {
    throw Error(ErrorKind::UnscannableCircle, "circle_extremum: no comparable sample values");
  }
  Candidate winner{samples[best].value, r, step * static_cast<double>(best)};
  PointValue winner_point = samples[best];

  // Local extrema with finite unflagged values, best first, lowest index on ties.
  std::vector<std::size_t> peaks;
  for (std::size_t j = 0; j < n; ++j) {
    const PointValue& cur = samples[j];
    if (!cur.flags.empty() || !std::isfinite(cur.value)) continue;
    const double s = score(cur.value, mode);
    const PointValue& prev = samples[(j + n - 1) % n];
    const PointValue& next = samples[(j + 1) % n];
    const bool prev_ok = std::isnan(prev.value) || s >= score(prev.value, mode);
    const bool next_ok = std::isnan(next.value) || s >= score(next.value, mode);
    if (prev_ok && next_ok) peaks.push_back(j);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) {
    return score(samples[a].value, mode) > score(samples[b].value, mode);
  });
  if (peaks.size() > kRefineCandidates) peaks.resize(kRefineCandidates);

  for (std::size_t j : peaks) {
    const double center = step * static_cast<double>(j);
    auto objective = [&](double theta) {
      const PointValue v = q(std::polar(r, theta));
      if (!v.flags.empty() || !std::isfinite(v.value)) return -std::numeric_limits<double>::infinity();
      return score(v.value, mode);
    };
    const double theta = normalize_angle(golden_section(objective, center - step, center + step, cfg.refine_tol));
    const PointValue refined = q(std::polar(r, theta));
    if (!refined.flags.empty() || !std::isfinite(refined.value)) continue;
    const Candidate cand{refined.value, r, theta};
    // Refinement only replaces the winner with a strictly better value.
    if (score(cand.value, mode) > score(winner.value, mode)) {
      winner = cand;
      winner_point = refined;
    }
  }

  out.value = winner.value;
  out.theta = winner.theta;
  out.witness = winner_point.z;
  out.witness_flags = winner_point.flags;
  return out;
}

std::vector<double> interior_grid_radii(const ScanConfig& cfg) {
  std::vector<double> radii;
  if (!cfg.interior_grid) return radii;
  const std::size_t n = cfg.interior_grid->radii;
  const double outer = cfg.outer_radius();
  for (std::size_t i = 1; i < n; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(n);
    if (r < outer) radii.push_back(r);
  }
  radii.push_back(outer);
  return radii;
}

std::vector<GridSample> polar_grid(const Quantity& q, const ScanConfig& cfg, std::size_t workers) {
  const std::vector<double> radii = interior_grid_radii(cfg);
  if (radii.empty()) return {};
  const std::size_t angles = cfg.interior_grid->angles;
  const double step = kTwoPi / static_cast<double>(angles);
  std::vector<GridSample> out(radii.size() * angles);
  parallel_for(radii.size(), workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < angles; ++j) {
      const double theta = step * static_cast<double>(j);
      out[i * angles + j] = GridSample{radii[i], theta, q(std::polar(radii[i], theta))};
    }
  });
  return out;
}

SupEstimate disk_sup(const Quantity& q, const ScanConfig& cfg, ScanMode mode, DiskScanOptions options) {
  cfg.validate();
  const auto& ladder = cfg.radius_ladder;
  std::vector<CircleExtremum> circles(ladder.size());
  parallel_for(ladder.size(), options.workers,
               [&](std::size_t i) { circles[i] = circle_extremum(q, ladder[i], cfg, mode); });

  SupEstimate out;
  Candidate winner{circles[0].value, circles[0].radius, circles[0].theta};
  out.witness = circles[0].witness;
  out.witness_flags = circles[0].witness_flags;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const CircleExtremum& c = circles[i];
    out.per_radius.push_back({c.radius, c.value});
    out.flags |= c.flags;
    const Candidate cand{c.value, c.radius, c.theta};
    if (i > 0 && better(cand, winner, mode)) {
      winner = cand;
      out.witness = c.witness;
      out.witness_flags = c.witness_flags;
    }
    if (i > 0) {
      const double prev = circles[i - 1].value;
      const double slack = kMonotoneTol * std::max(1.0, std::abs(prev));
      const bool ok = mode == ScanMode::Max ? c.value >= prev - slack : c.value <= prev + slack;
      if (!ok) out.monotone = false;
    }
  }

  if (options.interior && cfg.interior_grid) {
    for (const GridSample& s : polar_grid(q, cfg, options.workers)) {
      if (std::isnan(s.value.value)) continue;
      out.flags |= s.value.flags;
      const Candidate cand{s.value.value, s.r, s.theta};
      if (better(cand, winner, mode)) {
        winner = cand;
        out.witness = s.value.z;
        out.witness_flags = s.value.flags;
        out.from_interior_grid = true;
      }
    }
  }

  out.value = winner.value;
  out.radius = winner.radius;
  return out;
}

double crossing_radius(const Quantity& q, double r_pass, double r_fail, double threshold,
                       const ScanConfig& cfg, ScanMode mode, double tol) {
  if (!(r_pass < r_fail)) throw Error(ErrorKind::ContractViolation, "crossing_radius: need r_pass < r_fail");
  auto fails = [&](double r) {
    const double v = circle_extremum(q, r, cfg, mode).value;
    return mode == ScanMode::Min ? v <= threshold : v >= threshold;
  };
  while (r_fail - r_pass > tol) {
    const double mid = 0.5 * (r_pass + r_fail);
    if (fails(mid)) {
      r_fail = mid;
    } else {
      r_pass = mid;
    }
  }
  return 0.5 * (r_pass + r_fail);
}

}  // namespace gft
