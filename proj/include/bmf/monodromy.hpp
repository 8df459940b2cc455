#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bmf/braid.hpp"
#include "bmf/factorization.hpp"
#include "bmf/polynomial.hpp"

namespace bmf {

struct MonodromyOptions {
  // Critical values closer than this (relative) are one critical value.
  double cluster_tol = 1e-6;
  // Relative tolerance when matching tracked endpoints with a fiber.
  double match_tol = 1e-8;
  // Projection-rotation retries when a crossing is not generic.
  int retries = 8;
  // Seeds the rotation angles tried after the unrotated projection.
  std::uint64_t seed = 1;
  int threads = 1;
  // Check that the product of the factors is the full twist.
  bool validate = true;
  // Try to write each factor as a conjugated half-twist power.
  bool promote = true;
  // Smallest accepted step, as a fraction of a path segment.
  double min_step = 1e-10;
};

struct CriticalValue {
  cplx x;
  int multiplicity = 1;   // root multiplicity in the discriminant
  int local_degree = 1;   // number of roots meeting at the singular point
};

struct CriticalData {
  std::vector<CriticalValue> values;  // sorted by (real, imaginary)
  UniPoly discriminant;
  cplx base;                          // base point u
  double radius = 1.0;                // |u|
  std::vector<cplx> fiber;            // roots over u, sorted by (real, imaginary)
};

// Segment of a path in the x-plane; Arc runs counterclockwise when sweep > 0.
struct PathSegment {
  enum class Kind { Line, Arc } kind = Kind::Line;
  cplx a, b;             // line endpoints
  cplx center;           // arc data
  double radius = 0;
  double theta0 = 0;
  double sweep = 0;

  static PathSegment line(cplx from, cplx to);
  static PathSegment arc(cplx center, double radius, double theta0, double sweep);
  cplx at(double t) const;
  cplx start() const { return at(0.0); }
  cplx end() const { return at(1.0); }
};

using Path = std::vector<PathSegment>;
Path reversed(const Path& path);
Path concat(const Path& a, const Path& b);

struct GBaseLoop {
  std::size_t critical;  // index into CriticalData::values
  Path tail;             // from u to the circle
  Path circle;           // counterclockwise, closed
  double rho = 0;        // circle radius
  Path loop() const;     // tail, circle, reversed tail
};

struct GBase {
  cplx base;
  std::vector<GBaseLoop> loops;  // in g-base order
};

// Roots of each strand at each accepted sample; samples[k][s] is strand s.
struct Trajectory {
  std::vector<double> t;
  std::vector<std::vector<cplx>> samples;
  int steps = 0;
  double min_separation = 0;
};

CriticalData critical_values(const BivariatePoly& f, const MonodromyOptions& opts = {});
GBase build_gbase(const CriticalData& crit, const MonodromyOptions& opts = {});

Trajectory track_roots(const BivariatePoly& f, const Path& path, const std::vector<cplx>& start,
                       const MonodromyOptions& opts = {});

// Braid of the motion, strands ordered by (real, imaginary) after rotating the
// plane by -angle. Each exchange of real-part neighbours emits X_k (k the left
// position) with sign +1 when the strand moving left has the larger imaginary
// part. Throws NumericalError on a non-generic crossing.
BraidWord braid_from_motion(const Trajectory& traj, double angle = 0.0);

struct LoopReport {
  cplx critical;
  int disc_multiplicity = 0;
  int local_degree = 0;
  int steps = 0;
  double min_separation = 0;
  // classify_positive's rho when the factor was promoted.
  std::optional<int> rho;
  // For local degree 2: promoted rho equals the discriminant multiplicity.
  std::optional<bool> consistent;
};

struct MonodromyResult {
  CriticalData crit;
  GBase gbase;
  Factorization factorization{2, {}};
  std::vector<LoopReport> loops;
  std::vector<Trajectory> tails;    // u -> circle start
  std::vector<Trajectory> circles;  // around the critical value
  double projection_angle = 0;
  double min_separation = 0;
  int max_steps = 0;
  bool validated = false;
};

MonodromyResult braid_monodromy(const BivariatePoly& f, const MonodromyOptions& opts = {});

// Braid of an arbitrary closed path based at u, read in the same frame as the
// factorization in `result`.
BraidWord loop_braid(const BivariatePoly& f, const MonodromyResult& result, const Path& loop,
                     const MonodromyOptions& opts = {});

// y^3 + sum_{i+j<=3, j<3} c_ij x^i y^j with seeded random complex
// coefficients, redrawn until the discriminant has six simple roots.
BivariatePoly random_smooth_cubic(std::uint64_t seed);

}  // namespace bmf
