#pragma once

#include <complex>
#include <vector>

#include "error.hpp"

namespace leafscope {

// Point of the closed upper half-plane (y >= 0, finite).
struct UhpPoint {
  double x = 0.0;
  double y = 0.0;
};

UhpPoint uhp(double x, double y);
std::complex<double> to_complex(UhpPoint z);
// Clamps imaginary parts in [-1e-12, 0) to 0, rejects anything more negative.
UhpPoint uhp_from_complex(std::complex<double> z);

// delta(z1,z2) = |z1-z2| / |z1-conj(z2)|, in [0,1]; delta(z,z) = 0 even on the
// real axis.
double delta(UhpPoint a, UhpPoint b);
// rho = log((1+delta)/(1-delta)); +infinity when delta = 1.
double rho(UhpPoint a, UhpPoint b);

struct GeodesicArc {
  enum class Kind { vertical, semicircle };
  Kind kind = Kind::vertical;
  UhpPoint a, b;
  double center = 0.0;  // semicircle only
  double radius = 0.0;  // semicircle only
};

GeodesicArc geodesic_through(UhpPoint a, UhpPoint b);
// s=0 -> first endpoint, s=1 -> second. Angle parametrization on semicircles,
// log-height on vertical arcs (linear height when an endpoint is on the axis).
UhpPoint geodesic_point(const GeodesicArc& arc, double s);

// C_P(z0; k): points at constant delta = k from z0. Centers restricted to the
// open half-plane (y > 0); k in [0, 1), k = 0 being the single-point circle.
struct GeodesicCircle {
  UhpPoint center;
  double k = 0.0;
};
GeodesicCircle geodesic_circle(UhpPoint center, double k);

struct EuclideanCircle {
  std::complex<double> center;
  double radius = 0.0;
};
EuclideanCircle geodesic_circle_to_euclidean(const GeodesicCircle& c);

// Klein disk model. Geodesics map to straight chords, ideal (real-axis)
// points land on the unit circle.
struct KleinPoint {
  double u = 0.0;
  double v = 0.0;
};

KleinPoint to_klein(UhpPoint z);
UhpPoint from_klein(KleinPoint p);

// Convex region stored as a Euclidean convex polygon in the Klein model.
// vertices are CCW and strictly convex; a point or a segment degenerate to
// 1 or 2 vertices. boundary_only marks regions whose source set is a curve.
struct ConvexRegion {
  std::vector<KleinPoint> vertices;
  bool boundary_only = false;
};

ConvexRegion hull_of_klein(std::vector<KleinPoint> pts);
ConvexRegion hyperbolic_convex_hull(const std::vector<UhpPoint>& pts);

// Euclidean Klein distance from p to the region; 0 when inside.
double region_gap(const ConvexRegion& r, KleinPoint p);
bool region_contains(const ConvexRegion& r, UhpPoint z, double margin);

ConvexRegion geodesic_bridge(const ConvexRegion& a, const ConvexRegion& b);

// Symmetric Hausdorff distance in the delta pseudo-metric.
double region_hausdorff(const std::vector<UhpPoint>& a, const std::vector<UhpPoint>& b);

// Interior probe points of a region: a grid x grid lattice over the Klein
// bounding box for 2D regions, grid^2 points along the chord for segments,
// the point itself for interior singletons. Probes on the real axis are
// dropped (the interior of a degenerate region is empty there).
std::vector<UhpPoint> region_probe_points(const ConvexRegion& r, int grid);

// Exact min-delta queries against a fixed cloud, bucketed on a Euclidean
// grid. delta(q,p) >= e/(e + 2 q.y) for e = |q-p| bounds the search.
class DeltaGrid {
 public:
  explicit DeltaGrid(std::vector<UhpPoint> pts);
  double min_delta(UhpPoint q) const;
  const std::vector<UhpPoint>& points() const { return pts_; }

 private:
  double cell_low(int c, bool xaxis) const;
  std::vector<UhpPoint> pts_;
  double x0_ = 0.0, y0_ = 0.0, cell_ = 1.0;
  int nx_ = 1, ny_ = 1;
  std::vector<int> cell_start_;   // CSR layout
  std::vector<int> cell_points_;
};

}  // namespace leafscope
