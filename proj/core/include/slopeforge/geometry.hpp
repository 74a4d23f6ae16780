#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "slopeforge/graph.hpp"

namespace slopeforge::geometry {

using Rational = mpq_class;

struct QPoint {
  Rational x;
  Rational y;
  bool operator==(const QPoint& o) const { return x == o.x && y == o.y; }
};

struct DPoint {
  double x = 0;
  double y = 0;
  bool operator==(const DPoint&) const = default;
};

enum class CoordMode { exact, numeric };

// Angular tolerance (radians). Numeric measurements closer than this are the
// same slope; pairs in (tol, 10*tol) are ambiguous and raise PrecisionError.
inline constexpr double kAngleTolerance = 1e-9;
inline constexpr double kAmbiguityFactor = 10.0;
// Distance padding for numeric incidence tests, relative to the bounding-box
// diameter of the drawing.
inline constexpr double kDistanceTolerance = 1e-12;

// Canonical direction: gcd(|dx|,|dy|) = 1 and dy > 0, or (1,0) for horizontal.
struct ExactSlope {
  mpz_class dx;
  mpz_class dy;
  bool operator==(const ExactSlope& o) const { return dx == o.dx && dy == o.dy; }
  bool operator<(const ExactSlope& o) const { return dy != o.dy ? dy < o.dy : dx < o.dx; }
};

// Angle of the line in [0, pi).
struct NumericSlope {
  double angle = 0;
};

// Throws InvalidArgument for coincident points.
ExactSlope slope_of(const QPoint& p, const QPoint& q);
NumericSlope slope_of(const DPoint& p, const DPoint& q);
double to_angle(const ExactSlope& s);

template <typename P>
struct Layout {
  std::vector<P> vertices;
  // At most one bend per edge, keyed by edge index.
  std::map<std::size_t, P> bends;
};
using ExactLayout = Layout<QPoint>;
using NumericLayout = Layout<DPoint>;

// Placement of a graph's vertices, optionally with one bend per edge. A bent
// drawing is read as a straight-line drawing of the subdivision G'. Class
// labels, when present, must cover every edge and apply to straight edges.
struct Drawing {
  std::variant<ExactLayout, NumericLayout> layout;
  std::vector<graph::Edge> edges;
  std::map<std::size_t, int> slope_class;
  std::map<std::size_t, int> length_class;

  CoordMode mode() const noexcept {
    return std::holds_alternative<ExactLayout>(layout) ? CoordMode::exact : CoordMode::numeric;
  }
  std::size_t vertex_count() const noexcept;
  bool has_bends() const noexcept;
  const ExactLayout& exact() const { return std::get<ExactLayout>(layout); }
  const NumericLayout& numeric() const { return std::get<NumericLayout>(layout); }
};

Drawing make_drawing(const graph::Graph& g, std::vector<QPoint> points);
Drawing make_drawing(const graph::Graph& g, std::vector<DPoint> points);

// The graph a drawing depicts: its own edge list, subdivided if bent.
graph::Graph drawn_graph(const Drawing& d);

// Per-segment classification of slopes or lengths. Segments are the edges
// of the drawn graph (G' when bent), in the order of drawn_graph().edges().
struct Classes {
  std::vector<int> of_segment;
  std::size_t count = 0;
  // Representative value per class: angle in [0,pi) or length.
  std::vector<double> representative;
};

// Exact mode: distinct canonical slopes. Numeric mode: tolerance clusters of
// angles (or of labelled classes, after checking each label is consistent).
// Throws PrecisionError on ambiguity-band violations.
Classes classify_slopes(const Drawing& d);
// Exact mode: distinct squared lengths. Numeric mode: clusters of log-length.
Classes classify_lengths(const Drawing& d);

std::size_t count_slopes(const Drawing& d);
std::size_t count_lengths(const Drawing& d);

struct ValidityReport {
  bool valid = true;
  std::vector<std::string> issues;
  // Pairs of drawn-graph vertices placed at the same point.
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_points;
  // (segment index, vertex) where the vertex lies on the segment but is not
  // one of its endpoints.
  std::vector<std::pair<std::size_t, std::size_t>> vertex_on_segment;
  // Edge indices whose bend coincides with a vertex.
  std::vector<std::size_t> bend_on_vertex;
};

// Checks that d is a drawing of g: matching vertex count and edge set,
// distinct points, and no segment meeting a non-endpoint vertex. Violations
// are reported, not thrown.
ValidityReport validate_drawing(const graph::Graph& g, const Drawing& d);

// Pairs of drawn-graph edges sharing a point other than a common endpoint.
std::size_t count_crossings(const graph::Graph& g, const Drawing& d);

// All vertices of g on the convex hull and no three collinear.
bool is_convex_drawing(const graph::Graph& g, const Drawing& d);

// Vertex -> corner of a regular n-gon, injective.
struct PolygonAssignment {
  std::size_t n = 0;
  std::vector<std::size_t> index;
};

PolygonAssignment identity_assignment(std::size_t n);

// |{(index(u)+index(v)) mod n : uv in E}|, purely combinatorial.
std::size_t ngon_slope_count(const graph::Graph& g, const PolygonAssignment& a);

// Corner i of the unit-circle regular n-gon, at angle 2*pi*i/n + rotation.
DPoint polygon_corner(std::size_t n, std::size_t i, double rotation = 0.0);

// Numeric drawing on the regular n-gon (n >= 3) with slope classes
// (index(u)+index(v)) mod n.
Drawing realize_ngon(const graph::Graph& g, const PolygonAssignment& a);

// Angular distance between two line directions, in [0, pi/2].
double angle_gap(double a, double b);

}  // namespace slopeforge::geometry
