#pragma once

// Tropical contour plots of KP line-soliton solutions. A plot is the corner
// locus of max_J sum_{j in J} theta_j over the bases J of a matroid, either in
// the physical (x,y) frame at a fixed time t or in the rescaled frame
// (xbar, ybar) = (x,y)/t used for t -> -infinity.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "soliton/geometry.hpp"
#include "soliton/godiagram.hpp"
#include "soliton/grassmann.hpp"

namespace soliton {

struct KappaVector {
  std::vector<Rational> values;  // kappa_1 < ... < kappa_n

  int n() const { return static_cast<int>(values.size()); }
  const Rational& operator()(int j) const { return values[j - 1]; }
};

KappaVector make_kappa(std::vector<Rational> values);  // strictly increasing or INVALID_INPUT

// All p-element subset sums distinct for 1 < p <= p_bound (and p < n).
bool is_generic(const KappaVector& kappa, int p_bound);
inline int default_generic_bound(int k, int n) { return std::min(k + 1, n - 1); }
// Smallest-first search for a nearby generic vector keeping the order of the entries.
KappaVector perturb_to_generic(const KappaVector& kappa, int p_bound);

enum class Frame { Physical, Rescaled };

struct TimeFrame {
  Frame frame = Frame::Physical;
  Rational t;

  static TimeFrame at(const Rational& t) { return {Frame::Physical, t}; }
  static TimeFrame minus_infinity() { return {Frame::Rescaled, Rational(-1)}; }
};

// What the contour algorithms rely on: distinct k-subsets J have distinct
// exponents sum_{j in J} theta_j (as affine functions of x and y at the given
// time), so no two of them can tie on an open set. Degenerate vertex
// coincidences are detected while a plot is built.
bool phases_distinct(const KappaVector& kappa, int k, const TimeFrame& tf);
void require_generic(const KappaVector& kappa, int k, const TimeFrame& tf);

// theta_j(x,y,t) in the physical frame, phi_j(xbar,ybar) in the rescaled one.
Rational phase(int j, const KappaVector& kappa, const Point& p, const TimeFrame& tf);

// Bases attaining max sum theta (physical) or min sum phi (rescaled).
std::vector<Subset> dominant_bases_direct(const Matroid& m, const KappaVector& kappa, const Point& p,
                                          const TimeFrame& tf);
std::vector<Subset> dominant_bases_greedy(const Matroid& m, const KappaVector& kappa, const Point& p,
                                          const TimeFrame& tf);
// Both of the above; they must agree.
std::vector<Subset> dominant_bases(const Matroid& m, const KappaVector& kappa, const Point& p, const TimeFrame& tf);

enum class ContourNodeKind { Trivalent, XCrossing, Exit };

struct ContourVertex {
  Point at;
  ContourNodeKind kind = ContourNodeKind::Exit;
  std::vector<int> indices;                 // {i,l,m} or {i,j,k,l}, sorted
  std::vector<std::array<int, 2>> types;    // incident edge types, counterclockwise
  std::vector<int> around;                  // regions between consecutive edges, counterclockwise
};

// A line-soliton piece between two vertices. An end at an Exit vertex lies
// on the bounding box and stands for a ray.
struct ContourEdge {
  std::array<int, 2> type{};
  int from = 0, to = 0;
  int left = -1, right = -1;  // regions, looking from `from` to `to`
};

struct ContourRegion {
  Subset label;
  bool bounded = false;
  std::vector<Point> polygon;  // convex, clipped to the box
};

struct ContourPlot {
  Frame frame = Frame::Physical;
  KappaVector kappa;
  Rational t;
  BBox bbox;
  std::vector<ContourVertex> vertices;
  std::vector<ContourEdge> edges;
  std::vector<ContourRegion> regions;

  std::vector<Subset> region_labels() const;  // sorted
  int region_of(const Subset& label) const;   // -1 when absent
  int count(ContourNodeKind kind) const;
  // Pairs of labels of regions sharing an edge, each pair sorted.
  std::vector<std::array<Subset, 2>> adjacency() const;
  bool is_ray(const ContourEdge& e) const;
  // Region whose polygon holds p strictly inside, -1 on edges or outside the box.
  int locate(const Point& p) const;
};

inline constexpr std::size_t kDefaultBaseBound = 10000;

// Box containing every intersection point of the lines theta_i = theta_j.
BBox auto_bbox(const KappaVector& kappa, const TimeFrame& tf);

ContourPlot tropical_contour(const Matroid& m, const KappaVector& kappa, const TimeFrame& tf,
                             std::optional<BBox> bbox = std::nullopt, std::size_t base_bound = kDefaultBaseBound);

// Built from G_-(D): trivalent vertices at v_{i,l,m}, boundary edges as rays.
ContourPlot contour_minus_infinity(const GoDiagram& d, const KappaVector& kappa);

// v_{i,l,m} in the rescaled frame.
Point trivalent_point(const KappaVector& kappa, int i, int l, int m);

struct UnboundedTypes {
  std::vector<std::array<int, 2>> top;     // y >> 0, right to left
  std::vector<std::array<int, 2>> bottom;  // y << 0, left to right
};

// Read in the physical orientation whatever the plot's frame.
UnboundedTypes unbounded_types(const ContourPlot& plot);

enum class CrossingColor { Black, White };

CrossingColor crossing_color(std::array<int, 2> a, std::array<int, 2> b);

struct Crossing {
  int vertex = 0;
  Point at;
  CrossingColor color = CrossingColor::White;
  std::array<int, 2> first{}, second{};
  std::array<Subset, 4> regions;  // circular order
};

std::vector<Crossing> classify_crossings(const ContourPlot& plot);

// A trivalent vertex is black when exactly one of its edges runs downwards in
// the physical orientation, white when exactly one runs upwards.
CrossingColor trivalent_color(const ContourPlot& plot, int vertex);

// Indices of edges whose two regions carry Pluecker values of opposite sign.
std::vector<int> singular_edges(const ContourPlot& plot, const std::map<Subset, Rational>& pluckers);

struct RegularityResult {
  bool regular = false;
  std::optional<ContourEdge> witness;
  std::array<Subset, 2> witness_regions;
};

RegularityResult regularity_check(const GrassmannPoint& a, const KappaVector& kappa, const Rational& t);

KappaVector ordering_kappa(int n, const Rational& r);

// (kappa_i, kappa_i', kappa_a, kappa_b, kappa_j', kappa_j) = (-4r, -2r, -r, r, 2r, 4r),
// with i' dropped when it equals a and j' when it equals b; other entries are
// interpolated. The result usually needs perturb_to_generic before use.
KappaVector black_stone_kappa(int n, const std::array<int, 6>& idx, const Rational& r);

// Plots at two times of the same sign agree after scaling by t2/t1.
bool self_similar(const ContourPlot& p1, const ContourPlot& p2);

}  // namespace soliton
