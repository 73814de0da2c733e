#pragma once

// Exact planar subdivisions induced by a finite set of rational segments.

#include <array>
#include <vector>

#include "soliton/rational.hpp"

namespace soliton {

struct Point {
  Rational x, y;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

// Counterclockwise angular order of nonzero directions from the positive x axis.
bool angle_less(const Point& a, const Point& b);

struct BBox {
  Rational xmin, xmax, ymin, ymax;
  bool on_border(const Point& p) const { return p.x == xmin || p.x == xmax || p.y == ymin || p.y == ymax; }
  bool contains(const Point& p) const { return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax; }
};

struct Segment {
  Point a, b;
  int tag = 0;
};

// Portion of the line a*x + b*y + c = 0 inside the box, if it has positive length.
bool clip_line(const Rational& a, const Rational& b, const Rational& c, const BBox& box, Segment& out);

// Darts follow the plabic convention: 2e runs ends[e][0] -> ends[e][1].
struct Subdivision {
  std::vector<Point> nodes;
  std::vector<std::array<int, 2>> ends;
  std::vector<int> tag;                    // tag of the input segment carrying each edge
  std::vector<std::vector<int>> rotation;  // outgoing darts, counterclockwise
  std::vector<int> face_of;                // face on the left of each dart
  std::vector<std::vector<int>> faces;
  std::vector<Rational> twice_area;
  int outer = -1;

  int tail(int d) const { return d % 2 == 0 ? ends[d / 2][0] : ends[d / 2][1]; }
  int head(int d) const { return d % 2 == 0 ? ends[d / 2][1] : ends[d / 2][0]; }
  Point direction(int d) const { return nodes[head(d)] - nodes[tail(d)]; }
};

// Splits the segments at every intersection and traces the faces.
// Collinear overlaps are rejected as NON_GENERIC.
Subdivision build_subdivision(const std::vector<Segment>& segments);

std::vector<Point> convex_hull(std::vector<Point> pts);

}  // namespace soliton
