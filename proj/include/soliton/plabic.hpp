#pragma once

// Generalized plabic graphs: bicoloured planar graphs in a disk whose edges
// may cross at X-crossings. The graph attached to a Go-diagram is drawn on
// the pipe dream of the diagram, on an integer grid where box (i,j) spans
// x in [4(j-1), 4j] and y in [-4i, -4(i-1)].

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soliton/godiagram.hpp"
#include "soliton/grassmann.hpp"

namespace soliton {

struct GridPoint {
  int x = 0, y = 0;
  auto operator<=>(const GridPoint&) const = default;
};

enum class VertexKind { Boundary, Black, White, Crossing };

struct PlabicVertex {
  VertexKind kind = VertexKind::Boundary;
  GridPoint at;
  int label = 0;  // boundary label, 0 for internal vertices
  std::optional<Box> box;
};

struct PlabicEdge {
  int u = 0, v = 0;
  std::vector<GridPoint> path;  // polyline from u to v
};

// Dart 2e runs u -> v along edge e, dart 2e+1 runs v -> u.
inline int dart_edge(int d) { return d / 2; }
inline int reverse_dart(int d) { return d ^ 1; }

struct Trip {
  int start = 0, end = 0;
  std::vector<int> darts;
};

class GeneralizedPlabicGraph {
 public:
  int n = 0, k = 0;
  Shape shape;  // the drawing lives inside this Young diagram
  std::vector<PlabicVertex> vertices;
  std::vector<PlabicEdge> edges;
  std::vector<std::vector<int>> rotation;  // outgoing darts, counterclockwise
  std::map<int, int> boundary;             // label -> vertex id (non-isolated)
  std::map<int, int> isolated;             // label -> colour +1 / -1
  std::map<int, GridPoint> isolated_at;    // drawing position of isolated labels

  int tail(int d) const { return d % 2 == 0 ? edges[d / 2].u : edges[d / 2].v; }
  int head(int d) const { return d % 2 == 0 ? edges[d / 2].v : edges[d / 2].u; }
  // Direction of the first step of dart d, leaving tail(d).
  GridPoint direction(int d) const;
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  int count(VertexKind kind) const;

  // Recomputes `rotation` from the drawn geometry.
  void build_rotation();
};

GeneralizedPlabicGraph build_plabic(const GoDiagram& d);

Trip trip(const GeneralizedPlabicGraph& g, int i);
Permutation trip_permutation(const GeneralizedPlabicGraph& g);

struct PlabicRegion {
  Subset label;
  std::vector<int> darts;  // boundary cycle, face on the left; outline arcs are -1
  std::vector<GridPoint> polygon;
};

struct LabeledGraph {
  GeneralizedPlabicGraph graph;
  std::vector<std::array<int, 2>> edge_labels;  // sorted pair of trip indices
  std::vector<PlabicRegion> regions;
  std::vector<std::array<int, 2>> edge_faces;  // region left of dart 2e, region left of dart 2e+1 (-1 outside)

  std::vector<Subset> region_labels() const;  // sorted, deduplicated
};

LabeledGraph label_graph(const GeneralizedPlabicGraph& g);

// An edge of the soliton graph: a maximal chain of plabic edges passing
// straight through X-crossings. Ends are trivalent or boundary vertices.
struct SolitonEdge {
  int from = 0, to = 0;  // plabic vertex ids
  std::array<int, 2> type{};  // i < j
  std::vector<int> crossings;  // X-crossing vertex ids passed on the way
};

std::vector<SolitonEdge> soliton_edges(const LabeledGraph& lg);

// Indices {i,l,m} of a trivalent vertex, from its incident edge labels.
std::array<int, 3> trivalent_indices(const LabeledGraph& lg, int vertex);

std::string to_json(const LabeledGraph& lg);
std::string to_dot(const LabeledGraph& lg);

}  // namespace soliton
