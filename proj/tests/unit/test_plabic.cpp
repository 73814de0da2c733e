#include <doctest.h>

#include <json.hpp>

#include "../support.hpp"
#include "soliton/plabic.hpp"

using namespace soliton;
using namespace testing;

namespace {

GoDiagram small_go(Rng& rng, int n_min = 3, int n_max = 9) {
  const int n = uniform(rng, n_min, n_max);
  return random_go(rng, random_shape(rng, uniform(rng, 1, std::min(5, n - 1)), n), 0.45);
}

Subset symmetric_difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TEST_CASE("vertex degrees and colours") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const GoDiagram d = small_go(rng);
    const GeneralizedPlabicGraph g = build_plabic(d);
    CHECK(g.n == d.shape.n);
    CHECK(g.k == d.shape.k);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
      switch (g.vertices[v].kind) {
        case VertexKind::Boundary: CHECK(g.degree(v) == 1); break;
        case VertexKind::Crossing: CHECK(g.degree(v) == 4); break;
        default: CHECK(g.degree(v) == 3); break;
      }
    }
    // Crossings sit at stones, trivalent vertices at the corners of blank boxes.
    for (const PlabicVertex& v : g.vertices) {
      if (v.kind == VertexKind::Boundary) continue;
      REQUIRE(v.box.has_value());
      if (v.kind == VertexKind::Crossing) CHECK(d.at(*v.box) != Mark::Blank);
      else CHECK(d.at(*v.box) == Mark::Blank);
    }
    CHECK(g.count(VertexKind::Black) <= d.count(Mark::Blank));
    CHECK(g.count(VertexKind::White) <= d.count(Mark::Blank));
    CHECK(static_cast<int>(g.boundary.size() + g.isolated.size()) == d.shape.n);
  }
}

TEST_CASE("trips realise v w^{-1}") {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const GoDiagram d = small_go(rng);
    const GeneralizedPlabicGraph g = build_plabic(d);
    CHECK(trip_permutation(g) == decorated_permutation(d).perm);
    for (const auto& [label, colour] : g.isolated) CHECK(decorated_permutation(d).colors.at(label) == colour);
    for (const auto& [label, vertex] : g.boundary) {
      const Trip t = trip(g, label);
      CHECK(g.tail(t.darts.front()) == vertex);
      CHECK(g.vertices[g.head(t.darts.back())].label == t.end);
    }
  }
}

TEST_CASE("region labels") {
  Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const GoDiagram d = small_go(rng, 3, 8);
    const LabeledGoDiagram ld = labeled_go(d);
    const LabeledGraph lg = label_graph(build_plabic(d));
    const Matroid m = matroid_of(point_of(ld, random_params(rng, ld)));
    for (const Subset& label : lg.region_labels()) {
      CHECK(static_cast<int>(label.size()) == d.shape.k);
      CHECK(m.contains(label));
    }
    // Crossing an edge labelled [i,j] swaps i for j.
    for (std::size_t e = 0; e < lg.graph.edges.size(); ++e) {
      const auto [left, right] = lg.edge_faces[e];
      if (left < 0 || right < 0) continue;
      const Subset diff = symmetric_difference(lg.regions[left].label, lg.regions[right].label);
      const auto& lab = lg.edge_labels[e];
      CHECK(diff == Subset{lab[0], lab[1]});
    }
    for (const auto& e : soliton_edges(lg)) {
      CHECK(e.type[0] < e.type[1]);
      for (int c : e.crossings) CHECK(lg.graph.vertices[c].kind == VertexKind::Crossing);
    }
    for (int v = 0; v < static_cast<int>(lg.graph.vertices.size()); ++v) {
      const VertexKind kind = lg.graph.vertices[v].kind;
      if (kind != VertexKind::Black && kind != VertexKind::White) continue;
      const auto idx = trivalent_indices(lg, v);
      CHECK(idx[0] < idx[1]);
      CHECK(idx[1] < idx[2]);
    }
  }
}

TEST_CASE("Gr(4,8) example") {
  const LabeledGraph lg = label_graph(build_plabic(go_from_rows(4, 8, {". o o .", "* . . .", "* o .", ". o o"})));
  CHECK(lg.region_labels().size() == 12);
  CHECK(lg.region_labels().front() == Subset{1, 2, 4, 5});
  CHECK(lg.region_labels().back() == Subset{5, 6, 7, 8});

  const auto doc = nlohmann::json::parse(to_json(lg));
  CHECK(doc["schema"] == "plabic-graph/1");
  CHECK(doc["trip_permutation"] == nlohmann::json({5, 7, 1, 6, 8, 3, 4, 2}));
  CHECK(doc["vertices"].size() == lg.graph.vertices.size());
  CHECK(doc["edges"].size() == lg.graph.edges.size());
  CHECK(to_dot(lg).rfind("graph plabic {", 0) == 0);
}

TEST_CASE("isolated boundary labels") {
  // A white stone: v = w, so both labels are fixed points, coloured by row and column.
  const GoDiagram stone = go_from_rows(1, 2, {"o"});
  const GeneralizedPlabicGraph white = build_plabic(stone);
  CHECK(white.isolated == std::map<int, int>{{1, 1}, {2, -1}});
  CHECK(trip_permutation(white) == Permutation{1, 2});
  CHECK(decorated_permutation(stone).colors == white.isolated);
  // A blank box joins the two labels.
  const GeneralizedPlabicGraph blank = build_plabic(go_from_rows(1, 2, {"."}));
  CHECK(blank.isolated.empty());
  CHECK(trip_permutation(blank) == Permutation{2, 1});
}
