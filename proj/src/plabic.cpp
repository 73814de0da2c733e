#include "soliton/plabic.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <set>
#include <sstream>

#include "soliton/errors.hpp"

namespace soliton {

namespace {

// Counterclockwise order of integer directions, starting at the positive x axis.
bool angle_less(const GridPoint& a, const GridPoint& b) {
  auto half = [](const GridPoint& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return static_cast<long>(a.x) * b.y - static_cast<long>(a.y) * b.x > 0;
}

enum class Role { Mid, NE, SW, Center };

struct RawNode {
  GridPoint at;
  Role role = Role::Mid;
  std::optional<Box> box;
  int boundary_label = 0;
  std::vector<int> nbrs;
};

struct RawGraph {
  std::map<GridPoint, int> ids;
  std::vector<RawNode> nodes;
  std::set<std::pair<int, int>> links;

  int node(const GridPoint& p, Role role, std::optional<Box> box) {
    auto [it, fresh] = ids.emplace(p, static_cast<int>(nodes.size()));
    if (fresh) nodes.push_back(RawNode{p, role, box, 0, {}});
    return it->second;
  }
  void connect(int a, int b) {
    if (a == b) return;
    if (links.insert(std::minmax(a, b)).second) {
      nodes[a].nbrs.push_back(b);
      nodes[b].nbrs.push_back(a);
    }
  }
};

struct PipePoint {
  GridPoint at;
  Role role;
  Box box;
};

struct BoxGeometry {
  int x0, y0;  // south-west corner
  explicit BoxGeometry(const Box& b) : x0(4 * (b.col - 1)), y0(-4 * b.row) {}
  GridPoint east() const { return {x0 + 4, y0 + 2}; }
  GridPoint north() const { return {x0 + 2, y0 + 4}; }
  GridPoint west() const { return {x0, y0 + 2}; }
  GridPoint south() const { return {x0 + 2, y0}; }
  GridPoint ne() const { return {x0 + 3, y0 + 3}; }
  GridPoint sw() const { return {x0 + 1, y0 + 1}; }
  GridPoint center() const { return {x0 + 2, y0 + 2}; }
};

enum class Side { East, South };

// Walks a pipe from its south-east start to the north-west border.
std::vector<PipePoint> walk_pipe(const GoDiagram& d, Box box, Side entry) {
  std::vector<PipePoint> pts;
  BoxGeometry g0(box);
  pts.push_back({entry == Side::East ? g0.east() : g0.south(), Role::Mid, box});
  while (true) {
    BoxGeometry g(box);
    bool exit_north;
    if (d.at(box) == Mark::Blank) {
      exit_north = entry == Side::East;
      pts.push_back({exit_north ? g.ne() : g.sw(), exit_north ? Role::NE : Role::SW, box});
    } else {
      exit_north = entry == Side::South;
      pts.push_back({g.center(), Role::Center, box});
    }
    pts.push_back({exit_north ? g.north() : g.west(), Role::Mid, box});
    if (exit_north) {
      if (box.row == 1) break;
      box = {box.row - 1, box.col};
      entry = Side::South;
    } else {
      if (box.col == 1) break;
      box = {box.row, box.col - 1};
      entry = Side::East;
    }
  }
  return pts;
}

}  // namespace

GridPoint GeneralizedPlabicGraph::direction(int d) const {
  const auto& path = edges[d / 2].path;
  GridPoint a = d % 2 == 0 ? path[0] : path[path.size() - 1];
  GridPoint b = d % 2 == 0 ? path[1] : path[path.size() - 2];
  return {b.x - a.x, b.y - a.y};
}

int GeneralizedPlabicGraph::count(VertexKind kind) const {
  int c = 0;
  for (const auto& v : vertices) c += v.kind == kind;
  return c;
}

void GeneralizedPlabicGraph::build_rotation() {
  rotation.assign(vertices.size(), {});
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    rotation[edges[e].u].push_back(2 * e);
    rotation[edges[e].v].push_back(2 * e + 1);
  }
  for (auto& darts : rotation)
    std::sort(darts.begin(), darts.end(), [&](int a, int b) { return angle_less(direction(a), direction(b)); });
}

GeneralizedPlabicGraph build_plabic(const GoDiagram& d) {
  const Shape& s = d.shape;
  GeneralizedPlabicGraph g;
  g.n = s.n;
  g.k = s.k;
  g.shape = s;
  RawGraph raw;

  auto add_pipe = [&](int label, std::optional<Box> start, Side entry, bool horizontal, GridPoint bare) {
    if (!start) {
      g.isolated[label] = horizontal ? 1 : -1;
      g.isolated_at[label] = bare;
      return;
    }
    auto pts = walk_pipe(d, *start, entry);
    auto first = std::find_if(pts.begin(), pts.end(), [](const PipePoint& p) {
      return p.role == Role::NE || p.role == Role::SW;
    });
    if (first == pts.end()) {
      g.isolated[label] = horizontal ? 1 : -1;
      g.isolated_at[label] = pts.back().at;
      return;
    }
    int prev = -1;
    for (auto it = first; it != pts.end(); ++it) {
      int id = raw.node(it->at, it->role, it->box);
      if (prev >= 0) raw.connect(prev, id);
      prev = id;
    }
    raw.nodes[prev].boundary_label = label;
  };

  for (int i = 1; i <= s.k; ++i) {
    int len = s.row_length(i);
    add_pipe(s.row_label(i), len ? std::optional<Box>(Box{i, len}) : std::nullopt, Side::East, true,
             GridPoint{0, -4 * i + 2});
  }
  for (int j = 1; j <= s.width(); ++j) {
    int len = s.col_length(j);
    add_pipe(s.col_label(j), len ? std::optional<Box>(Box{len, j}) : std::nullopt, Side::South, false,
             GridPoint{4 * j - 2, 0});
  }
  for (const Box& b : s.boxes()) {
    if (d.at(b) != Mark::Blank) continue;
    BoxGeometry geo(b);
    raw.connect(raw.node(geo.ne(), Role::NE, b), raw.node(geo.sw(), Role::SW, b));
  }

  auto is_real = [&](int id) {
    const RawNode& r = raw.nodes[id];
    if (r.boundary_label) return true;
    if (r.role == Role::NE || r.role == Role::SW) return r.nbrs.size() == 3;
    if (r.role == Role::Center) return r.nbrs.size() == 4;
    return false;
  };

  std::map<int, int> real_id;
  for (int id = 0; id < static_cast<int>(raw.nodes.size()); ++id) {
    const RawNode& r = raw.nodes[id];
    if (r.boundary_label && r.nbrs.size() != 1)
      throw DomainError(ErrorCode::MalformedGraph, "boundary vertex of degree other than one");
    if (!is_real(id)) {
      if (r.nbrs.size() != 2) throw DomainError(ErrorCode::MalformedGraph, "dangling pipe fragment");
      continue;
    }
    PlabicVertex v;
    v.at = r.at;
    v.box = r.box;
    v.label = r.boundary_label;
    if (r.boundary_label)
      v.kind = VertexKind::Boundary;
    else if (r.role == Role::NE)
      v.kind = VertexKind::White;
    else if (r.role == Role::SW)
      v.kind = VertexKind::Black;
    else
      v.kind = VertexKind::Crossing;
    real_id[id] = static_cast<int>(g.vertices.size());
    if (v.label) g.boundary[v.label] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(v);
  }

  std::set<std::pair<int, int>> used;
  for (const auto& [start, vid] : real_id) {
    for (int nb : raw.nodes[start].nbrs) {
      if (used.count({start, nb})) continue;
      PlabicEdge e;
      e.u = vid;
      e.path.push_back(raw.nodes[start].at);
      int prev = start, cur = nb;
      used.insert({start, nb});
      while (!is_real(cur)) {
        e.path.push_back(raw.nodes[cur].at);
        const auto& nbrs = raw.nodes[cur].nbrs;
        int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
      }
      e.path.push_back(raw.nodes[cur].at);
      used.insert({cur, prev});
      e.v = real_id.at(cur);
      g.edges.push_back(std::move(e));
    }
  }
  g.build_rotation();
  return g;
}

Trip trip(const GeneralizedPlabicGraph& g, int i) {
  Trip t;
  t.start = i;
  if (g.isolated.count(i)) {
    t.end = i;
    return t;
  }
  auto it = g.boundary.find(i);
  if (it == g.boundary.end()) throw DomainError(ErrorCode::MalformedGraph, "no boundary vertex " + std::to_string(i));
  int dart = g.rotation[it->second].at(0);
  const std::size_t limit = 4 * g.edges.size() + 4;
  while (true) {
    t.darts.push_back(dart);
    if (t.darts.size() > limit) throw DomainError(ErrorCode::MalformedGraph, "trip does not terminate");
    int v = g.head(dart);
    const PlabicVertex& pv = g.vertices[v];
    if (pv.kind == VertexKind::Boundary) {
      t.end = pv.label;
      return t;
    }
    const auto& rot = g.rotation[v];
    const int deg = static_cast<int>(rot.size());
    int idx = static_cast<int>(std::find(rot.begin(), rot.end(), reverse_dart(dart)) - rot.begin());
    switch (pv.kind) {
      case VertexKind::Black: dart = rot[(idx + 1) % deg]; break;        // sharpest right turn
      case VertexKind::White: dart = rot[(idx + deg - 1) % deg]; break;  // sharpest left turn
      case VertexKind::Crossing: dart = rot[(idx + 2) % deg]; break;
      case VertexKind::Boundary: break;
    }
  }
}

Permutation trip_permutation(const GeneralizedPlabicGraph& g) {
  Permutation p(g.n);
  for (int i = 1; i <= g.n; ++i) p[i - 1] = trip(g, i).end;
  if (!is_permutation(p)) throw DomainError(ErrorCode::MalformedGraph, "trips do not pair boundary vertices");
  return p;
}

std::vector<Subset> LabeledGraph::region_labels() const {
  std::set<Subset> s;
  for (const auto& r : regions) s.insert(r.label);
  return {s.begin(), s.end()};
}

namespace {

// Plabic graph plus the disk boundary, for face traversal.
struct FaceGraph {
  std::vector<GridPoint> pos;
  std::vector<std::array<int, 2>> ends;
  std::vector<std::vector<GridPoint>> paths;
  std::vector<std::vector<int>> rotation;

  int add_node(const GridPoint& p) {
    pos.push_back(p);
    return static_cast<int>(pos.size()) - 1;
  }
  int head(int d) const { return d % 2 == 0 ? ends[d / 2][1] : ends[d / 2][0]; }
  GridPoint dir(int d) const {
    const auto& p = paths[d / 2];
    GridPoint a = d % 2 == 0 ? p[0] : p[p.size() - 1];
    GridPoint b = d % 2 == 0 ? p[1] : p[p.size() - 2];
    return {b.x - a.x, b.y - a.y};
  }
  void finish() {
    rotation.assign(pos.size(), {});
    for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
      rotation[ends[e][0]].push_back(2 * e);
      rotation[ends[e][1]].push_back(2 * e + 1);
    }
    for (auto& r : rotation) std::sort(r.begin(), r.end(), [&](int a, int b) { return angle_less(dir(a), dir(b)); });
  }
  int next_in_face(int d) const {
    const auto& rot = rotation[head(d)];
    int deg = static_cast<int>(rot.size());
    int idx = static_cast<int>(std::find(rot.begin(), rot.end(), reverse_dart(d)) - rot.begin());
    return rot[(idx + deg - 1) % deg];
  }
  std::vector<GridPoint> dart_points(int d) const {
    auto p = paths[d / 2];
    if (d % 2) std::reverse(p.begin(), p.end());
    return p;
  }
};

std::vector<GridPoint> outline(const Shape& s) {
  std::vector<GridPoint> pts;
  const int r = static_cast<int>(s.rows.size());
  for (int x = 0; x <= 4 * s.rows[0]; x += 2) pts.push_back({x, 0});
  for (int i = 1; i <= r; ++i) {
    int x = 4 * s.row_length(i);
    for (int y = -4 * (i - 1) - 2; y >= -4 * i; y -= 2) pts.push_back({x, y});
    int next = 4 * s.row_length(i + 1);
    for (int xx = x - 2; xx >= next; xx -= 2) pts.push_back({xx, -4 * i});
  }
  for (int y = -4 * r + 2; y < 0; y += 2) pts.push_back({0, y});
  return pts;
}

}  // namespace

LabeledGraph label_graph(const GeneralizedPlabicGraph& g) {
  LabeledGraph out;
  out.graph = g;
  const int ne = static_cast<int>(g.edges.size());

  std::vector<Trip> trips(g.n + 1);
  std::vector<std::vector<std::pair<int, int>>> traversals(ne);  // (trip, dart)
  for (int i = 1; i <= g.n; ++i) {
    trips[i] = trip(g, i);
    for (int dart : trips[i].darts) traversals[dart_edge(dart)].push_back({i, dart});
  }
  out.edge_labels.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const auto& tr = traversals[e];
    if (tr.size() != 2 || tr[0].second == tr[1].second)
      throw DomainError(ErrorCode::MalformedGraph, "edge not traversed once in each direction");
    out.edge_labels[e] = {std::min(tr[0].first, tr[1].first), std::max(tr[0].first, tr[1].first)};
  }

  Subset plus;
  for (const auto& [label, colour] : g.isolated)
    if (colour == 1) plus.push_back(label);

  PlabicRegion whole;
  whole.label = plus;
  if (g.vertices.empty()) {
    if (static_cast<int>(plus.size()) != g.k)
      throw DomainError(ErrorCode::InconsistentLabels, "isolated labels do not form a k-subset");
    out.regions.push_back(whole);
    return out;
  }

  const Shape& shape = g.shape;

  FaceGraph fg;
  for (const auto& v : g.vertices) fg.add_node(v.at);
  for (const auto& e : g.edges) {
    fg.ends.push_back({e.u, e.v});
    fg.paths.push_back(e.path);
  }
  std::map<GridPoint, int> at_point;
  for (const auto& [label, vid] : g.boundary) at_point[g.vertices[vid].at] = vid;
  auto pts = outline(shape);
  std::vector<int> ring;
  for (const auto& p : pts) {
    auto it = at_point.find(p);
    ring.push_back(it != at_point.end() ? it->second : fg.add_node(p));
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    int a = ring[i], b = ring[(i + 1) % ring.size()];
    fg.ends.push_back({a, b});
    fg.paths.push_back({fg.pos[a], fg.pos[b]});
  }
  fg.finish();

  const int ndarts = 2 * static_cast<int>(fg.ends.size());
  std::vector<int> face_of(ndarts, -1);
  std::vector<std::vector<int>> faces;
  for (int d = 0; d < ndarts; ++d) {
    if (face_of[d] >= 0) continue;
    std::vector<int> cycle;
    for (int c = d; face_of[c] < 0; c = fg.next_in_face(c)) {
      face_of[c] = static_cast<int>(faces.size());
      cycle.push_back(c);
    }
    faces.push_back(cycle);
  }
  std::vector<long> area(faces.size(), 0);
  std::vector<std::vector<GridPoint>> polygons(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int d : faces[f]) {
      auto dp = fg.dart_points(d);
      polygons[f].insert(polygons[f].end(), dp.begin(), dp.end() - 1);
    }
    const auto& poly = polygons[f];
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % poly.size()];
      area[f] += static_cast<long>(a.x) * b.y - static_cast<long>(b.x) * a.y;
    }
  }
  std::map<int, int> region_of_face;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (area[f] > 0) region_of_face[static_cast<int>(f)] = static_cast<int>(region_of_face.size());
  if (faces.size() - region_of_face.size() != 1)
    throw DomainError(ErrorCode::MalformedGraph, "embedding has more than one outer face");
  const int nreg = static_cast<int>(region_of_face.size());
  auto region_left = [&](int dart) {
    auto it = region_of_face.find(face_of[dart]);
    return it == region_of_face.end() ? -1 : it->second;
  };

  std::vector<Subset> labels(nreg, plus);
  for (int i = 1; i <= g.n; ++i) {
    if (trips[i].darts.empty()) continue;
    std::set<int> on_trip;
    for (int dart : trips[i].darts) on_trip.insert(dart_edge(dart));
    std::vector<bool> left(nreg, false), right(nreg, false);
    std::deque<int> queue;
    for (int dart : trips[i].darts) {
      int l = region_left(dart), r = region_left(reverse_dart(dart));
      if (l >= 0 && !left[l]) {
        left[l] = true;
        queue.push_back(l);
      }
      if (r >= 0) right[r] = true;
    }
    std::vector<std::vector<int>> adj(nreg);
    for (int e = 0; e < ne; ++e) {
      if (on_trip.count(e)) continue;
      int a = region_left(2 * e), b = region_left(2 * e + 1);
      if (a >= 0 && b >= 0) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int h : adj[f])
        if (!left[h]) {
          left[h] = true;
          queue.push_back(h);
        }
    }
    for (int f = 0; f < nreg; ++f) {
      if (left[f] && right[f])
        throw DomainError(ErrorCode::InconsistentLabels, "trip " + std::to_string(i) + " does not separate the disk");
      if (left[f]) labels[f].push_back(i);
    }
  }

  out.regions.resize(nreg);
  for (const auto& [f, r] : region_of_face) {
    std::sort(labels[r].begin(), labels[r].end());
    if (static_cast<int>(labels[r].size()) != g.k)
      throw DomainError(ErrorCode::InconsistentLabels, "region label is not a k-subset");
    out.regions[r].label = labels[r];
    out.regions[r].polygon = polygons[f];
    for (int d : faces[f]) out.regions[r].darts.push_back(dart_edge(d) < ne ? d : -1);
  }
  out.edge_faces.resize(ne);
  for (int e = 0; e < ne; ++e) {
    out.edge_faces[e] = {region_left(2 * e), region_left(2 * e + 1)};
    // The trip along dart 2e keeps its label on the left.
    int along = -1;
    for (const auto& [t, dart] : traversals[e])
      if (dart == 2 * e) along = t;
    int other = out.edge_labels[e][0] == along ? out.edge_labels[e][1] : out.edge_labels[e][0];
    const Subset& l = labels[out.edge_faces[e][0]];
    const Subset& r = labels[out.edge_faces[e][1]];
    Subset l_minus, r_minus;
    std::set_difference(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(l_minus));
    std::set_difference(r.begin(), r.end(), l.begin(), l.end(), std::back_inserter(r_minus));
    if (l_minus != Subset{along} || r_minus != Subset{other})
      throw DomainError(ErrorCode::InconsistentLabels, "regions across an edge do not differ by its labels");
  }
  return out;
}

std::vector<SolitonEdge> soliton_edges(const LabeledGraph& lg) {
  const auto& g = lg.graph;
  std::vector<SolitonEdge> out;
  std::set<int> used;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    if (g.vertices[v].kind == VertexKind::Crossing) continue;
    for (int dart : g.rotation[v]) {
      if (used.count(dart)) continue;
      SolitonEdge se;
      se.from = v;
      se.type = lg.edge_labels[dart_edge(dart)];
      int d = dart;
      while (true) {
        used.insert(d);
        int h = g.head(d);
        if (g.vertices[h].kind != VertexKind::Crossing) {
          used.insert(reverse_dart(d));
          se.to = h;
          break;
        }
        se.crossings.push_back(h);
        const auto& rot = g.rotation[h];
        int idx = static_cast<int>(std::find(rot.begin(), rot.end(), reverse_dart(d)) - rot.begin());
        used.insert(reverse_dart(d));
        d = rot[(idx + 2) % 4];
        if (lg.edge_labels[dart_edge(d)] != se.type)
          throw DomainError(ErrorCode::InconsistentLabels, "soliton changes type at an X-crossing");
      }
      out.push_back(se);
    }
  }
  return out;
}

std::array<int, 3> trivalent_indices(const LabeledGraph& lg, int vertex) {
  std::set<int> idx;
  for (int dart : lg.graph.rotation[vertex])
    for (int t : lg.edge_labels[dart_edge(dart)]) idx.insert(t);
  if (idx.size() != 3) throw DomainError(ErrorCode::InconsistentLabels, "trivalent vertex without resonant labels");
  auto it = idx.begin();
  return {*it, *std::next(it), *std::next(it, 2)};
}

namespace {

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Boundary: return "boundary";
    case VertexKind::Black: return "black";
    case VertexKind::White: return "white";
    case VertexKind::Crossing: return "crossing";
  }
  return "";
}

}  // namespace

std::string to_json(const LabeledGraph& lg) {
  using nlohmann::ordered_json;
  const auto& g = lg.graph;
  ordered_json j;
  j["schema"] = "plabic-graph/1";
  j["k"] = g.k;
  j["n"] = g.n;
  j["trip_permutation"] = trip_permutation(g);
  ordered_json verts = ordered_json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& pv = g.vertices[v];
    ordered_json jv;
    jv["id"] = v;
    jv["kind"] = kind_name(pv.kind);
    jv["x"] = pv.at.x;
    jv["y"] = pv.at.y;
    if (pv.label) jv["label"] = pv.label;
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  ordered_json iso = ordered_json::array();
  for (const auto& [label, colour] : g.isolated) iso.push_back({{"label", label}, {"color", colour}});
  j["isolated"] = iso;
  ordered_json es = ordered_json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    ordered_json je;
    je["u"] = g.edges[e].u;
    je["v"] = g.edges[e].v;
    je["labels"] = {lg.edge_labels[e][0], lg.edge_labels[e][1]};
    ordered_json path = ordered_json::array();
    for (const auto& p : g.edges[e].path) path.push_back({p.x, p.y});
    je["path"] = path;
    es.push_back(je);
  }
  j["edges"] = es;
  ordered_json rs = ordered_json::array();
  for (const Subset& s : lg.region_labels()) rs.push_back(s);
  j["regions"] = rs;
  return j.dump(2) + "\n";
}

std::string to_dot(const LabeledGraph& lg) {
  const auto& g = lg.graph;
  std::ostringstream os;
  os << "graph plabic {\n  node [fontsize=10];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& pv = g.vertices[v];
    os << "  v" << v << " [pos=\"" << pv.at.x << "," << pv.at.y << "!\"";
    switch (pv.kind) {
      case VertexKind::Boundary: os << ", shape=plaintext, label=\"" << pv.label << "\""; break;
      case VertexKind::Black: os << ", shape=circle, style=filled, fillcolor=black, label=\"\", width=0.15"; break;
      case VertexKind::White: os << ", shape=circle, label=\"\", width=0.15"; break;
      case VertexKind::Crossing: os << ", shape=point, width=0.05"; break;
    }
    os << "];\n";
  }
  for (const auto& [label, colour] : g.isolated) {
    const auto& p = g.isolated_at.at(label);
    os << "  b" << label << " [pos=\"" << p.x << "," << p.y << "!\", shape=plaintext, label=\"" << label
       << (colour > 0 ? " (+1)" : " (-1)") << "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    os << "  v" << g.edges[e].u << " -- v" << g.edges[e].v << " [label=\"" << lg.edge_labels[e][0] << ","
       << lg.edge_labels[e][1] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace soliton
