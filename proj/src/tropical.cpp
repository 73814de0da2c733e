#include "soliton/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "soliton/errors.hpp"
#include "soliton/plabic.hpp"

namespace soliton {

KappaVector make_kappa(std::vector<Rational> values) {
  if (values.empty()) throw DomainError(ErrorCode::InvalidInput, "empty kappa vector");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i - 1] < values[i])) throw DomainError(ErrorCode::InvalidInput, "kappa must be strictly increasing");
  return KappaVector{std::move(values)};
}

bool is_generic(const KappaVector& kappa, int p_bound) {
  const int n = kappa.n();
  for (int p = 2; p <= p_bound && p < n; ++p) {
    std::set<Rational> sums;
    std::size_t count = 0;
    for (const Subset& s : k_subsets(n, p)) {
      Rational sum(0);
      for (int j : s) sum += kappa(j);
      sums.insert(sum);
      ++count;
    }
    if (sums.size() != count) return false;
  }
  return true;
}

KappaVector perturb_to_generic(const KappaVector& kappa, int p_bound) {
  if (is_generic(kappa, p_bound)) return kappa;
  const int n = kappa.n();
  Rational gap(1);
  for (int j = 2; j <= n; ++j) gap = std::min(gap, kappa(j) - kappa(j - 1));
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  Rational eps = gap / 4;
  for (int attempt = 0; attempt < 60; ++attempt, eps /= 3) {
    KappaVector out = kappa;
    for (int j = 1; j <= n; ++j) out.values[j - 1] += eps / primes[(j - 1 + attempt) % 20] / (j + attempt);
    if (is_generic(out, p_bound)) return out;
  }
  throw DomainError(ErrorCode::NonGeneric, "no generic perturbation found");
}

namespace {

// Affine weight w_j = alpha_j x + beta_j y + gamma_j; every frame maximises the sum.
struct Weight {
  Rational alpha, beta, gamma;
};

Weight weight_of(int j, const KappaVector& kappa, const TimeFrame& tf) {
  const Rational& k = kappa(j);
  if (tf.frame == Frame::Physical) return {k, k * k, k * k * k * tf.t};
  return {-k, -k * k, -k * k * k};
}

std::vector<Rational> element_weights(const KappaVector& kappa, const Point& p, const TimeFrame& tf) {
  std::vector<Rational> w(kappa.n() + 1);
  for (int j = 1; j <= kappa.n(); ++j) {
    Weight c = weight_of(j, kappa, tf);
    w[j] = c.alpha * p.x + c.beta * p.y + c.gamma;
  }
  return w;
}

Rational subset_sum(const Subset& s, const std::vector<Rational>& w) {
  Rational sum(0);
  for (int j : s) sum += w[j];
  return sum;
}

std::vector<Subset> argmax_bases(const Matroid& m, const std::vector<Rational>& w) {
  std::vector<Subset> best;
  Rational top(0);
  for (const Subset& b : m.bases) {
    Rational s = subset_sum(b, w);
    if (best.empty() || s > top) {
      best = {b};
      top = s;
    } else if (s == top) {
      best.push_back(b);
    }
  }
  return best;
}

void check_frame(const KappaVector& kappa, const Matroid& m) {
  if (kappa.n() != m.n) throw DomainError(ErrorCode::SizeMismatch, "kappa length differs from n");
}

}  // namespace

bool phases_distinct(const KappaVector& kappa, int k, const TimeFrame& tf) {
  std::set<std::array<Rational, 3>> seen;
  std::size_t count = 0;
  for (const Subset& s : k_subsets(kappa.n(), k)) {
    std::array<Rational, 3> sum{Rational(0), Rational(0), Rational(0)};
    for (int j : s) {
      Weight w = weight_of(j, kappa, tf);
      sum[0] += w.alpha;
      sum[1] += w.beta;
      sum[2] += w.gamma;
    }
    seen.insert(sum);
    ++count;
  }
  return seen.size() == count;
}

void require_generic(const KappaVector& kappa, int k, const TimeFrame& tf) {
  if (!phases_distinct(kappa, k, tf))
    throw DomainError(ErrorCode::NonGeneric, "two k-subsets have identical exponents");
}

Rational phase(int j, const KappaVector& kappa, const Point& p, const TimeFrame& tf) {
  if (j < 1 || j > kappa.n()) throw DomainError(ErrorCode::InvalidInput, "phase index out of range");
  const Rational& k = kappa(j);
  if (tf.frame == Frame::Physical) return k * p.x + k * k * p.y + k * k * k * tf.t;
  return k * p.x + k * k * p.y + k * k * k;
}

std::vector<Subset> dominant_bases_direct(const Matroid& m, const KappaVector& kappa, const Point& p,
                                          const TimeFrame& tf) {
  check_frame(kappa, m);
  auto best = argmax_bases(m, element_weights(kappa, p, tf));
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<Subset> dominant_bases_greedy(const Matroid& m, const KappaVector& kappa, const Point& p,
                                          const TimeFrame& tf) {
  check_frame(kappa, m);
  const auto w = element_weights(kappa, p, tf);
  std::vector<int> order(m.n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
  std::vector<std::vector<int>> groups;
  for (int j : order) {
    if (groups.empty() || w[groups.back().front()] != w[j]) groups.emplace_back();
    groups.back().push_back(j);
  }

  auto with = [](Subset s, const std::vector<int>& extra) {
    s.insert(s.end(), extra.begin(), extra.end());
    std::sort(s.begin(), s.end());
    return s;
  };
  // Within a tie group the greedy algorithm may reach any basis of the
  // contracted restriction, so branch over all independent choices of full rank.
  std::set<Subset> outcomes;
  std::vector<std::pair<Subset, std::size_t>> stack{{Subset{}, 0}};
  while (!stack.empty()) {
    auto [s, g] = stack.back();
    stack.pop_back();
    if (g == groups.size() || static_cast<int>(s.size()) == m.k) {
      if (static_cast<int>(s.size()) == m.k) outcomes.insert(s);
      continue;
    }
    const auto& group = groups[g];
    std::vector<std::vector<int>> choices;
    int best = -1;
    // Enumerate subsets of the group by bitmask, keeping the largest independent ones.
    const int gs = static_cast<int>(group.size());
    if (gs > 20) throw DomainError(ErrorCode::BoundExceeded, "tie group too large for greedy enumeration");
    for (unsigned mask = 0; mask < (1u << gs); ++mask) {
      std::vector<int> pick;
      for (int b = 0; b < gs; ++b)
        if (mask & (1u << b)) pick.push_back(group[b]);
      const int size = static_cast<int>(pick.size());
      if (size < best || static_cast<int>(s.size()) + size > m.k) continue;
      if (!m.independent(with(s, pick))) continue;
      if (size > best) {
        best = size;
        choices.clear();
      }
      choices.push_back(pick);
    }
    for (const auto& pick : choices) stack.push_back({with(s, pick), g + 1});
  }
  return {outcomes.begin(), outcomes.end()};
}

std::vector<Subset> dominant_bases(const Matroid& m, const KappaVector& kappa, const Point& p, const TimeFrame& tf) {
  auto direct = dominant_bases_direct(m, kappa, p, tf);
  auto greedy = dominant_bases_greedy(m, kappa, p, tf);
  if (direct != greedy) throw std::logic_error("greedy and direct dominant bases disagree");
  return direct;
}

std::vector<Subset> ContourPlot::region_labels() const {
  std::vector<Subset> out;
  for (const auto& r : regions) out.push_back(r.label);
  std::sort(out.begin(), out.end());
  return out;
}

int ContourPlot::region_of(const Subset& label) const {
  for (std::size_t r = 0; r < regions.size(); ++r)
    if (regions[r].label == label) return static_cast<int>(r);
  return -1;
}

int ContourPlot::count(ContourNodeKind kind) const {
  int c = 0;
  for (const auto& v : vertices) c += v.kind == kind;
  return c;
}

std::vector<std::array<Subset, 2>> ContourPlot::adjacency() const {
  std::set<std::array<Subset, 2>> pairs;
  for (const auto& e : edges) {
    if (e.left < 0 || e.right < 0) continue;
    Subset a = regions[e.left].label, b = regions[e.right].label;
    if (b < a) std::swap(a, b);
    pairs.insert({a, b});
  }
  return {pairs.begin(), pairs.end()};
}

bool ContourPlot::is_ray(const ContourEdge& e) const {
  return vertices[e.from].kind == ContourNodeKind::Exit || vertices[e.to].kind == ContourNodeKind::Exit;
}

int ContourPlot::locate(const Point& p) const {
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const auto& poly = regions[r].polygon;
    if (poly.size() < 3) continue;
    bool inside = true;
    for (std::size_t i = 0; i < poly.size() && inside; ++i)
      inside = cross(poly[(i + 1) % poly.size()] - poly[i], p - poly[i]) > 0;
    if (inside) return static_cast<int>(r);
  }
  return -1;
}

namespace {

BBox box_around(const std::vector<Point>& pts) {
  BBox b{Rational(-1), Rational(1), Rational(-1), Rational(1)};
  if (!pts.empty()) {
    b = {pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const auto& p : pts) {
      b.xmin = std::min(b.xmin, p.x);
      b.xmax = std::max(b.xmax, p.x);
      b.ymin = std::min(b.ymin, p.y);
      b.ymax = std::max(b.ymax, p.y);
    }
  }
  Rational extent = std::max(b.xmax - b.xmin, b.ymax - b.ymin);
  Rational margin = extent / 4 + 1;
  return {b.xmin - margin, b.xmax + margin, b.ymin - margin, b.ymax + margin};
}

// Line theta_i = theta_j written as a x + b y + c = 0.
std::array<Rational, 3> pair_line(int i, int j, const KappaVector& kappa, const TimeFrame& tf) {
  Weight wi = weight_of(i, kappa, tf), wj = weight_of(j, kappa, tf);
  return {wi.alpha - wj.alpha, wi.beta - wj.beta, wi.gamma - wj.gamma};
}

std::optional<Point> meet(const std::array<Rational, 3>& l1, const std::array<Rational, 3>& l2) {
  Rational det = l1[0] * l2[1] - l1[1] * l2[0];
  if (det == 0) return std::nullopt;
  return Point{(l1[1] * l2[2] - l1[2] * l2[1]) / det, (l1[2] * l2[0] - l1[0] * l2[2]) / det};
}

Point on_line(const std::array<Rational, 3>& l) {
  // Lines theta_i = theta_j always have a nonzero x coefficient.
  return {-l[2] / l[0], Rational(0)};
}

BBox box_for_lines(const std::vector<std::array<Rational, 3>>& lines, std::vector<Point> pts) {
  for (std::size_t a = 0; a < lines.size(); ++a) {
    pts.push_back(on_line(lines[a]));
    for (std::size_t b = a + 1; b < lines.size(); ++b)
      if (auto p = meet(lines[a], lines[b])) pts.push_back(*p);
  }
  return box_around(pts);
}

std::vector<Segment> box_sides(const BBox& b) {
  Point p0{b.xmin, b.ymin}, p1{b.xmax, b.ymin}, p2{b.xmax, b.ymax}, p3{b.xmin, b.ymax};
  return {{p0, p1, -1}, {p1, p2, -1}, {p2, p3, -1}, {p3, p0, -1}};
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::array<int, 2> swap_type(const Subset& l, const Subset& r) {
  Subset a, b;
  std::set_difference(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(a));
  std::set_difference(r.begin(), r.end(), l.begin(), l.end(), std::back_inserter(b));
  if (a.size() != 1 || b.size() != 1)
    throw DomainError(ErrorCode::InconsistentLabels,
                      "adjacent regions " + subset_string(l) + " and " + subset_string(r) + " differ by more than a swap");
  return {std::min(a[0], b[0]), std::max(a[0], b[0])};
}

// Turns a labelled subdivision into a plot: merges faces with equal labels,
// classifies the nodes of the remaining curve and chains its edges.
ContourPlot assemble(const Subdivision& sd, const std::vector<Subset>& face_label, const BBox& box,
                     const KappaVector& kappa, const TimeFrame& tf) {
  ContourPlot plot;
  plot.frame = tf.frame;
  plot.kappa = kappa;
  plot.t = tf.t;
  plot.bbox = box;

  const int nf = static_cast<int>(sd.faces.size());
  const int ne = static_cast<int>(sd.ends.size());
  auto inner = [&](int f) { return f != sd.outer; };
  Dsu dsu(nf);
  for (int e = 0; e < ne; ++e) {
    int a = sd.face_of[2 * e], b = sd.face_of[2 * e + 1];
    if (inner(a) && inner(b) && face_label[a] == face_label[b]) dsu.unite(a, b);
  }
  std::map<int, int> region_of_root;
  {
    std::vector<std::pair<Subset, int>> roots;
    for (int f = 0; f < nf; ++f)
      if (inner(f) && dsu.find(f) == f) roots.push_back({face_label[f], f});
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i > 0 && roots[i].first == roots[i - 1].first)
        throw DomainError(ErrorCode::InconsistentLabels, "label " + subset_string(roots[i].first) + " on two regions");
      region_of_root[roots[i].second] = static_cast<int>(i);
      plot.regions.push_back({roots[i].first, true, {}});
    }
  }
  auto region = [&](int face) { return inner(face) ? region_of_root.at(dsu.find(face)) : -1; };

  std::vector<char> contour(ne, 0);
  std::vector<std::array<int, 2>> type(ne);
  for (int e = 0; e < ne; ++e) {
    int a = sd.face_of[2 * e], b = sd.face_of[2 * e + 1];
    if (!inner(a) || !inner(b)) continue;
    int ra = region(a), rb = region(b);
    if (ra == rb) continue;
    contour[e] = 1;
    type[e] = swap_type(plot.regions[ra].label, plot.regions[rb].label);
  }

  const int nn = static_cast<int>(sd.nodes.size());
  std::vector<int> vertex_of(nn, -1);
  std::vector<std::vector<int>> cdarts(nn);
  for (int v = 0; v < nn; ++v)
    for (int d : sd.rotation[v])
      if (contour[d / 2]) cdarts[v].push_back(d);
  for (int v = 0; v < nn; ++v) {
    const auto& ds = cdarts[v];
    if (ds.empty()) continue;
    ContourVertex cv;
    cv.at = sd.nodes[v];
    for (int d : ds) {
      cv.types.push_back(type[d / 2]);
      cv.around.push_back(region(sd.face_of[d]));
    }
    std::set<int> idx;
    for (const auto& t : cv.types) idx.insert(t.begin(), t.end());
    const std::string where = "(" + to_string(cv.at.x) + ", " + to_string(cv.at.y) + ")";
    if (box.on_border(cv.at)) {
      cv.kind = ContourNodeKind::Exit;
    } else if (ds.size() == 2) {
      if (cv.types[0] != cv.types[1]) throw DomainError(ErrorCode::NonGeneric, "bent line-soliton at " + where);
      continue;
    } else if (ds.size() == 3) {
      if (idx.size() != 3) throw DomainError(ErrorCode::NonGeneric, "non-resonant triple point at " + where);
      cv.kind = ContourNodeKind::Trivalent;
    } else if (ds.size() == 4 && cv.types[0] == cv.types[2] && cv.types[1] == cv.types[3] && idx.size() == 4) {
      cv.kind = ContourNodeKind::XCrossing;
    } else {
      throw DomainError(ErrorCode::NonGeneric, "degenerate interaction at " + where);
    }
    cv.indices.assign(idx.begin(), idx.end());
    vertex_of[v] = static_cast<int>(plot.vertices.size());
    plot.vertices.push_back(std::move(cv));
  }

  std::vector<char> used(2 * ne, 0);
  for (int v = 0; v < nn; ++v) {
    if (vertex_of[v] < 0) continue;
    for (int d0 : cdarts[v]) {
      if (used[d0]) continue;
      int d = d0;
      while (true) {
        used[d] = used[d ^ 1] = 1;
        int h = sd.head(d);
        if (vertex_of[h] >= 0) {
          plot.edges.push_back({type[d0 / 2], vertex_of[v], vertex_of[h], region(sd.face_of[d0]),
                                region(sd.face_of[d0 ^ 1])});
          break;
        }
        d = cdarts[h][0] == (d ^ 1) ? cdarts[h][1] : cdarts[h][0];
      }
    }
  }

  std::vector<std::vector<Point>> pts(plot.regions.size());
  for (int f = 0; f < nf; ++f) {
    if (!inner(f)) continue;
    int r = region(f);
    for (int d : sd.faces[f]) {
      pts[r].push_back(sd.nodes[sd.tail(d)]);
      if (sd.face_of[d ^ 1] == sd.outer) plot.regions[r].bounded = false;
    }
  }
  for (std::size_t r = 0; r < pts.size(); ++r) plot.regions[r].polygon = convex_hull(pts[r]);
  return plot;
}

}  // namespace

BBox auto_bbox(const KappaVector& kappa, const TimeFrame& tf) {
  std::vector<std::array<Rational, 3>> lines;
  for (int i = 1; i <= kappa.n(); ++i)
    for (int j = i + 1; j <= kappa.n(); ++j) lines.push_back(pair_line(i, j, kappa, tf));
  return box_for_lines(lines, {});
}

ContourPlot tropical_contour(const Matroid& m, const KappaVector& kappa, const TimeFrame& tf, std::optional<BBox> bbox,
                             std::size_t base_bound) {
  check_frame(kappa, m);
  if (m.bases.empty()) throw DomainError(ErrorCode::InvalidInput, "matroid has no bases");
  if (m.bases.size() > base_bound) throw DomainError(ErrorCode::BoundExceeded, "too many bases");
  require_generic(kappa, m.k, tf);
  const BBox box = bbox ? *bbox : auto_bbox(kappa, tf);
  if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax))
    throw DomainError(ErrorCode::InvalidInput, "degenerate bounding box");

  std::vector<Segment> segs = box_sides(box);
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j) {
      auto l = pair_line(i, j, kappa, tf);
      Segment s;
      s.tag = i * (m.n + 1) + j;
      if (clip_line(l[0], l[1], l[2], box, s)) segs.push_back(s);
    }
  Subdivision sd = build_subdivision(segs);

  std::vector<std::optional<Rational>> best(sd.nodes.size());
  auto best_at = [&](int v) -> const Rational& {
    if (!best[v]) {
      auto w = element_weights(kappa, sd.nodes[v], tf);
      Rational top = subset_sum(m.bases[0], w);
      for (const Subset& b : m.bases) top = std::max(top, subset_sum(b, w));
      best[v] = top;
    }
    return *best[v];
  };

  // Cells of the line arrangement are convex, so the vertex average is
  // interior; each label is certified at every corner of its cell.
  std::vector<Subset> label(sd.faces.size());
  for (std::size_t f = 0; f < sd.faces.size(); ++f) {
    if (static_cast<int>(f) == sd.outer) continue;
    Point c{Rational(0), Rational(0)};
    for (int d : sd.faces[f]) c = c + sd.nodes[sd.tail(d)];
    c = Rational(1, static_cast<long>(sd.faces[f].size())) * c;
    auto dom = argmax_bases(m, element_weights(kappa, c, tf));
    if (dom.size() != 1) throw DomainError(ErrorCode::NonGeneric, "tie inside an arrangement cell");
    label[f] = dom[0];
    for (int d : sd.faces[f]) {
      int v = sd.tail(d);
      if (subset_sum(dom[0], element_weights(kappa, sd.nodes[v], tf)) != best_at(v))
        throw DomainError(ErrorCode::NonGeneric, "cell label fails certification at a corner");
    }
  }
  ContourPlot plot = assemble(sd, label, box, kappa, tf);
  // Four regions around a point can also hide a bounded region that shrank to
  // it; a genuine X-crossing ties exactly the four bases around it.
  for (const auto& v : plot.vertices)
    if (v.kind == ContourNodeKind::XCrossing && argmax_bases(m, element_weights(kappa, v.at, tf)).size() != 4)
      throw DomainError(ErrorCode::NonGeneric,
                        "more than four bases tie at (" + to_string(v.at.x) + ", " + to_string(v.at.y) + ")");
  return plot;
}

Point trivalent_point(const KappaVector& kappa, int i, int l, int m) {
  const Rational &a = kappa(i), &b = kappa(l), &c = kappa(m);
  return {a * b + a * c + b * c, -(a + b + c)};
}

ContourPlot contour_minus_infinity(const GoDiagram& d, const KappaVector& kappa) {
  const int n = d.shape.n, k = d.shape.k;
  if (kappa.n() != n) throw DomainError(ErrorCode::SizeMismatch, "kappa length differs from n");
  const TimeFrame tf = TimeFrame::minus_infinity();
  require_generic(kappa, k, tf);
  const LabeledGraph lg = label_graph(build_plabic(d));
  const Permutation pi = trip_permutation(lg.graph);
  const auto solitons = soliton_edges(lg);

  std::map<int, Point> where;
  for (int v = 0; v < static_cast<int>(lg.graph.vertices.size()); ++v) {
    auto kind = lg.graph.vertices[v].kind;
    if (kind != VertexKind::Black && kind != VertexKind::White) continue;
    auto idx = trivalent_indices(lg, v);
    where[v] = trivalent_point(kappa, idx[0], idx[1], idx[2]);
  }

  std::vector<std::array<Rational, 3>> lines;
  std::vector<Point> anchors;
  for (const auto& se : solitons) lines.push_back(pair_line(se.type[0], se.type[1], kappa, tf));
  for (const auto& [v, p] : where) anchors.push_back(p);
  const BBox box = box_for_lines(lines, anchors);

  auto exit_point = [&](const Point& p, const Point& dir) {
    Rational best(-1);
    auto consider = [&](const Rational& s) {
      if (s > 0 && (best < 0 || s < best)) best = s;
    };
    if (dir.x > 0) consider((box.xmax - p.x) / dir.x);
    if (dir.x < 0) consider((box.xmin - p.x) / dir.x);
    if (dir.y > 0) consider((box.ymax - p.y) / dir.y);
    if (dir.y < 0) consider((box.ymin - p.y) / dir.y);
    return p + best * dir;
  };
  // A boundary edge at vertex l carries trip pi^{-1}(l) arriving; it is an
  // excedance, hence at physical y >> 0 (rescaled ybar << 0), when pi^{-1}(l) < l.
  auto ray_direction = [&](const std::array<int, 2>& type, int boundary_label) {
    const int other = type[0] == boundary_label ? type[1] : type[0];
    const Rational slope = kappa(type[0]) + kappa(type[1]);
    if (pi[other - 1] != boundary_label) throw DomainError(ErrorCode::InconsistentLabels, "boundary edge labels");
    return other < boundary_label ? Point{slope, Rational(-1)} : Point{-slope, Rational(1)};
  };

  std::vector<Segment> segs = box_sides(box);
  for (std::size_t s = 0; s < solitons.size(); ++s) {
    const auto& se = solitons[s];
    const auto& line = lines[s];
    const auto& va = lg.graph.vertices[se.from];
    const auto& vb = lg.graph.vertices[se.to];
    const bool ba = va.kind == VertexKind::Boundary, bb = vb.kind == VertexKind::Boundary;
    Segment seg;
    seg.tag = static_cast<int>(s);
    if (ba && bb) {
      if (!clip_line(line[0], line[1], line[2], box, seg)) throw std::logic_error("soliton line misses the box");
    } else if (ba || bb) {
      const Point p = where.at(ba ? se.to : se.from);
      seg.a = p;
      seg.b = exit_point(p, ray_direction(se.type, ba ? va.label : vb.label));
    } else {
      seg.a = where.at(se.from);
      seg.b = where.at(se.to);
      if (seg.a == seg.b) throw DomainError(ErrorCode::NonGeneric, "two trivalent vertices coincide");
    }
    for (const Point& p : {seg.a, seg.b})
      if (line[0] * p.x + line[1] * p.y + line[2] != 0)
        throw DomainError(ErrorCode::InconsistentLabels, "soliton edge leaves its line");
    segs.push_back(seg);
  }
  Subdivision sd = build_subdivision(segs);

  const LabeledGoDiagram ld = labeled_go(d);
  const Matroid matroid = matroid_of(point_of(ld, default_params(ld)));

  // Label a face by the bases tied at the midpoint of one of its darts,
  // broken by the gradient pointing into the face.
  std::vector<Subset> label(sd.faces.size());
  for (std::size_t f = 0; f < sd.faces.size(); ++f) {
    if (static_cast<int>(f) == sd.outer) continue;
    const int dart = sd.faces[f][0];
    const Point a = sd.nodes[sd.tail(dart)], b = sd.nodes[sd.head(dart)];
    const Point mid = Rational(1, 2) * (a + b);
    const Point normal{a.y - b.y, b.x - a.x};
    auto tied = argmax_bases(matroid, element_weights(kappa, mid, tf));
    std::optional<Rational> top;
    std::vector<Subset> winners;
    for (const Subset& s : tied) {
      Rational grad(0);
      for (int j : s) {
        Weight w = weight_of(j, kappa, tf);
        grad += w.alpha * normal.x + w.beta * normal.y;
      }
      if (!top || grad > *top) {
        top = grad;
        winners = {s};
      } else if (grad == *top) {
        winners.push_back(s);
      }
    }
    if (winners.size() != 1) throw DomainError(ErrorCode::NonGeneric, "face label is ambiguous");
    label[f] = winners[0];
  }
  for (int e = 0; e < static_cast<int>(sd.ends.size()); ++e) {
    if (sd.tag[e] < 0) continue;
    int fa = sd.face_of[2 * e], fb = sd.face_of[2 * e + 1];
    if (swap_type(label[fa], label[fb]) != solitons[sd.tag[e]].type)
      throw DomainError(ErrorCode::InconsistentLabels, "soliton edge does not separate its dominant bases");
  }
  return assemble(sd, label, box, kappa, tf);
}

UnboundedTypes unbounded_types(const ContourPlot& plot) {
  UnboundedTypes out;
  for (const auto& e : plot.edges) {
    const auto& a = plot.vertices[e.from];
    const auto& b = plot.vertices[e.to];
    const bool ea = a.kind == ContourNodeKind::Exit, eb = b.kind == ContourNodeKind::Exit;
    if (ea && eb) {
      out.top.push_back(e.type);
      out.bottom.push_back(e.type);
      continue;
    }
    if (!ea && !eb) continue;
    Rational dy = ea ? a.at.y - b.at.y : b.at.y - a.at.y;
    if (plot.frame == Frame::Rescaled) dy = -dy;
    (dy > 0 ? out.top : out.bottom).push_back(e.type);
  }
  auto by_slope = [&](const std::array<int, 2>& p, const std::array<int, 2>& q) {
    return plot.kappa(p[0]) + plot.kappa(p[1]) < plot.kappa(q[0]) + plot.kappa(q[1]);
  };
  std::sort(out.top.begin(), out.top.end(), by_slope);
  std::sort(out.bottom.begin(), out.bottom.end(), by_slope);
  return out;
}

CrossingColor crossing_color(std::array<int, 2> a, std::array<int, 2> b) {
  std::array<int, 4> all{a[0], a[1], b[0], b[1]};
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw DomainError(ErrorCode::InvalidInput, "crossing types share an index");
  if (a[0] > a[1]) std::swap(a[0], a[1]);
  std::array<int, 2> ik{all[0], all[2]}, jl{all[1], all[3]};
  return (a == ik || a == jl) ? CrossingColor::Black : CrossingColor::White;
}

std::vector<Crossing> classify_crossings(const ContourPlot& plot) {
  std::vector<Crossing> out;
  for (int v = 0; v < static_cast<int>(plot.vertices.size()); ++v) {
    const auto& cv = plot.vertices[v];
    if (cv.kind != ContourNodeKind::XCrossing) continue;
    Crossing c;
    c.vertex = v;
    c.at = cv.at;
    c.first = std::min(cv.types[0], cv.types[1]);
    c.second = std::max(cv.types[0], cv.types[1]);
    c.color = crossing_color(c.first, c.second);
    for (int i = 0; i < 4; ++i) c.regions[i] = plot.regions[cv.around[i]].label;
    out.push_back(c);
  }
  return out;
}

CrossingColor trivalent_color(const ContourPlot& plot, int vertex) {
  if (plot.vertices.at(vertex).kind != ContourNodeKind::Trivalent)
    throw DomainError(ErrorCode::InvalidInput, "vertex is not trivalent");
  const Point& at = plot.vertices[vertex].at;
  int down = 0, up = 0;
  for (const auto& e : plot.edges) {
    if (e.from != vertex && e.to != vertex) continue;
    Rational dy = plot.vertices[e.from == vertex ? e.to : e.from].at.y - at.y;
    if (plot.frame == Frame::Rescaled) dy = -dy;  // y = t * ybar with t < 0
    (dy < 0 ? down : up) += 1;
  }
  if (down == 1 && up == 2) return CrossingColor::Black;
  if (up == 1 && down == 2) return CrossingColor::White;
  throw DomainError(ErrorCode::MalformedGraph, "trivalent vertex without a distinguished edge");
}

std::vector<int> singular_edges(const ContourPlot& plot, const std::map<Subset, Rational>& pluckers) {
  auto sign_of = [&](int region) {
    const Subset& s = plot.regions[region].label;
    auto it = pluckers.find(s);
    if (it == pluckers.end() || it->second == 0)
      throw DomainError(ErrorCode::InvalidInput, "no nonzero Pluecker value for region " + subset_string(s));
    return it->second.sign();
  };
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(plot.edges.size()); ++e) {
    const auto& ce = plot.edges[e];
    if (ce.left < 0 || ce.right < 0) continue;
    if (sign_of(ce.left) != sign_of(ce.right)) out.push_back(e);
  }
  return out;
}

RegularityResult regularity_check(const GrassmannPoint& a, const KappaVector& kappa, const Rational& t) {
  const ContourPlot plot = tropical_contour(matroid_of(a), kappa, TimeFrame::at(t));
  std::map<Subset, Rational> values;
  for (const auto& r : plot.regions) values[r.label] = a.plucker(r.label);
  RegularityResult out;
  int ref = 0;
  out.regular = true;
  for (const auto& [s, val] : values) {
    if (ref == 0) ref = val.sign();
    if (val.sign() != ref) out.regular = false;
  }
  if (!out.regular) {
    auto bad = singular_edges(plot, values);
    if (bad.empty()) throw std::logic_error("mixed signs without a singular edge");
    const auto& e = plot.edges[bad.front()];
    out.witness = e;
    out.witness_regions = {plot.regions[e.left].label, plot.regions[e.right].label};
  }
  return out;
}

KappaVector ordering_kappa(int n, const Rational& r) {
  if (!(r > 1)) throw DomainError(ErrorCode::InvalidInput, "ordering ratio must exceed 1");
  if (n < 1) throw DomainError(ErrorCode::InvalidInput, "n must be positive");
  std::vector<Rational> v{Rational(0)};
  Rational power = r;
  for (int i = 2; i <= n; ++i) {
    power *= r;
    v.push_back(v.back() + power);
  }
  return make_kappa(std::move(v));
}

KappaVector black_stone_kappa(int n, const std::array<int, 6>& idx, const Rational& r) {
  const auto [i, ip, a, b, jp, j] = idx;
  if (!(1 <= i && i < ip && ip <= a && a < b && b <= jp && jp < j && j <= n))
    throw DomainError(ErrorCode::InvalidInput, "indices must satisfy i < i' <= a < b <= j' < j");
  if (!(r > 0)) throw DomainError(ErrorCode::InvalidInput, "scale must be positive");
  std::map<int, Rational> anchor{{i, -4 * r}, {a, -r}, {b, r}, {j, 4 * r}};
  if (ip != a) anchor[ip] = -2 * r;
  if (jp != b) anchor[jp] = 2 * r;
  std::vector<Rational> v(n);
  for (int x = 1; x <= n; ++x) {
    auto hi = anchor.lower_bound(x);
    if (hi != anchor.end() && hi->first == x) {
      v[x - 1] = hi->second;
    } else if (hi == anchor.begin()) {
      v[x - 1] = hi->second - r * (hi->first - x);
    } else if (hi == anchor.end()) {
      auto lo = std::prev(hi);
      v[x - 1] = lo->second + r * (x - lo->first);
    } else {
      auto lo = std::prev(hi);
      v[x - 1] = lo->second + (hi->second - lo->second) * Rational(x - lo->first, hi->first - lo->first);
    }
  }
  return make_kappa(std::move(v));
}

bool self_similar(const ContourPlot& p1, const ContourPlot& p2) {
  if (p1.frame != Frame::Physical || p2.frame != Frame::Physical) return false;
  if (p1.t.sign() == 0 || p1.t.sign() != p2.t.sign()) return false;
  if (p1.region_labels() != p2.region_labels() || p1.adjacency() != p2.adjacency()) return false;
  const Rational s = p2.t / p1.t;
  using Key = std::pair<std::vector<int>, Point>;
  auto inner = [](const ContourPlot& p, const Rational& scale) {
    std::vector<Key> keys;
    for (const auto& v : p.vertices)
      if (v.kind != ContourNodeKind::Exit) keys.push_back({v.indices, scale * v.at});
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    return keys;
  };
  auto k1 = inner(p1, s), k2 = inner(p2, Rational(1));
  if (k1.size() != k2.size()) return false;
  for (std::size_t x = 0; x < k1.size(); ++x)
    if (k1[x].first != k2[x].first || !(k1[x].second == k2[x].second)) return false;
  return true;
}

}  // namespace soliton
