#include "soliton/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "soliton/errors.hpp"

namespace soliton {

bool angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool clip_line(const Rational& a, const Rational& b, const Rational& c, const BBox& box, Segment& out) {
  std::vector<Point> hits;
  auto add = [&](const Point& p) {
    if (box.contains(p) && std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
  };
  if (b != 0) {
    for (const Rational& x : {box.xmin, box.xmax}) add({x, -(a * x + c) / b});
  }
  if (a != 0) {
    for (const Rational& y : {box.ymin, box.ymax}) add({-(b * y + c) / a, y});
  }
  if (hits.size() < 2) return false;
  std::sort(hits.begin(), hits.end());
  out.a = hits.front();
  out.b = hits.back();
  return true;
}

Subdivision build_subdivision(const std::vector<Segment>& segments) {
  const std::size_t m = segments.size();
  std::vector<std::vector<std::pair<Rational, Point>>> cuts(m);
  for (std::size_t s = 0; s < m; ++s) {
    cuts[s].push_back({Rational(0), segments[s].a});
    cuts[s].push_back({Rational(1), segments[s].b});
  }
  for (std::size_t s = 0; s < m; ++s) {
    const Point r = segments[s].b - segments[s].a;
    for (std::size_t u = s + 1; u < m; ++u) {
      const Point q = segments[u].b - segments[u].a;
      const Point ca = segments[u].a - segments[s].a;
      const Rational den = cross(r, q);
      if (den == 0) {
        if (cross(ca, r) != 0) continue;  // parallel, apart
        // Collinear: parameters of u's endpoints along s.
        const Rational rr = r.x * r.x + r.y * r.y;
        Rational p0 = (ca.x * r.x + ca.y * r.y) / rr;
        Point cb = segments[u].b - segments[s].a;
        Rational p1 = (cb.x * r.x + cb.y * r.y) / rr;
        if (p0 > p1) std::swap(p0, p1);
        Rational lo = std::max(p0, Rational(0)), hi = std::min(p1, Rational(1));
        if (lo < hi) throw DomainError(ErrorCode::NonGeneric, "two curves overlap along a segment");
        if (lo == hi) {
          Point p = segments[s].a + lo * r;
          const Rational qq = q.x * q.x + q.y * q.y;
          Point pu = p - segments[u].a;
          cuts[s].push_back({lo, p});
          cuts[u].push_back({(pu.x * q.x + pu.y * q.y) / qq, p});
        }
        continue;
      }
      const Rational ps = cross(ca, q) / den, pu = cross(ca, r) / den;
      if (ps < 0 || ps > 1 || pu < 0 || pu > 1) continue;
      const Point p = segments[s].a + ps * r;
      cuts[s].push_back({ps, p});
      cuts[u].push_back({pu, p});
    }
  }

  Subdivision sd;
  std::map<Point, int> ids;
  auto node = [&](const Point& p) {
    auto [it, fresh] = ids.emplace(p, static_cast<int>(sd.nodes.size()));
    if (fresh) sd.nodes.push_back(p);
    return it->second;
  };
  std::set<std::pair<int, int>> seen;
  for (std::size_t s = 0; s < m; ++s) {
    auto& c = cuts[s];
    std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    int prev = -1;
    for (const auto& [param, p] : c) {
      int id = node(p);
      if (prev >= 0 && prev != id && seen.insert(std::minmax(prev, id)).second) {
        sd.ends.push_back({prev, id});
        sd.tag.push_back(segments[s].tag);
      }
      prev = id;
    }
  }

  sd.rotation.assign(sd.nodes.size(), {});
  for (int e = 0; e < static_cast<int>(sd.ends.size()); ++e) {
    sd.rotation[sd.ends[e][0]].push_back(2 * e);
    sd.rotation[sd.ends[e][1]].push_back(2 * e + 1);
  }
  for (auto& r : sd.rotation)
    std::sort(r.begin(), r.end(), [&](int a, int b) { return angle_less(sd.direction(a), sd.direction(b)); });

  // Position of each dart inside its tail's rotation.
  std::vector<int> slot(2 * sd.ends.size());
  for (const auto& r : sd.rotation)
    for (std::size_t i = 0; i < r.size(); ++i) slot[r[i]] = static_cast<int>(i);

  const int nd = static_cast<int>(slot.size());
  sd.face_of.assign(nd, -1);
  for (int d = 0; d < nd; ++d) {
    if (sd.face_of[d] >= 0) continue;
    std::vector<int> cycle;
    Rational area(0);
    for (int c = d; sd.face_of[c] < 0;) {
      sd.face_of[c] = static_cast<int>(sd.faces.size());
      cycle.push_back(c);
      area += cross(sd.nodes[sd.tail(c)], sd.nodes[sd.head(c)]);
      const auto& r = sd.rotation[sd.head(c)];
      const int deg = static_cast<int>(r.size());
      c = r[(slot[c ^ 1] + deg - 1) % deg];
    }
    sd.faces.push_back(std::move(cycle));
    sd.twice_area.push_back(area);
  }
  for (std::size_t f = 0; f < sd.faces.size(); ++f) {
    if (sd.twice_area[f] > 0) continue;
    if (sd.outer >= 0) throw DomainError(ErrorCode::MalformedGraph, "subdivision is not connected");
    sd.outer = static_cast<int>(f);
  }
  return sd;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t h = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (h >= 2 && cross(hull[h - 1] - hull[h - 2], pts[i] - hull[h - 2]) <= 0) --h;
    hull[h++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = h + 1; i-- > 0;) {
    while (h >= lower && cross(hull[h - 1] - hull[h - 2], pts[i] - hull[h - 2]) <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);
  return hull;
}

}  // namespace soliton
