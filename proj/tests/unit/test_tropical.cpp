#include <doctest.h>

#include "../support.hpp"

using namespace soliton;
using namespace testing;

namespace {

bool generic_by_brute_force(const KappaVector& kappa, int p_bound) {
  const int n = kappa.n();
  for (int p = 2; p <= p_bound && p < n; ++p) {
    std::set<Rational> sums;
    for (const Subset& s : oracle_subsets(n, p)) {
      Rational sum(0);
      for (int j : s) sum += kappa(j);
      if (!sums.insert(sum).second) return false;
    }
  }
  return true;
}

Point random_point(Rng& rng, const BBox& b) {
  const Rational fx(uniform(rng, 1, 4095), 4096), fy(uniform(rng, 1, 4095), 4096);
  return {b.xmin + (b.xmax - b.xmin) * fx, b.ymin + (b.ymax - b.ymin) * fy};
}

struct Sample {
  GoDiagram d;
  GrassmannPoint a;
  Matroid m;
};

Sample random_sample(Rng& rng, int n_min = 3, int n_max = 7) {
  const int n = uniform(rng, n_min, n_max);
  const GoDiagram d = random_go(rng, random_shape(rng, uniform(rng, 1, std::min(3, n - 1)), n));
  const LabeledGoDiagram ld = labeled_go(d);
  GrassmannPoint a = point_of(ld, random_params(rng, ld));
  Matroid m = matroid_of(a);
  return {d, a, m};
}

Subset symmetric_difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TEST_CASE("kappa vectors") {
  CHECK_THROWS_AS(make_kappa({1, 1, 2}), DomainError);
  CHECK_THROWS_AS(make_kappa({2, 1}), DomainError);
  Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> v;
    Rational x(uniform(rng, -6, 0));
    for (int i = 0, n = uniform(rng, 2, 7); i < n; ++i) {
      v.push_back(x);
      x += Rational(uniform(rng, 1, 3), uniform(rng, 1, 2));
    }
    const KappaVector kv = make_kappa(v);
    const int bound = uniform(rng, 2, 4);
    CHECK(is_generic(kv, bound) == generic_by_brute_force(kv, bound));
    const KappaVector g = perturb_to_generic(kv, bound);
    CHECK(generic_by_brute_force(g, bound));
    CHECK(g.n() == kv.n());
  }
  const KappaVector o = ordering_kappa(5, Rational(2));
  CHECK(o.values == std::vector<Rational>{0, 4, 12, 28, 60});
  CHECK_THROWS_AS(ordering_kappa(4, Rational(1)), DomainError);
}

TEST_CASE("black stone kappa") {
  const KappaVector k = black_stone_kappa(8, {2, 3, 4, 6, 7, 8}, Rational(1));
  CHECK(k(2) == -4);
  CHECK(k(3) == -2);
  CHECK(k(4) == -1);
  CHECK(k(6) == 1);
  CHECK(k(7) == 2);
  CHECK(k(8) == 4);
  for (int j = 1; j < 8; ++j) CHECK(k(j) < k(j + 1));
  const KappaVector dropped = black_stone_kappa(4, {1, 2, 2, 3, 3, 4}, Rational(1, 2));
  CHECK(dropped.values == std::vector<Rational>{-2, Rational(-1, 2), Rational(1, 2), 2});
  CHECK_THROWS_AS(black_stone_kappa(6, {1, 1, 2, 3, 4, 5}, Rational(1)), DomainError);
}

TEST_CASE("phases") {
  const KappaVector k = make_kappa({-1, 0, 2});
  const Point p{Rational(1, 2), Rational(3)};
  CHECK(phase(3, k, p, TimeFrame::at(Rational(2))) == 2 * Rational(1, 2) + 4 * 3 + 8 * 2);
  CHECK(phase(1, k, p, TimeFrame::minus_infinity()) == -Rational(1, 2) + 3 - 1);
  CHECK(trivalent_point(k, 1, 2, 3) == oracle_trivalent(k, 1, 2, 3));
  CHECK(trivalent_point(k, 1, 2, 3) == Point{-2, -1});
}

TEST_CASE("dominant bases agree with the definition") {
  Rng rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const Sample s = random_sample(rng);
    for (const TimeFrame tf : {TimeFrame::minus_infinity(), TimeFrame::at(Rational(uniform(rng, -3, 3)))}) {
      const KappaVector kappa = random_kappa(rng, s.a.n(), tf, s.a.k());
      const auto all = s.a.all_pluckers();
      const BBox box = auto_bbox(kappa, tf);
      for (int probe = 0; probe < 20; ++probe) {
        const Point p = random_point(rng, box);
        const auto want = oracle_dominant(all, kappa, p, tf);
        CHECK(dominant_bases_direct(s.m, kappa, p, tf) == want);
        CHECK(dominant_bases_greedy(s.m, kappa, p, tf) == want);
      }
    }
  }
}

TEST_CASE("contour plots") {
  Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const Sample s = random_sample(rng);
    const TimeFrame tf = coin(rng) ? TimeFrame::minus_infinity() : TimeFrame::at(Rational(uniform(rng, 1, 3)));
    const KappaVector kappa = random_kappa(rng, s.a.n(), tf, s.a.k());
    const ContourPlot plot = tropical_contour(s.m, kappa, tf);
    const auto all = s.a.all_pluckers();

    // Every probe off the contour lies in the region of its unique dominant basis.
    int located = 0;
    for (int probe = 0; probe < 60; ++probe) {
      const Point p = random_point(rng, plot.bbox);
      const int r = plot.locate(p);
      const auto want = oracle_dominant(all, kappa, p, tf);
      if (r < 0) {
        CHECK(want.size() >= 1);
        continue;
      }
      CHECK(want == std::vector<Subset>{plot.regions[r].label});
      ++located;
    }
    CHECK(located > 0);

    for (const ContourEdge& e : plot.edges) {
      REQUIRE(e.left >= 0);
      REQUIRE(e.right >= 0);
      CHECK(symmetric_difference(plot.regions[e.left].label, plot.regions[e.right].label) ==
            Subset{e.type[0], e.type[1]});
    }
    for (const ContourVertex& v : plot.vertices) {
      CHECK(plot.bbox.contains(v.at));
      if (v.kind == ContourNodeKind::Trivalent) {
        CHECK(v.types.size() == 3);
        if (tf.frame == Frame::Rescaled) CHECK(v.at == oracle_trivalent(kappa, v.indices[0], v.indices[1], v.indices[2]));
        const CrossingColor c = trivalent_color(plot, static_cast<int>(&v - plot.vertices.data()));
        CHECK((c == CrossingColor::Black || c == CrossingColor::White));
      }
      if (v.kind == ContourNodeKind::XCrossing) CHECK(v.types.size() == 4);
      if (v.kind == ContourNodeKind::Exit) CHECK(plot.bbox.on_border(v.at));
    }
    for (int v = 0; v < static_cast<int>(plot.vertices.size()); ++v)
      if (plot.vertices[v].kind != ContourNodeKind::Trivalent) CHECK_THROWS_AS(trivalent_color(plot, v), DomainError);

    // Unbounded line solitons match the rank conditions on the point.
    const UnboundedPairs pairs = unbounded_soliton_pairs(s.a);
    const UnboundedTypes u = unbounded_types(plot);
    auto as_types = [](const std::vector<SolitonPair>& v) {
      std::vector<std::array<int, 2>> out;
      for (const auto& p : v) out.push_back({p.i, p.h});
      std::sort(out.begin(), out.end());
      return out;
    };
    auto sorted = [](std::vector<std::array<int, 2>> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(u.top) == as_types(pairs.top));
    CHECK(sorted(u.bottom) == as_types(pairs.bottom));
  }
}

TEST_CASE("self-similarity in time") {
  Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const Sample s = random_sample(rng);
    const KappaVector kappa = random_kappa(rng, s.a.n(), TimeFrame::at(Rational(-1)), s.a.k());
    if (!phases_distinct(kappa, s.a.k(), TimeFrame::at(Rational(-3)))) continue;
    const ContourPlot p1 = tropical_contour(s.m, kappa, TimeFrame::at(Rational(-1)));
    const ContourPlot p3 = tropical_contour(s.m, kappa, TimeFrame::at(Rational(-3)));
    CHECK(self_similar(p1, p3));
    CHECK_FALSE(self_similar(p1, tropical_contour(s.m, kappa, TimeFrame::minus_infinity())));
  }
}

TEST_CASE("graph construction at minus infinity") {
  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const Sample s = random_sample(rng, 4, 8);
    const KappaVector kappa = random_kappa(rng, s.a.n(), TimeFrame::minus_infinity(), s.a.k());
    const ContourPlot g = contour_minus_infinity(s.d, kappa);
    const ContourPlot t = tropical_contour(s.m, kappa, TimeFrame::minus_infinity());
    CHECK(same_region_graph(g, t));
    CHECK(g.count(ContourNodeKind::Trivalent) == t.count(ContourNodeKind::Trivalent));
  }
}

TEST_CASE("crossing colours and singular edges") {
  CHECK(crossing_color({1, 3}, {2, 4}) == CrossingColor::Black);
  CHECK(crossing_color({1, 4}, {2, 3}) == CrossingColor::White);
  CHECK(crossing_color({1, 2}, {3, 4}) == CrossingColor::White);
  CHECK_THROWS_AS(crossing_color({1, 2}, {2, 3}), DomainError);

  Rng rng(56);
  for (int trial = 0; trial < 40; ++trial) {
    const Sample s = random_sample(rng, 4, 7);
    const TimeFrame tf = TimeFrame::at(Rational(coin(rng) ? uniform(rng, 1, 2) : -uniform(rng, 1, 2)));
    const KappaVector kappa = random_kappa(rng, s.a.n(), tf, s.a.k());
    const ContourPlot plot = tropical_contour(s.m, kappa, tf);
    const auto all = s.a.all_pluckers();
    std::vector<int> expect;
    for (int e = 0; e < static_cast<int>(plot.edges.size()); ++e) {
      const ContourEdge& ed = plot.edges[e];
      if (all.at(plot.regions[ed.left].label).sign() != all.at(plot.regions[ed.right].label).sign())
        expect.push_back(e);
    }
    CHECK(singular_edges(plot, all) == expect);
    const RegularityResult r = regularity_check(s.a, kappa, tf.t);
    CHECK(r.regular == expect.empty());
    if (oracle_tnn(s.a.matrix())) CHECK(r.regular);
  }
}

TEST_CASE("genericity failures are reported") {
  // {0,4,5} and {1,2,6} share the sum and the sum of squares, so at t = 0
  // their exponents coincide everywhere; the cubes differ, so any other time is fine.
  const KappaVector k = make_kappa({0, 1, 2, 4, 5, 6});
  CHECK_FALSE(phases_distinct(k, 3, TimeFrame::at(Rational(0))));
  CHECK(phases_distinct(k, 3, TimeFrame::at(Rational(1))));
  CHECK(phases_distinct(k, 3, TimeFrame::minus_infinity()));
  CHECK_THROWS_AS(require_generic(k, 3, TimeFrame::at(Rational(0))), DomainError);

  // At t = 0 every line theta_i = theta_j passes through the origin.
  const LabeledGoDiagram ld = labeled_go(go_from_rows(2, 4, {". .", ". ."}));
  const Matroid m = matroid_of(point_of(ld, default_params(ld)));
  CHECK_THROWS_AS(tropical_contour(m, make_kappa({-2, -1, 1, 3}), TimeFrame::at(Rational(0))), DomainError);
  CHECK_THROWS_AS(tropical_contour(m, make_kappa({0, 1, 2, 3}), TimeFrame::minus_infinity(), std::nullopt, 2),
                  DomainError);
}
