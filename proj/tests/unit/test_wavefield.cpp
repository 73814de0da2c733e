#include <doctest.h>

#include <cmath>

#include "../support.hpp"
#include "soliton/wavefield.hpp"

using namespace soliton;
using namespace testing;

namespace {

Rational vandermonde_by_product(const KappaVector& kappa, const Subset& j) {
  Rational out(1);
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = a + 1; b < j.size(); ++b) out *= kappa(j[b]) - kappa(j[a]);
  return out;
}

// ln tau by a direct sum in long double, shifted by the largest exponent.
long double log_tau_by_sum(const GrassmannPoint& a, const KappaVector& kappa, double x, double y, double t) {
  std::vector<std::pair<long double, long double>> terms;
  for (const auto& [s, v] : oracle_pluckers(a.matrix())) {
    if (v == 0) continue;
    long double e = 0;
    for (int j : s) {
      const long double c = to_double(kappa(j));
      e += c * x + c * c * y + c * c * c * t;
    }
    terms.push_back({to_double(v * vandermonde_by_product(kappa, s)), e});
  }
  long double top = terms.front().second;
  for (const auto& [c, e] : terms) top = std::max(top, e);
  long double total = 0;
  for (const auto& [c, e] : terms) total += c * std::exp(e - top);
  return std::log(total) + top;
}

GrassmannPoint row(std::initializer_list<int> v) {
  RMatrix m(1, static_cast<int>(v.size()));
  int c = 0;
  for (int x : v) m(0, c++) = x;
  return GrassmannPoint(m);
}

GrassmannPoint random_tnn(Rng& rng) {
  for (;;) {
    const int n = uniform(rng, 3, 7);
    const GoDiagram d = random_le(rng, random_shape(rng, uniform(rng, 1, std::min(3, n - 1)), n));
    const LabeledGoDiagram ld = labeled_go(d);
    if (ld.blank_positions().empty()) continue;
    return point_of(ld, random_params(rng, ld, true));
  }
}

}  // namespace

TEST_CASE("tau terms") {
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const GrassmannPoint a = random_tnn(rng);
    const KappaVector kappa = random_kappa(rng, a.n(), TimeFrame::at(Rational(1)), a.k());
    const TauFunction f = make_tau(a, kappa);
    std::size_t nonzero = 0;
    for (const auto& [s, v] : oracle_pluckers(a.matrix())) nonzero += v != 0;
    CHECK(f.terms.size() == nonzero);
    for (const TauTerm& t : f.terms) {
      CHECK(vandermonde_k(kappa, t.subset) == vandermonde_by_product(kappa, t.subset));
      CHECK(t.coefficient == a.plucker(t.subset) * vandermonde_by_product(kappa, t.subset));
      Rational kx(0), ky(0), kt(0);
      for (int j : t.subset) {
        kx += kappa(j);
        ky += kappa(j) * kappa(j);
        kt += kappa(j) * kappa(j) * kappa(j);
      }
      CHECK(t.kx == kx);
      CHECK(t.ky == ky);
      CHECK(t.kt == kt);
    }
    for (int probe = 0; probe < 5; ++probe) {
      const double x = uniform(rng, -20, 20) / 10.0, y = uniform(rng, -10, 10) / 10.0, t = uniform(rng, -5, 5) / 10.0;
      const auto s = tau_eval<double>(f, x, y, t);
      REQUIRE(s.value > 0);
      const double got = std::log(s.value) + s.log_scale;
      CHECK(got == doctest::Approx(static_cast<double>(log_tau_by_sum(a, kappa, x, y, t))).epsilon(1e-12));
    }
  }
}

TEST_CASE("u is twice the second x-derivative of ln tau") {
  Rng rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const GrassmannPoint a = random_tnn(rng);
    const KappaVector kappa = random_kappa(rng, a.n(), TimeFrame::at(Rational(1)), a.k());
    const TauFunction f = make_tau(a, kappa);
    for (int probe = 0; probe < 5; ++probe) {
      const Real40 x(uniform(rng, -30, 30) / 10.0), y(uniform(rng, -10, 10) / 10.0), t(uniform(rng, -5, 5) / 10.0);
      const Real40 h("1e-8");
      auto lt = [&](const Real40& xx) {
        const auto s = tau_eval<Real40>(f, xx, y, t);
        return Real40(log(abs(s.value)) + s.log_scale);
      };
      const Real40 fd = 2 * (lt(x + h) - 2 * lt(x) + lt(x - h)) / (h * h);
      const Real40 u = u_eval<Real40>(f, x, y, t);
      CHECK(static_cast<double>(u) == doctest::Approx(static_cast<double>(fd)).epsilon(1e-6).scale(1e-3));
      const double ud = u_eval<double>(f, static_cast<double>(x), static_cast<double>(y), static_cast<double>(t));
      CHECK(std::abs(ud - static_cast<double>(u)) <= 1e-9 * (1 + std::abs(static_cast<double>(u))));
    }
  }
}

TEST_CASE("one-soliton") {
  // A = (1, 1): u = (k2 - k1)^2 / 2 sech^2((theta1 - theta2) / 2).
  const KappaVector kappa = make_kappa({-1, Rational(1, 2)});
  const TauFunction f = make_tau(row({1, 1}), kappa);
  for (double x = -4; x <= 4; x += 0.5) {
    const double y = 0.3, t = -0.2;
    auto theta = [&](double c) { return c * x + c * c * y + c * c * c * t; };
    const double d = theta(-1) - theta(0.5);
    const double want = 2.25 / 2 / std::pow(std::cosh(d / 2), 2);
    CHECK(u_eval<double>(f, x, y, t) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(dominant_term<double>(f, 50.0, 0.0, 0.0) == std::vector<Subset>{{2}});
  CHECK(dominant_term<double>(f, -50.0, 0.0, 0.0) == std::vector<Subset>{{1}});

  // A = (1, -1) vanishes where theta1 = theta2, here x = 0 at y = t = 0.
  const TauFunction g = make_tau(row({1, -1}), kappa);
  CHECK_THROWS_AS(u_eval<Real40>(g, Real40(0), Real40(0), Real40(0)), DomainError);
  CHECK_NOTHROW(u_eval<Real40>(g, Real40(1), Real40(0), Real40(0)));
}

TEST_CASE("positive points give positive tau") {
  Rng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const GrassmannPoint a = random_tnn(rng);
    const KappaVector kappa = random_kappa(rng, a.n(), TimeFrame::at(Rational(1)), a.k());
    const TauFunction f = make_tau(a, kappa);
    for (int probe = 0; probe < 50; ++probe) {
      const Real40 x(uniform(rng, -200, 200) / 4.0), y(uniform(rng, -50, 50) / 4.0), t(uniform(rng, -40, 40) / 4.0);
      CHECK(tau_eval<Real40>(f, x, y, t).value > 0);
      CHECK_NOTHROW(u_eval<Real40>(f, x, y, t));
    }
  }
}

TEST_CASE("grid sampling") {
  const LabeledGoDiagram ld = labeled_go(go_from_rows(2, 4, {"* .", ". o"}));
  ParamAssignment pa = default_params(ld);
  const GrassmannPoint a = point_of(ld, pa);
  const TauFunction f = make_tau(a, make_kappa({-2, -1, 0, Rational(3, 2)}));
  const BBox box{-6, 6, -4, 4};
  const FieldGrid one = grid_sample<Real40>(f, Rational(-1), box, 30, 20, 1);
  const FieldGrid many = grid_sample<Real40>(f, Rational(-1), box, 30, 20, 4);
  CHECK(one.u == many.u);
  CHECK(one.nx == 30);
  CHECK(one.ny == 20);
  CHECK(one.u.size() == 600);
  // Cell (row, col) centre is (xmin + (col + 1/2) dx, ymax - (row + 1/2) dy).
  const auto v = one.at(3, 7);
  const double x = -6 + 7.5 * 0.4, y = 4 - 3.5 * 0.4;
  if (v) CHECK(*v == doctest::Approx(static_cast<double>(u_eval<Real40>(f, Real40(x), Real40(y), Real40(-1)))));
  CHECK_THROWS_AS(grid_sample<Real40>(f, Rational(0), box, 1, 5), DomainError);
}

TEST_CASE("stabilised time") {
  Rng rng(64);
  const GrassmannPoint a = random_tnn(rng);
  const KappaVector kappa = random_kappa(rng, a.n(), TimeFrame::minus_infinity(), a.k());
  const TauFunction f = make_tau(a, kappa);
  const BBox b = auto_bbox(kappa, TimeFrame::minus_infinity());
  std::vector<Point> probes;
  for (int i = 0; i < 20; ++i)
    probes.push_back({b.xmin + (b.xmax - b.xmin) * Rational(uniform(rng, 1, 99), 100),
                      b.ymin + (b.ymax - b.ymin) * Rational(uniform(rng, 1, 99), 100)});
  const Rational t = stabilized_time(f, probes, Rational(-1));
  CHECK(t <= -1);
  for (const Point& p : probes) CHECK(dominant_term_rescaled(f, p, t) == dominant_term_rescaled(f, p, 2 * t));
  CHECK_THROWS_AS(stabilized_time(f, probes, Rational(1)), DomainError);
}
