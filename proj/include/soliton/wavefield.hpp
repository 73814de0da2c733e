#pragma once

// Numeric tau-function tau_A = sum_J Delta_J K_J exp(sum_{j in J} theta_j)
// and the KP field u = 2 (ln tau)_xx, evaluated in floating point with the
// largest exponent factored out. The real type sets the working precision.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "soliton/errors.hpp"
#include "soliton/geometry.hpp"
#include "soliton/grassmann.hpp"
#include "soliton/tropical.hpp"

namespace soliton {

using Real40 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>,
                                             boost::multiprecision::et_off>;

struct TauTerm {
  Subset subset;
  Rational coefficient;  // Delta_J K_J
  Rational kx, ky, kt;   // exponent = kx x + ky y + kt t
};

struct TauFunction {
  KappaVector kappa;
  std::vector<TauTerm> terms;  // one per nonzero Pluecker coordinate, lexicographic
};

Rational vandermonde_k(const KappaVector& kappa, const Subset& j);  // K_J
TauFunction make_tau(const GrassmannPoint& a, const KappaVector& kappa);

template <typename Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_floating_point_v<Real>)
    return q.convert_to<Real>();
  else
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

// Relative size below which tau counts as zero.
template <typename Real>
Real singular_threshold() {
  const int digits = std::numeric_limits<Real>::digits10;
  using std::pow;
  return pow(Real(10), Real(-std::max(digits - 10, 4)));
}

// value * exp(log_scale)
template <typename Real>
struct ScaledReal {
  Real value;
  Real log_scale;
};

namespace detail {

template <typename Real>
struct TauParts {
  Real tau{0}, tau_x{0}, tau_xx{0}, largest{0};
};

template <typename Real>
std::vector<Real> exponents(const TauFunction& f, const Real& x, const Real& y, const Real& t) {
  std::vector<Real> e;
  e.reserve(f.terms.size());
  for (const auto& term : f.terms)
    e.push_back(to_real<Real>(term.kx) * x + to_real<Real>(term.ky) * y + to_real<Real>(term.kt) * t);
  return e;
}

template <typename Real>
TauParts<Real> parts(const TauFunction& f, const Real& x, const Real& y, const Real& t, Real& shift) {
  using std::abs;
  using std::exp;
  auto e = exponents<Real>(f, x, y, t);
  TauParts<Real> p;
  if (e.empty()) return p;
  shift = *std::max_element(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Real c = to_real<Real>(f.terms[i].coefficient) * exp(e[i] - shift);
    const Real a = to_real<Real>(f.terms[i].kx);
    p.tau += c;
    p.tau_x += a * c;
    p.tau_xx += a * a * c;
    p.largest = std::max(p.largest, Real(abs(c)));
  }
  return p;
}

}  // namespace detail

template <typename Real = Real40>
ScaledReal<Real> tau_eval(const TauFunction& f, const Real& x, const Real& y, const Real& t) {
  Real shift(0);
  auto p = detail::parts<Real>(f, x, y, t, shift);
  return {p.tau, shift};
}

// u = 2 (tau tau_xx - tau_x^2) / tau^2; SINGULAR where tau vanishes to working precision.
template <typename Real = Real40>
Real u_eval(const TauFunction& f, const Real& x, const Real& y, const Real& t) {
  using std::abs;
  Real shift(0);
  auto p = detail::parts<Real>(f, x, y, t, shift);
  if (f.terms.empty() || abs(p.tau) < singular_threshold<Real>() * p.largest)
    throw DomainError(ErrorCode::Singular, "tau vanishes at this point");
  return 2 * (p.tau * p.tau_xx - p.tau_x * p.tau_x) / (p.tau * p.tau);
}

// argmax_J ln|Delta_J K_J| + exponent; every term within `tol` of the maximum is returned.
template <typename Real = Real40>
std::vector<Subset> dominant_term(const TauFunction& f, const Real& x, const Real& y, const Real& t,
                                  const Real& tol = Real(1e-20)) {
  using std::abs;
  using std::log;
  auto e = detail::exponents<Real>(f, x, y, t);
  std::vector<Real> score(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) score[i] = e[i] + log(abs(to_real<Real>(f.terms[i].coefficient)));
  std::vector<Subset> out;
  if (score.empty()) return out;
  const Real top = *std::max_element(score.begin(), score.end());
  const Real slack = tol * std::max(Real(1), Real(abs(top)));
  for (std::size_t i = 0; i < score.size(); ++i)
    if (top - score[i] <= slack) out.push_back(f.terms[i].subset);
  return out;
}

struct FieldGrid {
  int nx = 0, ny = 0;
  BBox bbox;                             // physical frame
  std::vector<std::optional<double>> u;  // row-major, row 0 at ymax; empty where SINGULAR
  std::optional<double> at(int row, int col) const { return u[static_cast<std::size_t>(row) * nx + col]; }
};

// Samples cell centres; rows are split across threads, each written by exactly one.
template <typename Real = Real40>
FieldGrid grid_sample(const TauFunction& f, const Rational& t, const BBox& box, int nx, int ny,
                      unsigned threads = std::thread::hardware_concurrency()) {
  if (nx < 2 || ny < 2) throw DomainError(ErrorCode::InvalidInput, "grid resolution must be at least 2x2");
  FieldGrid g{nx, ny, box, std::vector<std::optional<double>>(static_cast<std::size_t>(nx) * ny)};
  const Real x0 = to_real<Real>(box.xmin), y1 = to_real<Real>(box.ymax);
  const Real dx = to_real<Real>(box.xmax - box.xmin) / nx, dy = to_real<Real>(box.ymax - box.ymin) / ny;
  const Real tt = to_real<Real>(t);
  auto row_job = [&](int row) {
    const Real y = y1 - (Real(row) + Real(0.5)) * dy;
    for (int col = 0; col < nx; ++col) {
      const Real x = x0 + (Real(col) + Real(0.5)) * dx;
      try {
        g.u[static_cast<std::size_t>(row) * nx + col] = static_cast<double>(u_eval<Real>(f, x, y, tt));
      } catch (const DomainError&) {
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ny)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (int row = static_cast<int>(w); row < ny; row += static_cast<int>(threads)) row_job(row);
    });
  for (auto& th : pool) th.join();
  return g;
}

// Doubles |t| from t0 < 0 until the numeric dominant terms at the rescaled
// probes (physical point t * probe) are unchanged for two consecutive doublings.
Rational stabilized_time(const TauFunction& f, const std::vector<Point>& rescaled_probes, const Rational& t0,
                         int max_doublings = 40);

// Dominant term at a rescaled point for a negative time, in Real40.
std::vector<Subset> dominant_term_rescaled(const TauFunction& f, const Point& p, const Rational& t);

}  // namespace soliton
