#include "soliton/wavefield.hpp"

namespace soliton {

Rational vandermonde_k(const KappaVector& kappa, const Subset& j) {
  Rational k(1);
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = a + 1; b < j.size(); ++b) k *= kappa(j[b]) - kappa(j[a]);
  return k;
}

TauFunction make_tau(const GrassmannPoint& a, const KappaVector& kappa) {
  if (kappa.n() != a.n()) throw DomainError(ErrorCode::SizeMismatch, "kappa length differs from n");
  TauFunction f{kappa, {}};
  for (const auto& [s, delta] : a.all_pluckers()) {
    if (delta == 0) continue;
    TauTerm term{s, delta * vandermonde_k(kappa, s), Rational(0), Rational(0), Rational(0)};
    for (int j : s) {
      const Rational& k = kappa(j);
      term.kx += k;
      term.ky += k * k;
      term.kt += k * k * k;
    }
    f.terms.push_back(std::move(term));
  }
  return f;
}

std::vector<Subset> dominant_term_rescaled(const TauFunction& f, const Point& p, const Rational& t) {
  return dominant_term<Real40>(f, to_real<Real40>(t * p.x), to_real<Real40>(t * p.y), to_real<Real40>(t));
}

Rational stabilized_time(const TauFunction& f, const std::vector<Point>& rescaled_probes, const Rational& t0,
                         int max_doublings) {
  if (!(t0 < 0)) throw DomainError(ErrorCode::InvalidInput, "stabilization starts from a negative time");
  auto labels = [&](const Rational& t) {
    std::vector<std::vector<Subset>> out;
    for (const Point& p : rescaled_probes) out.push_back(dominant_term_rescaled(f, p, t));
    return out;
  };
  Rational t = t0;
  auto prev = labels(t);
  int unchanged = 0;
  for (int step = 0; step < max_doublings; ++step) {
    t *= 2;
    auto cur = labels(t);
    unchanged = cur == prev ? unchanged + 1 : 0;
    if (unchanged == 2) return t;
    prev = std::move(cur);
  }
  throw DomainError(ErrorCode::BoundExceeded, "dominant terms did not stabilize");
}

}  // namespace soliton
