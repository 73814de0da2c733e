#pragma once

// Points of the real Grassmannian as exact k x n matrices: the Marsh-Rietsch
// parametrisation of a Go-diagram's cell, Pluecker coordinates, matroids,
// Grassmann necklaces and the positivity tests built from them.

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "soliton/godiagram.hpp"
#include "soliton/rational.hpp"

namespace soliton {

using Subset = std::vector<int>;  // sorted, 1-indexed

std::vector<Subset> k_subsets(int n, int k);
std::string subset_string(const Subset& s);  // "{1,2,4}"

// Parameters keyed by reading-order position: p at blanks, m at black stones.
template <typename Scalar>
struct Params {
  std::map<int, Scalar> p, m;
};
using ParamAssignment = Params<Rational>;

ParamAssignment default_params(const LabeledGoDiagram& d);  // p = 1, m = 0

// phi_i places [[a,b],[c,d]] with a on the (i+1)st diagonal entry counted
// from the south-east corner.
template <typename Scalar>
Matrix<Scalar> phi(int n, int i, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Matrix<Scalar> g = Matrix<Scalar>::Identity(n, n);
  const int r0 = n - 1 - i, r1 = n - i;
  g(r0, r0) = a;
  g(r0, r1) = b;
  g(r1, r0) = c;
  g(r1, r1) = d;
  return g;
}

template <typename Scalar>
Matrix<Scalar> s_dot(int n, int i) {
  return phi<Scalar>(n, i, Scalar(0), Scalar(-1), Scalar(1), Scalar(0));
}
template <typename Scalar>
Matrix<Scalar> s_dot_inv(int n, int i) {
  return phi<Scalar>(n, i, Scalar(0), Scalar(1), Scalar(-1), Scalar(0));
}
template <typename Scalar>
Matrix<Scalar> x_elem(int n, int i, const Scalar& m) {
  return phi<Scalar>(n, i, Scalar(1), m, Scalar(0), Scalar(1));
}
template <typename Scalar>
Matrix<Scalar> y_elem(int n, int i, const Scalar& p) {
  return phi<Scalar>(n, i, Scalar(1), Scalar(0), p, Scalar(1));
}

void check_params(const LabeledGoDiagram& d, const ParamAssignment& params);

// g = g_1 ... g_m along the reading word: y_i(p) at blanks, s_i at white
// stones and x_i(m) s_i^{-1} at black stones.
template <typename Scalar>
Matrix<Scalar> build_group_element(const LabeledGoDiagram& d, const Params<Scalar>& params) {
  const Shape& s = d.shape();
  Matrix<Scalar> g = Matrix<Scalar>::Identity(s.n, s.n);
  for (std::size_t l = 0; l < d.order.size(); ++l) {
    const int pos = static_cast<int>(l) + 1;
    const int i = s.generator(d.order[l]);
    switch (d.mark_at(pos)) {
      case Mark::Blank: g = g * y_elem<Scalar>(s.n, i, params.p.at(pos)); break;
      case Mark::White: g = g * s_dot<Scalar>(s.n, i); break;
      case Mark::Black: g = g * x_elem<Scalar>(s.n, i, params.m.at(pos)) * s_dot_inv<Scalar>(s.n, i); break;
    }
  }
  return g;
}

RMatrix build_group_element(const LabeledGoDiagram& d, const ParamAssignment& params);

// Span of the leftmost k columns, written as A[r][c] = g[n+1-c][k+1-r].
template <typename Scalar>
Matrix<Scalar> project(const Matrix<Scalar>& g, int k) {
  const int n = static_cast<int>(g.rows());
  Matrix<Scalar> a(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = g(n - 1 - c, k - 1 - r);
  return a;
}

// Fraction-free elimination; exact for rationals and integers.
template <typename Scalar>
Scalar bareiss_det(Matrix<Scalar> m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Scalar(1);
  Scalar sign(1), prev(1);
  for (int c = 0; c < n - 1; ++c) {
    if (m(c, c) == Scalar(0)) {
      int r = c + 1;
      while (r < n && m(r, c) == Scalar(0)) ++r;
      if (r == n) return Scalar(0);
      m.row(c).swap(m.row(r));
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) m(i, j) = (m(i, j) * m(c, c) - m(i, c) * m(c, j)) / prev;
      m(i, c) = Scalar(0);
    }
    prev = m(c, c);
  }
  return sign * m(n - 1, n - 1);
}

template <typename Scalar>
Scalar minor_of(const Matrix<Scalar>& a, const Subset& cols) {
  Matrix<Scalar> sub(a.rows(), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) sub.col(static_cast<int>(j)) = a.col(cols[j] - 1);
  return bareiss_det<Scalar>(sub);
}

// Rank of the columns listed (1-indexed), by exact elimination.
int column_rank(const RMatrix& a, const std::vector<int>& cols);

class GrassmannPoint {
 public:
  explicit GrassmannPoint(RMatrix a);
  GrassmannPoint(const GrassmannPoint& other);
  GrassmannPoint& operator=(const GrassmannPoint& other);

  int k() const { return static_cast<int>(a_.rows()); }
  int n() const { return static_cast<int>(a_.cols()); }
  const RMatrix& matrix() const { return a_; }
  Rational plucker(const Subset& cols) const;
  std::map<Subset, Rational> all_pluckers() const;

 private:
  RMatrix a_;
  mutable std::map<Subset, Rational> cache_;
  mutable std::mutex mutex_;
};

GrassmannPoint point_of(const LabeledGoDiagram& d, const ParamAssignment& params);

struct Matroid {
  int k = 0, n = 0;
  std::vector<Subset> bases;  // lexicographic

  bool contains(const Subset& s) const;
  bool independent(const Subset& s) const;
  bool satisfies_exchange() const;
};

Matroid matroid_of(const GrassmannPoint& a);

using GrassmannNecklace = std::vector<Subset>;

GrassmannNecklace grassmann_necklace(const GrassmannPoint& a);
DecoratedPermutation necklace_to_decorated_perm(const GrassmannNecklace& necklace, int n);

// Rank of the circular interval from..to (inclusive, read cyclically).
int circular_rank(const GrassmannPoint& a, int from, int to);

struct SolitonPair {
  int i = 0, h = 0;
  auto operator<=>(const SolitonPair&) const = default;
};

struct UnboundedPairs {
  std::vector<SolitonPair> top, bottom;  // y >> 0 and y << 0
};

UnboundedPairs unbounded_soliton_pairs(const GrassmannPoint& a);

// Pivot columns of the row echelon form.
Subset pivot_columns(const RMatrix& a);
bool is_irreducible(const GrassmannPoint& a);

inline constexpr long kDefaultTnnBound = 100000;
bool is_tnn(const GrassmannPoint& a, long bound = kDefaultTnnBound);

// I = w{n-k+1..n} and I' = v{n-k+1..n}.
Subset lex_min_subset(const GoDiagram& d);
Subset lex_max_subset(const GoDiagram& d);

struct BoxPlucker {
  Box box;
  Subset subset;          // I_b of the positional formula (s_b inserted at stones)
  Rational predicted;     // value promised for Delta_{I_b}
  Subset chamber;         // v^In (w^In)^{-1} I, valid for every box
  Rational chamber_predicted;  // product of labels outside Y_b^In
};

BoxPlucker plucker_at_box(const LabeledGoDiagram& d, const ParamAssignment& params, const Box& b);

struct MaxMinPrediction {
  Subset lex_min, lex_max;
  Rational lex_min_value, lex_max_value;
};
MaxMinPrediction maxmin_prediction(const LabeledGoDiagram& d, const ParamAssignment& params);

struct PositivityReport {
  std::vector<std::pair<Subset, Rational>> tested;
  bool verdict = false;
};

PositivityReport positivity_report(const GrassmannPoint& a, const LabeledGoDiagram& d);

}  // namespace soliton
