#pragma once

// Shared test helpers: seeded generators for diagrams and parameters, and
// brute-force oracles that do not share code with the library routines they
// check (Leibniz determinants, exhaustive lexicographic searches, ...).

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "soliton/godiagram.hpp"
#include "soliton/grassmann.hpp"
#include "soliton/io.hpp"
#include "soliton/tropical.hpp"

namespace testing {

using namespace soliton;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Rational random_rational(Rng& rng, bool nonzero, int bound = 6) {
  int num = 0;
  do num = uniform(rng, -bound, bound);
  while (nonzero && num == 0);
  return Rational(num, uniform(rng, 1, 4));
}

inline Rational random_positive(Rng& rng) { return Rational(uniform(rng, 1, 7), uniform(rng, 1, 4)); }

// Marks from rows such as "* . o"; spaces are ignored.
inline GoDiagram go_from_rows(int k, int n, const std::vector<std::string>& rows) {
  std::vector<std::vector<Mark>> marks;
  std::vector<int> lengths;
  for (const auto& r : rows) {
    std::vector<Mark> row;
    for (char c : r) {
      if (c == '.') row.push_back(Mark::Blank);
      if (c == 'o') row.push_back(Mark::White);
      if (c == '*') row.push_back(Mark::Black);
    }
    lengths.push_back(static_cast<int>(row.size()));
    marks.push_back(row);
  }
  return validate_go(make_shape(k, n, lengths), marks);
}

inline Shape random_shape(Rng& rng, int k, int n) {
  std::vector<int> rows;
  int prev = n - k;
  for (int i = 0; i < k; ++i) {
    prev = uniform(rng, 0, prev);
    if (prev == 0) break;
    rows.push_back(prev);
  }
  if (rows.empty()) rows.push_back(1);
  return make_shape(k, n, rows);
}

// A distinguished subexpression built left to right: forced descents are
// taken (black stones), other letters are taken with probability p_white.
inline GoDiagram random_go(Rng& rng, const Shape& shape, double p_white = 0.35) {
  const Word word = shape_word(shape);
  Permutation v = identity_perm(shape.n);
  std::vector<bool> mask;
  for (int s : word) {
    const bool take = v[s - 1] > v[s] || coin(rng, p_white);
    mask.push_back(take);
    if (take) std::swap(v[s - 1], v[s]);
  }
  return diagram_from_mask(shape, mask);
}

// White stones and blanks obeying the Le rule: a stone never has a blank
// both somewhere above it and somewhere to its left.
inline GoDiagram random_le(Rng& rng, const Shape& shape, double p_white = 0.4) {
  std::vector<std::vector<Mark>> marks;
  for (int r = 1; r <= static_cast<int>(shape.rows.size()); ++r) {
    marks.emplace_back();
    for (int c = 1; c <= shape.row_length(r); ++c) {
      bool blank_left = false, blank_above = false;
      for (int cc = 1; cc < c; ++cc) blank_left |= marks[r - 1][cc - 1] == Mark::Blank;
      for (int rr = 1; rr < r; ++rr) blank_above |= marks[rr - 1][c - 1] == Mark::Blank;
      const bool stone = !(blank_left && blank_above) && coin(rng, p_white);
      marks.back().push_back(stone ? Mark::White : Mark::Blank);
    }
  }
  return validate_go(shape, marks);
}

inline ParamAssignment random_params(Rng& rng, const LabeledGoDiagram& ld, bool positive = false) {
  ParamAssignment pa;
  for (int pos : ld.blank_positions()) pa.p[pos] = positive ? random_positive(rng) : random_rational(rng, true);
  for (int pos : ld.black_positions()) pa.m[pos] = random_rational(rng, false);
  return pa;
}

// ------------------------------------------------------------------ oracles

// Sum over all permutations of the columns.
inline Rational leibniz_det(const RMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Rational term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Rational oracle_minor(const RMatrix& a, const Subset& cols) {
  RMatrix sub(a.rows(), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) sub.col(static_cast<int>(j)) = a.col(cols[j] - 1);
  return leibniz_det(sub);
}

inline std::vector<Subset> oracle_subsets(int n, int k) {
  std::vector<Subset> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Subset s;
    for (int i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i + 1);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::map<Subset, Rational> oracle_pluckers(const RMatrix& a) {
  std::map<Subset, Rational> out;
  for (const Subset& s : oracle_subsets(static_cast<int>(a.cols()), static_cast<int>(a.rows())))
    out[s] = oracle_minor(a, s);
  return out;
}

// All nonzero minors of one sign.
inline bool oracle_tnn(const RMatrix& a) {
  int seen = 0;
  for (const auto& [s, v] : oracle_pluckers(a)) {
    if (v == 0) continue;
    if (seen == 0) seen = v.sign();
    if (v.sign() != seen) return false;
  }
  return true;
}

// I_i: lexicographically least nonzero subset for the order i < i+1 < ... < i-1.
inline GrassmannNecklace oracle_necklace(const RMatrix& a) {
  const int n = static_cast<int>(a.cols()), k = static_cast<int>(a.rows());
  const auto all = oracle_pluckers(a);
  GrassmannNecklace out;
  for (int i = 1; i <= n; ++i) {
    auto key = [&](const Subset& s) {
      std::vector<int> r;
      for (int x : s) r.push_back((x - i + n) % n);
      std::sort(r.begin(), r.end());
      return r;
    };
    std::optional<Subset> best;
    for (const Subset& s : oracle_subsets(n, k))
      if (all.at(s) != 0 && (!best || key(s) < key(*best))) best = s;
    out.push_back(*best);
  }
  return out;
}

// Subsets J maximizing sum theta_j among nonzero minors, straight from the definition.
inline std::vector<Subset> oracle_dominant(const std::map<Subset, Rational>& pluckers, const KappaVector& kappa,
                                           const Point& p, const TimeFrame& tf) {
  std::vector<Subset> best;
  Rational top(0);
  for (const auto& [s, v] : pluckers) {
    if (v == 0) continue;
    Rational sum(0);
    for (int j : s) {
      const Rational& c = kappa(j);
      if (tf.frame == Frame::Physical)
        sum += c * p.x + c * c * p.y + c * c * c * tf.t;
      else
        sum -= c * p.x + c * c * p.y + c * c * c;
    }
    if (best.empty() || sum > top) {
      best = {s};
      top = sum;
    } else if (sum == top) {
      best.push_back(s);
    }
  }
  return best;
}

// Solves phi_i = phi_l = phi_m by Cramer's rule on kappa xbar + kappa^2 ybar = -kappa^3 differences.
inline Point oracle_trivalent(const KappaVector& kappa, int i, int l, int m) {
  const Rational a = kappa(i), b = kappa(l), c = kappa(m);
  const Rational a11 = b - a, a12 = b * b - a * a, r1 = -(b * b * b - a * a * a);
  const Rational a21 = c - a, a22 = c * c - a * a, r2 = -(c * c * c - a * a * a);
  const Rational det = a11 * a22 - a12 * a21;
  return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
}

// Length as the number of inversions.
inline int oracle_length(const Permutation& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

// Bruhat order as the transitive closure of p < p t with l(p t) > l(p).
inline std::set<Permutation> oracle_bruhat_below(const Permutation& q) {
  std::set<Permutation> seen{q};
  std::vector<Permutation> stack{q};
  while (!stack.empty()) {
    Permutation p = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        Permutation r = p;
        std::swap(r[i], r[j]);
        if (oracle_length(r) < oracle_length(p) && seen.insert(r).second) stack.push_back(r);
      }
  }
  return seen;
}

// Label-preserving comparison of the dual graphs of two plots.
inline bool same_region_graph(const ContourPlot& a, const ContourPlot& b) {
  return a.region_labels() == b.region_labels() && a.adjacency() == b.adjacency();
}

inline KappaVector kappa_of(std::vector<Rational> v) { return make_kappa(std::move(v)); }

inline KappaVector random_kappa(Rng& rng, int n, const TimeFrame& tf, int k) {
  for (;;) {
    std::vector<Rational> v;
    Rational x(uniform(rng, -12, -6), 2);
    for (int i = 0; i < n; ++i) {
      v.push_back(x);
      x += Rational(uniform(rng, 2, 9), uniform(rng, 2, 5));
    }
    KappaVector kv = make_kappa(v);
    if (phases_distinct(kv, k, tf)) return kv;
  }
}

}  // namespace testing
