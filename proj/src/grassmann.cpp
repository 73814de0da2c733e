#include "soliton/grassmann.hpp"

#include <algorithm>
#include <functional>

#include "soliton/errors.hpp"

namespace soliton {

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset s(k);
  std::function<void(int, int)> rec = [&](int idx, int start) {
    if (idx == k) {
      out.push_back(s);
      return;
    }
    for (int v = start; v <= n - (k - idx) + 1; ++v) {
      s[idx] = v;
      rec(idx + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

std::string subset_string(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

ParamAssignment default_params(const LabeledGoDiagram& d) {
  ParamAssignment p;
  for (int pos : d.blank_positions()) p.p[pos] = 1;
  for (int pos : d.black_positions()) p.m[pos] = 0;
  return p;
}

void check_params(const LabeledGoDiagram& d, const ParamAssignment& params) {
  auto blanks = d.blank_positions(), blacks = d.black_positions();
  if (params.p.size() != blanks.size() || params.m.size() != blacks.size())
    throw DomainError(ErrorCode::BadParameters, "parameter keys do not match the diagram");
  for (int pos : blanks) {
    auto it = params.p.find(pos);
    if (it == params.p.end()) throw DomainError(ErrorCode::BadParameters, "missing p" + std::to_string(pos), pos);
    if (it->second == 0) throw DomainError(ErrorCode::BadParameters, "p" + std::to_string(pos) + " is zero", pos);
  }
  for (int pos : blacks)
    if (!params.m.count(pos)) throw DomainError(ErrorCode::BadParameters, "missing m" + std::to_string(pos), pos);
}

RMatrix build_group_element(const LabeledGoDiagram& d, const ParamAssignment& params) {
  check_params(d, params);
  return build_group_element<Rational>(d, params);
}

int column_rank(const RMatrix& a, const std::vector<int>& cols) {
  RMatrix m(a.rows(), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<int>(j)) = a.col(cols[j] - 1);
  int rank = 0;
  const int rows = static_cast<int>(m.rows());
  for (int c = 0; c < m.cols() && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.row(rank).swap(m.row(piv));
    for (int r = rank + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(rank, c);
      m.row(r) -= f * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

GrassmannPoint::GrassmannPoint(RMatrix a) : a_(std::move(a)) {
  if (column_rank(a_, [&] {
        std::vector<int> all(a_.cols());
        for (int j = 0; j < a_.cols(); ++j) all[j] = j + 1;
        return all;
      }()) != a_.rows())
    throw DomainError(ErrorCode::InvalidInput, "matrix does not have full row rank");
}

GrassmannPoint::GrassmannPoint(const GrassmannPoint& other) : a_(other.a_) {
  std::lock_guard<std::mutex> lock(other.mutex_);
  cache_ = other.cache_;
}

GrassmannPoint& GrassmannPoint::operator=(const GrassmannPoint& other) {
  if (this == &other) return *this;
  std::map<Subset, Rational> copy;
  {
    std::lock_guard<std::mutex> lock(other.mutex_);
    copy = other.cache_;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  a_ = other.a_;
  cache_ = std::move(copy);
  return *this;
}

Rational GrassmannPoint::plucker(const Subset& cols) const {
  if (static_cast<int>(cols.size()) != k()) throw DomainError(ErrorCode::SizeMismatch, "subset size differs from k");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(cols); it != cache_.end()) return it->second;
  }
  Rational v = minor_of<Rational>(a_, cols);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(cols, v);
  return v;
}

std::map<Subset, Rational> GrassmannPoint::all_pluckers() const {
  std::map<Subset, Rational> out;
  for (const Subset& s : k_subsets(n(), k())) out[s] = plucker(s);
  return out;
}

GrassmannPoint point_of(const LabeledGoDiagram& d, const ParamAssignment& params) {
  return GrassmannPoint(project<Rational>(build_group_element(d, params), d.shape().k));
}

bool Matroid::contains(const Subset& s) const { return std::binary_search(bases.begin(), bases.end(), s); }

bool Matroid::independent(const Subset& s) const {
  for (const Subset& b : bases)
    if (std::includes(b.begin(), b.end(), s.begin(), s.end())) return true;
  return false;
}

bool Matroid::satisfies_exchange() const {
  for (const Subset& a : bases)
    for (const Subset& b : bases)
      for (int x : a) {
        if (std::binary_search(b.begin(), b.end(), x)) continue;
        bool found = false;
        for (int y : b) {
          if (std::binary_search(a.begin(), a.end(), y)) continue;
          Subset c = a;
          c.erase(std::find(c.begin(), c.end(), x));
          c.insert(std::upper_bound(c.begin(), c.end(), y), y);
          if (contains(c)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
  return true;
}

Matroid matroid_of(const GrassmannPoint& a) {
  Matroid m{a.k(), a.n(), {}};
  for (const Subset& s : k_subsets(a.n(), a.k()))
    if (a.plucker(s) != 0) m.bases.push_back(s);
  return m;
}

GrassmannNecklace grassmann_necklace(const GrassmannPoint& a) {
  const int n = a.n(), k = a.k();
  GrassmannNecklace out;
  for (int i = 1; i <= n; ++i) {
    // Greedy in the order i < i+1 < ... < i-1 gives the lex-min basis.
    std::vector<int> chosen;
    for (int step = 0; step < n && static_cast<int>(chosen.size()) < k; ++step) {
      int c = (i - 1 + step) % n + 1;
      chosen.push_back(c);
      if (column_rank(a.matrix(), chosen) < static_cast<int>(chosen.size())) chosen.pop_back();
    }
    std::sort(chosen.begin(), chosen.end());
    out.push_back(chosen);
  }
  return out;
}

DecoratedPermutation necklace_to_decorated_perm(const GrassmannNecklace& necklace, int n) {
  if (static_cast<int>(necklace.size()) != n) throw DomainError(ErrorCode::MalformedNecklace, "wrong length");
  DecoratedPermutation out;
  out.perm.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    const Subset& cur = necklace[i - 1];
    const Subset& next = necklace[i % n];
    if (cur.size() != next.size()) throw DomainError(ErrorCode::MalformedNecklace, "subset sizes differ");
    bool has_i = std::binary_search(cur.begin(), cur.end(), i);
    if (!has_i) {
      if (cur != next) throw DomainError(ErrorCode::MalformedNecklace, "I_i changes although i is absent");
      out.perm[i - 1] = i;
      out.colors[i] = -1;
      continue;
    }
    Subset rest = cur;
    rest.erase(std::find(rest.begin(), rest.end(), i));
    Subset added;
    std::set_difference(next.begin(), next.end(), rest.begin(), rest.end(), std::back_inserter(added));
    if (added.size() != 1 || !std::includes(next.begin(), next.end(), rest.begin(), rest.end()))
      throw DomainError(ErrorCode::MalformedNecklace, "consecutive subsets are not an exchange");
    int j = added[0];
    if (out.perm[j - 1] != 0) throw DomainError(ErrorCode::MalformedNecklace, "two entries map to the same value");
    out.perm[j - 1] = i;
    if (j == i) out.colors[i] = 1;
  }
  if (!is_permutation(out.perm)) throw DomainError(ErrorCode::MalformedNecklace, "result is not a permutation");
  return out;
}

namespace {

std::vector<int> interval(int n, int start, int count) {
  std::vector<int> cols;
  for (int s = 0; s < count; ++s) cols.push_back((start - 1 + s) % n + 1);
  return cols;
}

}  // namespace

int circular_rank(const GrassmannPoint& a, int from, int to) {
  const int n = a.n();
  if (from < 1 || from > n || to < 1 || to > n) throw DomainError(ErrorCode::InvalidInput, "column out of range");
  int count = ((to - from) % n + n) % n + 1;
  return column_rank(a.matrix(), interval(n, from, count));
}

UnboundedPairs unbounded_soliton_pairs(const GrassmannPoint& a) {
  const int n = a.n();
  UnboundedPairs out;
  auto r = [&](int start, int count) { return column_rank(a.matrix(), interval(n, start, count)); };
  for (int i = 1; i <= n; ++i)
    for (int h = i + 1; h <= n; ++h) {
      int len = h - i;  // columns i..h-1
      int r1 = r(i, len), r2 = r(i + 1, len), r3 = r(i, len + 1), r4 = r(i + 1, len - 1);
      if (r1 == r2 && r2 == r3 && r3 == r4 + 1) out.bottom.push_back({i, h});
      int wrap = n - h + i;  // columns h..i-1 read cyclically
      int s1 = r(h, wrap), s2 = r(h % n + 1, wrap), s3 = r(h, wrap + 1), s4 = r(h % n + 1, wrap - 1);
      if (s1 == s2 && s2 == s3 && s3 == s4 + 1) out.top.push_back({i, h});
    }
  return out;
}

Subset pivot_columns(const RMatrix& a) {
  Subset piv;
  std::vector<int> cols;
  int rank = 0;
  for (int c = 1; c <= a.cols(); ++c) {
    cols.push_back(c);
    int nr = column_rank(a, cols);
    if (nr > rank) {
      piv.push_back(c);
      rank = nr;
    }
  }
  return piv;
}

bool is_irreducible(const GrassmannPoint& a) {
  // Row-reduce to reduced echelon form, then inspect columns and rows.
  RMatrix m = a.matrix();
  const int rows = a.k(), cols = a.n();
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.row(rank).swap(m.row(piv));
    m.row(rank) /= Rational(m(rank, c));
    for (int r = 0; r < rows; ++r)
      if (r != rank && m(r, c) != 0) m.row(r) -= Rational(m(r, c)) * m.row(rank);
    pivots.push_back(c);
    ++rank;
  }
  for (int c = 0; c < cols; ++c) {
    bool nonzero = false;
    for (int r = 0; r < rows; ++r) nonzero = nonzero || m(r, c) != 0;
    if (!nonzero) return false;
  }
  for (int r = 0; r < rows; ++r) {
    bool extra = false;
    for (int c = 0; c < cols; ++c)
      if (c != pivots[r] && m(r, c) != 0) extra = true;
    if (!extra) return false;
  }
  return true;
}

bool is_tnn(const GrassmannPoint& a, long bound) {
  const auto subsets = k_subsets(a.n(), a.k());
  if (static_cast<long>(subsets.size()) > bound) throw DomainError(ErrorCode::BoundExceeded, "too many minors");
  int ref = 0;
  for (const Subset& s : subsets) {
    int sg = a.plucker(s).sign();
    if (sg == 0) continue;
    if (ref == 0) ref = sg;
    if (sg != ref) return false;
  }
  return true;
}

Subset lex_min_subset(const GoDiagram& d) {
  Subset top;
  for (int h = d.shape.n - d.shape.k + 1; h <= d.shape.n; ++h) top.push_back(h);
  return apply_perm(w_of(d), top);
}

Subset lex_max_subset(const GoDiagram& d) {
  Subset top;
  for (int h = d.shape.n - d.shape.k + 1; h <= d.shape.n; ++h) top.push_back(h);
  return apply_perm(v_of(d), top);
}

MaxMinPrediction maxmin_prediction(const LabeledGoDiagram& d, const ParamAssignment& params) {
  MaxMinPrediction out;
  out.lex_min = lex_min_subset(d.diagram);
  out.lex_max = lex_max_subset(d.diagram);
  Rational v = 1;
  for (const auto& [pos, p] : params.p) v *= p;
  if (params.m.size() % 2) v = -v;
  out.lex_min_value = v;
  out.lex_max_value = 1;
  return out;
}

BoxPlucker plucker_at_box(const LabeledGoDiagram& d, const ParamAssignment& params, const Box& b) {
  const Shape& s = d.shape();
  if (!s.contains(b)) throw DomainError(ErrorCode::InvalidInput, "box outside the diagram");
  check_params(d, params);
  Permutation w_in = identity_perm(s.n), v_in = identity_perm(s.n);
  Rational out_product = 1;
  for (std::size_t l = 0; l < d.order.size(); ++l) {
    const Box& c = d.order[l];
    const int pos = static_cast<int>(l) + 1;
    const Mark m = d.diagram.at(c);
    if (c.row >= b.row && c.col >= b.col) {
      w_in = times_simple(w_in, s.generator(c));
      if (m != Mark::Blank) v_in = times_simple(v_in, s.generator(c));
    } else {
      if (m == Mark::Blank) out_product *= params.p.at(pos);
      if (m == Mark::Black) out_product = -out_product;
    }
  }
  const Subset base = lex_min_subset(d.diagram);
  const Permutation w_in_inv = inverse(w_in);
  BoxPlucker out;
  out.box = b;
  out.chamber = apply_perm(compose(v_in, w_in_inv), base);
  out.chamber_predicted = out_product;
  const Mark mb = d.diagram.at(b);
  if (mb == Mark::Blank) {
    out.subset = out.chamber;
    out.predicted = out_product;
    return out;
  }
  Permutation sb = times_simple(identity_perm(s.n), s.generator(b));
  out.subset = apply_perm(compose(compose(v_in, sb), w_in_inv), base);
  if (mb == Mark::White) {
    out.predicted = 0;
    return out;
  }
  ParamAssignment zeroed = params;
  const int pos_b = d.position_of(b);
  zeroed.m[pos_b] = 0;
  Rational rest = minor_of<Rational>(project<Rational>(build_group_element(d, zeroed), s.k), out.subset);
  out.predicted = -out_product * params.m.at(pos_b) + rest;
  return out;
}

PositivityReport positivity_report(const GrassmannPoint& a, const LabeledGoDiagram& d) {
  PositivityReport out;
  std::vector<Subset> tests{lex_min_subset(d.diagram)};
  ParamAssignment dummy = default_params(d);
  for (const Box& b : d.order) tests.push_back(plucker_at_box(d, dummy, b).chamber);
  out.verdict = true;
  for (const Subset& t : tests) {
    Rational v = a.plucker(t);
    out.tested.emplace_back(t, v);
    if (v <= 0) out.verdict = false;
  }
  return out;
}

}  // namespace soliton
