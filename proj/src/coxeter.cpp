#include "soliton/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "soliton/errors.hpp"

namespace soliton {

Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError(ErrorCode::SizeMismatch, "compose on different n");
  Permutation r(p.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i] - 1];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

int length(const Permutation& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

bool bruhat_leq(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError(ErrorCode::SizeMismatch, "bruhat_leq on different n");
  // Tableau criterion: sorted prefixes of p are dominated entrywise by those of q.
  std::vector<int> a, b;
  for (std::size_t i = 0; i < p.size(); ++i) {
    a.insert(std::upper_bound(a.begin(), a.end(), p[i]), p[i]);
    b.insert(std::upper_bound(b.begin(), b.end(), q[i]), q[i]);
    for (std::size_t j = 0; j <= i; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

Permutation times_simple(const Permutation& p, int i) {
  Permutation r = p;
  std::swap(r[i - 1], r[i]);
  return r;
}

Permutation word_product(int n, const Word& word) {
  Permutation p = identity_perm(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw DomainError(ErrorCode::InvalidInput, "generator out of range");
    std::swap(p[i - 1], p[i]);
  }
  return p;
}

bool is_reduced(int n, const Word& word) {
  return length(word_product(n, word)) == static_cast<int>(word.size());
}

std::vector<int> apply_perm(const Permutation& p, const std::vector<int>& subset) {
  std::vector<int> out;
  out.reserve(subset.size());
  for (int s : subset) out.push_back(p[s - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Permutation& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

int Subexpression::count(StepClass c) const {
  return static_cast<int>(std::count(classes.begin(), classes.end(), c));
}

Subexpression build_subexpression(int n, const Word& word, const std::vector<bool>& mask) {
  if (word.size() != mask.size()) throw DomainError(ErrorCode::SizeMismatch, "mask length differs from word");
  if (!is_reduced(n, word)) throw DomainError(ErrorCode::NotReduced, "word is not reduced");
  Subexpression s;
  s.n = n;
  s.word = word;
  s.mask = mask;
  s.prefixes.push_back(identity_perm(n));
  for (std::size_t j = 0; j < word.size(); ++j) {
    const Permutation& prev = s.prefixes.back();
    if (!mask[j]) {
      s.classes.push_back(StepClass::Flat);
      s.prefixes.push_back(prev);
    } else {
      s.classes.push_back(descends(prev, word[j]) ? StepClass::Down : StepClass::Up);
      s.prefixes.push_back(times_simple(prev, word[j]));
    }
  }
  return s;
}

bool is_distinguished(const Subexpression& s) {
  for (std::size_t j = 0; j < s.word.size(); ++j)
    if (descends(s.prefixes[j], s.word[j]) && !s.mask[j]) return false;
  return true;
}

bool is_pds(const Subexpression& s) { return is_distinguished(s) && s.count(StepClass::Down) == 0; }

Subexpression pds_of(const Permutation& v, const Word& word) {
  const int n = static_cast<int>(v.size());
  if (!is_reduced(n, word)) throw DomainError(ErrorCode::NotReduced, "word is not reduced");
  std::vector<bool> mask(word.size(), false);
  Permutation u = v;
  for (std::size_t j = word.size(); j-- > 0;) {
    if (descends(u, word[j])) {
      mask[j] = true;
      u = times_simple(u, word[j]);
    }
  }
  if (u != identity_perm(n)) throw DomainError(ErrorCode::NotBelow, "v is not below the word's product");
  return build_subexpression(n, word, mask);
}

std::vector<std::vector<bool>> enumerate_distinguished(int n, const Word& word, int bound) {
  if (static_cast<int>(word.size()) > bound)
    throw DomainError(ErrorCode::BoundExceeded, "word longer than enumeration bound");
  if (!is_reduced(n, word)) throw DomainError(ErrorCode::NotReduced, "word is not reduced");
  std::vector<std::vector<bool>> out;
  std::vector<bool> mask(word.size());
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t j, const Permutation& u) {
    if (j == word.size()) {
      out.push_back(mask);
      return;
    }
    if (!descends(u, word[j])) {
      mask[j] = false;
      walk(j + 1, u);
    }
    mask[j] = true;
    walk(j + 1, times_simple(u, word[j]));
  };
  walk(0, identity_perm(n));
  return out;
}

bool is_grassmannian(const Permutation& w, int k) {
  const int n = static_cast<int>(w.size());
  for (int i = 1; i < n; ++i)
    if (w[i - 1] > w[i] && i != n - k) return false;
  return true;
}

}  // namespace soliton
