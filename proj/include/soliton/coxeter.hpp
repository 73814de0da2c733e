#pragma once

// Type A Coxeter combinatorics: permutations in one-line notation (1-indexed
// values), reduced words and distinguished subexpressions.

#include <string>
#include <vector>

namespace soliton {

// images[i-1] = pi(i).
using Permutation = std::vector<int>;

// Letters i stand for the simple transposition s_i = (i, i+1).
using Word = std::vector<int>;

Permutation identity_perm(int n);
bool is_permutation(const Permutation& p);
Permutation compose(const Permutation& p, const Permutation& q);  // p after q
Permutation inverse(const Permutation& p);
int length(const Permutation& p);
bool bruhat_leq(const Permutation& p, const Permutation& q);

// p * s_i, i.e. swap the entries in positions i and i+1.
Permutation times_simple(const Permutation& p, int i);
// True when p * s_i < p.
inline bool descends(const Permutation& p, int i) { return p[i - 1] > p[i]; }

Permutation word_product(int n, const Word& word);
bool is_reduced(int n, const Word& word);

// Applies p to every element of a set of positions and sorts the result.
std::vector<int> apply_perm(const Permutation& p, const std::vector<int>& subset);

std::string to_string(const Permutation& p);

enum class StepClass { Up, Flat, Down };

struct Subexpression {
  int n = 0;
  Word word;
  std::vector<bool> mask;
  std::vector<Permutation> prefixes;  // prefixes[0] = id, prefixes[j] after j letters
  std::vector<StepClass> classes;

  const Permutation& result() const { return prefixes.back(); }
  int count(StepClass c) const;
};

Subexpression build_subexpression(int n, const Word& word, const std::vector<bool>& mask);
bool is_distinguished(const Subexpression& s);
bool is_pds(const Subexpression& s);
Subexpression pds_of(const Permutation& v, const Word& word);

inline constexpr int kDefaultEnumerationBound = 20;
// Masks of all distinguished subexpressions in lexicographic order (false < true).
std::vector<std::vector<bool>> enumerate_distinguished(int n, const Word& word,
                                                       int bound = kDefaultEnumerationBound);

bool is_grassmannian(const Permutation& w, int k);

}  // namespace soliton
