#pragma once

// Young diagrams in the k x (n-k) rectangle, Go-diagrams and their reading
// words, plus the decorated permutation attached to a diagram.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soliton/coxeter.hpp"

namespace soliton {

struct Box {
  int row = 0;  // 1-indexed from the top
  int col = 0;  // 1-indexed from the left
  auto operator<=>(const Box&) const = default;
};

struct Shape {
  int k = 0, n = 0;
  std::vector<int> rows;  // weakly decreasing, entries <= n-k, at most k of them

  int width() const { return n - k; }
  int row_length(int i) const { return i >= 1 && i <= static_cast<int>(rows.size()) ? rows[i - 1] : 0; }
  int col_length(int j) const;
  int size() const;
  bool contains(const Box& b) const { return b.col >= 1 && b.col <= row_length(b.row); }
  int generator(const Box& b) const { return n - k + b.row - b.col; }
  std::vector<Box> boxes() const;  // row-major

  // Labels of the southeast lattice path, NE corner to SW corner.
  int row_label(int i) const;
  int col_label(int j) const;
  std::vector<int> row_labels() const;  // I(lambda), sorted
};

Shape make_shape(int k, int n, std::vector<int> rows);

// Position l-1 holds the box read l-th.
using ReadingOrder = std::vector<Box>;

ReadingOrder canonical_order(const Shape& shape);
bool is_linear_extension(const Shape& shape, const ReadingOrder& order);
Word shape_word(const Shape& shape, const ReadingOrder& order);
inline Word shape_word(const Shape& shape) { return shape_word(shape, canonical_order(shape)); }
Permutation shape_perm(const Shape& shape);

enum class Mark { Blank, White, Black };

char mark_char(Mark m);

struct GoDiagram {
  Shape shape;
  std::vector<std::vector<Mark>> marks;  // marks[i-1][j-1]

  Mark at(const Box& b) const { return marks[b.row - 1][b.col - 1]; }
  int count(Mark m) const;
};

// Builds marks from a mask on the canonical (or supplied) reading word.
GoDiagram diagram_from_mask(const Shape& shape, const std::vector<bool>& mask,
                            const std::optional<ReadingOrder>& order = std::nullopt);

Subexpression go_to_subexpression(const GoDiagram& d, const std::optional<ReadingOrder>& order = std::nullopt);
GoDiagram validate_go(const Shape& shape, const std::vector<std::vector<Mark>>& marks);

Permutation v_of(const GoDiagram& d);
inline Permutation w_of(const GoDiagram& d) { return shape_perm(d.shape); }

bool is_le_diagram(const GoDiagram& d);
// The forbidden-pattern check on the plus/zero view: no stone with a blank
// somewhere above it in its column and a blank somewhere left of it in its row.
bool satisfies_le_pattern(const GoDiagram& d);

struct DecoratedPermutation {
  Permutation perm;
  std::map<int, int> colors;  // fixed point -> +1 / -1
  bool operator==(const DecoratedPermutation&) const = default;
  int weak_excedances() const;
};

DecoratedPermutation decorated_permutation(const GoDiagram& d);

struct LabeledGoDiagram {
  GoDiagram diagram;
  ReadingOrder order;
  std::vector<std::vector<int>> position;  // position[i-1][j-1] in 1..|D|

  int position_of(const Box& b) const { return position[b.row - 1][b.col - 1]; }
  const Box& box_at(int pos) const { return order[pos - 1]; }
  Mark mark_at(int pos) const { return diagram.at(box_at(pos)); }
  const Shape& shape() const { return diagram.shape; }
  std::vector<int> blank_positions() const;
  std::vector<int> black_positions() const;
  // "1", "-1" or "p<i>".
  std::string label_text(const Box& b) const;
};

LabeledGoDiagram labeled_go(const GoDiagram& d, const std::optional<ReadingOrder>& order = std::nullopt);

struct TopRowRemoval {
  GoDiagram child;           // lives in Gr(k-1, n-1)
  int removed_label = 0;     // lattice label of the removed row in the parent
  std::vector<int> to_parent;  // to_parent[j-1] = parent label of child label j
};

TopRowRemoval remove_top_row(const GoDiagram& d);

std::string to_text(const GoDiagram& d);

}  // namespace soliton
