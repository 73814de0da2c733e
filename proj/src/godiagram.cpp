#include "soliton/godiagram.hpp"

#include <algorithm>

#include "soliton/errors.hpp"

namespace soliton {

namespace {

struct PathLabels {
  std::vector<int> rows, cols;
};

PathLabels path_labels(const Shape& s) {
  PathLabels out{std::vector<int>(s.k), std::vector<int>(s.width())};
  int label = 1, x = s.width();
  for (int i = 1; i <= s.k; ++i) {
    for (; x > s.row_length(i); --x) out.cols[x - 1] = label++;
    out.rows[i - 1] = label++;
  }
  for (; x > 0; --x) out.cols[x - 1] = label++;
  return out;
}

}  // namespace

int Shape::col_length(int j) const {
  int c = 0;
  for (int r : rows)
    if (r >= j) ++c;
  return c;
}

int Shape::size() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

std::vector<Box> Shape::boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i)
    for (int j = 1; j <= rows[i - 1]; ++j) out.push_back({i, j});
  return out;
}

int Shape::row_label(int i) const { return path_labels(*this).rows.at(i - 1); }
int Shape::col_label(int j) const { return path_labels(*this).cols.at(j - 1); }
std::vector<int> Shape::row_labels() const { return path_labels(*this).rows; }

Shape make_shape(int k, int n, std::vector<int> rows) {
  if (k < 0 || n < 1 || k > n) throw DomainError(ErrorCode::InvalidInput, "need 0 <= k <= n, n >= 1");
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (static_cast<int>(rows.size()) > k) throw DomainError(ErrorCode::InvalidInput, "more rows than k");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] > n - k) throw DomainError(ErrorCode::InvalidInput, "row longer than n-k");
    if (i && rows[i] > rows[i - 1]) throw DomainError(ErrorCode::InvalidInput, "row lengths must weakly decrease");
  }
  return Shape{k, n, rows};
}

ReadingOrder canonical_order(const Shape& shape) {
  ReadingOrder order;
  for (int i = static_cast<int>(shape.rows.size()); i >= 1; --i)
    for (int j = shape.row_length(i); j >= 1; --j) order.push_back({i, j});
  return order;
}

bool is_linear_extension(const Shape& shape, const ReadingOrder& order) {
  if (static_cast<int>(order.size()) != shape.size()) return false;
  std::map<Box, int> pos;
  for (std::size_t l = 0; l < order.size(); ++l) {
    if (!shape.contains(order[l]) || pos.count(order[l])) return false;
    pos[order[l]] = static_cast<int>(l);
  }
  // The box right of b and the box below b must both be read before b.
  for (const auto& [b, p] : pos) {
    Box right{b.row, b.col + 1}, below{b.row + 1, b.col};
    if (shape.contains(right) && pos[right] > p) return false;
    if (shape.contains(below) && pos[below] > p) return false;
  }
  return true;
}

Word shape_word(const Shape& shape, const ReadingOrder& order) {
  Word w;
  for (const Box& b : order) w.push_back(shape.generator(b));
  return w;
}

Permutation shape_perm(const Shape& shape) { return word_product(shape.n, shape_word(shape)); }

char mark_char(Mark m) {
  switch (m) {
    case Mark::Blank: return '.';
    case Mark::White: return 'o';
    case Mark::Black: return '*';
  }
  return '?';
}

int GoDiagram::count(Mark m) const {
  int c = 0;
  for (const auto& row : marks) c += static_cast<int>(std::count(row.begin(), row.end(), m));
  return c;
}

GoDiagram diagram_from_mask(const Shape& shape, const std::vector<bool>& mask,
                            const std::optional<ReadingOrder>& order) {
  ReadingOrder ord = order ? *order : canonical_order(shape);
  Subexpression s = build_subexpression(shape.n, shape_word(shape, ord), mask);
  GoDiagram d{shape, {}};
  for (int r : shape.rows) d.marks.emplace_back(r, Mark::Blank);
  for (std::size_t l = 0; l < ord.size(); ++l) {
    Mark m = Mark::Blank;
    if (s.classes[l] == StepClass::Up) m = Mark::White;
    if (s.classes[l] == StepClass::Down) m = Mark::Black;
    d.marks[ord[l].row - 1][ord[l].col - 1] = m;
  }
  return d;
}

Subexpression go_to_subexpression(const GoDiagram& d, const std::optional<ReadingOrder>& order) {
  ReadingOrder ord = order ? *order : canonical_order(d.shape);
  if (order && !is_linear_extension(d.shape, ord))
    throw DomainError(ErrorCode::NotLinearExtension, "reading order is not a linear extension");
  std::vector<bool> mask;
  for (const Box& b : ord) mask.push_back(d.at(b) != Mark::Blank);
  Subexpression s = build_subexpression(d.shape.n, shape_word(d.shape, ord), mask);
  for (std::size_t l = 0; l < ord.size(); ++l) {
    Mark m = d.at(ord[l]);
    bool ok = (m == Mark::Blank && s.classes[l] == StepClass::Flat) ||
              (m == Mark::White && s.classes[l] == StepClass::Up) ||
              (m == Mark::Black && s.classes[l] == StepClass::Down);
    if (!ok)
      throw DomainError(ErrorCode::ClassMismatch,
                        "stone colour disagrees with the step at box (" + std::to_string(ord[l].row) + "," +
                            std::to_string(ord[l].col) + ")",
                        static_cast<int>(l) + 1);
  }
  for (std::size_t l = 0; l < ord.size(); ++l)
    if (descends(s.prefixes[l], s.word[l]) && !s.mask[l])
      throw DomainError(ErrorCode::NotDistinguished,
                        "forced descent skipped at box (" + std::to_string(ord[l].row) + "," +
                            std::to_string(ord[l].col) + ")",
                        static_cast<int>(l) + 1);
  return s;
}

GoDiagram validate_go(const Shape& shape, const std::vector<std::vector<Mark>>& marks) {
  if (marks.size() != shape.rows.size()) throw DomainError(ErrorCode::InvalidInput, "mark rows do not match shape");
  for (std::size_t i = 0; i < marks.size(); ++i)
    if (static_cast<int>(marks[i].size()) != shape.rows[i])
      throw DomainError(ErrorCode::InvalidInput, "mark row " + std::to_string(i + 1) + " has wrong length");
  GoDiagram d{shape, marks};
  go_to_subexpression(d);
  return d;
}

Permutation v_of(const GoDiagram& d) { return go_to_subexpression(d).result(); }

bool satisfies_le_pattern(const GoDiagram& d) {
  for (const Box& b : d.shape.boxes()) {
    if (d.at(b) == Mark::Blank) continue;
    bool above = false, left = false;
    for (int i = 1; i < b.row; ++i) above = above || d.at({i, b.col}) == Mark::Blank;
    for (int j = 1; j < b.col; ++j) left = left || d.at({b.row, j}) == Mark::Blank;
    if (above && left) return false;
  }
  return true;
}

bool is_le_diagram(const GoDiagram& d) {
  bool le = d.count(Mark::Black) == 0;
  if (le != satisfies_le_pattern(d))
    throw DomainError(ErrorCode::InconsistentLabels, "Le-pattern test disagrees with the stone colours");
  return le;
}

int DecoratedPermutation::weak_excedances() const {
  int c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int h = static_cast<int>(i) + 1;
    if (perm[i] > h || (perm[i] == h && colors.at(h) == 1)) ++c;
  }
  return c;
}

DecoratedPermutation decorated_permutation(const GoDiagram& d) {
  const Shape& s = d.shape;
  DecoratedPermutation out;
  out.perm = compose(v_of(d), inverse(w_of(d)));
  auto labels = path_labels(s);
  for (int i = 1; i <= s.k; ++i) {
    bool blank = false;
    for (int j = 1; j <= s.row_length(i); ++j) blank = blank || d.at({i, j}) == Mark::Blank;
    if (!blank) out.colors[labels.rows[i - 1]] = 1;
  }
  for (int j = 1; j <= s.width(); ++j) {
    bool blank = false;
    for (int i = 1; i <= s.col_length(j); ++i) blank = blank || d.at({i, j}) == Mark::Blank;
    if (!blank) out.colors[labels.cols[j - 1]] = -1;
  }
  for (const auto& [h, c] : out.colors)
    if (out.perm[h - 1] != h)
      throw DomainError(ErrorCode::InconsistentLabels, "blank-free line " + std::to_string(h) + " is not fixed");
  for (int h = 1; h <= s.n; ++h)
    if (out.perm[h - 1] == h && !out.colors.count(h))
      throw DomainError(ErrorCode::InconsistentLabels, "fixed point " + std::to_string(h) + " has blanks");
  return out;
}

std::vector<int> LabeledGoDiagram::blank_positions() const {
  std::vector<int> out;
  for (std::size_t l = 0; l < order.size(); ++l)
    if (diagram.at(order[l]) == Mark::Blank) out.push_back(static_cast<int>(l) + 1);
  return out;
}

std::vector<int> LabeledGoDiagram::black_positions() const {
  std::vector<int> out;
  for (std::size_t l = 0; l < order.size(); ++l)
    if (diagram.at(order[l]) == Mark::Black) out.push_back(static_cast<int>(l) + 1);
  return out;
}

std::string LabeledGoDiagram::label_text(const Box& b) const {
  switch (diagram.at(b)) {
    case Mark::White: return "1";
    case Mark::Black: return "-1";
    case Mark::Blank: return "p" + std::to_string(position_of(b));
  }
  return "?";
}

LabeledGoDiagram labeled_go(const GoDiagram& d, const std::optional<ReadingOrder>& order) {
  ReadingOrder ord = order ? *order : canonical_order(d.shape);
  go_to_subexpression(d, ord);
  LabeledGoDiagram out{d, ord, {}};
  for (int r : d.shape.rows) out.position.emplace_back(r, 0);
  for (std::size_t l = 0; l < ord.size(); ++l) out.position[ord[l].row - 1][ord[l].col - 1] = static_cast<int>(l) + 1;
  return out;
}

TopRowRemoval remove_top_row(const GoDiagram& d) {
  const Shape& s = d.shape;
  if (s.k == 0 || s.rows.empty()) throw DomainError(ErrorCode::InvalidInput, "diagram has no rows");
  TopRowRemoval out;
  out.removed_label = s.row_label(1);
  Shape child = make_shape(s.k - 1, s.n - 1, std::vector<int>(s.rows.begin() + 1, s.rows.end()));
  std::vector<std::vector<Mark>> marks(d.marks.begin() + 1, d.marks.end());
  out.child = validate_go(child, marks);
  for (int j = 1; j <= s.n - 1; ++j) out.to_parent.push_back(j < out.removed_label ? j : j + 1);
  return out;
}

std::string to_text(const GoDiagram& d) {
  std::string out = "k=" + std::to_string(d.shape.k) + " n=" + std::to_string(d.shape.n) + "\n";
  for (const auto& row : d.marks) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += mark_char(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace soliton
