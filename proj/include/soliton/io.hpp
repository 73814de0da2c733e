#pragma once

// Text formats read and written by the command-line tool: diagram files,
// matrix files, the versioned contour-plot JSON document and SVG/DOT views.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "soliton/godiagram.hpp"
#include "soliton/grassmann.hpp"
#include "soliton/tropical.hpp"
#include "soliton/wavefield.hpp"

namespace soliton {

inline constexpr const char* kContourSchema = "contour-plot/1";

// Failures carry the 1-based line and column of the offending text (0 when
// the problem is not tied to one place).
class ParseError : public DomainError {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& what)
      : DomainError(code, where(line, column) + what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string where(int line, int column) {
    if (line == 0) return "";
    return "line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : "") + ": ";
  }
  int line_, column_;
};

struct DiagramInput {
  LabeledGoDiagram labeled;
  ParamAssignment params;
  const GoDiagram& diagram() const { return labeled.diagram; }
};

// k=<k> n=<n>
// <one line per row: '.', 'o', '*', blanks between marks ignored>
// order:   (optional) r,c tokens listing every box once
// params:  (optional) p<pos> = <rational>, m<pos> = <rational>
// '#' starts a comment. Unset p default to 1, unset m to 0.
DiagramInput parse_diagram(std::string_view text);

// matrix k=<k> n=<n>
// <k rows of n rationals>
RMatrix parse_matrix(std::string_view text);

// True when the first meaningful line starts with "matrix".
bool looks_like_matrix(std::string_view text);

struct ContourDocument {
  ContourPlot plot;
  std::map<Subset, Rational> pluckers;  // region labels only; may be empty
};

std::string emit_json(const ContourDocument& doc);
ContourDocument parse_contour_json(std::string_view text);

struct SvgOptions {
  Frame view = Frame::Physical;
  int width = 800;
};
std::string emit_svg(const ContourDocument& doc, const SvgOptions& options = {});
std::string emit_dot(const ContourDocument& doc);

// One line per grid row, top row first; SINGULAR cells are written as "singular".
std::string emit_field_csv(const FieldGrid& grid);
// Grey-scale heat map scaled to the largest |u|; SINGULAR cells in red.
std::string emit_field_svg(const FieldGrid& grid, int cell = 2);

}  // namespace soliton
