#include "soliton/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace soliton {

namespace {

struct SourceLine {
  int number = 0;
  std::string text;  // comment and trailing whitespace removed
};

std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (!line.empty()) out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a);
}

int first_column(const std::string& s) { return static_cast<int>(s.find_first_not_of(" \t")) + 1; }

// Whitespace/comma separated tokens with their 1-based columns.
std::vector<std::pair<std::string, int>> tokens(const std::string& s, const std::string& separators) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (separators.find(s[i]) != std::string::npos) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && separators.find(s[j]) == std::string::npos) ++j;
    out.push_back({s.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

Rational rational_at(const std::string& token, int line, int column) {
  try {
    return parse_rational(token);
  } catch (const DomainError&) {
    throw ParseError(ErrorCode::InvalidInput, line, column, "malformed rational '" + token + "'");
  }
}

int small_int(const std::string& digits, int line, int column) {
  if (digits.empty() || digits.size() > 6) throw ParseError(ErrorCode::InvalidInput, line, column, "bad integer");
  return std::stoi(digits);
}

}  // namespace

// "order: 1,1 ..." on one line becomes a bare header followed by its tokens,
// with the header blanked out so columns still point into the file.
std::vector<SourceLine> split_block_headers(std::vector<SourceLine> lines) {
  std::vector<SourceLine> out;
  for (auto& l : lines) {
    const std::size_t lead = l.text.find_first_not_of(" \t");
    bool split = false;
    for (const std::string head : {"order:", "params:"}) {
      if (l.text.compare(lead, head.size(), head) != 0 || l.text.size() == lead + head.size()) continue;
      out.push_back({l.number, head});
      out.push_back({l.number, std::string(lead + head.size(), ' ') + l.text.substr(lead + head.size())});
      split = true;
      break;
    }
    if (!split) out.push_back(std::move(l));
  }
  return out;
}

DiagramInput parse_diagram(std::string_view text) {
  const auto lines = split_block_headers(split_lines(text));
  if (lines.empty()) throw ParseError(ErrorCode::InvalidInput, 1, 1, "empty diagram file");

  static const std::regex header(R"(\s*k\s*=\s*(\d+)\s+n\s*=\s*(\d+)\s*)");
  std::smatch hm;
  if (!std::regex_match(lines[0].text, hm, header))
    throw ParseError(ErrorCode::InvalidInput, lines[0].number, 1, "expected header 'k=<k> n=<n>'");
  const int k = small_int(hm[1], lines[0].number, 1), n = small_int(hm[2], lines[0].number, 1);
  if (k < 1 || n <= k) throw ParseError(ErrorCode::InvalidInput, lines[0].number, 1, "need 1 <= k < n");

  std::size_t at = 1;
  std::vector<std::vector<Mark>> marks;
  std::vector<std::vector<std::pair<int, int>>> where;  // (line, column) of each mark
  for (; at < lines.size(); ++at) {
    const std::string t = trimmed(lines[at].text);
    if (t == "order:" || t == "params:") break;
    std::vector<Mark> row;
    std::vector<std::pair<int, int>> pos;
    for (std::size_t c = 0; c < lines[at].text.size(); ++c) {
      const char ch = lines[at].text[c];
      if (ch == ' ' || ch == '\t') continue;
      Mark m;
      if (ch == '.') m = Mark::Blank;
      else if (ch == 'o') m = Mark::White;
      else if (ch == '*') m = Mark::Black;
      else
        throw ParseError(ErrorCode::InvalidInput, lines[at].number, static_cast<int>(c) + 1,
                         std::string("invalid mark '") + ch + "'");
      row.push_back(m);
      pos.push_back({lines[at].number, static_cast<int>(c) + 1});
    }
    const int len = static_cast<int>(row.size());
    if (static_cast<int>(marks.size()) == k)
      throw ParseError(ErrorCode::InvalidInput, lines[at].number, first_column(lines[at].text),
                       "more than k rows");
    if (len > n - k)
      throw ParseError(ErrorCode::InvalidInput, lines[at].number, pos[n - k].second, "row longer than n-k");
    if (!marks.empty() && len > static_cast<int>(marks.back().size()))
      throw ParseError(ErrorCode::InvalidInput, lines[at].number, pos[marks.back().size()].second,
                       "row longer than the row above (not a partition)");
    marks.push_back(std::move(row));
    where.push_back(std::move(pos));
  }
  std::vector<int> lengths;
  for (const auto& r : marks) lengths.push_back(static_cast<int>(r.size()));
  Shape shape = make_shape(k, n, lengths);
  marks.resize(shape.rows.size());

  auto box_where = [&](const Box& b) { return where[b.row - 1][b.col - 1]; };

  std::optional<ReadingOrder> order;
  std::vector<std::pair<std::string, std::pair<int, int>>> param_tokens;
  int order_line = 0;
  while (at < lines.size()) {
    const std::string block = trimmed(lines[at].text);
    const int block_line = lines[at].number;
    ++at;
    if (block == "order:") {
      if (order) throw ParseError(ErrorCode::InvalidInput, block_line, 1, "second order block");
      order_line = block_line;
      order.emplace();
      for (; at < lines.size() && trimmed(lines[at].text) != "params:" && trimmed(lines[at].text) != "order:"; ++at) {
        static const std::regex cell(R"(\(?(\d+),(\d+)\)?)");
        for (const auto& [tok, col] : tokens(lines[at].text, " \t")) {
          std::smatch cm;
          if (!std::regex_match(tok, cm, cell))
            throw ParseError(ErrorCode::InvalidInput, lines[at].number, col, "expected a box 'r,c', got '" + tok + "'");
          Box b{small_int(cm[1], lines[at].number, col), small_int(cm[2], lines[at].number, col)};
          if (b.row < 1 || b.row > static_cast<int>(shape.rows.size()) || !shape.contains(b))
            throw ParseError(ErrorCode::InvalidInput, lines[at].number, col, "box " + tok + " is outside the shape");
          if (std::find(order->begin(), order->end(), b) != order->end())
            throw ParseError(ErrorCode::NotLinearExtension, lines[at].number, col, "box " + tok + " listed twice");
          order->push_back(b);
        }
      }
    } else if (block == "params:") {
      if (!param_tokens.empty()) throw ParseError(ErrorCode::InvalidInput, block_line, 1, "second params block");
      for (; at < lines.size() && trimmed(lines[at].text) != "order:" && trimmed(lines[at].text) != "params:"; ++at) {
        static const std::regex assign(R"(([pm])(\d+)\s*=\s*([^\s,;]+))");
        const std::string& s = lines[at].text;
        std::size_t covered = 0;
        for (auto it = std::sregex_iterator(s.begin(), s.end(), assign); it != std::sregex_iterator(); ++it) {
          const std::size_t p = static_cast<std::size_t>(it->position());
          for (std::size_t c = covered; c < p; ++c)
            if (std::string(" \t,;").find(s[c]) == std::string::npos)
              throw ParseError(ErrorCode::InvalidInput, lines[at].number, static_cast<int>(c) + 1,
                               "expected 'p<i> = <rational>' or 'm<i> = <rational>'");
          param_tokens.push_back({it->str(), {lines[at].number, static_cast<int>(p) + 1}});
          covered = p + it->length();
        }
        for (std::size_t c = covered; c < s.size(); ++c)
          if (std::string(" \t,;").find(s[c]) == std::string::npos)
            throw ParseError(ErrorCode::InvalidInput, lines[at].number, static_cast<int>(c) + 1,
                             "expected 'p<i> = <rational>' or 'm<i> = <rational>'");
      }
      if (param_tokens.empty()) param_tokens.push_back({"", {0, 0}});  // marks the block as seen
    } else {
      throw ParseError(ErrorCode::InvalidInput, block_line, 1, "unexpected text after the diagram");
    }
  }
  if (order && static_cast<int>(order->size()) != shape.size())
    throw ParseError(ErrorCode::NotLinearExtension, order_line, 1, "order block must list every box once");

  GoDiagram d{shape, marks};
  try {
    go_to_subexpression(d, order);
  } catch (const DomainError& e) {
    if (e.box() > 0) {
      const ReadingOrder ord = order ? *order : canonical_order(shape);
      const Box& b = ord[e.box() - 1];
      auto [l, c] = box_where(b);
      throw ParseError(e.code(), l, c,
                       std::string(e.what()).substr(std::string(error_name(e.code())).size() + 2));
    }
    if (e.code() == ErrorCode::NotLinearExtension)
      throw ParseError(e.code(), order_line, 1, "reading order is not a linear extension");
    throw;
  }

  DiagramInput in{labeled_go(d, order), {}};
  in.params = default_params(in.labeled);
  const auto blanks = in.labeled.blank_positions(), blacks = in.labeled.black_positions();
  std::set<std::string> seen;
  for (const auto& [tok, lc] : param_tokens) {
    if (tok.empty()) continue;
    static const std::regex assign(R"(([pm])(\d+)\s*=\s*(\S+))");
    std::smatch am;
    std::regex_match(tok, am, assign);
    const auto [l, c] = lc;
    const std::string key = am[1].str() + am[2].str();
    if (!seen.insert(key).second) throw ParseError(ErrorCode::BadParameters, l, c, key + " assigned twice");
    const int pos = small_int(am[2], l, c);
    const Rational value = rational_at(am[3], l, c + static_cast<int>(am.position(3)));
    if (am[1] == "p") {
      if (std::find(blanks.begin(), blanks.end(), pos) == blanks.end())
        throw ParseError(ErrorCode::BadParameters, l, c, "position " + std::to_string(pos) + " is not a blank box");
      if (value == 0) throw ParseError(ErrorCode::BadParameters, l, c, key + " must be nonzero");
      in.params.p[pos] = value;
    } else {
      if (std::find(blacks.begin(), blacks.end(), pos) == blacks.end())
        throw ParseError(ErrorCode::BadParameters, l, c, "position " + std::to_string(pos) + " is not a black stone");
      in.params.m[pos] = value;
    }
  }
  check_params(in.labeled, in.params);
  return in;
}

bool looks_like_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  return !lines.empty() && trimmed(lines[0].text).rfind("matrix", 0) == 0;
}

RMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  static const std::regex header(R"(\s*matrix\s+k\s*=\s*(\d+)\s+n\s*=\s*(\d+)\s*)");
  std::smatch hm;
  if (lines.empty() || !std::regex_match(lines[0].text, hm, header))
    throw ParseError(ErrorCode::InvalidInput, lines.empty() ? 1 : lines[0].number, 1,
                     "expected header 'matrix k=<k> n=<n>'");
  const int k = small_int(hm[1], lines[0].number, 1), n = small_int(hm[2], lines[0].number, 1);
  if (k < 1 || n < k) throw ParseError(ErrorCode::InvalidInput, lines[0].number, 1, "need 1 <= k <= n");
  if (static_cast<int>(lines.size()) - 1 != k)
    throw ParseError(ErrorCode::SizeMismatch, lines.back().number, 1,
                     "expected " + std::to_string(k) + " rows, found " + std::to_string(lines.size() - 1));
  RMatrix a(k, n);
  for (int r = 0; r < k; ++r) {
    const auto row = tokens(lines[r + 1].text, " \t,");
    if (static_cast<int>(row.size()) != n)
      throw ParseError(ErrorCode::SizeMismatch, lines[r + 1].number, 1,
                       "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
    for (int c = 0; c < n; ++c) a(r, c) = rational_at(row[c].first, lines[r + 1].number, row[c].second);
  }
  std::vector<int> all(n);
  for (int j = 0; j < n; ++j) all[j] = j + 1;
  if (column_rank(a, all) != k) throw ParseError(ErrorCode::InvalidInput, 0, 0, "matrix does not have full row rank");
  return a;
}

// ---------------------------------------------------------------- JSON

namespace {

using Json = nlohmann::ordered_json;

const char* kind_name(ContourNodeKind k) {
  switch (k) {
    case ContourNodeKind::Trivalent: return "trivalent";
    case ContourNodeKind::XCrossing: return "xcrossing";
    case ContourNodeKind::Exit: return "exit";
  }
  return "exit";
}

const char* color_name(CrossingColor c) { return c == CrossingColor::Black ? "black" : "white"; }

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json pair_json(const std::array<int, 2>& t) { return Json::array({t[0], t[1]}); }

[[noreturn]] void bad_json(const std::string& what) {
  throw DomainError(ErrorCode::InvalidInput, "contour JSON: " + what);
}

Rational rational_json(const Json& j) {
  if (!j.is_string()) bad_json("expected a rational string");
  return parse_rational(j.get<std::string>());
}

Point point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad_json("expected a point [x, y]");
  return {rational_json(j[0]), rational_json(j[1])};
}

std::array<int, 2> pair_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad_json("expected a type [i, j]");
  return {j[0].get<int>(), j[1].get<int>()};
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad_json(std::string("missing field '") + key + "'");
  return obj.at(key);
}

}  // namespace

std::string emit_json(const ContourDocument& doc) {
  const ContourPlot& plot = doc.plot;
  Json j;
  j["schema"] = kContourSchema;
  j["frame"] = plot.frame == Frame::Physical ? "physical" : "rescaled";
  j["t"] = to_string(plot.t);
  Json kappa = Json::array();
  for (const auto& v : plot.kappa.values) kappa.push_back(to_string(v));
  j["kappa"] = kappa;
  j["bbox"] = {{"xmin", to_string(plot.bbox.xmin)},
               {"xmax", to_string(plot.bbox.xmax)},
               {"ymin", to_string(plot.bbox.ymin)},
               {"ymax", to_string(plot.bbox.ymax)}};

  Json vertices = Json::array();
  for (int v = 0; v < static_cast<int>(plot.vertices.size()); ++v) {
    const auto& cv = plot.vertices[v];
    Json o;
    o["kind"] = kind_name(cv.kind);
    o["at"] = point_json(cv.at);
    o["indices"] = cv.indices;
    Json types = Json::array();
    for (const auto& t : cv.types) types.push_back(pair_json(t));
    o["types"] = types;
    o["around"] = cv.around;
    if (cv.kind == ContourNodeKind::Trivalent) o["color"] = color_name(trivalent_color(plot, v));
    vertices.push_back(o);
  }
  j["vertices"] = vertices;

  std::set<int> singular;
  if (!doc.pluckers.empty())
    for (int e : singular_edges(plot, doc.pluckers)) singular.insert(e);
  Json edges = Json::array();
  for (int e = 0; e < static_cast<int>(plot.edges.size()); ++e) {
    const auto& ce = plot.edges[e];
    Json o;
    o["type"] = pair_json(ce.type);
    o["from"] = ce.from;
    o["to"] = ce.to;
    o["left"] = ce.left;
    o["right"] = ce.right;
    o["ray"] = plot.is_ray(ce);
    if (!doc.pluckers.empty()) o["singular"] = singular.count(e) > 0;
    edges.push_back(o);
  }
  j["edges"] = edges;

  Json regions = Json::array();
  for (const auto& r : plot.regions) {
    Json o;
    o["label"] = r.label;
    o["bounded"] = r.bounded;
    Json poly = Json::array();
    for (const auto& p : r.polygon) poly.push_back(point_json(p));
    o["polygon"] = poly;
    if (auto it = doc.pluckers.find(r.label); it != doc.pluckers.end()) {
      o["plucker"] = to_string(it->second);
      o["sign"] = it->second.sign();
    }
    regions.push_back(o);
  }
  j["regions"] = regions;

  Json crossings = Json::array();
  for (const auto& c : classify_crossings(plot)) {
    Json o;
    o["vertex"] = c.vertex;
    o["color"] = color_name(c.color);
    o["types"] = Json::array({pair_json(c.first), pair_json(c.second)});
    crossings.push_back(o);
  }
  j["crossings"] = crossings;
  return j.dump(2) + "\n";
}

ContourDocument parse_contour_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad_json(e.what());
  }
  ContourDocument doc;
  try {
    if (field(j, "schema") != kContourSchema) bad_json("unsupported schema");
    ContourPlot& plot = doc.plot;
    const std::string frame = field(j, "frame").get<std::string>();
    if (frame != "physical" && frame != "rescaled") bad_json("frame must be 'physical' or 'rescaled'");
    plot.frame = frame == "physical" ? Frame::Physical : Frame::Rescaled;
    plot.t = rational_json(field(j, "t"));
    std::vector<Rational> kappa;
    for (const auto& v : field(j, "kappa")) kappa.push_back(rational_json(v));
    plot.kappa = make_kappa(std::move(kappa));
    const Json& b = field(j, "bbox");
    plot.bbox = {rational_json(field(b, "xmin")), rational_json(field(b, "xmax")), rational_json(field(b, "ymin")),
                 rational_json(field(b, "ymax"))};

    for (const auto& o : field(j, "vertices")) {
      ContourVertex v;
      const std::string kind = field(o, "kind").get<std::string>();
      if (kind == "trivalent") v.kind = ContourNodeKind::Trivalent;
      else if (kind == "xcrossing") v.kind = ContourNodeKind::XCrossing;
      else if (kind == "exit") v.kind = ContourNodeKind::Exit;
      else bad_json("unknown vertex kind '" + kind + "'");
      v.at = point_from(field(o, "at"));
      v.indices = field(o, "indices").get<std::vector<int>>();
      for (const auto& t : field(o, "types")) v.types.push_back(pair_from(t));
      v.around = field(o, "around").get<std::vector<int>>();
      plot.vertices.push_back(std::move(v));
    }
    for (const auto& o : field(j, "edges")) {
      ContourEdge e;
      e.type = pair_from(field(o, "type"));
      e.from = field(o, "from").get<int>();
      e.to = field(o, "to").get<int>();
      e.left = field(o, "left").get<int>();
      e.right = field(o, "right").get<int>();
      plot.edges.push_back(e);
    }
    for (const auto& o : field(j, "regions")) {
      ContourRegion r;
      r.label = field(o, "label").get<Subset>();
      r.bounded = field(o, "bounded").get<bool>();
      for (const auto& p : field(o, "polygon")) r.polygon.push_back(point_from(p));
      if (o.contains("plucker")) doc.pluckers[r.label] = rational_json(o.at("plucker"));
      plot.regions.push_back(std::move(r));
    }
    const int nv = static_cast<int>(plot.vertices.size()), nr = static_cast<int>(plot.regions.size());
    for (const auto& e : plot.edges)
      if (e.from < 0 || e.from >= nv || e.to < 0 || e.to >= nv || e.left < -1 || e.left >= nr || e.right < -1 ||
          e.right >= nr)
        bad_json("edge refers to a missing vertex or region");
    for (const auto& v : plot.vertices)
      for (int r : v.around)
        if (r < -1 || r >= nr) bad_json("vertex refers to a missing region");
  } catch (const nlohmann::json::exception& e) {
    bad_json(e.what());
  }
  return doc;
}

// ---------------------------------------------------------------- SVG / DOT

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string type_text(const std::array<int, 2>& t) {
  return "[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "]";
}

}  // namespace

std::string emit_svg(const ContourDocument& doc, const SvgOptions& options) {
  const ContourPlot& plot = doc.plot;
  // Map plot coordinates into the requested frame: physical = t * rescaled.
  Rational factor(1);
  if (plot.frame != options.view) {
    if (plot.t == 0) throw DomainError(ErrorCode::InvalidInput, "cannot rescale a plot at t = 0");
    factor = plot.frame == Frame::Rescaled ? plot.t / abs(plot.t) : Rational(1) / plot.t;
  }
  auto view = [&](const Point& p) { return Point{p.x * factor, p.y * factor}; };

  Rational xmin = plot.bbox.xmin, xmax = plot.bbox.xmax, ymin = plot.bbox.ymin, ymax = plot.bbox.ymax;
  {
    Point a = view({xmin, ymin}), b = view({xmax, ymax});
    xmin = std::min(a.x, b.x);
    xmax = std::max(a.x, b.x);
    ymin = std::min(a.y, b.y);
    ymax = std::max(a.y, b.y);
  }
  const double w = std::max(to_double(xmax - xmin), 1e-9), h = std::max(to_double(ymax - ymin), 1e-9);
  const double margin = 20;
  const double scale = (options.width - 2 * margin) / w;
  const double height = std::clamp(h * scale, 1.0, 8.0 * options.width) + 2 * margin;
  const double yscale = (height - 2 * margin) / h;
  auto px = [&](const Point& p) {
    const Point q = view(p);
    return std::pair{margin + to_double(q.x - xmin) * scale, margin + to_double(ymax - q.y) * yscale};
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << options.width << " " << fmt(height) << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << fmt(height)
      << "\" fill=\"white\"/>\n";
  out << "  <g class=\"regions\">\n";
  for (const auto& r : plot.regions) {
    if (r.polygon.empty()) continue;
    auto it = doc.pluckers.find(r.label);
    const bool negative = it != doc.pluckers.end() && it->second < 0;
    out << "    <polygon class=\"region\" data-label=\"" << subset_string(r.label) << "\" points=\"";
    for (std::size_t i = 0; i < r.polygon.size(); ++i) {
      auto [x, y] = px(r.polygon[i]);
      out << (i ? " " : "") << fmt(x) << "," << fmt(y);
    }
    out << "\" fill=\"" << (negative ? "#f2dede" : "none") << "\" stroke=\"none\"/>\n";
  }
  out << "  </g>\n";

  std::set<int> singular;
  if (!doc.pluckers.empty())
    for (int e : singular_edges(plot, doc.pluckers)) singular.insert(e);
  out << "  <g class=\"edges\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (int e = 0; e < static_cast<int>(plot.edges.size()); ++e) {
    const auto& ce = plot.edges[e];
    auto [x1, y1] = px(plot.vertices[ce.from].at);
    auto [x2, y2] = px(plot.vertices[ce.to].at);
    out << "    <line class=\"" << (singular.count(e) ? "soliton singular" : "soliton") << "\" data-type=\""
        << type_text(ce.type) << "\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
        << "\" y2=\"" << fmt(y2) << "\"" << (singular.count(e) ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"vertices\" stroke=\"black\">\n";
  for (int v = 0; v < static_cast<int>(plot.vertices.size()); ++v) {
    const auto& cv = plot.vertices[v];
    auto [x, y] = px(cv.at);
    if (cv.kind == ContourNodeKind::Trivalent) {
      const bool black = trivalent_color(plot, v) == CrossingColor::Black;
      out << "    <circle class=\"trivalent " << (black ? "black" : "white") << "\" cx=\"" << fmt(x) << "\" cy=\""
          << fmt(y) << "\" r=\"4\" fill=\"" << (black ? "black" : "white") << "\"/>\n";
    }
  }
  for (const auto& c : classify_crossings(plot)) {
    auto [x, y] = px(c.at);
    const bool black = c.color == CrossingColor::Black;
    out << "    <rect class=\"crossing " << (black ? "black" : "white") << "\" x=\"" << fmt(x - 3) << "\" y=\""
        << fmt(y - 3) << "\" width=\"6\" height=\"6\" fill=\"" << (black ? "black" : "white") << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (const auto& r : plot.regions) {
    if (r.polygon.empty()) continue;
    Point c{Rational(0), Rational(0)};
    for (const auto& p : r.polygon) c = c + p;
    c = Rational(1, static_cast<long>(r.polygon.size())) * c;
    auto [x, y] = px(c);
    out << "    <text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\">" << subset_string(r.label) << "</text>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

std::string emit_dot(const ContourDocument& doc) {
  const ContourPlot& plot = doc.plot;
  std::ostringstream out;
  out << "graph contour {\n";
  for (int v = 0; v < static_cast<int>(plot.vertices.size()); ++v) {
    const auto& cv = plot.vertices[v];
    out << "  v" << v << " [kind=\"" << kind_name(cv.kind) << "\", pos=\"" << fmt(to_double(cv.at.x)) << ","
        << fmt(to_double(cv.at.y)) << "!\"";
    if (!cv.indices.empty()) {
      out << ", label=\"";
      for (std::size_t i = 0; i < cv.indices.size(); ++i) out << (i ? "," : "") << cv.indices[i];
      out << "\"";
    } else {
      out << ", label=\"\", shape=point";
    }
    out << "];\n";
  }
  for (const auto& e : plot.edges)
    out << "  v" << e.from << " -- v" << e.to << " [label=\"" << type_text(e.type) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string emit_field_csv(const FieldGrid& grid) {
  std::ostringstream out;
  char buf[32];
  for (int r = 0; r < grid.ny; ++r) {
    for (int c = 0; c < grid.nx; ++c) {
      if (c) out << ',';
      if (auto u = grid.at(r, c)) {
        std::snprintf(buf, sizeof buf, "%.9g", *u);
        out << buf;
      } else {
        out << "singular";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_field_svg(const FieldGrid& grid, int cell) {
  double top = 0;
  for (const auto& u : grid.u)
    if (u) top = std::max(top, std::abs(*u));
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << grid.nx * cell << "\" height=\"" << grid.ny * cell
      << "\" shape-rendering=\"crispEdges\">\n";
  for (int r = 0; r < grid.ny; ++r)
    for (int c = 0; c < grid.nx; ++c) {
      std::string fill = "#ff0000";
      if (auto u = grid.at(r, c)) {
        const int g = 255 - static_cast<int>(std::lround(255 * (top > 0 ? std::min(1.0, std::abs(*u) / top) : 0)));
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", g, g, g);
        fill = buf;
      }
      out << "<rect x=\"" << c * cell << "\" y=\"" << r * cell << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"" << fill << "\"/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace soliton
