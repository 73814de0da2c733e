// Command-line front end. Each subcommand reads a diagram (or matrix) file,
// calls the library and prints the result; exit status 0 on success, 1 on a
// domain error, 2 on a usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "soliton/io.hpp"
#include "soliton/plabic.hpp"

using namespace soliton;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

DiagramInput diagram_file(const std::string& path) {
  const std::string text = slurp(path);
  if (looks_like_matrix(text)) throw UsageError(path + " is a matrix file; this command needs a diagram");
  return parse_diagram(text);
}

// Diagram files go through the cell parametrisation, matrix files are taken as is.
GrassmannPoint point_file(const std::string& path) {
  const std::string text = slurp(path);
  if (looks_like_matrix(text)) return GrassmannPoint(parse_matrix(text));
  const DiagramInput in = parse_diagram(text);
  return point_of(in.labeled, in.params);
}

struct KappaChoice {
  std::string list;
  std::string auto_order;

  KappaVector resolve(int n) const {
    if (!list.empty() == !auto_order.empty()) throw UsageError("give exactly one of --kappa and --auto-order");
    if (!list.empty()) {
      KappaVector k = make_kappa(parse_rational_list(list));
      if (k.n() != n) throw DomainError(ErrorCode::SizeMismatch, "kappa has " + std::to_string(k.n()) +
                                                                     " entries, expected " + std::to_string(n));
      return k;
    }
    return ordering_kappa(n, parse_rational(auto_order));
  }
};

void add_kappa(CLI::App* cmd, KappaChoice& k) {
  cmd->add_option("--kappa", k.list, "Increasing kappa_1..kappa_n, comma separated");
  cmd->add_option("--auto-order", k.auto_order, "Use kappa_i = kappa_{i-1} + r^i with this r > 1");
}

std::optional<BBox> parse_bbox(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto v = parse_rational_list(text);
  if (v.size() != 4) throw UsageError("--bbox needs xmin,xmax,ymin,ymax");
  if (!(v[0] < v[1]) || !(v[2] < v[3])) throw UsageError("--bbox needs xmin < xmax and ymin < ymax");
  return BBox{v[0], v[1], v[2], v[3]};
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void print_matrix(std::ostream& out, const RMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      cells.push_back(to_string(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  for (int r = 0; r < m.rows(); ++r) {
    out << " ";
    for (int c = 0; c < m.cols(); ++c) {
      const std::string& s = cells[static_cast<std::size_t>(r) * m.cols() + c];
      out << " " << std::string(width - s.size(), ' ') << s;
    }
    out << "\n";
  }
}

std::string decorated_text(const DecoratedPermutation& d) {
  std::string s = to_string(d.perm);
  for (const auto& [fixed, color] : d.colors) s += " " + std::to_string(fixed) + (color > 0 ? ":+1" : ":-1");
  return s;
}

int run_perm(const std::string& path) {
  const DiagramInput in = diagram_file(path);
  const DecoratedPermutation pi = decorated_permutation(in.diagram());
  std::cout << "pi = " << decorated_text(pi) << "\n";
  std::cout << "v = " << to_string(v_of(in.diagram())) << "\n";
  std::cout << "w = " << to_string(w_of(in.diagram())) << "\n";
  std::cout << "necklace =";
  for (const Subset& s : grassmann_necklace(point_of(in.labeled, in.params))) std::cout << " " << subset_string(s);
  std::cout << "\n";
  return 0;
}

int run_matrix(const std::string& path) {
  const DiagramInput in = diagram_file(path);
  const RMatrix g = build_group_element(in.labeled, in.params);
  std::cout << "g =\n";
  print_matrix(std::cout, g);
  std::cout << "A =\n";
  print_matrix(std::cout, project(g, in.diagram().shape.k));
  return 0;
}

int run_pluckers(const std::string& path) {
  const DiagramInput in = diagram_file(path);
  const GrassmannPoint a = point_of(in.labeled, in.params);
  std::cout << "nonzero Pluecker coordinates:\n";
  for (const auto& [s, v] : a.all_pluckers())
    if (v != 0) std::cout << "  Delta" << subset_string(s) << " = " << to_string(v) << "\n";
  const MaxMinPrediction mm = maxmin_prediction(in.labeled, in.params);
  std::cout << "lex-min Delta" << subset_string(mm.lex_min) << " predicted " << to_string(mm.lex_min_value)
            << ", actual " << to_string(a.plucker(mm.lex_min)) << "\n";
  std::cout << "lex-max Delta" << subset_string(mm.lex_max) << " predicted " << to_string(mm.lex_max_value)
            << ", actual " << to_string(a.plucker(mm.lex_max)) << "\n";
  std::cout << "per-box predictions:\n";
  for (const Box& b : in.labeled.order) {
    const BoxPlucker bp = plucker_at_box(in.labeled, in.params, b);
    std::cout << "  box (" << b.row << "," << b.col << ") " << mark_char(in.diagram().at(b)) << "  Delta"
              << subset_string(bp.subset) << " predicted " << to_string(bp.predicted) << ", actual "
              << to_string(a.plucker(bp.subset)) << "  chamber Delta" << subset_string(bp.chamber) << " predicted "
              << to_string(bp.chamber_predicted) << ", actual " << to_string(a.plucker(bp.chamber)) << "\n";
  }
  return 0;
}

int run_plabic(const std::string& path, const std::string& format) {
  const DiagramInput in = diagram_file(path);
  const LabeledGraph lg = label_graph(build_plabic(in.diagram()));
  std::cout << (format == "dot" ? to_dot(lg) : to_json(lg));
  return 0;
}

struct ContourArgs {
  std::string path, t, bbox, format = "json", frame = "physical";
  bool minus_infinity = false;
  KappaChoice kappa;
};

int run_contour(const ContourArgs& args) {
  if (args.t.empty() == !args.minus_infinity) throw UsageError("give exactly one of --t and --minus-infinity");
  const std::string text = slurp(args.path);
  const bool matrix = looks_like_matrix(text);
  std::optional<DiagramInput> in;
  std::optional<GrassmannPoint> a;
  if (matrix) {
    a.emplace(parse_matrix(text));
  } else {
    in = parse_diagram(text);
    a.emplace(point_of(in->labeled, in->params));
  }
  const KappaVector kappa = args.kappa.resolve(a->n());
  const auto bbox = parse_bbox(args.bbox);

  ContourDocument doc;
  if (args.minus_infinity && in && !bbox)
    doc.plot = contour_minus_infinity(in->diagram(), kappa);
  else
    doc.plot = tropical_contour(matroid_of(*a), kappa,
                                args.minus_infinity ? TimeFrame::minus_infinity() : TimeFrame::at(parse_rational(args.t)),
                                bbox);
  for (const Subset& s : doc.plot.region_labels()) doc.pluckers[s] = a->plucker(s);

  if (args.format == "svg")
    std::cout << emit_svg(doc, {args.frame == "rescaled" ? Frame::Rescaled : Frame::Physical});
  else if (args.format == "dot")
    std::cout << emit_dot(doc);
  else
    std::cout << emit_json(doc);
  return 0;
}

int run_positivity(const std::string& path) {
  const DiagramInput in = diagram_file(path);
  const GrassmannPoint a = point_of(in.labeled, in.params);
  const PositivityReport r = positivity_report(a, in.labeled);
  std::cout << "tested minors:\n";
  for (const auto& [s, v] : r.tested) std::cout << "  Delta" << subset_string(s) << " = " << to_string(v) << "\n";
  std::cout << "verdict: " << (r.verdict ? "totally nonnegative" : "not totally nonnegative") << "\n";
  std::cout << "all minors: " << (is_tnn(a) ? "totally nonnegative" : "not totally nonnegative") << "\n";
  return 0;
}

int run_regularity(const std::string& path, const std::string& t, const KappaChoice& kc) {
  const GrassmannPoint a = point_file(path);
  const RegularityResult r = regularity_check(a, kc.resolve(a.n()), parse_rational(t));
  if (r.regular) {
    std::cout << "regular\n";
  } else {
    std::cout << "irregular: singular soliton [" << r.witness->type[0] << "," << r.witness->type[1] << "] between "
              << subset_string(r.witness_regions[0]) << " and " << subset_string(r.witness_regions[1]) << "\n";
  }
  return 0;
}

struct FieldArgs {
  std::string path, t, bbox, resolution = "100x100", format = "csv";
  KappaChoice kappa;
};

int run_field(const FieldArgs& args) {
  const GrassmannPoint a = point_file(args.path);
  const KappaVector kappa = args.kappa.resolve(a.n());
  const Rational t = parse_rational(args.t);
  const auto bbox = parse_bbox(args.bbox);
  const auto x = args.resolution.find('x');
  if (x == std::string::npos) throw UsageError("--resolution must look like 200x100");
  int nx = 0, ny = 0;
  try {
    nx = std::stoi(args.resolution.substr(0, x));
    ny = std::stoi(args.resolution.substr(x + 1));
  } catch (const std::exception&) {
    throw UsageError("--resolution must look like 200x100");
  }
  const FieldGrid g = grid_sample(make_tau(a, kappa), t, bbox ? *bbox : auto_bbox(kappa, TimeFrame::at(t)), nx, ny);
  std::cout << (args.format == "svg" ? emit_field_svg(g) : emit_field_csv(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Go-diagrams, plabic graphs and KP soliton contour plots"};
  app.require_subcommand(1);

  std::string path;
  auto file_arg = [&](CLI::App* cmd, const char* what) { cmd->add_option("file", path, what)->required(); };

  auto* perm = app.add_subcommand("perm", "Decorated permutation, v, w and Grassmann necklace");
  file_arg(perm, "Diagram file");
  auto* matrix = app.add_subcommand("matrix", "Group element g and the point A with exact entries");
  file_arg(matrix, "Diagram file");
  auto* pluckers = app.add_subcommand("pluckers", "Pluecker coordinates and their predicted values");
  file_arg(pluckers, "Diagram file");

  std::string plabic_format = "json";
  auto* plabic = app.add_subcommand("plabic", "Generalized plabic graph with region labels");
  file_arg(plabic, "Diagram file");
  plabic->add_option("--format", plabic_format)->check(CLI::IsMember({"json", "dot"}));

  ContourArgs cargs;
  auto* contour = app.add_subcommand("contour", "Tropical contour plot");
  contour->add_option("file", cargs.path, "Diagram or matrix file")->required();
  contour->add_option("--t", cargs.t, "Time (exact rational)");
  contour->add_flag("--minus-infinity", cargs.minus_infinity, "Limit t -> -infinity in the rescaled frame");
  add_kappa(contour, cargs.kappa);
  contour->add_option("--bbox", cargs.bbox, "xmin,xmax,ymin,ymax in the plot's frame");
  contour->add_option("--format", cargs.format)->check(CLI::IsMember({"json", "svg", "dot"}));
  contour->add_option("--frame", cargs.frame, "SVG frame")->check(CLI::IsMember({"physical", "rescaled"}));

  auto* positivity = app.add_subcommand("positivity", "Total nonnegativity test from the diagram's minors");
  file_arg(positivity, "Diagram file");

  std::string reg_t;
  KappaChoice reg_kappa;
  auto* regularity = app.add_subcommand("regularity", "Sign check of the Pluecker values on a contour plot");
  file_arg(regularity, "Diagram or matrix file");
  regularity->add_option("--t", reg_t, "Time (exact rational)")->required();
  add_kappa(regularity, reg_kappa);

  FieldArgs fargs;
  auto* field = app.add_subcommand("field", "Sample u = 2 (ln tau)_xx on a grid");
  field->add_option("file", fargs.path, "Diagram or matrix file")->required();
  field->add_option("--t", fargs.t, "Time (exact rational)")->required();
  add_kappa(field, fargs.kappa);
  field->add_option("--bbox", fargs.bbox, "xmin,xmax,ymin,ymax");
  field->add_option("--resolution", fargs.resolution, "Columns x rows, e.g. 200x100");
  field->add_option("--format", fargs.format)->check(CLI::IsMember({"csv", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (perm->parsed()) return run_perm(path);
    if (matrix->parsed()) return run_matrix(path);
    if (pluckers->parsed()) return run_pluckers(path);
    if (plabic->parsed()) return run_plabic(path, plabic_format);
    if (contour->parsed()) return run_contour(cargs);
    if (positivity->parsed()) return run_positivity(path);
    if (regularity->parsed()) return run_regularity(path, reg_t, reg_kappa);
    if (field->parsed()) return run_field(fargs);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
