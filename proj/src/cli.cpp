#include "pqbezier/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pqbezier/basis.hpp"
#include "pqbezier/errors.hpp"
#include "pqbezier/operators.hpp"
#include "pqbezier/render.hpp"
#include "pqbezier/scene.hpp"

namespace pqbezier {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string point_csv(const Point& pt, int dim) {
  std::string out;
  for (int c = 0; c < dim; ++c) out += (c ? "," : "") + format_shortest(pt[c]);
  return out;
}

std::string point_paren(const Point& pt, int dim) {
  std::string out = "(";
  for (int c = 0; c < dim; ++c) out += (c ? ", " : "") + format_shortest(pt[c]);
  return out + ")";
}

const char* const kAxes[] = {"x", "y", "z"};

ControlPolygon load_curve(const std::string& path) {
  auto doc = load_scene(path);
  if (doc.kind() != SceneKind::Curve) throw DocumentError("field \"kind\" must be \"curve\"");
  return doc.curve();
}

ControlNet load_surface(const std::string& path) {
  auto doc = load_scene(path);
  if (doc.kind() != SceneKind::Surface) throw DocumentError("field \"kind\" must be \"surface\"");
  return doc.surface();
}

void emit_document(const SceneDocument& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << serialize_scene(doc);
  else
    save_scene(out_path, doc);
}

double grid_param(int i, int size) {
  return i == size - 1 ? 1.0 : static_cast<double>(i) / (size - 1);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lupas (p,q)-Bezier curves, surfaces and operators", "pqbezier"};
  app.require_subcommand(1);

  const auto unit = CLI::Range(0.0, 1.0);

  // basis
  int basis_n = 3;
  double basis_p = 1.0, basis_q = 1.0;
  int basis_grid = 101;
  auto* basis = app.add_subcommand("basis", "Tabulate the basis functions of one degree as CSV");
  basis->add_option("--n", basis_n, "Degree")->check(CLI::NonNegativeNumber);
  basis->add_option("--p", basis_p, "Parameter p")->check(CLI::PositiveNumber);
  basis->add_option("--q", basis_q, "Parameter q")->check(CLI::PositiveNumber);
  basis->add_option("--grid", basis_grid, "Number of t samples")->check(CLI::Range(2, 1000000));

  // curve
  std::string curve_input, curve_out;
  double curve_t = 0.5;
  int curve_samples = 101, curve_times = 1;
  auto* curve = app.add_subcommand("curve", "Curve operations on a scene document");
  curve->require_subcommand(1);
  auto* curve_eval = curve->add_subcommand("eval", "Print the curve point at --t");
  auto* curve_sample = curve->add_subcommand("sample", "CSV of t and coordinates");
  auto* curve_elevate = curve->add_subcommand("elevate", "Degree-elevate the control polygon");
  auto* curve_casteljau = curve->add_subcommand("casteljau", "Print the de Casteljau triangle");
  for (auto* sub : {curve_eval, curve_sample, curve_elevate, curve_casteljau})
    sub->add_option("input", curve_input, "Curve document (JSON)")->required();
  for (auto* sub : {curve_eval, curve_casteljau})
    sub->add_option("--t", curve_t, "Curve parameter")->check(unit)->required();
  curve_sample->add_option("--samples", curve_samples, "Number of samples")->check(CLI::Range(2, 10000000));
  curve_elevate->add_option("--times", curve_times, "Number of elevations")->check(CLI::Range(1, 10000));
  curve_elevate->add_option("--out", curve_out, "Output document (default: stdout)");

  // surface
  std::string surface_input, surface_out;
  double surface_u = 0.5, surface_v = 0.5;
  int surface_grid = 21;
  auto* surface = app.add_subcommand("surface", "Surface operations on a scene document");
  surface->require_subcommand(1);
  auto* surface_eval = surface->add_subcommand("eval", "Print the surface point at (--u, --v)");
  auto* surface_sample = surface->add_subcommand("sample", "CSV of u, v and coordinates");
  auto* surface_elevate = surface->add_subcommand("elevate", "Degree-elevate the control net");
  auto* surface_iso = surface->add_subcommand("iso", "Extract an isoparametric curve document");
  for (auto* sub : {surface_eval, surface_sample, surface_elevate, surface_iso})
    sub->add_option("input", surface_input, "Surface document (JSON)")->required();
  surface_eval->add_option("--u", surface_u, "u parameter")->check(unit)->required();
  surface_eval->add_option("--v", surface_v, "v parameter")->check(unit)->required();
  surface_sample->add_option("--grid", surface_grid, "Samples per direction")->check(CLI::Range(2, 100000));
  surface_elevate->add_option("--out", surface_out, "Output document (default: stdout)");
  auto* iso_u = surface_iso->add_option("--u", surface_u, "Fix u")->check(unit);
  auto* iso_v = surface_iso->add_option("--v", surface_v, "Fix v")->check(unit);
  iso_u->excludes(iso_v);
  surface_iso->add_option("--out", surface_out, "Output document (default: stdout)");

  // operator
  std::string op_f = "t2", op_schedule = "reference";
  double op_p = 0.0, op_q = 0.0;
  std::vector<int> op_n{8, 16, 32, 64};
  int op_grid = 201;
  auto* op = app.add_subcommand("operator", "Sup-norm errors of the Lupas operator as CSV");
  op->add_option("--f", op_f, "Target function: 1, t, t2, t3, exp, sin_pi, abs_half");
  op->add_option("--schedule", op_schedule, "Parameter schedule: reference or fixed")
      ->check(CLI::IsMember({"reference", "fixed"}));
  auto* op_p_opt = op->add_option("--p", op_p, "Fixed p")->check(CLI::PositiveNumber);
  auto* op_q_opt = op->add_option("--q", op_q, "Fixed q")->check(CLI::PositiveNumber);
  op_p_opt->needs(op_q_opt);
  op_q_opt->needs(op_p_opt);
  op->add_option("--n", op_n, "Comma-separated ascending degrees")->delimiter(',')
      ->check(CLI::PositiveNumber);
  op->add_option("--grid", op_grid, "Evaluation grid size")->check(CLI::Range(2, 10000000));

  // render
  std::string render_input, render_out;
  int render_samples = 256;
  bool render_hull = false;
  auto* render = app.add_subcommand("render", "Write an SVG of a planar curve");
  render->add_option("input", render_input, "Curve document (JSON)")->required();
  render->add_option("--out", render_out, "Output SVG path")->required();
  render->add_option("--samples", render_samples, "Curve samples")->check(CLI::Range(2, 10000000));
  render->add_flag("--show-hull", render_hull, "Shade the convex hull of the control points");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (basis->parsed()) {
      const PQParams params(basis_p, basis_q);
      out << "t";
      for (int k = 0; k <= basis_n; ++k) out << ",b" << k;
      out << ",sum\n";
      for (int i = 0; i < basis_grid; ++i) {
        const double t = grid_param(i, basis_grid);
        const auto row = basis_row(basis_n, params, t);
        out << format_shortest(t);
        for (double v : row.values) out << "," << format_shortest(v);
        out << "," << format_shortest(row.sum()) << "\n";
      }
      return kExitOk;
    }

    if (curve->parsed()) {
      const ControlPolygon poly = load_curve(curve_input);
      if (curve_eval->parsed()) {
        out << point_csv(eval_rational(poly, curve_t), poly.dim()) << "\n";
      } else if (curve_sample->parsed()) {
        out << "t";
        for (int c = 0; c < poly.dim(); ++c) out << "," << kAxes[c];
        out << "\n";
        const auto pts = sample_curve(poly, curve_samples);
        for (int i = 0; i < curve_samples; ++i)
          out << format_shortest(grid_param(i, curve_samples)) << "," << point_csv(pts[i], poly.dim())
              << "\n";
      } else if (curve_elevate->parsed()) {
        emit_document({elevate_repeated(poly, curve_times), {}}, curve_out, out);
      } else if (curve_casteljau->parsed()) {
        const auto trace = decasteljau(poly, curve_t);
        for (std::size_t r = 0; r < trace.levels.size(); ++r) {
          out << std::string(2 * r, ' ');
          for (std::size_t i = 0; i < trace.levels[r].size(); ++i)
            out << (i ? " " : "") << point_paren(trace.levels[r][i], poly.dim());
          out << "\n";
        }
      }
      return kExitOk;
    }

    if (surface->parsed()) {
      const ControlNet net = load_surface(surface_input);
      if (surface_eval->parsed()) {
        out << point_csv(eval_surface(net, surface_u, surface_v), 3) << "\n";
      } else if (surface_sample->parsed()) {
        out << "u,v,x,y,z\n";
        for (int i = 0; i < surface_grid; ++i) {
          const double u = grid_param(i, surface_grid);
          for (int j = 0; j < surface_grid; ++j) {
            const double v = grid_param(j, surface_grid);
            out << format_shortest(u) << "," << format_shortest(v) << ","
                << point_csv(eval_surface(net, u, v), 3) << "\n";
          }
        }
      } else if (surface_elevate->parsed()) {
        emit_document({elevate_surface(net), {}}, surface_out, out);
      } else if (surface_iso->parsed()) {
        if (iso_u->count() == 0 && iso_v->count() == 0)
          throw UsageError("iso needs exactly one of --u or --v");
        const auto curve_doc = iso_u->count() ? iso_curve(net, IsoDirection::UFixed, surface_u)
                                              : iso_curve(net, IsoDirection::VFixed, surface_v);
        emit_document({curve_doc, {}}, surface_out, out);
      }
      return kExitOk;
    }

    if (op->parsed()) {
      const auto target = find_target(op_f);
      if (!target) throw UsageError("unknown --f \"" + op_f + "\"");
      if (!std::is_sorted(op_n.begin(), op_n.end()) || op_n.empty())
        throw UsageError("--n must be a nonempty ascending list");
      ParamSchedule schedule = reference_schedule();
      if (op_p_opt->count() || op_schedule == "fixed") {
        if (!op_p_opt->count()) throw UsageError("--schedule fixed needs --p and --q");
        schedule = fixed_schedule(PQParams(op_p, op_q));
      } else if (op_n.front() < 2) {
        throw UsageError("the reference schedule needs n >= 2");
      }
      const auto table = convergence_table(*target, schedule, op_n, op_grid);
      out << "n,p_n,q_n,sup_error\n";
      for (const auto& rec : table)
        out << rec.n << "," << format_shortest(rec.params.p()) << ","
            << format_shortest(rec.params.q()) << "," << format_shortest(rec.sup_error) << "\n";
      return kExitOk;
    }

    if (render->parsed()) {
      const auto doc = load_scene(render_input);
      if (doc.kind() != SceneKind::Curve) throw DocumentError("field \"kind\" must be \"curve\"");
      const auto& poly = doc.curve();
      if (poly.dim() != 2) throw DocumentError("field \"points\" must be 2D for rendering");
      RenderOptions options;
      options.samples = render->count("--samples") ? render_samples
                                                   : doc.style.samples.value_or(render_samples);
      options.show_hull = render_hull;
      if (doc.style.stroke_width) options.stroke_width = *doc.style.stroke_width;
      std::ofstream file(render_out, std::ios::binary);
      if (!file) throw DocumentError("cannot write " + render_out);
      file << render_svg(poly, options);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

} // namespace pqbezier
