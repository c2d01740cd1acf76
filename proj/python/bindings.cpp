#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqbezier/basis.hpp"
#include "pqbezier/curve.hpp"
#include "pqbezier/errors.hpp"
#include "pqbezier/operators.hpp"
#include "pqbezier/render.hpp"
#include "pqbezier/scene.hpp"
#include "pqbezier/surface.hpp"

namespace py = pybind11;
using namespace pqbezier;

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

ControlPolygon polygon_from_array(const RowMatrix& pts, double p, double q) {
  if (pts.cols() != 2 && pts.cols() != 3)
    throw DomainError("control points must be an (N, 2) or (N, 3) array");
  std::vector<Point> out;
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    Point pt = Point::Zero();
    for (Eigen::Index c = 0; c < pts.cols(); ++c) pt[c] = pts(i, c);
    out.push_back(pt);
  }
  return {std::move(out), PQParams(p, q), static_cast<int>(pts.cols())};
}

RowMatrix points_to_array(const std::vector<Point>& pts, int dim) {
  RowMatrix out(static_cast<Eigen::Index>(pts.size()), dim);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int c = 0; c < dim; ++c) out(static_cast<Eigen::Index>(i), c) = pts[i][c];
  return out;
}

Eigen::VectorXd point_out(const Point& pt, int dim) { return pt.head(dim); }

ControlNet net_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr,
                          double p1, double q1, double p2, double q2) {
  if (arr.ndim() != 3 || (arr.shape(2) != 3 && arr.shape(2) != 2))
    throw DomainError("control net must be an (M, N, 3) array");
  auto view = arr.unchecked<3>();
  std::vector<std::vector<Point>> grid(static_cast<std::size_t>(arr.shape(0)));
  for (py::ssize_t i = 0; i < arr.shape(0); ++i)
    for (py::ssize_t j = 0; j < arr.shape(1); ++j) {
      Point pt = Point::Zero();
      for (py::ssize_t c = 0; c < arr.shape(2); ++c) pt[c] = view(i, j, c);
      grid[i].push_back(pt);
    }
  return {std::move(grid), PQParams(p1, q1), PQParams(p2, q2)};
}

py::array_t<double> net_to_array(const ControlNet& net) {
  const auto rows = static_cast<py::ssize_t>(net.degree_u() + 1);
  const auto cols = static_cast<py::ssize_t>(net.degree_v() + 1);
  py::array_t<double> out({rows, cols, py::ssize_t{3}});
  auto view = out.mutable_unchecked<3>();
  for (py::ssize_t i = 0; i < rows; ++i)
    for (py::ssize_t j = 0; j < cols; ++j)
      for (py::ssize_t c = 0; c < 3; ++c) view(i, j, c) = net.at(static_cast<int>(i), static_cast<int>(j))[c];
  return out;
}

TargetFunction wrap_callable(const py::object& f) {
  if (py::isinstance<py::str>(f)) {
    auto found = find_target(f.cast<std::string>());
    if (!found) throw DomainError("unknown target function label");
    return *found;
  }
  auto fn = f.cast<std::function<double(double)>>();
  return {fn, "python"};
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lupas (p,q)-Bezier curves, surfaces and approximation operators";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "PQOverflowError", PyExc_OverflowError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ValueError);
  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);

  py::class_<PQParams>(m, "PQParams")
      .def(py::init<double, double>(), py::arg("p"), py::arg("q"))
      .def_property_readonly("p", &PQParams::p)
      .def_property_readonly("q", &PQParams::q)
      .def_property_readonly("regime", [](const PQParams& s) { return std::string(to_string(s.regime())); })
      .def("reciprocal", &PQParams::reciprocal)
      .def("__repr__", [](const PQParams& s) {
        return "PQParams(p=" + format_shortest(s.p()) + ", q=" + format_shortest(s.q()) + ")";
      });

  m.def("pq_integer", [](int n, double p, double q) { return pq_integer(n, {p, q}); },
        py::arg("n"), py::arg("p"), py::arg("q"));
  m.def("pq_binomial", [](int n, int k, double p, double q) { return pq_binomial(n, k, {p, q}); },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"));

  m.def("basis_row",
        [](int n, double p, double q, double t) {
          auto row = basis_row(n, {p, q}, t);
          return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(row.values.data(), static_cast<Eigen::Index>(row.values.size())));
        },
        py::arg("n"), py::arg("p"), py::arg("q"), py::arg("t"),
        "Values b^{k,n}_{p,q}(t) for k = 0..n.");
  m.def("basis_single", [](int k, int n, double p, double q, double t) {
    return basis_single(k, n, {p, q}, t);
  }, py::arg("k"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("t"));
  m.def("limit_basis_row", [](double p, double q, double u, double tol) {
    return limit_basis_row({p, q}, u, tol);
  }, py::arg("p"), py::arg("q"), py::arg("u"), py::arg("tol") = 1e-12);
  m.def("elevation_matrix", [](int n, double p, double q) {
    const ElevationMatrix lift(n, {p, q});
    RowMatrix out(static_cast<Eigen::Index>(lift.rows()), static_cast<Eigen::Index>(lift.cols()));
    for (std::size_t i = 0; i < lift.rows(); ++i)
      for (std::size_t j = 0; j < lift.cols(); ++j)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = lift(i, j);
    return out;
  }, py::arg("n"), py::arg("p"), py::arg("q"));

  py::class_<ControlPolygon>(m, "Curve")
      .def(py::init(&polygon_from_array), py::arg("points"), py::arg("p"), py::arg("q"))
      .def_property_readonly("degree", &ControlPolygon::degree)
      .def_property_readonly("params", &ControlPolygon::params)
      .def_property_readonly("points",
                             [](const ControlPolygon& c) { return points_to_array(c.points(), c.dim()); })
      .def("eval", [](const ControlPolygon& c, double t) { return point_out(eval_rational(c, t), c.dim()); },
           py::arg("t"))
      .def("decasteljau",
           [](const ControlPolygon& c, double t) {
             std::vector<RowMatrix> levels;
             for (const auto& lvl : decasteljau(c, t).levels) levels.push_back(points_to_array(lvl, c.dim()));
             return levels;
           },
           py::arg("t"), "All levels of the de Casteljau triangle.")
      .def("decasteljau_matrix",
           [](const ControlPolygon& c, double t) { return point_out(decasteljau_matrix(c, t), c.dim()); },
           py::arg("t"))
      .def("elevate", [](const ControlPolygon& c, int times) { return elevate_repeated(c, times); },
           py::arg("times") = 1)
      .def("reverse", [](const ControlPolygon& c) { return reverse(c); })
      .def("endpoint_derivatives",
           [](const ControlPolygon& c) {
             const auto d = endpoint_derivatives(c);
             return py::make_tuple(point_out(d.start, c.dim()), point_out(d.end, c.dim()));
           })
      .def("sample",
           [](const ControlPolygon& c, int samples) { return points_to_array(sample_curve(c, samples), c.dim()); },
           py::arg("samples") = 101)
      .def("crossings",
           [](const ControlPolygon& c, const Eigen::Vector2d& a, const Eigen::Vector2d& b, int samples) {
             const auto r = crossing_diagnostics(c, Line2D::through(a, b), samples);
             return py::make_tuple(r.curve_crossings, r.polygon_sign_changes);
           },
           py::arg("a"), py::arg("b"), py::arg("samples") = 1001)
      .def("to_svg",
           [](const ControlPolygon& c, int samples, bool show_hull) {
             RenderOptions opt;
             opt.samples = samples;
             opt.show_hull = show_hull;
             return render_svg(c, opt);
           },
           py::arg("samples") = 256, py::arg("show_hull") = false);

  py::class_<ControlNet>(m, "Surface")
      .def(py::init(&net_from_array), py::arg("points"), py::arg("p1"), py::arg("q1"), py::arg("p2"),
           py::arg("q2"))
      .def_property_readonly("degree", [](const ControlNet& n) { return py::make_tuple(n.degree_u(), n.degree_v()); })
      .def_property_readonly("points", &net_to_array)
      .def("eval", [](const ControlNet& n, double u, double v) { return Eigen::Vector3d(eval_surface(n, u, v)); },
           py::arg("u"), py::arg("v"))
      .def("decasteljau",
           [](const ControlNet& n, double u, double v) { return Eigen::Vector3d(decasteljau_surface(n, u, v)); },
           py::arg("u"), py::arg("v"))
      .def("elevate", [](const ControlNet& n) { return elevate_surface(n); })
      .def("iso_curve",
           [](const ControlNet& n, const std::string& fixed, double value) {
             if (fixed != "u" && fixed != "v") throw DomainError("fixed must be 'u' or 'v'");
             return iso_curve(n, fixed == "u" ? IsoDirection::UFixed : IsoDirection::VFixed, value);
           },
           py::arg("fixed"), py::arg("value"));

  m.def("node", [](int k, int n, double p, double q) { return node(k, n, {p, q}); },
        py::arg("k"), py::arg("n"), py::arg("p"), py::arg("q"));
  m.def("lupas_operator",
        [](const py::object& f, int n, double p, double q, double x) {
          return lupas_operator(wrap_callable(f), n, {p, q}, x);
        },
        py::arg("f"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("x"),
        "f is a callable or a corpus label ('1', 't', 't2', 't3', 'exp', 'sin_pi', 'abs_half').");
  m.def("moments", [](int n, double p, double q, double x) {
    const auto mo = moments(n, {p, q}, x);
    return py::make_tuple(mo.m0, mo.m1, mo.m2);
  }, py::arg("n"), py::arg("p"), py::arg("q"), py::arg("x"));
  m.def("limit_operator",
        [](const py::object& f, double p, double q, double x, double tol) {
          return limit_operator(wrap_callable(f), {p, q}, x, tol);
        },
        py::arg("f"), py::arg("p"), py::arg("q"), py::arg("x"), py::arg("tol") = 1e-12);
  m.def("reflection_pair",
        [](const py::object& f, int n, double p, double q, double t) {
          const auto r = reflection_pair(wrap_callable(f), n, {p, q}, t);
          return py::make_tuple(r.lhs, r.rhs);
        },
        py::arg("f"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("t"));
  m.def("convergence_table",
        [](const std::string& label, const std::vector<int>& n_values, std::optional<double> p,
           std::optional<double> q, int grid) {
          auto target = find_target(label);
          if (!target) throw DomainError("unknown target function label");
          const ParamSchedule schedule =
              (p && q) ? fixed_schedule(PQParams(*p, *q)) : reference_schedule();
          std::vector<ConvergenceRecord> table;
          {
            // Corpus functions only; worker threads never call into Python.
            py::gil_scoped_release release;
            table = convergence_table(*target, schedule, n_values, grid);
          }
          py::list rows;
          for (const auto& rec : table)
            rows.append(py::make_tuple(rec.n, rec.params.p(), rec.params.q(), rec.sup_error));
          return rows;
        },
        py::arg("f"), py::arg("n_values"), py::arg("p") = py::none(), py::arg("q") = py::none(),
        py::arg("grid") = 201, "Rows of (n, p_n, q_n, sup_error).");
}
