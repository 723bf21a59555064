#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadform/algebra.hpp"
#include "quadform/error.hpp"
#include "quadform/form.hpp"
#include "quadform/oracle.hpp"
#include "quadform/rotations.hpp"
#include "quadform/structure.hpp"

namespace py = pybind11;
using namespace quadform;

namespace {

using Rows3 = std::array<std::array<double, 3>, 3>;

Mat3 to_mat3(const Rows3& rows) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = rows[r][c];
  return m;
}

Rows3 from_mat3(const Mat3& m) {
  Rows3 rows{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) rows[r][c] = m(r, c);
  return rows;
}

std::vector<std::vector<double>> from_mat4(const Mat4& m) {
  std::vector<std::vector<double>> rows(4, std::vector<double>(4));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) rows[r][c] = m(r, c);
  return rows;
}

Vec3 to_vec3(const std::array<double, 3>& a) { return Vec3{a}; }
std::array<double, 3> from_vec3(const Vec3& v) { return v.v; }

py::dict constants_dict(const StructureConstants& k) {
  py::dict d;
  d["alpha1"] = k.alpha1;
  d["alpha2"] = k.alpha2;
  d["alpha3"] = k.alpha3;
  d["beta1"] = k.beta1;
  d["beta2"] = k.beta2;
  d["beta3"] = k.beta3;
  d["lambda1"] = k.lambda1;
  d["lambda2"] = k.lambda2;
  d["lambda3"] = k.lambda3;
  d["gamma"] = k.gamma;
  return d;
}

py::dict polar_dict(const PolarForm& p) {
  py::dict d;
  d["case"] = std::string(to_string(p.polar_case));
  d["magnitude"] = p.magnitude;
  d["axis"] = from_vec3(p.axis);
  d["angle"] = p.angle;
  d["epsilon"] = p.epsilon;
  d["axis_defined"] = p.axis_defined;
  return d;
}

PolarCase polar_case_from(const std::string& name) {
  for (PolarCase c : {PolarCase::EllipsoidPolar, PolarCase::SpacelikePolar, PolarCase::TimelikeSpacelikeAxis,
                      PolarCase::TimelikeTimelikeAxis, PolarCase::TimelikeLightlikeAxis,
                      PolarCase::LightlikeSpacelikeAxis, PolarCase::LightlikeLightlikeAxis}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::InvalidInput, "unknown polar case " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Number systems on ternary quadratic forms and their rotations";

  py::exception<Error>(m, "QuadformError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::module_::import("quadform._core").attr("QuadformError");
      py::object exc = type(py::str(e.what()));
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<QuadraticForm>(m, "Form")
      .def_static("from_metric", [](const Rows3& rows) { return QuadraticForm::from_metric(to_mat3(rows)); },
                  py::arg("metric"))
      .def_static(
          "from_coefficients",
          [](double A, double B, double C, double D, double E, double F) {
            return QuadraticForm::from_coefficients(Coefficients{A, B, C, D, E, F});
          },
          py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D") = 0.0, py::arg("E") = 0.0,
          py::arg("F") = 0.0)
      .def_property_readonly("metric", [](const QuadraticForm& f) { return from_mat3(f.metric()); })
      .def_property_readonly("number_matrix", [](const QuadraticForm& f) { return from_mat3(f.number_matrix()); })
      .def_property_readonly("coefficients",
                             [](const QuadraticForm& f) {
                               const Coefficients c = f.number_coefficients();
                               return std::array<double, 6>{c.A, c.B, c.C, c.D, c.E, c.F};
                             })
      .def_property_readonly("delta", &QuadraticForm::delta)
      .def_property_readonly("form_class", [](const QuadraticForm& f) { return std::string(to_string(f.form_class())); })
      .def_property_readonly("signature",
                             [](const QuadraticForm& f) {
                               const Signature s = f.input_signature();
                               return py::make_tuple(s.positive, s.zero, s.negative);
                             })
      .def_property_readonly("eigenvalues", [](const QuadraticForm& f) { return from_vec3(f.eigenvalues()); })
      .def_property_readonly("negated", &QuadraticForm::negated)
      .def("evaluate", [](const QuadraticForm& f, const std::array<double, 3>& v) { return f.evaluate(to_vec3(v)); })
      .def("bilinear", [](const QuadraticForm& f, const std::array<double, 3>& u, const std::array<double, 3>& v) {
        return f.bilinear(to_vec3(u), to_vec3(v));
      });

  py::class_<System, std::shared_ptr<System>>(m, "System")
      .def(py::init([](const QuadraticForm& f) { return std::const_pointer_cast<System>(make_system(f)); }),
           py::arg("form"))
      .def_property_readonly("form", [](const System& s) { return s.form; })
      .def_property_readonly("delta", &System::delta)
      .def_property_readonly("constants", [](const System& s) { return constants_dict(s.constants); })
      .def("table",
           [](const System& s) {
             const MultiplicationTable t = multiplication_table(s.constants, s.form);
             py::dict d;
             for (std::size_t r = 0; r < 4; ++r)
               for (std::size_t c = 0; c < 4; ++c)
                 d[py::str(std::string(basis_name(r)) + "*" + std::string(basis_name(c)))] = t.at(r, c).v;
             return d;
           })
      .def("residuals", [](const System& s) { return constant_residuals(s.constants, s.form).residuals; })
      .def("vector_product",
           [](const System& s, const std::array<double, 3>& u, const std::array<double, 3>& v) {
             return from_vec3(vector_product(s, to_vec3(u), to_vec3(v)));
           })
      .def("classify_vector",
           [](const System& s, const std::array<double, 3>& v) { return std::string(to_string(classify_vector(s, to_vec3(v)))); })
      .def("skew_matrix",
           [](const System& s, const std::array<double, 3>& v) { return from_mat3(skew_matrix(s, to_vec3(v))); });

  py::class_<QuadNumber>(m, "Number")
      .def(py::init([](const std::shared_ptr<System>& s, double q0, double q1, double q2, double q3) {
             return QuadNumber(s, q0, q1, q2, q3);
           }),
           py::arg("system"), py::arg("s") = 0.0, py::arg("i") = 0.0, py::arg("j") = 0.0, py::arg("k") = 0.0)
      .def_property_readonly("components", [](const QuadNumber& q) { return q.components().v; })
      .def_property_readonly("scalar", &QuadNumber::scalar_part)
      .def_property_readonly("vector", [](const QuadNumber& q) { return from_vec3(q.vector_part()); })
      .def("__mul__", [](const QuadNumber& a, const QuadNumber& b) { return a * b; })
      .def("__mul__", [](const QuadNumber& a, double s) { return a * s; })
      .def("__rmul__", [](const QuadNumber& a, double s) { return a * s; })
      .def("__add__", [](const QuadNumber& a, const QuadNumber& b) { return a + b; })
      .def("__sub__", [](const QuadNumber& a, const QuadNumber& b) { return a - b; })
      .def("__neg__", [](const QuadNumber& a) { return -a; })
      .def("conjugate", &conjugate)
      .def("character", &character)
      .def("norm", &norm)
      .def("inverse", &invert)
      .def("causal_type", [](const QuadNumber& q) { return std::string(to_string(classify_number(q))); })
      .def("polar", [](const QuadNumber& q) { return polar_dict(polar_decompose(q)); })
      .def("left_matrix", [](const QuadNumber& q) { return from_mat4(left_matrix(q)); })
      .def("right_matrix", [](const QuadNumber& q) { return from_mat4(right_matrix(q)); })
      .def("__repr__", [](const QuadNumber& q) {
        return "Number(" + std::to_string(q.s()) + ", " + std::to_string(q.i()) + ", " +
               std::to_string(q.j()) + ", " + std::to_string(q.k()) + ")";
      });

  m.def(
      "from_polar",
      [](const std::shared_ptr<System>& s, double magnitude, const std::array<double, 3>& axis, double angle,
         int epsilon, const std::string& polar_case) {
        PolarForm pf;
        pf.magnitude = magnitude;
        pf.axis = to_vec3(axis);
        pf.angle = angle;
        pf.epsilon = epsilon;
        pf.polar_case = polar_case_from(polar_case);
        return from_polar(s, pf);
      },
      py::arg("system"), py::arg("magnitude"), py::arg("axis"), py::arg("angle"), py::arg("epsilon"),
      py::arg("case"));

  py::class_<RotationMatrix3>(m, "Rotation")
      .def_property_readonly("matrix", [](const RotationMatrix3& r) { return from_mat3(r.matrix); })
      .def_property_readonly("method", [](const RotationMatrix3& r) { return std::string(to_string(r.method)); })
      .def_property_readonly("axis", [](const RotationMatrix3& r) { return from_vec3(r.axis); })
      .def_property_readonly("angle", [](const RotationMatrix3& r) { return r.angle; })
      .def_property_readonly("branch",
                             [](const RotationMatrix3& r) -> py::object {
                               if (!r.branch) return py::none();
                               return py::str(std::string(to_string(*r.branch)));
                             })
      .def_property_readonly("congruence_residual", [](const RotationMatrix3& r) { return r.diagnostics.congruence_residual; })
      .def_property_readonly("determinant", [](const RotationMatrix3& r) { return r.diagnostics.determinant; })
      .def_property_readonly("axis_residual", [](const RotationMatrix3& r) { return r.diagnostics.axis_residual; })
      .def_property_readonly("passed", [](const RotationMatrix3& r) { return r.diagnostics.passed; })
      .def("apply", [](const RotationMatrix3& r, const std::array<double, 3>& p) { return from_vec3(r.matrix * to_vec3(p)); });

  m.def("sandwich_rotation", &sandwich_rotation, py::arg("q"));
  m.def(
      "rodrigues",
      [](const System& s, const std::array<double, 3>& v, double theta, bool normalize) {
        return rodrigues(s, to_vec3(v), theta, normalize);
      },
      py::arg("system"), py::arg("axis"), py::arg("theta"), py::arg("normalize") = false);
  m.def(
      "cayley", [](const System& s, const std::array<double, 3>& v) { return cayley(s, to_vec3(v)); },
      py::arg("system"), py::arg("axis"));
  m.def(
      "check",
      [](const QuadraticForm& f, int samples, std::uint64_t seed) {
        py::list out;
        for (const PropertyReport& r : run_property_suite(f, samples, seed)) {
          py::dict d;
          d["name"] = r.name;
          d["samples"] = r.samples;
          d["max_residual"] = r.max_residual;
          d["tolerance"] = r.tolerance;
          d["passed"] = r.passed;
          d["seed"] = r.seed;
          out.append(d);
        }
        return out;
      },
      py::arg("form"), py::arg("samples") = 200, py::arg("seed") = 42);
}
