#include "quadform/json_io.hpp"

#include <string>

namespace quadform {

namespace {

double number_at(const json& j, std::string_view what) {
  if (!j.is_number()) throw Error(ErrorCode::InvalidInput, std::string(what) + " must be a number");
  return j.get<double>();
}

json signature_json(const Signature& s) { return json::array({s.positive, s.zero, s.negative}); }

json coefficients_json(const Coefficients& c) {
  return json{{"A", c.A}, {"B", c.B}, {"C", c.C}, {"D", c.D}, {"E", c.E}, {"F", c.F}};
}

}  // namespace

json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const Mat3& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 3; ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

json to_json(const Mat4& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 4; ++r) rows.push_back(json::array({m(r, 0), m(r, 1), m(r, 2), m(r, 3)}));
  return rows;
}

QuadraticForm form_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "form descriptor must be a JSON object");
  if (j.contains("metric")) {
    const json& rows = j.at("metric");
    if (!rows.is_array() || rows.size() != 3) {
      throw Error(ErrorCode::InvalidInput, "metric must be a 3×3 array");
    }
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r) {
      if (!rows[r].is_array() || rows[r].size() != 3) {
        throw Error(ErrorCode::InvalidInput, "metric must be a 3×3 array");
      }
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = number_at(rows[r][c], "metric entry");
    }
    return QuadraticForm::from_metric(m);
  }
  if (j.contains("coeffs")) {
    const json& c = j.at("coeffs");
    if (!c.is_object()) throw Error(ErrorCode::InvalidInput, "coeffs must be an object");
    const auto get = [&](const char* key, bool required) {
      if (!c.contains(key)) {
        if (required) throw Error(ErrorCode::InvalidInput, std::string("coeffs.") + key + " is missing");
        return 0.0;
      }
      return number_at(c.at(key), std::string("coeffs.") + key);
    };
    Coefficients k;
    k.A = get("A", true);
    k.B = get("B", true);
    k.C = get("C", true);
    k.D = get("D", false);
    k.E = get("E", false);
    k.F = get("F", false);
    return QuadraticForm::from_coefficients(k);
  }
  throw Error(ErrorCode::InvalidInput, "form descriptor needs \"metric\" or \"coeffs\"");
}

QuadraticForm form_from_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, e.what());
  }
  return form_from_json(j);
}

json to_json(const QuadraticForm& f) {
  return json{
      {"metric", to_json(f.metric())},
      {"number_matrix", to_json(f.number_matrix())},
      {"coefficients", coefficients_json(f.number_coefficients())},
      {"delta", f.delta()},
      {"signature", signature_json(f.signature())},
      {"input_signature", signature_json(f.input_signature())},
      {"class", to_string(f.form_class())},
      {"eigenvalues", to_json(f.eigenvalues())},
      {"negated_negative_definite", f.negated_negative_definite()},
      {"negated_hyperboloid12", f.negated_hyperboloid12()},
  };
}

json to_json(const StructureConstants& sc) {
  return json{{"alpha1", sc.alpha1}, {"alpha2", sc.alpha2}, {"alpha3", sc.alpha3},
              {"beta1", sc.beta1},   {"beta2", sc.beta2},   {"beta3", sc.beta3},
              {"lambda1", sc.lambda1}, {"lambda2", sc.lambda2}, {"lambda3", sc.lambda3},
              {"gamma", sc.gamma}};
}

json to_json(const ConstantResiduals& r) {
  return json{{"A", r.residuals[0]}, {"B", r.residuals[1]}, {"C", r.residuals[2]},
              {"D", r.residuals[3]}, {"E", r.residuals[4]}, {"F", r.residuals[5]},
              {"tolerance", r.tolerance}, {"ok", r.ok}};
}

json to_json(const MultiplicationTable& t) {
  json out = json::object();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const Vec4& e = t.at(r, c);
      out[std::string(basis_name(r)) + "*" + std::string(basis_name(c))] =
          json{{"s", e[0]}, {"i", e[1]}, {"j", e[2]}, {"k", e[3]}};
    }
  return out;
}

json system_json(const System& s) {
  return json{{"form", to_json(s.form)}, {"constants", to_json(s.constants)}};
}

json to_json(const QuadNumber& q) {
  return json{{"s", q.s()}, {"i", q.i()}, {"j", q.j()}, {"k", q.k()}};
}

Vec4 components_from_json(const json& j) {
  Vec4 out;
  if (j.is_array()) {
    if (j.size() != 4) throw Error(ErrorCode::InvalidInput, "number array needs four components");
    for (std::size_t n = 0; n < 4; ++n) out[n] = number_at(j[n], "number component");
    return out;
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "number must be an object or array");
  const char* keys[] = {"s", "i", "j", "k"};
  for (std::size_t n = 0; n < 4; ++n) {
    if (j.contains(keys[n])) out[n] = number_at(j.at(keys[n]), std::string("number.") + keys[n]);
  }
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "s" && key != "i" && key != "j" && key != "k") {
      throw Error(ErrorCode::InvalidInput, "unknown number component \"" + key + "\"");
    }
  }
  return out;
}

json to_json(const PolarForm& p) {
  return json{{"case", to_string(p.polar_case)}, {"magnitude", p.magnitude},
              {"axis", to_json(p.axis)},         {"angle", p.angle},
              {"epsilon", p.epsilon},            {"axis_defined", p.axis_defined}};
}

json to_json(const RotationDiagnostics& d) {
  return json{{"congruence_residual", d.congruence_residual},
              {"determinant", d.determinant},
              {"determinant_residual", d.determinant_residual},
              {"axis_residual", d.axis_residual},
              {"tolerance", kRotationTolerance},
              {"passed", d.passed}};
}

json to_json(const RotationMatrix3& r) {
  json out{{"method", to_string(r.method)},
           {"matrix", to_json(r.matrix)},
           {"axis", to_json(r.axis)},
           {"angle", r.angle},
           {"diagnostics", to_json(r.diagnostics)}};
  out["branch"] = r.branch ? json(to_string(*r.branch)) : json(nullptr);
  return out;
}

json to_json(const PropertyReport& r) {
  return json{{"name", r.name},         {"samples", r.samples}, {"max_residual", r.max_residual},
              {"tolerance", r.tolerance}, {"passed", r.passed},  {"seed", r.seed}};
}

json error_json(ErrorCode code, std::string_view detail) {
  return json{{"error", to_string(code)}, {"detail", detail}};
}

}  // namespace quadform
