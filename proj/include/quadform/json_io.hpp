#pragma once

#include <json.hpp>
#include <string_view>

#include "quadform/algebra.hpp"
#include "quadform/error.hpp"
#include "quadform/form.hpp"
#include "quadform/oracle.hpp"
#include "quadform/rotations.hpp"
#include "quadform/structure.hpp"

namespace quadform {

using nlohmann::json;

json to_json(const Vec3& v);
json to_json(const Mat3& m);
json to_json(const Mat4& m);

/// `{"metric": [[..],[..],[..]]}` or `{"coeffs": {"A":..,..,"F":..}}` with the
/// coefficients describing 𝔐. Missing D, E, F default to 0. Throws
/// InvalidInput for malformed descriptors.
QuadraticForm form_from_json(const json& j);

/// Parses text as a form descriptor; throws InvalidInput on JSON syntax errors.
QuadraticForm form_from_text(std::string_view text);

json to_json(const QuadraticForm& f);
json to_json(const StructureConstants& sc);
json to_json(const ConstantResiduals& r);
/// Keyed by "a*b" for basis names a, b.
json to_json(const MultiplicationTable& t);
/// Form plus structure constants.
json system_json(const System& s);

/// `{"s":..,"i":..,"j":..,"k":..}`
json to_json(const QuadNumber& q);
/// Accepts the object form (missing keys are 0) or a four-element array.
Vec4 components_from_json(const json& j);

json to_json(const PolarForm& p);
json to_json(const RotationDiagnostics& d);
json to_json(const RotationMatrix3& r);
json to_json(const PropertyReport& r);

/// `{"error": "<code>", "detail": "..."}`
json error_json(ErrorCode code, std::string_view detail);

}  // namespace quadform
