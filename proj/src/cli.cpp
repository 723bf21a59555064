#include "quadform/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "quadform/json_io.hpp"

namespace quadform::cli {

namespace {

struct Options {
  std::string form;
  std::string out;
  bool json = false;
  bool degrees = false;

  std::vector<std::string> operands;
  std::string number;

  std::string method = "rodrigues";
  std::string axis;
  std::optional<double> angle;
  std::string quaternion;
  std::string points;
  bool exact_axis = false;

  int samples = 1000;
  std::uint64_t seed = 42;
};

enum class Format { Plain, Json, Csv };

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << (x == 0.0 ? 0.0 : x);
  return os.str();
}

double parse_double(const std::string& text, std::string_view what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + ": cannot read \"" + text + "\" as a number");
  }
  return value;
}

std::vector<double> parse_list(const std::string& text, std::string_view what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_double(trim(item), what));
  return values;
}

Vec3 parse_vec3(const std::string& text, std::string_view what) {
  const std::vector<double> v = parse_list(text, what);
  if (v.size() != 3) throw Error(ErrorCode::InvalidInput, std::string(what) + " needs x,y,z");
  return Vec3{{v[0], v[1], v[2]}};
}

/// "i", "-2.5k", "3", "1,0,2,0", or a JSON literal.
Vec4 parse_number(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw Error(ErrorCode::InvalidInput, "empty number");
  if (text.front() == '{' || text.front() == '[') {
    try {
      return components_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::InvalidInput, e.what());
    }
  }
  if (text.find(',') != std::string::npos) {
    const std::vector<double> v = parse_list(text, "number");
    if (v.size() != 4) throw Error(ErrorCode::InvalidInput, "number list needs s,i,j,k");
    return Vec4{{v[0], v[1], v[2], v[3]}};
  }
  Vec4 out;
  const char unit = text.back();
  if (unit == 'i' || unit == 'j' || unit == 'k') {
    const std::string coeff = text.substr(0, text.size() - 1);
    double c = 1.0;
    if (coeff == "-") {
      c = -1.0;
    } else if (!coeff.empty() && coeff != "+") {
      c = parse_double(coeff, "number");
    }
    out[unit == 'i' ? 1 : unit == 'j' ? 2 : 3] = c;
    return out;
  }
  out[0] = parse_double(text, "number");
  return out;
}

QuadraticForm load_form(const std::string& arg) {
  if (arg.empty()) throw Error(ErrorCode::InvalidInput, "--form is required");
  const std::string text = trim(arg);
  if (text.front() == '{') return form_from_text(text);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open form file \"" + arg + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return form_from_text(buffer.str());
}

std::vector<Vec3> load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open points file \"" + path + "\"");
  std::vector<Vec3> points;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    points.push_back(parse_vec3(t, "point"));
  }
  return points;
}

void log_system(const System& s, std::ostream& err) {
  const Coefficients c = s.form.number_coefficients();
  const StructureConstants& k = s.constants;
  err << "form: class " << to_string(s.form.form_class()) << ", delta " << s.delta()
      << ", A..F " << fmt(c.A) << ' ' << fmt(c.B) << ' ' << fmt(c.C) << ' ' << fmt(c.D) << ' '
      << fmt(c.E) << ' ' << fmt(c.F) << '\n';
  if (s.form.negated()) err << "warning: input metric was negated to a canonical signature\n";
  err << "constants: alpha1 " << fmt(k.alpha1) << ", alpha2 " << fmt(k.alpha2) << ", alpha3 "
      << fmt(k.alpha3) << ", beta1 " << fmt(k.beta1) << ", beta2 " << fmt(k.beta2) << ", lambda1 "
      << fmt(k.lambda1) << ", gamma " << fmt(k.gamma) << '\n';
}

std::string plain_matrix(const Mat3& m) {
  std::string s;
  for (std::size_t r = 0; r < 3; ++r)
    s += "  " + fmt(m(r, 0)) + ' ' + fmt(m(r, 1)) + ' ' + fmt(m(r, 2)) + '\n';
  return s;
}

std::string plain_number(const Vec4& q) {
  return fmt(q[0]) + ' ' + fmt(q[1]) + ' ' + fmt(q[2]) + ' ' + fmt(q[3]);
}

struct Output {
  json body;
  std::string plain;
  std::string csv;
  int code = kOk;
};

Output cmd_classify(const System& s) {
  Output o;
  o.body = to_json(s.form);
  const Signature sig = s.form.input_signature();
  const Vec3& ev = s.form.eigenvalues();
  o.plain = "class " + std::string(to_string(s.form.form_class())) + "\nsignature (" +
            std::to_string(sig.positive) + "," + std::to_string(sig.zero) + "," +
            std::to_string(sig.negative) + ")\ndelta " + std::to_string(s.delta()) +
            "\neigenvalues " + fmt(ev[0]) + ' ' + fmt(ev[1]) + ' ' + fmt(ev[2]) + '\n';
  return o;
}

Output cmd_derive(const System& s) {
  Output o;
  const ConstantResiduals r = constant_residuals(s.constants, s.form);
  const MultiplicationTable t = multiplication_table(s.constants, s.form);
  o.body = json{{"constants", to_json(s.constants)}, {"residuals", to_json(r)}, {"table", to_json(t)}};
  const StructureConstants& k = s.constants;
  o.plain = "alpha1 " + fmt(k.alpha1) + "\nalpha2 " + fmt(k.alpha2) + "\nalpha3 " + fmt(k.alpha3) +
            "\nbeta1 " + fmt(k.beta1) + "\nbeta2 " + fmt(k.beta2) + "\nlambda1 " + fmt(k.lambda1) +
            "\nmax residual " + fmt(r.max()) + "\n";
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      o.plain += std::string(basis_name(a)) + "*" + std::string(basis_name(b)) + " = " +
                 plain_number(t.at(a, b)) + '\n';
  return o;
}

Output cmd_mul(const SystemPtr& sys, const Options& opt) {
  if (opt.operands.size() < 2) throw Error(ErrorCode::InvalidInput, "mul needs at least two operands");
  QuadNumber acc(sys, parse_number(opt.operands.front()));
  json operands = json::array({to_json(acc)});
  for (std::size_t n = 1; n < opt.operands.size(); ++n) {
    const QuadNumber q(sys, parse_number(opt.operands[n]));
    operands.push_back(to_json(q));
    acc = acc * q;
  }
  Output o;
  o.body = json{{"operands", operands}, {"product", to_json(acc)}, {"character", character(acc)}};
  o.plain = plain_number(acc.components()) + '\n';
  return o;
}

Output cmd_polar(const SystemPtr& sys, const Options& opt) {
  const QuadNumber q(sys, parse_number(opt.number));
  const PolarForm pf = polar_decompose(q);
  const QuadNumber back = from_polar(sys, pf);
  Output o;
  o.body = json{{"number", to_json(q)},
                {"causal_type", to_string(classify_number(q))},
                {"polar", to_json(pf)},
                {"reconstruction", to_json(back)},
                {"round_trip_residual", max_abs((back - q).components())}};
  o.plain = std::string(to_string(pf.polar_case)) + "\nmagnitude " + fmt(pf.magnitude) + "\naxis " +
            fmt(pf.axis[0]) + ' ' + fmt(pf.axis[1]) + ' ' + fmt(pf.axis[2]) + "\nangle " +
            fmt(pf.angle) + "\nepsilon " + std::to_string(pf.epsilon) + '\n';
  return o;
}

/// Axis rescaled to |𝔙| = 1 unless lightlike.
Vec3 unit_or_null(const System& s, const Vec3& v) {
  const auto branch = rodrigues_branch(s, v);
  if (branch == RodriguesBranch::Nilpotent) return v;
  const double value = s.form.evaluate(v);
  if (value == 0.0) throw Error(ErrorCode::AxisNotUnit, "axis has zero form value");
  return v / std::sqrt(std::abs(value));
}

RotationMatrix3 build_rotation(const SystemPtr& sys, const Options& opt) {
  const System& s = *sys;
  const double scale = opt.degrees ? std::numbers::pi / 180.0 : 1.0;
  const bool has_angle = opt.angle.has_value();
  const double angle = has_angle ? *opt.angle * scale : 0.0;
  if (opt.method == "sandwich" && !opt.quaternion.empty()) {
    return sandwich_rotation(QuadNumber(sys, parse_number(opt.quaternion)));
  }
  if (opt.axis.empty()) throw Error(ErrorCode::InvalidInput, "--axis is required");
  const Vec3 raw = parse_vec3(opt.axis, "--axis");

  if (opt.method == "rodrigues") {
    if (!has_angle) throw Error(ErrorCode::InvalidInput, "rodrigues needs --angle");
    return rodrigues(s, raw, angle, !opt.exact_axis);
  }
  if (opt.method == "cayley") {
    if (!has_angle) return cayley(s, raw);
    const Vec3 v = opt.exact_axis ? raw : unit_or_null(s, raw);
    const auto branch = rodrigues_branch(s, v);
    if (!branch) throw Error(ErrorCode::AxisNotUnit, "axis is not unit; drop --exact-axis to rescale");
    switch (*branch) {
      case RodriguesBranch::Circular:
        if (std::abs(angle) >= std::numbers::pi) {
          throw Error(ErrorCode::InvalidInput, "cayley reaches circular angles in (−π, π) only");
        }
        return cayley(s, v * -std::tan(angle / 2));
      case RodriguesBranch::Hyperbolic:
        return cayley(s, v * -std::tanh(angle / 2));
      case RodriguesBranch::Nilpotent:
        return cayley(s, v * (angle / 2));
    }
  }
  if (opt.method == "sandwich") {
    if (!has_angle) throw Error(ErrorCode::InvalidInput, "sandwich needs --angle or --q");
    const Vec3 v = opt.exact_axis ? raw : unit_or_null(s, raw);
    const auto branch = rodrigues_branch(s, v);
    if (!branch) throw Error(ErrorCode::AxisNotUnit, "axis is not unit; drop --exact-axis to rescale");
    const double h = angle / 2;
    double q0 = 1.0, vs = -h;
    if (*branch == RodriguesBranch::Circular) q0 = std::cos(h), vs = std::sin(h);
    if (*branch == RodriguesBranch::Hyperbolic) q0 = std::cosh(h), vs = std::sinh(h);
    RotationMatrix3 r = sandwich_rotation(QuadNumber(sys, Vec4{{q0, v[0] * vs, v[1] * vs, v[2] * vs}}));
    r.angle = angle;
    r.branch = branch;
    return r;
  }
  throw Error(ErrorCode::InvalidInput, "unknown method \"" + opt.method + "\"");
}

Output cmd_rotate(const SystemPtr& sys, const Options& opt) {
  const RotationMatrix3 r = build_rotation(sys, opt);
  Output o;
  o.body = to_json(r);
  o.plain = std::string(to_string(r.method)) + " rotation\n" + plain_matrix(r.matrix) +
            "congruence residual " + fmt(r.diagnostics.congruence_residual) + "\ndet " +
            fmt(r.diagnostics.determinant) + "\naxis residual " + fmt(r.diagnostics.axis_residual) + '\n';
  if (!opt.points.empty()) {
    const std::vector<Vec3> points = load_points(opt.points);
    const RotatedPoints rotated = rotate_points(*sys, r, points);
    json list = json::array();
    for (const Vec3& p : rotated.points) {
      list.push_back(to_json(p));
      o.csv += fmt(p[0]) + ',' + fmt(p[1]) + ',' + fmt(p[2]) + '\n';
    }
    o.body["points"] = list;
    o.body["max_form_drift"] = rotated.max_form_drift;
    o.plain += "max form drift " + fmt(rotated.max_form_drift) + '\n' + o.csv;
  }
  return o;
}

Output cmd_check(const QuadraticForm& form, const Options& opt) {
  const std::vector<PropertyReport> reports = run_property_suite(form, opt.samples, opt.seed);
  Output o;
  json list = json::array();
  for (const PropertyReport& r : reports) {
    list.push_back(to_json(r));
    o.plain += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " residual " +
               fmt(r.max_residual) + " tol " + fmt(r.tolerance) + " samples " +
               std::to_string(r.samples) + '\n';
  }
  const bool ok = all_passed(reports);
  o.body = json{{"samples", opt.samples}, {"seed", opt.seed}, {"passed", ok}, {"properties", list}};
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

bool ends_with(std::string_view s, std::string_view tail) {
  return s.size() >= tail.size() && s.substr(s.size() - tail.size()) == tail;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write \"" + path + "\"");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Quadratic-form number systems and their rotations", "quadform"};
  app.require_subcommand(1);
  app.add_option("--form", opt.form, "Form descriptor: JSON file path or inline JSON");
  app.add_option("--out", opt.out, "Output file; for rotate, \"csv\" or \"json\" selects the format");
  app.add_flag("--json", opt.json, "Emit JSON");
  app.add_flag("--degrees", opt.degrees, "Read angles in degrees");

  auto* classify = app.add_subcommand("classify", "Signature, class, delta and eigenvalues");
  auto* derive = app.add_subcommand("derive", "Structure constants and multiplication table");
  auto* mul = app.add_subcommand("mul", "Multiply numbers left to right");
  mul->add_option("operands", opt.operands, "Numbers: i, -2k, 3, s,i,j,k or JSON")->required();
  auto* polar = app.add_subcommand("polar", "Polar decomposition of a number");
  polar->add_option("number", opt.number, "Number: i, -2k, 3, s,i,j,k or JSON")->required();
  auto* rotate = app.add_subcommand("rotate", "Build a rotation and apply it to points");
  rotate->add_option("--method", opt.method, "sandwich, rodrigues or cayley")
      ->check(CLI::IsMember({"sandwich", "rodrigues", "cayley"}));
  rotate->add_option("--axis", opt.axis, "Axis x,y,z");
  rotate->add_option("--angle", opt.angle, "Angle in radians (see --degrees)");
  rotate->add_option("--q", opt.quaternion, "Unit number for the sandwich method");
  rotate->add_option("--points", opt.points, "CSV file with one x,y,z per line");
  rotate->add_flag("--exact-axis", opt.exact_axis, "Require a unit axis instead of rescaling");
  auto* check = app.add_subcommand("check", "Run the randomized property suite");
  check->add_option("--samples", opt.samples, "Samples per property")->check(CLI::PositiveNumber);
  check->add_option("--seed", opt.seed, "Seed");
  for (auto* sub : {classify, derive, mul, polar, rotate, check}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << error_json(ErrorCode::InvalidInput, e.what()).dump() << '\n';
    return kError;
  }

  Format format = opt.json ? Format::Json : Format::Plain;
  std::string path;
  if (opt.out == "json") {
    format = Format::Json;
  } else if (opt.out == "csv") {
    format = Format::Csv;
  } else {
    path = opt.out;
    if (ends_with(path, ".csv")) format = Format::Csv;
    if (ends_with(path, ".json")) format = Format::Json;
  }

  try {
    const QuadraticForm form = load_form(opt.form);
    const SystemPtr sys = make_system(form);
    log_system(*sys, err);

    Output o;
    std::string name;
    if (classify->parsed()) {
      name = "classify";
      o = cmd_classify(*sys);
    } else if (derive->parsed()) {
      name = "derive";
      o = cmd_derive(*sys);
    } else if (mul->parsed()) {
      name = "mul";
      o = cmd_mul(sys, opt);
    } else if (polar->parsed()) {
      name = "polar";
      o = cmd_polar(sys, opt);
    } else if (rotate->parsed()) {
      name = "rotate";
      o = cmd_rotate(sys, opt);
    } else {
      name = "check";
      o = cmd_check(form, opt);
    }

    std::string text;
    switch (format) {
      case Format::Json: {
        json body = o.body;
        body["command"] = name;
        body["system"] = system_json(*sys);
        text = body.dump(2) + '\n';
        break;
      }
      case Format::Csv:
        if (name != "rotate" || opt.points.empty()) {
          throw Error(ErrorCode::InvalidInput, "CSV output is only for rotate with --points");
        }
        text = o.csv;
        break;
      case Format::Plain:
        text = o.plain;
        break;
    }
    emit(text, path, out);
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    out << error_json(e.code(), e.detail()).dump() << '\n';
    return kError;
  }
}

}  // namespace quadform::cli
