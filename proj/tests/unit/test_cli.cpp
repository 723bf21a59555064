#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "quadform/cli.hpp"

using nlohmann::json;

namespace {

const std::string kData = QUADFORM_TEST_DATA;
const std::string kEllipsoid = kData + "/ellipsoid.json";
const std::string kSphere = kData + "/sphere.json";
const std::string kLorentz = kData + "/lorentz.json";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = quadform::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int want_code = 0) {
  args.push_back("--json");
  const Result r = run(args);
  EXPECT_EQ(r.code, want_code) << r.out << r.err;
  return json::parse(r.out);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ClassifyReferenceEllipsoid) {
  const json j = run_json({"classify", "--form", kEllipsoid});
  EXPECT_EQ(j.at("command"), "classify");
  EXPECT_EQ(j.at("class"), "Ellipsoid");
  EXPECT_EQ(j.at("delta"), -1);
  EXPECT_EQ(j.at("input_signature"), json::array({3, 0, 0}));
}

TEST(Cli, ClassifyInlineDescriptor) {
  const json j = run_json({"classify", "--form", R"({"coeffs":{"A":1,"B":-1,"C":-1}})"});
  EXPECT_EQ(j.at("class"), "Hyperboloid12");
  EXPECT_EQ(j.at("negated_hyperboloid12"), true);
}

TEST(Cli, DegenerateFormIsAnError) {
  const Result r = run({"classify", "--form", kData + "/degenerate.json"});
  EXPECT_EQ(r.code, quadform::cli::kError);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("error"), "DegenerateForm");
}

TEST(Cli, MissingFormIsInvalidInput) {
  const Result r = run({"classify"});
  EXPECT_EQ(r.code, quadform::cli::kError);
  EXPECT_EQ(json::parse(r.out).at("error"), "InvalidInput");
  EXPECT_EQ(run({"--form", kSphere}).code, quadform::cli::kError);
  EXPECT_EQ(run({"frobnicate", "--form", kSphere}).code, quadform::cli::kError);
}

TEST(Cli, DeriveReferenceConstants) {
  const json j = run_json({"derive", "--form", kEllipsoid});
  const json& k = j.at("constants");
  EXPECT_EQ(k.at("alpha1"), 2.0);
  EXPECT_EQ(k.at("alpha2"), -6.0);
  EXPECT_EQ(k.at("alpha3"), 3.0);
  EXPECT_EQ(k.at("beta1"), 5.0);
  EXPECT_EQ(k.at("beta2"), -14.0);
  EXPECT_EQ(k.at("lambda1"), 2.0);
  EXPECT_EQ(j.at("residuals").at("ok"), true);
  EXPECT_EQ(j.at("table").at("i*j"), (json{{"s", -3.0}, {"i", 2.0}, {"j", -6.0}, {"k", 3.0}}));
}

TEST(Cli, DeriveLogsSystemToStderr) {
  const Result r = run({"derive", "--form", kSphere});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("class Ellipsoid"), std::string::npos);
  EXPECT_NE(r.out.find("i*j = 0 0 0 1"), std::string::npos);
}

TEST(Cli, MultiplyQuaternions) {
  const Result r = run({"mul", "--form", kSphere, "i", "j"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 0 0 1\n");
  const json j = run_json({"mul", "--form", kSphere, "1,1,0,0", R"({"s":1,"i":-1})"});
  EXPECT_EQ(j.at("product"), (json{{"s", 2.0}, {"i", 0.0}, {"j", 0.0}, {"k", 0.0}}));
  EXPECT_EQ(run({"mul", "--form", kSphere, "i", "2x"}).code, quadform::cli::kError);
}

TEST(Cli, PolarLorentz) {
  const json j = run_json({"polar", "--form", kLorentz, "2,0,1,0"});
  EXPECT_EQ(j.at("polar").at("case"), "TimelikeSpacelikeAxis");
  EXPECT_NEAR(j.at("polar").at("angle").get<double>(), std::log(std::sqrt(3.0)), 1e-15);
  EXPECT_LE(j.at("round_trip_residual").get<double>(), 1e-12);
}

TEST(Cli, RodriguesZeroAngleIsIdentity) {
  const json j = run_json({"rotate", "--form", kEllipsoid, "--method", "rodrigues", "--axis", "0,0,1", "--angle", "0"});
  EXPECT_EQ(j.at("matrix"), json::parse("[[1,0,0],[0,1,0],[0,0,1]]"));
  EXPECT_EQ(j.at("diagnostics").at("passed"), true);
}

TEST(Cli, MethodsAgreeOnTheSameRotation) {
  for (const std::string& form : {kSphere, kEllipsoid, kLorentz}) {
    std::vector<json> mats;
    for (const char* method : {"rodrigues", "sandwich", "cayley"}) {
      const json j = run_json({"rotate", "--form", form, "--method", method, "--axis", "0,0,1", "--angle", "0.9"});
      mats.push_back(j.at("matrix"));
    }
    for (std::size_t m = 1; m < mats.size(); ++m)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
          EXPECT_NEAR(mats[m][r][c].get<double>(), mats[0][r][c].get<double>(), 1e-9) << form << " method " << m;
  }
}

TEST(Cli, DegreesFlag) {
  const json a = run_json({"rotate", "--form", kSphere, "--axis", "0,0,1", "--angle", "90", "--degrees"});
  EXPECT_NEAR(a.at("matrix")[1][0].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(a.at("angle").get<double>(), std::numbers::pi / 2, 1e-15);
}

TEST(Cli, ExactAxisRejectsNonUnit) {
  const Result r = run({"rotate", "--form", kSphere, "--axis", "0,0,2", "--angle", "1", "--exact-axis"});
  EXPECT_EQ(r.code, quadform::cli::kError);
  EXPECT_EQ(json::parse(r.out).at("error"), "AxisNotUnit");
}

TEST(Cli, CayleyOnUnitSpacelikeAxisFails) {
  const Result r = run({"rotate", "--form", kLorentz, "--method", "cayley", "--axis", "0,1,0"});
  EXPECT_EQ(r.code, quadform::cli::kError);
  EXPECT_EQ(json::parse(r.out).at("error"), "UnitSpacelikeAxis");
}

TEST(Cli, RotatePointsCsv) {
  const Result r = run({"rotate", "--form", kSphere, "--axis", "0,0,1", "--angle", "90", "--degrees", "--points",
                        kData + "/points.csv", "--out", "csv"});
  EXPECT_EQ(r.code, 0) << r.out;
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  double x = 0, y = 0, z = 0;
  char c1 = 0, c2 = 0;
  std::istringstream(first) >> x >> c1 >> y >> c2 >> z;
  EXPECT_EQ(c1, ',');
  EXPECT_EQ(c2, ',');
  EXPECT_NEAR(x, 0.0, 1e-15);
  EXPECT_NEAR(y, 1.0, 1e-15);
  EXPECT_NEAR(z, 0.0, 1e-15);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST(Cli, OutputToFile) {
  const auto dir = std::filesystem::temp_directory_path() / "quadform_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "rot.json";
  const Result r = run({"rotate", "--form", kSphere, "--axis", "1,0,0", "--angle", "0.5", "--points",
                        kData + "/points.csv", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const json j = json::parse(slurp(path));
  EXPECT_EQ(j.at("points").size(), 4u);
  EXPECT_LE(j.at("max_form_drift").get<double>(), 1e-9);
  std::filesystem::remove_all(dir);
}

TEST(Cli, CsvWithoutPointsIsRejected) {
  EXPECT_EQ(run({"derive", "--form", kSphere, "--out", "csv"}).code, quadform::cli::kError);
}

TEST(Cli, CheckPassesAndIsReproducible) {
  const std::vector<std::string> args{"check", "--form", kEllipsoid, "--seed", "42", "--samples", "200", "--json"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out).at("passed"), true);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"rotate", "--form", kLorentz, "--method", "cayley", "--axis", "0.2,0.1,0.3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, HelpExitsCleanly) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rotate"), std::string::npos);
}
