#include <gtest/gtest.h>

#include "quadform/json_io.hpp"
#include "support/reference.hpp"

using namespace quadform;
namespace ref = quadform::reference;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    (void)form_from_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::NotUnit;
}

}  // namespace

TEST(JsonIo, MetricDescriptor) {
  const QuadraticForm f = form_from_text(R"({"metric": [[6,3,2],[3,2,2],[2,2,3]]})");
  EXPECT_EQ(f.metric(), ref::kEllipsoidMetric);
}

TEST(JsonIo, CoefficientDescriptor) {
  const QuadraticForm f = form_from_text(R"({"coeffs": {"A":6,"B":2,"C":3,"D":3,"E":2,"F":2}})");
  EXPECT_EQ(f, QuadraticForm::from_metric(ref::kEllipsoidMetric));
  const QuadraticForm g = form_from_text(R"({"coeffs": {"A":-1,"B":1,"C":1}})");
  EXPECT_EQ(g, lorentz_form());
}

TEST(JsonIo, MalformedDescriptors) {
  EXPECT_EQ(code_of("{"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of("[1,2,3]"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"metric": [[1,0],[0,1]]})"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"metric": [[1,0,0],[0,1,0],[0,0,"x"]]})"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"coeffs": {"A":1,"B":1}})"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"other": 1})"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"metric": [[1,0,0],[0,-1,0],[0,0,0]]})"), ErrorCode::DegenerateForm);
}

TEST(JsonIo, NumberLiterals) {
  EXPECT_EQ(components_from_json(json::parse(R"({"s":1,"k":-2})")), (Vec4{{1, 0, 0, -2}}));
  EXPECT_EQ(components_from_json(json::parse("[1,2,3,4]")), (Vec4{{1, 2, 3, 4}}));
  EXPECT_THROW((void)components_from_json(json::parse(R"({"q":1})")), Error);
  EXPECT_THROW((void)components_from_json(json::parse("[1,2,3]")), Error);
  const QuadNumber q(make_system(euclidean_form()), 1, 2, 3, 4);
  EXPECT_EQ(components_from_json(to_json(q)), q.components());
}

TEST(JsonIo, FormAndTableShape) {
  const SystemPtr s = make_system(euclidean_form());
  const json j = system_json(*s);
  EXPECT_EQ(j.at("form").at("class"), "Ellipsoid");
  EXPECT_EQ(j.at("form").at("delta"), -1);
  const json t = to_json(multiplication_table(s->constants, s->form));
  EXPECT_EQ(t.at("i*j").at("k"), 1.0);
  EXPECT_EQ(t.size(), 16u);
}

TEST(JsonIo, PolarAndErrorShape) {
  const PolarForm p = polar_decompose(QuadNumber(make_system(euclidean_form()), 1, 1, 0, 0));
  const json j = to_json(p);
  EXPECT_EQ(j.at("case"), "EllipsoidPolar");
  EXPECT_EQ(j.at("epsilon"), 1);
  EXPECT_EQ(error_json(ErrorCode::NotUnit, "x").at("error"), "NotUnit");
}
