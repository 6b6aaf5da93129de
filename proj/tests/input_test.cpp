#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "plk/error.hpp"
#include "plk/input.hpp"

namespace plk {
namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(PLK_DATA_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Input, LowerTriangularShorthandIsCompleted) {
  const InputDocument doc = parse_input(R"({"dim": 2, "C": [[1, 2, 2, "1"]], "lower_triangular_input": true})");
  const LieAlgebra g = doc.algebra();
  EXPECT_EQ(g, builtin_algebra("aff1"));
  EXPECT_EQ(g.c(1, 1, 0), Scalar(-1));
}

TEST(Input, NonNegatedPairSurfacesFromTheAlgebra) {
  const InputDocument doc = parse_input(R"({"dim": 2, "C": [[1, 2, 2, "1"], [2, 1, 2, "1"]]})");
  EXPECT_EQ(kind_of([&] { doc.algebra(); }), ErrorKind::NotAntisymmetric);
}

TEST(Input, IndexOutOfRange) {
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [[1, 5, 2, "1"]]})"); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [[0, 1, 2, "1"]]})"); }), ErrorKind::IndexOutOfRange);
}

TEST(Input, DuplicatesAreNotSummed) {
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [[1, 2, 2, "1"], [1, 2, 2, "1"]]})"); }),
            ErrorKind::DuplicateEntry);
  EXPECT_EQ(kind_of([] {
              parse_input(R"({"dim": 2, "C": [[1, 2, 2, "1"], [2, 1, 2, "-1"]], "lower_triangular_input": true})");
            }),
            ErrorKind::DuplicateEntry);
}

TEST(Input, ValuesMustBeExactRationals) {
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [[1, 2, 2, 0.5]]})"); }), ErrorKind::NonRationalValue);
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [[1, 2, 2, "1/0"]]})"); }), ErrorKind::NonRationalValue);
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "r": [[1, 2, "x"]], "C": []})"); }), ErrorKind::NonRationalValue);
}

TEST(Input, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_input("{\n  \"dim\": 2,\n  \"C\": [,]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3, column 9"), std::string::npos) << e.what();
  }
}

TEST(Input, UnknownKeysAndMissingFields) {
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [], "rr": []})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_input(R"({"C": []})"); }), ErrorKind::MissingField);
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2})"); }), ErrorKind::MissingField);
  EXPECT_EQ(kind_of([] { parse_input(R"({"name": "so3"})"); }), ErrorKind::UnknownAlgebra);
}

TEST(Input, CatalogNameStandsInForC) {
  const InputDocument doc = parse_input(R"({"name": "gl:2"})");
  EXPECT_EQ(doc.dim, 4u);
  EXPECT_EQ(doc.algebra(), builtin_algebra("gl:2"));
  EXPECT_EQ(kind_of([] { parse_input(R"({"name": "gl:2", "dim": 3})"); }), ErrorKind::DimensionMismatch);
}

TEST(Input, OptionalFieldsAreRead) {
  const InputDocument doc = parse_input(read("abelian3.json"));
  EXPECT_EQ(doc.r_matrix()(0, 1), Scalar(3, 2));
  EXPECT_EQ(doc.r_matrix()(1, 0), Scalar(-3, 2));
  const Polynomial theta = doc.theta_polynomial();
  const unsigned e[] = {2, 0, 1};
  EXPECT_EQ(theta.coefficient(Monomial::from_exponents(e)), Scalar(1));
  EXPECT_EQ(doc.real_basis()->size(), 3u);
  EXPECT_FALSE(doc.cocycle().has_value());
}

TEST(Input, RoundTripIsIdentityOnCanonicalDocuments) {
  for (const char* name : {"aff1.json", "abelian3.json", "gl2_triangular.json", "gl3_trace.json", "sl2_ef.json"}) {
    const InputDocument doc = parse_input(read(name));
    EXPECT_EQ(parse_input(emit_input(doc)), doc) << name;
    EXPECT_EQ(emit_input(parse_input(emit_input(doc))), emit_input(doc)) << name;
  }
}

TEST(Input, ShapeErrors) {
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [[1, 2, "1"]]})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [], "theta": [[[1], "1"]]})"); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { parse_input(R"({"dim": 2, "C": [], "matrix_basis": [[["1"]]]})"); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { parse_input("[1, 2]"); }), ErrorKind::ParseError);
}

}  // namespace
}  // namespace plk
