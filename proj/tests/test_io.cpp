#include <doctest.h>

#include "delzant/error.hpp"
#include "delzant/io.hpp"
#include "support.hpp"

using namespace delzant;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_polytope(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("offset literals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5e2") == Rational(-150));
  CHECK(parse_rational("12345678901234567890") == Rational(BigInt("12345678901234567890")));
  CHECK(parse_rational("0.000123456789012") == Rational(123456789012, BigInt("1000000000000000")));
  CHECK_THROWS_AS(parse_rational("0.1234567890123"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("polytope files parse with exact offsets") {
  const auto p = parse_polytope(R"({"dim": 2, "facets": [
    {"normal": [1, 0], "offset": 0},
    {"normal": [0, 1], "offset": "0/3"},
    {"normal": [-1, -1], "offset": -0.5}
  ]})");
  CHECK(p.facets()[2].offset == Rational(-1, 2));
  CHECK(p.vertices().size() == 3);
}

TEST_CASE("parse errors name the field and line") {
  const std::string too_precise = "{\n  \"dim\": 2,\n  \"facets\": [\n    {\"normal\": [1, 0], \"offset\": 0},\n"
                                  "    {\"normal\": [0, 1], \"offset\": 0},\n"
                                  "    {\"normal\": [-1, -1], \"offset\": -2.00000000000001}\n  ]\n}\n";
  const std::string msg = error_of(too_precise);
  CHECK(msg.find("facets[2].offset (line 6)") != std::string::npos);
  CHECK(msg.rfind("Parse", 0) == 0);

  const std::string nonprimitive = "{\"dim\": 2, \"facets\": [{\"normal\": [2, 0], \"offset\": 0}]}";
  CHECK(error_of(nonprimitive).find("NonPrimitiveNormal: facets[0].normal (line 1)") == 0);

  const std::string duplicate =
      "{\"dim\": 2, \"facets\": [{\"normal\": [1, 0], \"offset\": 0}, {\"normal\": [1, 0], \"offset\": 0}]}";
  CHECK(error_of(duplicate).find("DuplicateFacet: facets[1]") == 0);

  CHECK(error_of("{\"dim\": 2, \"facets\": [{\"normal\": [1.5, 0], \"offset\": 0}]}").find("facets[0].normal[0]") !=
        std::string::npos);
  CHECK(error_of("{\"dim\": 2").rfind("Parse", 0) == 0);
  CHECK(error_of("{\"dim\": 2, \"facets\": [{\"normal\": [1], \"offset\": 0}]}").find("DimensionMismatch") == 0);
}

TEST_CASE("catalog files load") {
  for (const auto& name : testing::catalog_names()) CHECK_NOTHROW(testing::catalog(name));
}
