#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfsim/constructors.hpp"
#include "selfsim/text.hpp"

using namespace selfsim;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("split_top_level ignores separators inside brackets") {
  const auto parts = split_top_level(" (1,1,0) , [a, b], c ", ',');
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == "(1,1,0)");
  CHECK(parts[1] == "[a, b]");
  CHECK(parts[2] == "c");
  CHECK(trim("  x \t") == "x");
}

TEST_CASE("paths") {
  const auto k = katsura_3_2();
  const Graph& g = k.graph();
  const Path p = parse_path(g, "(1,1,2).(1,1,0)");
  CHECK(p.length() == 2);
  CHECK(format_path(g, p) == "(1,1,2).(1,1,0)");
  CHECK(format_path(g, parse_path(g, "@1")) == "@1");
  CHECK(code_of([&] { parse_path(g, "(1,1,7)"); }) == ErrorCode::kUnknownLabel);
  CHECK(code_of([&] { parse_path(g, "@9"); }) == ErrorCode::kUnknownLabel);
  CHECK(code_of([&] { parse_path(g, ""); }) == ErrorCode::kParse);

  const Graph ab({"a", "b"}, {{"f", VertexId{1}, VertexId{0}}});
  CHECK(code_of([&] { parse_path(ab, "f.f"); }) == ErrorCode::kIllegalComposition);
}

TEST_CASE("infinite paths") {
  const auto t = odometer();
  const Graph& g = t.graph();
  CHECK(format_inf_path(g, parse_inf_path(g, "e1(e0)*")) == "e1(e0)*");
  CHECK(format_inf_path(g, parse_inf_path(g, "e0(e0.e0)*")) == "(e0)*");
  CHECK(format_inf_path(g, parse_inf_path(g, "e0.e1...")) == "e0.e1...");
  CHECK(code_of([&] { parse_inf_path(g, "e1"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_inf_path(g, "e1()*"); }) == ErrorCode::kParse);
}

TEST_CASE("semigroup elements") {
  const auto t = odometer();
  CHECK(format_element(t, parse_element(t, "(e0, 1, e1)")) == "(e0, 1, e1)");
  CHECK(format_element(t, parse_element(t, " 0 ")) == "0");
  CHECK(format_element(t, parse_element(t, "(@v, -3, e1.e1)")) == "(@v, -3, e1.e1)");
  CHECK(code_of([&] { parse_element(t, "(e0, 1)"); }) == ErrorCode::kParse);
  const auto k = katsura_3_2();
  CHECK(format_element(k, parse_element(k, "((1,1,0), 2, @1)")) ==
        "((1,1,0), 2, @1)");
}

TEST_CASE("property: text round trips") {
  std::mt19937 rng(123);
  for (const auto& t : {odometer(), katsura_3_2(), z2_edge_swap(), adding_machine()}) {
    const Graph& g = t.graph();
    const auto window = default_window(t.group(), 2);
    for (int k = 0; k < 200; ++k) {
      const auto s = oracle::random_triple(rng, t, window, 3);
      CHECK(parse_element(t, format_element(t, s)) == s);
      const auto xi = oracle::random_inf_path(rng, g, 3, 3);
      CHECK(parse_inf_path(g, format_inf_path(g, xi)) == xi);
    }
  }
  const Groupoid G(katsura_3_2());
  for (int k = 0; k < 200; ++k) {
    const Germ u = oracle::random_germ(rng, G, integer_window(2), 2);
    CHECK(parse_germ(G, format_germ(G, u)) == u);
  }
}
