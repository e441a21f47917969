#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfsim/constructors.hpp"
#include "selfsim/semigroup.hpp"
#include "selfsim/text.hpp"

using namespace selfsim;

namespace {

GroupElement I(std::int64_t m) { return GroupElement::integer(m); }

SemigroupElement S(const SelfSimilarTriple& t, std::string_view text) {
  return parse_element(t, text);
}

std::string F(const SelfSimilarTriple& t, const SemigroupElement& s) {
  return format_element(t, s);
}

Path P(const Graph& g, std::string_view text) { return parse_path(g, text); }

// Two vertices a, b; f: a → b, h: b → a, plus loops on both.
SelfSimilarTriple two_vertex() {
  Graph g({"a", "b"}, {{"f", VertexId{1}, VertexId{0}},
                      {"h", VertexId{0}, VertexId{1}},
                      {"la", VertexId{0}, VertexId{0}},
                      {"lb", VertexId{1}, VertexId{1}}});
  return trivial_triple(std::move(g), Group::integers());
}

}  // namespace

TEST_CASE("make_triple") {
  const auto t = odometer();
  CHECK_FALSE(S(t, "(e0, 1, e1)").is_zero());
  CHECK_FALSE(make_triple(t, P(t.graph(), "@v"), I(0), P(t.graph(), "@v")).is_zero());
  const auto tv = two_vertex();
  // d(f) = a but d(la.h)... d(h) = b: condition fails.
  CHECK_THROWS_AS(make_triple(tv, P(tv.graph(), "f"), I(0), P(tv.graph(), "h")), Error);
  try {
    make_triple(tv, P(tv.graph(), "f"), I(0), P(tv.graph(), "h"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSourceConditionViolated);
  }
  CHECK_FALSE(make_triple(tv, P(tv.graph(), "f"), I(0), P(tv.graph(), "la")).is_zero());
}

TEST_CASE("mul examples") {
  const auto t = odometer();
  CHECK(F(t, mul(t, S(t, "(e0, 1, e1)"), S(t, "(e1, 2, e0.e1)"))) == "(e0, 3, e0.e1)");
  CHECK(F(t, mul(t, idempotent(t, P(t.graph(), "e0")),
                 idempotent(t, P(t.graph(), "e1")))) == "0");
  CHECK(F(t, mul(t, S(t, "(e0, 1, e1)"), S(t, "(e1.e1, 0, e0)"))) == "(e0.e0, 1, e0)");
  CHECK(mul(t, SemigroupElement::zero(), S(t, "(e0, 1, e1)")).is_zero());
  CHECK(mul(t, S(t, "(e0, 1, e1)"), SemigroupElement::zero()).is_zero());
}

TEST_CASE("star") {
  const auto t = odometer();
  CHECK(F(t, star(t, S(t, "(e0, 1, e1)"))) == "(e1, -1, e0)");
  CHECK(star(t, SemigroupElement::zero()).is_zero());
}

TEST_CASE("idempotent order") {
  const auto t = odometer();
  const Graph& g = t.graph();
  auto e = [&](std::string_view p) { return idempotent(t, P(g, p)); };
  CHECK(idempotent_order(t, e("e0.e1"), e("e0")) == IdempotentOrder::kLeq);
  CHECK(idempotent_order(t, e("e0"), e("e0.e1")) == IdempotentOrder::kGeq);
  CHECK(idempotent_order(t, e("e0"), e("e1")) == IdempotentOrder::kOrthogonal);
  CHECK(idempotent_order(t, e("e0"), e("e0")) == IdempotentOrder::kEqual);
  CHECK(idempotent_order(t, SemigroupElement::zero(), e("e0")) ==
        IdempotentOrder::kOrthogonal);
  CHECK_THROWS_AS(idempotent_order(t, S(t, "(e0, 1, e1)"), e("e0")), Error);

  // Consistency with mul over all idempotents of length ≤ 3.
  for (const Path& a : paths_up_to(g, 3)) {
    for (const Path& b : paths_up_to(g, 3)) {
      const auto ea = idempotent(t, a);
      const auto eb = idempotent(t, b);
      const auto order = idempotent_order(t, ea, eb);
      const auto prod = mul(t, ea, eb);
      CHECK((order == IdempotentOrder::kOrthogonal) == prod.is_zero());
      if (order == IdempotentOrder::kLeq || order == IdempotentOrder::kEqual) {
        CHECK(prod == ea);
      }
      if (order == IdempotentOrder::kGeq) {
        CHECK(prod == eb);
      }
    }
  }
}

TEST_CASE("covers") {
  const auto t = odometer();
  const Graph& g = t.graph();
  auto e = [&](std::string_view p) { return idempotent(t, P(g, p)); };
  CHECK(is_cover(t, {e("e0"), e("e1")}, e("@v")));
  CHECK_FALSE(is_cover(t, {e("e0")}, e("@v")));
  CHECK(is_cover(t, {e("e1")}, e("e1")));
  CHECK(is_cover(t, {e("e1.e0"), e("e1.e1")}, e("e1")));
  CHECK(is_cover(t, {e("e1.e0"), e("e1.e1.e0"), e("e1.e1.e1")}, e("e1")));
  CHECK_FALSE(is_cover(t, {e("e1.e0"), e("e1.e1.e0")}, e("e1")));
  // Orthogonal members do not help.
  CHECK_FALSE(is_cover(t, {e("e0"), e("e1.e0")}, e("e1")));
  // A member above the target covers it.
  CHECK(is_cover(t, {e("@v")}, e("e1.e0")));
  CHECK(is_global_cover(t, {e("e0"), e("e1")}));
  CHECK(is_global_cover(t, {e("@v")}));
  CHECK_FALSE(is_global_cover(t, {e("e0"), e("e1.e0")}));
  CHECK_FALSE(is_global_cover(t, {}));
}

TEST_CASE("property: cover checker agrees with the brute-force definition") {
  std::mt19937 rng(8080);
  std::size_t agreements = 0;
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<std::uint32_t> nv(1, 3);
    const std::uint32_t n = nv(rng);
    std::uniform_int_distribution<std::uint32_t> ne(n, 5);
    const std::uint32_t m = ne(rng);
    std::uniform_int_distribution<std::uint32_t> vertex(0, n - 1);
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) {
      names.push_back("v" + std::to_string(i));
    }
    std::vector<EdgeSpec> edges;
    for (std::uint32_t i = 0; i < m; ++i) {
      edges.push_back({"e" + std::to_string(i), VertexId{i < n ? i : vertex(rng)},
                       VertexId{vertex(rng)}});
    }
    const auto t = trivial_triple(Graph(names, edges), Group::integers());
    const Graph& g = t.graph();
    const auto paths = paths_up_to(g, 4);
    std::uniform_int_distribution<int> size(0, 4);
    for (int k = 0; k < 60; ++k) {
      const Path& target = oracle::pick(rng, paths);
      std::vector<Path> members;
      std::vector<SemigroupElement> idempotents;
      for (int i = size(rng); i > 0; --i) {
        members.push_back(oracle::pick(rng, paths));
        idempotents.push_back(idempotent(t, members.back()));
      }
      const bool expected = oracle::brute_cover(g, members, target, 4 + 2);
      CHECK(is_cover(t, idempotents, idempotent(t, target)) == expected);
      ++agreements;
    }
  }
  CHECK(agreements == 3600);
}

TEST_CASE("property: semigroup laws against the action on tagged paths") {
  const auto t = odometer();
  const auto window = integer_window(3);
  const auto paths = paths_up_to(t.graph(), 3);
  std::vector<SemigroupElement> elements{SemigroupElement::zero()};
  for (const Path& a : paths) {
    for (const Path& b : paths) {
      for (const auto& g : window) {
        elements.push_back(make_triple(t, a, g, b));
      }
    }
  }
  const auto probes = oracle::tagged_paths(t, 6, {I(0), I(1)});
  std::mt19937 rng(2718);
  for (int k = 0; k < 3000; ++k) {
    const auto& s = oracle::pick(rng, elements);
    const auto& u = oracle::pick(rng, elements);
    const auto& w = oracle::pick(rng, elements);
    const auto su = mul(t, s, u);
    CHECK(oracle::product_matches(t, s, u, su, probes));
    CHECK(mul(t, su, w) == mul(t, s, mul(t, u, w)));
    CHECK(star(t, su) == mul(t, star(t, u), star(t, s)));
  }
  for (const auto& s : elements) {
    CHECK(star(t, star(t, s)) == s);
    CHECK(mul(t, mul(t, s, star(t, s)), s) == s);
  }
}

TEST_CASE("generator relation u_g s_α = s_{gα} u_{φ(g,α)}") {
  const auto t = odometer();
  const Graph& g = t.graph();
  const Path v = P(g, "@v");
  for (const auto& h : integer_window(3)) {
    for (const Path& a : paths_up_to(g, 3)) {
      auto [ga, phi] = t.act_and_cocycle(h, a);
      const auto u_g = make_triple(t, v, h, v);
      const auto s_a = make_triple(t, a, I(0), v);
      const auto s_ga = make_triple(t, ga, I(0), v);
      const auto u_phi = make_triple(t, v, phi, v);
      CHECK(mul(t, u_g, s_a) == mul(t, s_ga, u_phi));
    }
  }
}

TEST_CASE("E*-unitarity") {
  const auto k20 = katsura_2_0();
  const auto report = check_e_star_unitary(k20, integer_window(4), 4);
  CHECK(report.verdict == EStarUnitaryReport::Verdict::kCounterExample);
  REQUIRE(report.counterexample);
  CHECK(format_element(k20, report.counterexample->first) == "(@1, 1, @1)");
  CHECK(format_element(k20, report.counterexample->second) ==
        "((1,1,0), 0, (1,1,0))");

  const auto odo = check_e_star_unitary(odometer(), integer_window(3), 4);
  CHECK(odo.verdict == EStarUnitaryReport::Verdict::kUnknown);
  CHECK_FALSE(odo.counterexample);

  const auto triv = trivial_triple(odometer().graph(),
                                   Group::finite(CayleyTable({"1"}, {{0}})));
  CHECK(check_e_star_unitary(triv, triv.group().elements(), 3).verdict ==
        EStarUnitaryReport::Verdict::kHolds);
}

TEST_CASE("property: E*-unitarity against a brute-force search") {
  // Every (α, g, β) and e_γ with paths up to the bound; s is idempotent iff
  // α = β and g = 1.
  for (const auto& t : {katsura_2_0(), odometer(), z2_edge_swap(), katsura_3_2()}) {
    const auto window = default_window(t.group(), 2);
    const std::size_t bound = 2;
    const auto paths = paths_up_to(t.graph(), bound);
    bool found = false;
    for (const Path& a : paths) {
      for (const Path& b : paths) {
        for (const auto& g : window) {
          if (t.act(g, b.source()) != a.source()) {
            continue;
          }
          if (a == b && t.is_identity(g) == Equality::kEqual) {
            continue;
          }
          const auto s = make_triple(t, a, g, b);
          for (const Path& c : paths) {
            const auto e = idempotent(t, c);
            if (equal(t, mul(t, s, e), e) == Equality::kEqual) {
              found = true;
            }
          }
        }
      }
    }
    const auto report = check_e_star_unitary(t, window, bound);
    CHECK(found == (report.verdict == EStarUnitaryReport::Verdict::kCounterExample));
    if (report.counterexample) {
      const auto& [s, e] = *report.counterexample;
      CHECK(mul(t, s, e) == e);
      CHECK(is_idempotent(t, s) == Equality::kDistinct);
    }
    // The bridge: a residual-freeness counterexample in the window exists
    // exactly when the semigroup search finds one.
    const auto rf = check_residually_free(t, window, bound);
    CHECK((rf.verdict == ResidualFreeReport::Verdict::kCounterExample) == found);
  }
}
