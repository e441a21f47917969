#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfsim/constructors.hpp"
#include "selfsim/text.hpp"
#include "selfsim/triple.hpp"

using namespace selfsim;

namespace {

GroupElement I(std::int64_t m) { return GroupElement::integer(m); }

Path P(const SelfSimilarTriple& t, std::string_view text) {
  return parse_path(t.graph(), text);
}

InfPath X(const SelfSimilarTriple& t, std::string_view text) {
  return parse_inf_path(t.graph(), text);
}

SelfSimilarTriple patched_odometer() {
  const SelfSimilarTriple base = odometer();
  const Graph& g = base.graph();
  std::vector<OverrideModel::Entry> entries{
      {I(1), *g.find_edge("e0"), EdgeImage{*g.find_edge("e1"), I(1)}}};
  return SelfSimilarTriple(
      g, base.group(),
      std::make_shared<OverrideModel>(base.model(), std::move(entries)));
}

}  // namespace

TEST_CASE("verify_axioms on the builtin triples") {
  CHECK(verify_axioms(odometer(), integer_window(2)).ok());
  CHECK(verify_axioms(odometer(), integer_window(4)).ok());
  CHECK(verify_axioms(katsura_3_2(), integer_window(4)).ok());
  const auto z2 = z2_edge_swap();
  CHECK(verify_axioms(z2, z2.group().elements()).ok());
  const auto am = adding_machine();
  CHECK(verify_axioms(am, word_window(am.group(), 3)).ok());
  CHECK(verify_axioms(katsura_2_0(), integer_window(4)).ok());
}

TEST_CASE("verify_axioms reports a patched cocycle") {
  const auto report = verify_axioms(patched_odometer(), integer_window(2));
  CHECK_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.law == Law::kCocycleIdentity && v.g && v.h && *v.g == I(1) &&
        *v.h == I(1)) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("verify_axioms: trivial actions and window checks") {
  const auto t = trivial_triple(odometer().graph(), Group::integers());
  CHECK(verify_axioms(t, integer_window(3)).ok());
  const auto s3 = trivial_triple(
      z2_edge_swap().graph(),
      Group::finite(CayleyTable({"0", "1", "2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})));
  CHECK(verify_axioms(s3, s3.group().elements()).ok());

  const auto bad = verify_axioms(odometer(), {I(0), I(1)});
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.violations[0].law == Law::kWindowNotInverseClosed);
  const auto missing = verify_axioms(odometer(), {I(1), I(-1)});
  REQUIRE_FALSE(missing.ok());
  CHECK(missing.violations[0].law == Law::kWindowMissingIdentity);
}

TEST_CASE("act_and_cocycle examples") {
  const auto t = odometer();
  auto [a, c] = t.act_and_cocycle(I(1), P(t, "e0.e0"));
  CHECK(format_path(t.graph(), a) == "e1.e0");
  CHECK(c == I(0));
  auto [b, d] = t.act_and_cocycle(I(1), P(t, "e1.e1"));
  CHECK(format_path(t.graph(), b) == "e0.e0");
  CHECK(d == I(1));
  auto [v, w] = t.act_and_cocycle(I(5), P(t, "@v"));
  CHECK(v == P(t, "@v"));
  CHECK(w == I(5));
  for (const Path& p : paths_up_to(t.graph(), 4)) {
    auto [q, h] = t.act_and_cocycle(I(0), p);
    CHECK(q == p);
    CHECK(h == I(0));
  }
}

TEST_CASE("odometer oracle: binary addition with carry") {
  const auto t = odometer();
  const Graph& g = t.graph();
  for (std::int64_t m = -8; m <= 8; ++m) {
    for (const Path& p : paths_up_to(g, 10)) {
      auto [image, carry] = t.act_and_cocycle(I(m), p);
      auto [digits, expected_carry] = oracle::odometer_add(m, oracle::digits(g, p));
      CHECK(oracle::digits(g, image) == digits);
      CHECK(carry == I(expected_carry));
    }
  }
}

TEST_CASE("recursive extension laws on the odometer") {
  const auto t = odometer();
  const Graph& g = t.graph();
  const auto window = integer_window(4);
  const auto paths = paths_up_to(g, 5);
  for (const auto& gg : window) {
    for (const Path& a : paths) {
      auto [ga, phi] = t.act_and_cocycle(gg, a);
      CHECK(ga.length() == a.length());
      CHECK(ga.range() == t.act(gg, a.range()));
      CHECK(ga.source() == t.act(gg, a.source()));
      for (VertexId x : g.vertices()) {
        CHECK(t.act(phi, x) == t.act(gg, x));
      }
      CHECK(inverse_cocycle_check(t, gg, a) == Equality::kEqual);
      for (const auto& h : window) {
        auto [ha, phi_h] = t.act_and_cocycle(h, a);
        auto [gha, phi_gh] = t.act_and_cocycle(t.group().mul(gg, h), a);
        CHECK(gha == t.act(gg, ha));
        CHECK(phi_gh == t.group().mul(t.cocycle(gg, ha), phi_h));
      }
    }
    // Factorizations α = βγ of paths up to length 5.
    for (const Path& a : paths) {
      for (std::size_t k = 0; k <= a.length(); ++k) {
        const Path beta = a.prefix(g, k);
        const Path gamma = a.suffix(g, k);
        auto [gb, phi_b] = t.act_and_cocycle(gg, beta);
        CHECK(t.act(gg, a) == concat(gb, t.act(phi_b, gamma)));
        CHECK(t.cocycle(gg, a) == t.cocycle(phi_b, gamma));
      }
    }
  }
}

TEST_CASE("inverse cocycle identity") {
  const auto t = odometer();
  CHECK(inverse_cocycle_check(t, I(1), P(t, "e1")) == Equality::kEqual);
  CHECK(t.cocycle(I(-1), P(t, "e1")) == I(0));
  for (const Path& a : paths_up_to(t.graph(), 4)) {
    CHECK(inverse_cocycle_check(t, I(0), a) == Equality::kEqual);
  }
  const auto k = katsura_3_2();
  for (const auto& g : integer_window(4)) {
    for (const Path& a : paths_up_to(k.graph(), 3)) {
      CHECK(inverse_cocycle_check(k, g, a) == Equality::kEqual);
    }
  }
}

TEST_CASE("infinite paths: act_infinite and capital_phi") {
  const auto t = odometer();
  const Graph& g = t.graph();
  CHECK(format_path(g, act_infinite(t, I(1), X(t, "(e0)*"), 3)) == "e1.e0.e0");
  CHECK(format_path(g, act_infinite(t, I(1), X(t, "(e1)*"), 3)) == "e0.e0.e0");
  CHECK(act_infinite(t, I(0), X(t, "e1(e0.e1)*"), 5) ==
        X(t, "e1(e0.e1)*").truncate(g, 5));

  CHECK(capital_phi(t, I(1), X(t, "(e0)*"), 1) == I(1));
  for (std::size_t n = 2; n <= 10; ++n) {
    CHECK(capital_phi(t, I(1), X(t, "(e0)*"), n) == I(0));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(capital_phi(t, I(1), X(t, "(e1)*"), n) == I(1));
    CHECK(capital_phi(t, I(0), X(t, "e1(e0)*"), n) == I(0));
  }
  CHECK_THROWS_AS(capital_phi(t, I(1), InfPath::stream(P(t, "e0")), 3), Error);
}

TEST_CASE("property: laws of the action on infinite words") {
  std::mt19937 rng(31337);
  for (const auto& t : {odometer(), katsura_3_2()}) {
    const Graph& g = t.graph();
    const auto window = integer_window(4);
    for (int k = 0; k < 100; ++k) {
      const InfPath xi = oracle::random_inf_path(rng, g, 3, 3);
      const GroupElement& a = oracle::pick(rng, window);
      const GroupElement& b = oracle::pick(rng, window);
      const auto full = act_infinite_full(t, a, xi, 64);
      for (std::size_t n = 1; n <= 64; ++n) {
        // Letter law: (gξ)ₙ = Φ(g, ξ)ₙ · ξₙ.
        const EdgeId expected = t.act(capital_phi(t, a, xi, n), xi.letter(n)).edge;
        CHECK(act_infinite(t, a, xi, n)[n - 1] == expected);
        if (full.image.is_periodic()) {
          CHECK(full.image.letter(n) == expected);
          CHECK(full.phi.at(n) == capital_phi(t, a, xi, n));
        }
      }
      // Cocycle law: Φ(gh, ξ) = Φ(g, hξ)Φ(h, ξ), pointwise.
      const auto hxi = act_infinite_full(t, b, xi, 64);
      REQUIRE(hxi.image.is_periodic());
      for (std::size_t n = 1; n <= 30; ++n) {
        CHECK(capital_phi(t, t.group().mul(a, b), xi, n) ==
              t.group().mul(capital_phi(t, a, hxi.image, n),
                            capital_phi(t, b, xi, n)));
      }
      // Shift law: Φ(φ(g, α), ξ) = λ^{|α|}Φ(g, αξ).
      const std::size_t len = 2;
      const Path alpha = xi.truncate(g, len);
      const InfPath rest = xi.drop(g, len);
      const GroupElement phi = t.cocycle(a, alpha);
      for (std::size_t n = 1; n <= 30; ++n) {
        CHECK(capital_phi(t, phi, rest, n) == capital_phi(t, a, xi, n + len));
      }
    }
  }
}

TEST_CASE("act_infinite_full degrades to streams when the carry does not settle") {
  // A = [[1]], B = [[2]]: the single loop e is fixed and φ(m, e) = 2m, so the
  // cocycle grows without bound along e^ω.
  const auto t = from_katsura({{{1}}, {{2}}});
  const auto full = act_infinite_full(t, I(1), parse_inf_path(t.graph(), "((1,1,0))*"), 10);
  CHECK_FALSE(full.phi.is_periodic());
  CHECK(full.phi.at(3) == I(4));
  CHECK(t.corona().equal(full.phi, full.phi) == Equality::kUnknown);
}

TEST_CASE("residual freeness") {
  const auto k20 = check_residually_free(katsura_2_0(), integer_window(4));
  CHECK(k20.verdict == ResidualFreeReport::Verdict::kCounterExample);
  REQUIRE(k20.counterexample);
  CHECK(k20.counterexample->g == I(1));
  CHECK(katsura_2_0().graph().label(k20.counterexample->edge) == "(1,1,0)");
  CHECK(k20.consistency_failures.empty());

  const auto odo = check_residually_free(odometer(), integer_window(4));
  CHECK(odo.verdict == ResidualFreeReport::Verdict::kUnknownBeyondWindow);
  CHECK_FALSE(odo.counterexample);
  CHECK(odo.consistency_failures.empty());

  const auto z2 = z2_edge_swap();
  const auto swap = check_residually_free(z2, z2.group().elements());
  CHECK(swap.verdict == ResidualFreeReport::Verdict::kHolds);

  // Trivial action of Z/2: the nontrivial element fixes everything.
  const auto triv = trivial_triple(z2.graph(), z2.group());
  const auto tr = check_residually_free(triv, triv.group().elements());
  CHECK(tr.verdict == ResidualFreeReport::Verdict::kCounterExample);
}

TEST_CASE("property: residual freeness against an independent edge sweep") {
  // Random Katsura data; the oracle is the division formula itself: m fixes
  // e_{i,j,n} with trivial cocycle iff mB_ij + n = 0·A_ij + n, i.e. mB_ij = 0
  // with n̂ = n.
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> av(1, 3);
  std::uniform_int_distribution<int> bv(-3, 3);
  for (int k = 0; k < 60; ++k) {
    const std::int64_t a = av(rng);
    const std::int64_t b = bv(rng);
    const auto t = from_katsura({{{a}}, {{b}}});
    const auto window = integer_window(4);
    std::optional<std::pair<std::int64_t, std::int64_t>> expected;
    for (const auto& g : window) {
      const std::int64_t m = g.as_integer();
      if (m == 0) {
        continue;
      }
      for (std::int64_t n = 0; n < a && !expected; ++n) {
        auto [nh, kh] = oracle::katsura_step(a, b, n, m);
        if (nh == n && kh == 0) {
          expected = {m, n};
        }
      }
      if (expected) {
        break;
      }
    }
    const auto report = check_residually_free(t, window);
    CHECK(report.consistency_failures.empty());
    if (expected) {
      REQUIRE(report.counterexample);
      CHECK(report.counterexample->g == I(expected->first));
      CHECK(t.graph().label(report.counterexample->edge) ==
            "(1,1," + std::to_string(expected->second) + ")");
    } else {
      CHECK(report.verdict == ResidualFreeReport::Verdict::kUnknownBeyondWindow);
    }
  }
}
