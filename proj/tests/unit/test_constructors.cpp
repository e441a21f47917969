#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfsim/constructors.hpp"
#include "selfsim/text.hpp"

using namespace selfsim;

namespace {

GroupElement I(std::int64_t m) { return GroupElement::integer(m); }

Path P(const Graph& g, std::string_view text) { return parse_path(g, text); }

std::string label(std::size_t i, std::size_t j, std::int64_t n) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
         std::to_string(n) + ")";
}

KatsuraData random_katsura(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 2);
  std::uniform_int_distribution<std::int64_t> entry(0, 3);
  std::uniform_int_distribution<std::int64_t> twist(-3, 3);
  const std::size_t n = size(rng);
  KatsuraData d{Matrix(n, std::vector<std::int64_t>(n)),
                Matrix(n, std::vector<std::int64_t>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d.a[i][j] = entry(rng);
    }
    if (d.a[i][i] == 0) {
      d.a[i][i] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
      d.b[i][j] = d.a[i][j] == 0 ? 0 : twist(rng);
    }
  }
  return d;
}

// The odometer letter of a Katsura edge label (1,1,n).
std::vector<int> katsura_digits(const Graph& g, const Path& p) {
  std::vector<int> out;
  for (EdgeId e : p.edges()) {
    out.push_back(g.label(e)[5] - '0');
  }
  return out;
}

GroupElement power(const Group& group, std::int64_t m) {
  if (m == 0) {
    return group.identity();
  }
  std::string text;
  for (std::int64_t i = 0; i < std::abs(m); ++i) {
    text += text.empty() ? "" : ".";
    text += m > 0 ? "a" : "a'";
  }
  return group.parse(text);
}

}  // namespace

TEST_CASE("katsura: graph shape and labels") {
  const auto t = from_katsura({{{2, 1}, {0, 1}}, {{1, 0}, {0, 1}}});
  const Graph& g = t.graph();
  CHECK(g.vertices().size() == 2);
  CHECK(g.edges().size() == 4);
  const auto e = g.find_edge("(1,2,0)");
  REQUIRE(e);
  // e_{i,j,n} runs from j to i.
  CHECK(g.label(g.range(*e)) == "1");
  CHECK(g.label(g.source(*e)) == "2");
  CHECK(g.find_edge("(1,1,1)"));
  CHECK_FALSE(g.find_edge("(2,1,0)"));
  CHECK(validate_graph(g).ok());
}

TEST_CASE("katsura: division examples") {
  const auto t = from_katsura({{{2}}, {{1}}});
  const Graph& g = t.graph();
  // 1·1 + 1 = 1·2 + 0
  const auto img = t.act(I(1), *g.find_edge("(1,1,1)"));
  CHECK(g.label(img.edge) == "(1,1,0)");
  CHECK(img.cocycle == I(1));
  const auto img0 = t.act(I(1), *g.find_edge("(1,1,0)"));
  CHECK(g.label(img0.edge) == "(1,1,1)");
  CHECK(img0.cocycle == I(0));

  const auto k = katsura_3_2();
  const Graph& h = k.graph();
  // 2·2 + 2 = 2·3 + 0
  const auto im = k.act(I(2), *h.find_edge("(1,1,2)"));
  CHECK(h.label(im.edge) == "(1,1,0)");
  CHECK(im.cocycle == I(2));
  // -1·2 + 0 = -1·3 + 1
  const auto neg = k.act(I(-1), *h.find_edge("(1,1,0)"));
  CHECK(h.label(neg.edge) == "(1,1,1)");
  CHECK(neg.cocycle == I(-1));
  CHECK(k.act(I(5), h.vertices().front()) == h.vertices().front());
}

TEST_CASE("property: katsura action against the division oracle") {
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round) {
    const KatsuraData d = random_katsura(rng);
    REQUIRE(katsura_violations(d).empty());
    const auto t = from_katsura(d);
    const Graph& g = t.graph();
    for (std::size_t i = 0; i < d.a.size(); ++i) {
      for (std::size_t j = 0; j < d.a.size(); ++j) {
        for (std::int64_t n = 0; n < d.a[i][j]; ++n) {
          const EdgeId e = *g.find_edge(label(i, j, n));
          for (std::int64_t m = -12; m <= 12; ++m) {
            const auto [nhat, khat] = oracle::katsura_step(d.a[i][j], d.b[i][j], n, m);
            const auto img = t.act(I(m), e);
            CHECK(g.label(img.edge) == label(i, j, nhat));
            CHECK(img.cocycle == I(khat));
            // σ₋ₘ undoes σₘ.
            CHECK(t.act(I(-m), img.edge).edge == e);
          }
        }
      }
    }
  }
}

TEST_CASE("property: generator tables reproduce the katsura model") {
  std::mt19937 rng(32);
  for (int round = 0; round < 40; ++round) {
    const KatsuraData d = random_katsura(rng);
    const auto t = from_katsura(d);
    const Graph& g = t.graph();
    std::vector<IntegerGeneratorModel::EdgeRow> rows;
    for (EdgeId e : g.edges()) {
      const auto img = t.act(I(1), e);
      rows.push_back({e, img.edge, img.cocycle.as_integer()});
    }
    const IntegerGeneratorModel table(g, rows, {});
    for (EdgeId e : g.edges()) {
      for (std::int64_t m = -15; m <= 15; ++m) {
        const auto a = table.act(I(m), e);
        const auto b = t.act(I(m), e);
        CHECK(a.edge == b.edge);
        CHECK(a.cocycle == b.cocycle);
      }
    }
  }
}

TEST_CASE("katsura: invalid matrices") {
  auto rejects = [](const KatsuraData& d) {
    CHECK_FALSE(katsura_violations(d).empty());
    try {
      from_katsura(d);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidMatrices);
    }
  };
  rejects({{{0}}, {{0}}});                          // zero row
  rejects({{{-1}}, {{0}}});                         // negative entry
  rejects({{{2, 0}, {1, 1}}, {{0, 1}, {0, 0}}});    // B ≠ 0 where A = 0
  rejects({{{1, 1}}, {{0, 0}}});                    // not square
  rejects({{{1}}, {{0, 0}, {0, 0}}});               // sizes differ
  CHECK(katsura_violations({{{2}}, {{0}}}).empty());
}

TEST_CASE("odometer against binary addition") {
  const auto t = odometer();
  const Graph& g = t.graph();
  for (std::int64_t m = -8; m <= 8; ++m) {
    for (const Path& p : paths_up_to(g, 8)) {
      const auto [digits, carry] = oracle::odometer_add(m, oracle::digits(g, p));
      auto [image, phi] = t.act_and_cocycle(I(m), p);
      CHECK(image == oracle::from_digits(g, digits, "e0", "e1"));
      CHECK(phi == I(p.is_vertex() ? m : carry));
    }
  }
}

TEST_CASE("adding machine agrees with katsura A = [[2]], B = [[1]]") {
  const auto am = adding_machine();
  const auto k = from_katsura({{{2}}, {{1}}});
  const Graph& ga = am.graph();
  const Graph& gk = k.graph();
  const Group& group = am.group();
  for (std::int64_t m = -4; m <= 4; ++m) {
    const GroupElement word = power(group, m);
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const Path& p : paths_of_length(ga, n)) {
        const auto digits = oracle::digits(ga, p);
        std::vector<EdgeId> edges;
        for (int x : digits) {
          edges.push_back(*gk.find_edge(x == 1 ? "(1,1,1)" : "(1,1,0)"));
        }
        const Path q = Path::from_edges(gk, edges);
        auto [ia, pa] = am.act_and_cocycle(word, p);
        auto [ik, pk] = k.act_and_cocycle(I(m), q);
        CHECK(oracle::digits(ga, ia) == katsura_digits(gk, ik));
        // φ agrees once a is read as 1.
        CHECK(group.equal(pa, power(group, pk.as_integer()), 16) ==
              Equality::kEqual);
      }
    }
  }
}

TEST_CASE("automaton constructor") {
  const auto am = adding_machine();
  const Graph& g = am.graph();
  CHECK(g.vertices().size() == 1);
  CHECK(g.edges().size() == 2);
  const auto a = am.group().parse("a");
  auto [image, phi] = am.act_and_cocycle(a, P(g, "1.1.0"));
  CHECK(image == P(g, "0.0.1"));
  CHECK(am.group().format(phi) == "1");
  auto [image2, phi2] = am.act_and_cocycle(a, P(g, "0.0"));
  CHECK(image2 == P(g, "1.0"));
  CHECK(am.group().format(phi2) == "1");

  AutomatonTable swap;
  swap.letters = {"x", "y"};
  swap.states = {"s"};
  swap.output = {{1, 0}};
  swap.restriction = {{{}, {}}};
  swap.faithful = true;
  const auto st = from_automaton(swap);
  const auto s = st.group().parse("s");
  CHECK(st.act(s, P(st.graph(), "x.y.x")) == P(st.graph(), "y.y.x"));

  swap.output = {{1, 1}};
  try {
    from_automaton(swap);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonBijectiveOutput);
  }
}

TEST_CASE("z2 edge swap and trivial triples") {
  const auto t = z2_edge_swap();
  const Graph& g = t.graph();
  const auto one = t.group().parse("1");
  auto [image, phi] = t.act_and_cocycle(one, P(g, "f0.f0"));
  CHECK(image == P(g, "f1.f0"));
  CHECK(t.is_identity(phi) == Equality::kEqual);
  const auto triv = trivial_triple(odometer().graph(), Group::integers());
  CHECK(triv.act(I(7), P(triv.graph(), "e1.e0")) == P(triv.graph(), "e1.e0"));
  CHECK(triv.cocycle(I(7), P(triv.graph(), "e1")) == I(0));
}
