#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfsim/constructors.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/text.hpp"

using namespace selfsim;

namespace {

Graph two_loops() {
  return Graph({"v"}, {{"e0", VertexId{0}, VertexId{0}},
                       {"e1", VertexId{0}, VertexId{0}}});
}

Path P(const Graph& g, std::string_view text) { return parse_path(g, text); }

// Random graph on `n` vertices with `m` edges where every vertex receives at
// least one edge.
Graph random_graph(std::mt19937& rng, std::uint32_t n, std::uint32_t m) {
  std::uniform_int_distribution<std::uint32_t> vertex(0, n - 1);
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
  }
  std::vector<EdgeSpec> edges;
  for (std::uint32_t i = 0; i < m; ++i) {
    const VertexId r{i < n ? i : vertex(rng)};
    edges.push_back({"e" + std::to_string(i), r, VertexId{vertex(rng)}});
  }
  return Graph(names, edges);
}

}  // namespace

TEST_CASE("validate_graph") {
  CHECK(validate_graph(two_loops()).ok());

  const Graph empty({"v"}, {});
  const auto report = validate_graph(empty);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == GraphViolation::Kind::kNoIncomingEdge);
  CHECK(report.violations[0].id == 0);

  // a → b only: a receives nothing.
  const Graph ab({"a", "b"}, {{"f", VertexId{1}, VertexId{0}}});
  const auto r2 = validate_graph(ab);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].kind == GraphViolation::Kind::kNoIncomingEdge);
  CHECK(ab.label(VertexId{r2.violations[0].id}) == "a");

  const Graph dangling({"v"}, {{"e", VertexId{0}, VertexId{0}},
                              {"f", VertexId{0}, VertexId{3}}});
  const auto r3 = validate_graph(dangling);
  REQUIRE(r3.violations.size() == 1);
  CHECK(r3.violations[0].kind == GraphViolation::Kind::kDanglingSource);
}

TEST_CASE("concat and vertex identities") {
  const Graph g = two_loops();
  const Path v = Path::vertex(VertexId{0});
  CHECK(concat(v, P(g, "e0")) == P(g, "e0"));
  CHECK(concat(P(g, "e0"), v) == P(g, "e0"));
  CHECK(concat(P(g, "e0"), P(g, "e1")) == P(g, "e0.e1"));
  CHECK(concat(P(g, "e0"), P(g, "e1")).length() == 2);

  const Graph ab({"a", "b"}, {{"f", VertexId{1}, VertexId{0}},
                             {"h", VertexId{0}, VertexId{1}}});
  // d(f) = a, r(f) = b: f·f does not compose, f·h does.
  CHECK_THROWS_AS(concat(P(ab, "f"), P(ab, "f")), Error);
  CHECK(concat(P(ab, "f"), P(ab, "h")).source() == VertexId{1});
  CHECK_THROWS_AS(concat(Path::vertex(VertexId{0}), P(ab, "f")), Error);
  try {
    concat(P(ab, "f"), P(ab, "f"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIllegalComposition);
  }
}

TEST_CASE("prefix_compare") {
  const Graph g = two_loops();
  CHECK(prefix_compare(P(g, "e0"), P(g, "e0.e1")) == PrefixOrder::kAProperPrefix);
  CHECK(prefix_compare(P(g, "e0.e1"), P(g, "e0")) == PrefixOrder::kBProperPrefix);
  CHECK(prefix_compare(P(g, "e0"), P(g, "e1")) == PrefixOrder::kIncomparable);
  CHECK(prefix_compare(P(g, "@v"), P(g, "e0")) == PrefixOrder::kAProperPrefix);
  CHECK(prefix_compare(P(g, "e1.e0"), P(g, "e1.e0")) == PrefixOrder::kEqual);
}

TEST_CASE("extensions") {
  const Graph g = two_loops();
  const auto one = extensions(g, P(g, "@v"), 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == P(g, "e0"));
  CHECK(one[1] == P(g, "e1"));
  CHECK(extensions(g, P(g, "e0"), 0) == std::vector<Path>{P(g, "e0")});
  const auto two = extensions(g, P(g, "e0"), 2);
  CHECK(two.size() == 4);
  for (const auto& d : two) {
    CHECK(d.length() == 3);
    CHECK(is_prefix(P(g, "e0"), d));
  }
}

TEST_CASE("property: extension counts, prefix uniqueness, associativity") {
  std::mt19937 rng(20240611);
  for (int round = 0; round < 40; ++round) {
    std::uniform_int_distribution<std::uint32_t> nv(1, 3);
    const std::uint32_t n = nv(rng);
    std::uniform_int_distribution<std::uint32_t> ne(n, 8);
    const Graph g = random_graph(rng, n, ne(rng));
    REQUIRE(validate_graph(g).ok());
    const auto all = paths_up_to(g, 3);
    for (const Path& b : all) {
      for (std::size_t L = 0; L <= 3; ++L) {
        // Count by walking d-chains: the number of paths of length L whose
        // range is d(b).
        std::size_t expected = 0;
        for (const Path& p : paths_of_length(g, L)) {
          if (p.range() == b.source()) {
            ++expected;
          }
        }
        const auto ext = extensions(g, b, L);
        CHECK(ext.size() == expected);
        for (const Path& d : ext) {
          CHECK(is_prefix(b, d));
          CHECK(d.length() == b.length() + L);
        }
      }
    }
    for (const Path& a : all) {
      for (const Path& b : all) {
        if (prefix_compare(a, b) == PrefixOrder::kAProperPrefix) {
          std::size_t witnesses = 0;
          for (const Path& c : all) {
            if (c.length() >= 1 && c.range() == a.source() &&
                concat(a, c) == b) {
              ++witnesses;
            }
          }
          CHECK(witnesses == 1);
        }
      }
    }
    for (int k = 0; k < 200; ++k) {
      const Path& a = oracle::pick(rng, all);
      const Path& b = oracle::pick(rng, all);
      const Path& c = oracle::pick(rng, all);
      if (a.source() == b.range() && b.source() == c.range()) {
        CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
      }
    }
  }
}

TEST_CASE("infinite paths: truncation") {
  const Graph g = two_loops();
  const auto zeros = parse_inf_path(g, "(e0)*");
  CHECK(zeros.truncate(g, 0) == P(g, "@v"));
  CHECK(zeros.truncate(g, 3) == P(g, "e0.e0.e0"));
  const auto xi = parse_inf_path(g, "e1(e0)*");
  CHECK(xi.truncate(g, 2) == P(g, "e1.e0"));
  CHECK(xi.letter(1) == *g.find_edge("e1"));
  CHECK(xi.drop(g, 1) == zeros);

  // μν^k
  const auto w = parse_inf_path(g, "e1.e1(e0.e1)*");
  CHECK(w.truncate(g, 2 + 2 * 3) == P(g, "e1.e1.e0.e1.e0.e1.e0.e1"));

  const auto s = InfPath::stream(P(g, "e0.e1"));
  CHECK(s.truncate(g, 2) == P(g, "e0.e1"));
  CHECK_THROWS_AS(s.truncate(g, 3), Error);
  try {
    s.letter(3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDepthExceeded);
  }
}

TEST_CASE("infinite paths: canonical form") {
  const Graph g = two_loops();
  CHECK(parse_inf_path(g, "(e0.e0)*") == parse_inf_path(g, "(e0)*"));
  CHECK(parse_inf_path(g, "e0(e0)*") == parse_inf_path(g, "(e0)*"));
  CHECK(parse_inf_path(g, "e1(e0.e1)*") == parse_inf_path(g, "(e1.e0)*"));
  CHECK(parse_inf_path(g, "e1.e0(e1.e0)*") == parse_inf_path(g, "(e1.e0)*"));
  CHECK_FALSE(parse_inf_path(g, "(e0.e1)*") == parse_inf_path(g, "(e1.e0)*"));
  CHECK(compare(parse_inf_path(g, "(e1)*"), parse_inf_path(g, "e1.e1(e1)*")) ==
        Equality::kEqual);
  CHECK(compare(InfPath::stream(P(g, "e0.e0")), parse_inf_path(g, "(e0)*")) ==
        Equality::kUnknown);
  CHECK(compare(InfPath::stream(P(g, "e0.e1")), parse_inf_path(g, "(e0)*")) ==
        Equality::kDistinct);
}

TEST_CASE("property: truncation coherence and canonical equality") {
  const Graph g = two_loops();
  std::mt19937 rng(7);
  const auto cycles = oracle::cycles_up_to(g, 4);
  const auto prefixes = paths_up_to(g, 4);
  for (int k = 0; k < 300; ++k) {
    const Path& mu = oracle::pick(rng, prefixes);
    const Path& nu = oracle::pick(rng, cycles);
    const InfPath xi = InfPath::periodic(g, mu, nu);
    // Letters agree with the naive expansion of μν^ω.
    for (std::size_t n = 1; n <= 20; ++n) {
      const EdgeId expected = n <= mu.length()
                                  ? mu[n - 1]
                                  : nu[(n - mu.length() - 1) % nu.length()];
      CHECK(xi.letter(n) == expected);
    }
    for (std::size_t m = 0; m <= 12; ++m) {
      for (std::size_t n = m; n <= 12; ++n) {
        CHECK(is_prefix(xi.truncate(g, m), xi.truncate(g, n)));
      }
    }
    // Another presentation of the same word normalizes identically.
    const InfPath other = InfPath::periodic(g, concat(mu, nu), concat(nu, nu));
    CHECK(other == xi);
  }
}
