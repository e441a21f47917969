#include "selfsim/constructors.hpp"

namespace selfsim {

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  std::int64_t q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) {
    --q;
  }
  return q;
}

Graph one_vertex_graph(const std::vector<std::string>& loops) {
  std::vector<EdgeSpec> edges;
  for (const auto& label : loops) {
    edges.push_back({label, VertexId{0}, VertexId{0}});
  }
  return Graph({"v"}, std::move(edges));
}

Graph katsura_graph(const KatsuraData& d) {
  const std::size_t n = d.a.size();
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= n; ++i) {
    vertices.push_back(std::to_string(i));
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::int64_t k = 0; k < d.a[i][j]; ++k) {
        edges.push_back({"(" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + "," + std::to_string(k) +
                             ")",
                         VertexId{static_cast<std::uint32_t>(i)},
                         VertexId{static_cast<std::uint32_t>(j)}});
      }
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace

std::vector<std::string> katsura_violations(const KatsuraData& d) {
  std::vector<std::string> out;
  const std::size_t n = d.a.size();
  if (n == 0) {
    out.push_back("A is empty");
    return out;
  }
  if (d.b.size() != n) {
    out.push_back("A and B have different sizes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.a[i].size() != n) {
      out.push_back("A is not square (row " + std::to_string(i + 1) + ")");
    }
    if (i < d.b.size() && d.b[i].size() != n) {
      out.push_back("B is not square (row " + std::to_string(i + 1) + ")");
    }
  }
  if (!out.empty()) {
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      const std::string at =
          "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (d.a[i][j] < 0) {
        out.push_back("A has a negative entry at " + at);
      }
      if (d.a[i][j] > 0) {
        nonzero = true;
      }
      if (d.a[i][j] == 0 && d.b[i][j] != 0) {
        out.push_back("A is zero but B is not at " + at);
      }
    }
    if (!nonzero) {
      out.push_back("A has a zero row " + std::to_string(i + 1));
    }
  }
  return out;
}

KatsuraModel::KatsuraModel(const KatsuraData& d) {
  const std::size_t n = d.a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto first = static_cast<std::uint32_t>(edges_.size());
      for (std::int64_t k = 0; k < d.a[i][j]; ++k) {
        edges_.push_back({d.a[i][j], d.b[i][j], k, first});
      }
    }
  }
}

VertexId KatsuraModel::act(const GroupElement&, VertexId v) const { return v; }

EdgeImage KatsuraModel::act(const GroupElement& g, EdgeId e) const {
  const Edge& edge = edges_[index(e)];
  std::int64_t value = 0;
  if (__builtin_mul_overflow(g.as_integer(), edge.b, &value) ||
      __builtin_add_overflow(value, edge.n, &value)) {
    throw Error(ErrorCode::kIntegerOverflow, "mB + n overflows");
  }
  const std::int64_t quotient = floor_div(value, edge.a);
  const std::int64_t remainder = value - quotient * edge.a;
  return {EdgeId{edge.first + static_cast<std::uint32_t>(remainder)},
          GroupElement::integer(quotient)};
}

SelfSimilarTriple from_katsura(const KatsuraData& d) {
  const auto violations = katsura_violations(d);
  if (!violations.empty()) {
    std::string what = "invalid Katsura matrices:";
    for (const auto& v : violations) {
      what += " " + v + ";";
    }
    what.pop_back();
    throw Error(ErrorCode::kInvalidMatrices, what);
  }
  return SelfSimilarTriple(katsura_graph(d), Group::integers(),
                           std::make_shared<KatsuraModel>(d));
}

SelfSimilarTriple from_automaton(AutomatonTable table) {
  Graph graph = one_vertex_graph(table.letters);
  Group group = Group::automaton(std::move(table));
  auto model = std::make_shared<AutomatonModel>(graph, group);
  return SelfSimilarTriple(std::move(graph), std::move(group), std::move(model));
}

SelfSimilarTriple trivial_triple(Graph graph, Group group) {
  auto model = std::make_shared<TrivialModel>(group);
  return SelfSimilarTriple(std::move(graph), std::move(group), std::move(model));
}

SelfSimilarTriple odometer() {
  Graph graph = one_vertex_graph({"e0", "e1"});
  auto model = std::make_shared<IntegerGeneratorModel>(
      graph,
      std::vector<IntegerGeneratorModel::EdgeRow>{{EdgeId{0}, EdgeId{1}, 0},
                                                  {EdgeId{1}, EdgeId{0}, 1}},
      std::vector<std::pair<VertexId, VertexId>>{});
  return SelfSimilarTriple(std::move(graph), Group::integers(), std::move(model));
}

SelfSimilarTriple katsura_3_2() { return from_katsura({{{3}}, {{2}}}); }

SelfSimilarTriple z2_edge_swap() {
  Graph graph = one_vertex_graph({"f0", "f1"});
  Group group = Group::finite(CayleyTable({"0", "1"}, {{0, 1}, {1, 0}}));
  using Row = FiniteTableModel::EdgeRow;
  auto model = std::make_shared<FiniteTableModel>(
      graph, group,
      std::vector<Row>{{0, EdgeId{0}, EdgeId{0}, 0},
                       {0, EdgeId{1}, EdgeId{1}, 0},
                       {1, EdgeId{0}, EdgeId{1}, 0},
                       {1, EdgeId{1}, EdgeId{0}, 0}},
      std::vector<FiniteTableModel::VertexRow>{});
  return SelfSimilarTriple(std::move(graph), std::move(group), std::move(model));
}

SelfSimilarTriple katsura_2_0() { return from_katsura({{{2}}, {{0}}}); }

AutomatonTable adding_machine_table() {
  AutomatonTable table;
  table.letters = {"0", "1"};
  table.states = {"a"};
  table.output = {{1, 0}};
  table.restriction = {{Word{}, Word{1}}};
  table.faithful = true;
  return table;
}

SelfSimilarTriple adding_machine() {
  return from_automaton(adding_machine_table());
}

}  // namespace selfsim
