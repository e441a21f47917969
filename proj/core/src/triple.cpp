#include "selfsim/triple.hpp"

#include <algorithm>
#include <unordered_set>

namespace selfsim {

namespace {

[[noreturn]] void bad_argument(const std::string& why) {
  throw Error(ErrorCode::kInvalidArgument, why);
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kIntegerOverflow, "cocycle value overflow");
  }
  return out;
}

std::int64_t times(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kIntegerOverflow, "cocycle value overflow");
  }
  return out;
}

// σ(x) = r(σ(e)) for the first edge e into x, or x itself when there is none.
template <typename EdgeAction>
std::vector<VertexId> vertices_from_edges(const Graph& graph,
                                          EdgeAction&& edge_image) {
  std::vector<VertexId> out;
  for (VertexId v : graph.vertices()) {
    auto into = graph.edges_into(v);
    out.push_back(into.empty() ? v : graph.range(edge_image(into.front())));
  }
  return out;
}

std::string path_text(const Graph& graph, const Path& p) {
  if (p.is_vertex()) {
    return "@" + graph.label(p.range());
  }
  std::string out;
  for (EdgeId e : p.edges()) {
    if (!out.empty()) {
      out += '.';
    }
    out += graph.label(e);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

VertexId TrivialModel::act(const GroupElement&, VertexId v) const { return v; }

EdgeImage TrivialModel::act(const GroupElement&, EdgeId e) const {
  return {e, group_.identity()};
}

FiniteTableModel::FiniteTableModel(const Graph& graph, const Group& group,
                                   const std::vector<EdgeRow>& edges,
                                   const std::vector<VertexRow>& vertices) {
  const auto& table = group.table();
  const std::size_t n = table.size();
  const std::size_t edge_count = graph.edge_count();
  std::vector<std::vector<std::optional<EdgeImage>>> edge_rows(
      n, std::vector<std::optional<EdgeImage>>(edge_count));
  for (const auto& row : edges) {
    if (row.element >= n || !graph.has_edge(row.edge) ||
        !graph.has_edge(row.image) || row.cocycle >= n) {
      bad_argument("action row out of range");
    }
    auto& slot = edge_rows[row.element][index(row.edge)];
    if (slot) {
      bad_argument("duplicate action row for (" + table.name(row.element) +
                   ", " + graph.label(row.edge) + ")");
    }
    slot = EdgeImage{row.image, GroupElement::finite(row.cocycle)};
  }
  edge_.resize(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    for (std::uint32_t e = 0; e < edge_count; ++e) {
      auto& slot = edge_rows[g][e];
      if (!slot) {
        if (g != table.identity()) {
          bad_argument("missing action row for (" + table.name(g) + ", " +
                       graph.label(EdgeId{e}) + ")");
        }
        slot = EdgeImage{EdgeId{e}, GroupElement::finite(table.identity())};
      }
      edge_[g].push_back(*slot);
    }
  }

  vertex_.resize(n);
  std::vector<std::vector<std::optional<VertexId>>> vertex_rows(
      n, std::vector<std::optional<VertexId>>(graph.vertex_count()));
  for (const auto& row : vertices) {
    if (row.element >= n || !graph.has_vertex(row.vertex) ||
        !graph.has_vertex(row.image)) {
      bad_argument("vertex action row out of range");
    }
    vertex_rows[row.element][index(row.vertex)] = row.image;
  }
  for (std::uint32_t g = 0; g < n; ++g) {
    auto derived = vertices_from_edges(
        graph, [&](EdgeId e) { return edge_[g][index(e)].edge; });
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
      vertex_[g].push_back(vertex_rows[g][v].value_or(derived[v]));
    }
  }
}

VertexId FiniteTableModel::act(const GroupElement& g, VertexId v) const {
  return vertex_[g.as_finite()][index(v)];
}

EdgeImage FiniteTableModel::act(const GroupElement& g, EdgeId e) const {
  return edge_[g.as_finite()][index(e)];
}

IntegerGeneratorModel::IntegerGeneratorModel(
    const Graph& graph, const std::vector<EdgeRow>& edges,
    const std::vector<std::pair<VertexId, VertexId>>& vertices) {
  const std::size_t edge_count = graph.edge_count();
  std::vector<std::optional<EdgeRow>> rows(edge_count);
  for (const auto& row : edges) {
    if (!graph.has_edge(row.edge) || !graph.has_edge(row.image)) {
      bad_argument("generator row out of range");
    }
    if (rows[index(row.edge)]) {
      bad_argument("duplicate generator row for " + graph.label(row.edge));
    }
    rows[index(row.edge)] = row;
  }
  std::vector<std::uint32_t> next(edge_count);
  std::vector<std::int64_t> carry(edge_count);
  std::vector<bool> hit(edge_count, false);
  for (std::uint32_t e = 0; e < edge_count; ++e) {
    if (!rows[e]) {
      bad_argument("missing generator row for " + graph.label(EdgeId{e}));
    }
    next[e] = index(rows[e]->image);
    carry[e] = rows[e]->cocycle;
    if (hit[next[e]]) {
      bad_argument("generator action on edges is not a bijection");
    }
    hit[next[e]] = true;
  }

  edge_orbit_.assign(edge_count, UINT32_MAX);
  edge_position_.assign(edge_count, 0);
  for (std::uint32_t start = 0; start < edge_count; ++start) {
    if (edge_orbit_[start] != UINT32_MAX) {
      continue;
    }
    Orbit orbit;
    orbit.partial.push_back(0);
    std::uint32_t e = start;
    do {
      edge_orbit_[e] = static_cast<std::uint32_t>(edge_orbits_.size());
      edge_position_[e] = static_cast<std::uint32_t>(orbit.members.size());
      orbit.members.push_back(e);
      orbit.partial.push_back(add(orbit.partial.back(), carry[e]));
      e = next[e];
    } while (e != start);
    edge_orbits_.push_back(std::move(orbit));
  }

  const std::size_t vertex_count = graph.vertex_count();
  auto derived = vertices_from_edges(
      graph, [&](EdgeId e) { return EdgeId{next[index(e)]}; });
  for (const auto& [v, image] : vertices) {
    if (!graph.has_vertex(v) || !graph.has_vertex(image)) {
      bad_argument("vertex row out of range");
    }
    derived[index(v)] = image;
  }
  std::vector<bool> vhit(vertex_count, false);
  for (VertexId image : derived) {
    if (vhit[index(image)]) {
      bad_argument("generator action on vertices is not a bijection");
    }
    vhit[index(image)] = true;
  }
  vertex_orbit_.assign(vertex_count, UINT32_MAX);
  vertex_position_.assign(vertex_count, 0);
  for (std::uint32_t start = 0; start < vertex_count; ++start) {
    if (vertex_orbit_[start] != UINT32_MAX) {
      continue;
    }
    std::vector<std::uint32_t> orbit;
    std::uint32_t v = start;
    do {
      vertex_orbit_[v] = static_cast<std::uint32_t>(vertex_orbits_.size());
      vertex_position_[v] = static_cast<std::uint32_t>(orbit.size());
      orbit.push_back(v);
      v = index(derived[v]);
    } while (v != start);
    vertex_orbits_.push_back(std::move(orbit));
  }
}

VertexId IntegerGeneratorModel::act(const GroupElement& g, VertexId v) const {
  const std::int64_t m = g.as_integer();
  const auto& orbit = vertex_orbits_[vertex_orbit_[index(v)]];
  const auto len = static_cast<std::int64_t>(orbit.size());
  const std::int64_t shift = ((m % len) + len) % len;
  const auto pos = (vertex_position_[index(v)] + shift) % len;
  return VertexId{orbit[static_cast<std::size_t>(pos)]};
}

EdgeImage IntegerGeneratorModel::act(const GroupElement& g, EdgeId e) const {
  const std::int64_t m = g.as_integer();
  const auto& orbit = edge_orbits_[edge_orbit_[index(e)]];
  const auto len = static_cast<std::int64_t>(orbit.members.size());
  const std::int64_t total = orbit.partial.back();

  // Σ of φ(1, ·) over k consecutive orbit members starting at position p.
  auto run = [&](std::int64_t p, std::int64_t k) {
    const std::int64_t q = k / len;
    const std::int64_t r = k % len;
    std::int64_t sum = times(q, total);
    const auto& partial = orbit.partial;
    if (p + r <= len) {
      sum = add(sum, partial[p + r] - partial[p]);
    } else {
      sum = add(sum, (total - partial[p]) + partial[p + r - len]);
    }
    return sum;
  };

  const std::int64_t p = edge_position_[index(e)];
  if (m >= 0) {
    const auto image = orbit.members[static_cast<std::size_t>((p + m % len) % len)];
    return {EdgeId{image}, GroupElement::integer(run(p, m))};
  }
  if (m == INT64_MIN) {
    throw Error(ErrorCode::kIntegerOverflow, "group element overflow");
  }
  const std::int64_t k = -m;
  const std::int64_t back = ((p - k % len) % len + len) % len;
  return {EdgeId{orbit.members[static_cast<std::size_t>(back)]},
          GroupElement::integer(-run(back, k))};
}

AutomatonModel::AutomatonModel(const Graph& graph, Group group)
    : group_(std::move(group)) {
  if (group_.automaton().letters.size() != graph.edge_count()) {
    bad_argument("automaton alphabet does not match the edge set");
  }
  for (EdgeId e : graph.edges()) {
    range_.push_back(graph.range(e));
  }
  for (VertexId v : graph.vertices()) {
    auto into = graph.edges_into(v);
    first_into_.push_back(into.empty() ? EdgeId{UINT32_MAX} : into.front());
  }
}

VertexId AutomatonModel::act(const GroupElement& g, VertexId v) const {
  const EdgeId e = first_into_[index(v)];
  if (index(e) == UINT32_MAX) {
    return v;
  }
  return range_[index(act(g, e).edge)];
}

EdgeImage AutomatonModel::act(const GroupElement& g, EdgeId e) const {
  auto [letter, restriction] = group_.act_on_letter(g, index(e));
  return {EdgeId{letter}, std::move(restriction)};
}

OverrideModel::OverrideModel(std::shared_ptr<const ActionModel> base,
                             std::vector<Entry> entries)
    : base_(std::move(base)), entries_(std::move(entries)) {}

VertexId OverrideModel::act(const GroupElement& g, VertexId v) const {
  return base_->act(g, v);
}

EdgeImage OverrideModel::act(const GroupElement& g, EdgeId e) const {
  for (const auto& entry : entries_) {
    if (entry.edge == e && entry.g == g) {
      return entry.image;
    }
  }
  return base_->act(g, e);
}

// ---------------------------------------------------------------------------
// SelfSimilarTriple
// ---------------------------------------------------------------------------

SelfSimilarTriple::SelfSimilarTriple(Graph graph, Group group,
                                     std::shared_ptr<const ActionModel> model,
                                     std::size_t group_depth)
    : graph_(std::make_shared<const Graph>(std::move(graph))),
      group_(std::move(group)),
      model_(std::move(model)),
      group_depth_(group_depth) {
  if (!model_) {
    bad_argument("triple needs an action model");
  }
}

VertexId SelfSimilarTriple::act(const GroupElement& g, VertexId v) const {
  group_.check(g);
  if (!graph_->has_vertex(v)) {
    bad_argument("vertex out of range");
  }
  return model_->act(g, v);
}

EdgeImage SelfSimilarTriple::act(const GroupElement& g, EdgeId e) const {
  group_.check(g);
  if (!graph_->has_edge(e)) {
    bad_argument("edge out of range");
  }
  return model_->act(g, e);
}

std::pair<Path, GroupElement> SelfSimilarTriple::act_and_cocycle(
    const GroupElement& g, const Path& alpha) const {
  if (alpha.is_vertex()) {
    return {Path::vertex(act(g, alpha.range())), g};
  }
  std::vector<EdgeId> image;
  image.reserve(alpha.length());
  GroupElement h = g;
  for (EdgeId e : alpha.edges()) {
    auto step = act(h, e);
    image.push_back(step.edge);
    h = std::move(step.cocycle);
  }
  return {Path::from_edges(*graph_, std::move(image)), std::move(h)};
}

// ---------------------------------------------------------------------------
// Axioms
// ---------------------------------------------------------------------------

std::string_view to_string(Law law) noexcept {
  switch (law) {
    case Law::kWindowMissingIdentity:
      return "WindowMissingIdentity";
    case Law::kWindowNotInverseClosed:
      return "WindowNotInverseClosed";
    case Law::kVertexBijection:
      return "VertexBijection";
    case Law::kEdgeBijection:
      return "EdgeBijection";
    case Law::kRangeEquivariance:
      return "RangeEquivariance";
    case Law::kSourceEquivariance:
      return "SourceEquivariance";
    case Law::kVertexHomomorphism:
      return "VertexHomomorphism";
    case Law::kEdgeHomomorphism:
      return "EdgeHomomorphism";
    case Law::kCocycleIdentity:
      return "CocycleId";
    case Law::kCocycleAtOne:
      return "CocycleAtOne";
    case Law::kCocycleOnVertices:
      return "ActionOfCocycleOnVertex";
  }
  return "Law";
}

AxiomReport verify_axioms(const SelfSimilarTriple& t,
                          const std::vector<GroupElement>& window) {
  AxiomReport report;
  const Graph& graph = t.graph();
  const auto vertices = graph.vertices();
  const auto edges = graph.edges();

  auto record = [&](Equality verdict, AxiomViolation v) {
    ++report.checks;
    if (verdict == Equality::kDistinct) {
      report.violations.push_back(std::move(v));
    } else if (verdict == Equality::kUnknown) {
      report.undecided.push_back(std::move(v));
    }
  };

  Equality has_identity = Equality::kDistinct;
  for (const auto& g : window) {
    t.group().check(g);
    const Equality is_one = t.is_identity(g);
    if (is_one == Equality::kEqual) {
      has_identity = Equality::kEqual;
    } else if (is_one == Equality::kUnknown && has_identity != Equality::kEqual) {
      has_identity = Equality::kUnknown;
    }
  }
  record(has_identity, {Law::kWindowMissingIdentity, {}, {}, {}, {}});
  for (const auto& g : window) {
    const GroupElement inverse = t.group().inv(g);
    Equality found = Equality::kDistinct;
    for (const auto& h : window) {
      const Equality same = t.equal(h, inverse);
      if (same == Equality::kEqual) {
        found = Equality::kEqual;
        break;
      }
      if (same == Equality::kUnknown) {
        found = Equality::kUnknown;
      }
    }
    record(found, {Law::kWindowNotInverseClosed, g, {}, {}, {}});
  }

  for (const auto& g : window) {
    std::vector<bool> vhit(graph.vertex_count(), false);
    bool vertex_bijective = true;
    for (VertexId x : vertices) {
      const VertexId y = t.act(g, x);
      if (vhit[index(y)]) {
        vertex_bijective = false;
      }
      vhit[index(y)] = true;
    }
    record(from_bool(vertex_bijective), {Law::kVertexBijection, g, {}, {}, {}});

    std::vector<bool> ehit(graph.edge_count(), false);
    bool edge_bijective = true;
    const bool is_one = t.is_identity(g) == Equality::kEqual;
    for (EdgeId e : edges) {
      const EdgeImage img = t.act(g, e);
      if (ehit[index(img.edge)]) {
        edge_bijective = false;
      }
      ehit[index(img.edge)] = true;
      record(from_bool(graph.range(img.edge) == t.act(g, graph.range(e))),
             {Law::kRangeEquivariance, g, {}, {}, e});
      record(from_bool(graph.source(img.edge) == t.act(g, graph.source(e))),
             {Law::kSourceEquivariance, g, {}, {}, e});
      if (is_one) {
        record(t.is_identity(img.cocycle), {Law::kCocycleAtOne, g, {}, {}, e});
      }
      for (VertexId x : vertices) {
        record(from_bool(t.act(img.cocycle, x) == t.act(g, x)),
               {Law::kCocycleOnVertices, g, {}, x, e});
      }
    }
    record(from_bool(edge_bijective), {Law::kEdgeBijection, g, {}, {}, {}});
  }

  for (const auto& g : window) {
    for (const auto& h : window) {
      const GroupElement gh = t.group().mul(g, h);
      for (VertexId x : vertices) {
        record(from_bool(t.act(gh, x) == t.act(g, t.act(h, x))),
               {Law::kVertexHomomorphism, g, h, x, {}});
      }
      for (EdgeId e : edges) {
        const EdgeImage by_h = t.act(h, e);
        const EdgeImage by_g = t.act(g, by_h.edge);
        const EdgeImage by_gh = t.act(gh, e);
        record(from_bool(by_gh.edge == by_g.edge),
               {Law::kEdgeHomomorphism, g, h, {}, e});
        record(t.equal(by_gh.cocycle, t.group().mul(by_g.cocycle, by_h.cocycle)),
               {Law::kCocycleIdentity, g, h, {}, e});
      }
    }
  }
  return report;
}

Equality inverse_cocycle_check(const SelfSimilarTriple& t,
                               const GroupElement& g, const Path& alpha) {
  const GroupElement g_inv = t.group().inv(g);
  const auto [moved, lhs] = t.act_and_cocycle(g_inv, alpha);
  const GroupElement rhs = t.group().inv(t.cocycle(g, moved));
  return t.equal(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Infinite paths
// ---------------------------------------------------------------------------

Path act_infinite(const SelfSimilarTriple& t, const GroupElement& g,
                  const InfPath& xi, std::size_t n) {
  return t.act(g, xi.truncate(t.graph(), n));
}

GroupElement capital_phi(const SelfSimilarTriple& t, const GroupElement& g,
                         const InfPath& xi, std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "Φ is indexed from 1");
  }
  return t.cocycle(g, xi.truncate(t.graph(), n - 1));
}

InfiniteImage act_infinite_full(const SelfSimilarTriple& t,
                                const GroupElement& g, const InfPath& xi,
                                std::size_t budget) {
  const Graph& graph = t.graph();
  std::vector<EdgeId> letters;
  std::vector<GroupElement> states;  // states[n-1] = Φ(g, ξ)ₙ
  GroupElement h = g;
  auto step = [&](EdgeId e) {
    states.push_back(h);
    auto img = t.act(h, e);
    letters.push_back(img.edge);
    h = std::move(img.cocycle);
  };
  auto as_path = [&](std::size_t from, std::size_t to) {
    return Path::from_edges(
        graph, std::vector<EdgeId>(letters.begin() + static_cast<std::ptrdiff_t>(from),
                                   letters.begin() + static_cast<std::ptrdiff_t>(to)));
  };
  auto as_stream = [&] {
    const VertexId r = t.act(g, xi.range());
    Path known = letters.empty() ? Path::vertex(r)
                                 : Path::from_edges(graph, letters);
    return InfiniteImage{InfPath::stream(std::move(known)),
                         GroupSequence::stream(states)};
  };

  for (EdgeId e : xi.prefix().edges()) {
    step(e);
  }
  if (!xi.is_periodic()) {
    return as_stream();
  }

  const std::size_t mu = letters.size();
  const std::size_t nu = xi.cycle().length();
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen;
  for (std::size_t pass = 0; pass <= budget; ++pass) {
    auto [it, fresh] = seen.emplace(h, pass);
    if (!fresh) {
      const std::size_t start = mu + it->second * nu;
      const std::size_t end = mu + pass * nu;
      Path prefix = start == 0 ? Path::vertex(t.act(g, xi.range()))
                               : as_path(0, start);
      Path cycle = as_path(start, end);
      std::vector<GroupElement> phi_prefix(states.begin(),
                                           states.begin() + static_cast<std::ptrdiff_t>(start));
      std::vector<GroupElement> phi_cycle(states.begin() + static_cast<std::ptrdiff_t>(start),
                                          states.begin() + static_cast<std::ptrdiff_t>(end));
      return InfiniteImage{
          InfPath::periodic(graph, std::move(prefix), std::move(cycle)),
          GroupSequence::periodic(std::move(phi_prefix), std::move(phi_cycle))};
    }
    for (EdgeId e : xi.cycle().edges()) {
      step(e);
    }
  }
  return as_stream();
}

// ---------------------------------------------------------------------------
// Residual freeness
// ---------------------------------------------------------------------------

std::string_view to_string(ResidualFreeReport::Verdict v) noexcept {
  switch (v) {
    case ResidualFreeReport::Verdict::kHolds:
      return "Holds";
    case ResidualFreeReport::Verdict::kCounterExample:
      return "CounterExample";
    case ResidualFreeReport::Verdict::kUnknownBeyondWindow:
      return "UnknownBeyondWindow";
  }
  return "Unknown";
}

namespace {

// Given g ≠ 1 with gα = α and φ(g, α) = 1, follow the cocycle along α to the
// last nontrivial state; it fixes the next letter with trivial cocycle.
std::optional<ResidualCounterExample> descend(const SelfSimilarTriple& t,
                                              const GroupElement& g,
                                              const Path& alpha) {
  GroupElement h = g;
  for (EdgeId e : alpha.edges()) {
    auto img = t.act(h, e);
    if (t.is_identity(h) == Equality::kDistinct &&
        t.is_identity(img.cocycle) == Equality::kEqual && img.edge == e) {
      return ResidualCounterExample{h, e, false};
    }
    h = std::move(img.cocycle);
  }
  return std::nullopt;
}

bool in_window(const SelfSimilarTriple& t,
               const std::vector<GroupElement>& window,
               const GroupElement& g) {
  return std::any_of(window.begin(), window.end(), [&](const GroupElement& w) {
    return t.equal(w, g) == Equality::kEqual;
  });
}

}  // namespace

ResidualFreeReport check_residually_free(
    const SelfSimilarTriple& t, const std::vector<GroupElement>& window,
    std::size_t path_bound) {
  ResidualFreeReport report;
  const Graph& graph = t.graph();

  for (const auto& g : window) {
    const Equality g_is_one = t.is_identity(g);
    if (g_is_one == Equality::kEqual) {
      continue;
    }
    for (EdgeId e : graph.edges()) {
      const EdgeImage img = t.act(g, e);
      if (img.edge != e) {
        continue;
      }
      const Equality trivial = t.is_identity(img.cocycle);
      if (g_is_one == Equality::kDistinct && trivial == Equality::kEqual) {
        report.verdict = ResidualFreeReport::Verdict::kCounterExample;
        report.counterexample = ResidualCounterExample{g, e, false};
        return report;
      }
      if (trivial != Equality::kDistinct) {
        ++report.undecided;
      }
    }
  }

  std::vector<Path> paths;
  for (const Path& p : paths_up_to(graph, path_bound)) {
    if (!p.is_vertex()) {
      paths.push_back(p);
    }
  }

  auto examine = [&](const GroupElement& g, const Path& alpha,
                     const std::string& origin) {
    auto found = descend(t, g, alpha);
    if (!found) {
      report.consistency_failures.push_back(
          origin + " has no edge-level witness along " + path_text(graph, alpha));
      return;
    }
    if (in_window(t, window, found->g)) {
      report.consistency_failures.push_back(
          origin + " descends to (" + t.group().format(found->g) + ", " +
          graph.label(found->edge) + ") inside the window");
      return;
    }
    if (!report.counterexample) {
      found->outside_window = true;
      report.counterexample = found;
      report.verdict = ResidualFreeReport::Verdict::kCounterExample;
    }
  };

  for (const auto& g : window) {
    if (t.is_identity(g) != Equality::kDistinct) {
      continue;
    }
    for (const Path& alpha : paths) {
      auto [image, c] = t.act_and_cocycle(g, alpha);
      if (image == alpha && t.is_identity(c) == Equality::kEqual) {
        examine(g, alpha,
                "path witness (" + t.group().format(g) + ", " +
                    path_text(graph, alpha) + ")");
      }
    }
  }

  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      const auto& g1 = window[i];
      const auto& g2 = window[j];
      if (t.equal(g1, g2) != Equality::kDistinct) {
        continue;
      }
      for (const Path& alpha : paths) {
        auto [image1, c1] = t.act_and_cocycle(g1, alpha);
        auto [image2, c2] = t.act_and_cocycle(g2, alpha);
        if (image1 == image2 && t.equal(c1, c2) == Equality::kEqual) {
          examine(t.group().mul(t.group().inv(g1), g2), alpha,
                  "rigidity witness (" + t.group().format(g1) + ", " +
                      t.group().format(g2) + ", " + path_text(graph, alpha) +
                      ")");
        }
      }
    }
  }

  if (report.verdict == ResidualFreeReport::Verdict::kCounterExample) {
    return report;
  }
  bool covers_group = false;
  if (t.group().is_finite()) {
    covers_group = true;
    for (const auto& g : t.group().elements()) {
      covers_group = covers_group && in_window(t, window, g);
    }
  }
  report.verdict = covers_group && report.undecided == 0
                       ? ResidualFreeReport::Verdict::kHolds
                       : ResidualFreeReport::Verdict::kUnknownBeyondWindow;
  return report;
}

}  // namespace selfsim
