#include "selfsim/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace selfsim {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

[[noreturn]] void illegal_composition(std::string_view where) {
  throw Error(ErrorCode::kIllegalComposition,
              std::string(where) + ": source of the left path differs from "
                                   "the range of the right path");
}

// Smallest p dividing n with cycle[i] = cycle[i mod p].
std::size_t primitive_period(std::span<const EdgeId> cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) {
      ok = cycle[i] == cycle[i - p];
    }
    if (ok) {
      return p;
    }
  }
  return n;
}

}  // namespace

Graph::Graph(std::vector<std::string> vertex_labels, std::vector<EdgeSpec> edges)
    : vertex_labels_(std::move(vertex_labels)),
      edges_(std::move(edges)),
      edges_into_(vertex_labels_.size()) {
  for (std::size_t v = 0; v < vertex_labels_.size(); ++v) {
    if (!vertex_by_label_.emplace(vertex_labels_[v], VertexId(v)).second) {
      throw Error(ErrorCode::kInvalidGraph,
                  "duplicate vertex label '" + vertex_labels_[v] + "'");
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!edge_by_label_.emplace(edges_[e].label, EdgeId(e)).second) {
      throw Error(ErrorCode::kInvalidGraph,
                  "duplicate edge label '" + edges_[e].label + "'");
    }
    if (has_vertex(edges_[e].range)) {
      edges_into_[index(edges_[e].range)].push_back(EdgeId(e));
    }
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
  auto it = vertex_by_label_.find(std::string(label));
  if (it == vertex_by_label_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view label) const {
  auto it = edge_by_label_.find(std::string(label));
  if (it == edge_by_label_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool Graph::endpoints_valid(EdgeId e) const {
  return has_edge(e) && has_vertex(range(e)) && has_vertex(source(e));
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    out.push_back(VertexId(v));
  }
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count());
  for (std::size_t e = 0; e < edge_count(); ++e) {
    out.push_back(EdgeId(e));
  }
  return out;
}

GraphReport validate_graph(const Graph& graph) {
  GraphReport report;
  for (EdgeId e : graph.edges()) {
    if (!graph.has_vertex(graph.range(e))) {
      report.violations.push_back(
          {GraphViolation::Kind::kDanglingRange, index(e)});
    }
    if (!graph.has_vertex(graph.source(e))) {
      report.violations.push_back(
          {GraphViolation::Kind::kDanglingSource, index(e)});
    }
  }
  for (VertexId v : graph.vertices()) {
    if (graph.edges_into(v).empty()) {
      report.violations.push_back(
          {GraphViolation::Kind::kNoIncomingEdge, index(v)});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Path
// ---------------------------------------------------------------------------

Path Path::edge(const Graph& graph, EdgeId e) {
  if (!graph.endpoints_valid(e)) {
    throw Error(ErrorCode::kInvalidGraph, "edge with dangling endpoint");
  }
  return Path(graph.range(e), graph.source(e), {e});
}

Path Path::from_edges(const Graph& graph, std::vector<EdgeId> edges) {
  if (edges.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "empty edge list; use Path::vertex for length-0 paths");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!graph.endpoints_valid(edges[i])) {
      throw Error(ErrorCode::kInvalidGraph, "edge with dangling endpoint");
    }
    if (i > 0 && graph.source(edges[i - 1]) != graph.range(edges[i])) {
      illegal_composition("Path::from_edges");
    }
  }
  const VertexId r = graph.range(edges.front());
  const VertexId d = graph.source(edges.back());
  return Path(r, d, std::move(edges));
}

Path Path::prefix(const Graph& graph, std::size_t n) const {
  if (n > length()) {
    throw Error(ErrorCode::kInvalidArgument, "prefix longer than path");
  }
  if (n == length()) {
    return *this;
  }
  if (n == 0) {
    return vertex(range_);
  }
  return Path(range_, graph.source(edges_[n - 1]),
              std::vector<EdgeId>(edges_.begin(), edges_.begin() + n));
}

Path Path::suffix(const Graph& graph, std::size_t n) const {
  if (n > length()) {
    throw Error(ErrorCode::kInvalidArgument, "suffix offset longer than path");
  }
  if (n == 0) {
    return *this;
  }
  if (n == length()) {
    return vertex(source_);
  }
  return Path(graph.range(edges_[n]), source_,
              std::vector<EdgeId>(edges_.begin() + n, edges_.end()));
}

std::strong_ordering Path::operator<=>(const Path& other) const noexcept {
  if (auto c = length() <=> other.length(); c != 0) {
    return c;
  }
  if (auto c = index(range_) <=> index(other.range_); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (auto c = index(edges_[i]) <=> index(other.edges_[i]); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t Path::hash() const noexcept {
  std::size_t h = mix(edges_.size(), index(range_));
  for (EdgeId e : edges_) {
    h = mix(h, index(e));
  }
  return h;
}

Path concat(const Path& a, const Path& b) {
  if (a.source() != b.range()) {
    illegal_composition("concat");
  }
  if (a.is_vertex()) {
    return b;
  }
  if (b.is_vertex()) {
    return a;
  }
  std::vector<EdgeId> edges;
  edges.reserve(a.length() + b.length());
  edges.insert(edges.end(), a.edges_.begin(), a.edges_.end());
  edges.insert(edges.end(), b.edges_.begin(), b.edges_.end());
  return Path(a.range(), b.source(), std::move(edges));
}

PrefixOrder prefix_compare(const Path& a, const Path& b) {
  if (a.range() != b.range()) {
    return PrefixOrder::kIncomparable;
  }
  const std::size_t n = std::min(a.length(), b.length());
  if (!std::equal(a.edges().begin(), a.edges().begin() + n,
                  b.edges().begin())) {
    return PrefixOrder::kIncomparable;
  }
  if (a.length() == b.length()) {
    return PrefixOrder::kEqual;
  }
  return a.length() < b.length() ? PrefixOrder::kAProperPrefix
                                 : PrefixOrder::kBProperPrefix;
}

bool is_prefix(const Path& a, const Path& b) {
  const PrefixOrder order = prefix_compare(a, b);
  return order == PrefixOrder::kEqual || order == PrefixOrder::kAProperPrefix;
}

std::optional<Path> strip_prefix(const Graph& graph, const Path& prefix,
                                 const Path& path) {
  if (!is_prefix(prefix, path)) {
    return std::nullopt;
  }
  return path.suffix(graph, prefix.length());
}

std::vector<Path> extensions(const Graph& graph, const Path& b,
                             std::size_t extra) {
  std::vector<Path> frontier{b};
  for (std::size_t step = 0; step < extra; ++step) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (EdgeId e : graph.edges_into(p.source())) {
        next.push_back(concat(p, Path::edge(graph, e)));
      }
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

std::vector<Path> paths_of_length(const Graph& graph, std::size_t n) {
  std::vector<Path> out;
  for (VertexId v : graph.vertices()) {
    auto ext = extensions(graph, Path::vertex(v), n);
    out.insert(out.end(), std::make_move_iterator(ext.begin()),
               std::make_move_iterator(ext.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> paths_up_to(const Graph& graph, std::size_t max_length) {
  std::vector<Path> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto layer = paths_of_length(graph, n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// InfPath
// ---------------------------------------------------------------------------

InfPath InfPath::periodic(const Graph& graph, Path prefix, Path cycle) {
  if (cycle.is_vertex()) {
    throw Error(ErrorCode::kInvalidArgument, "cycle of length zero");
  }
  if (cycle.range() != cycle.source()) {
    throw Error(ErrorCode::kIllegalComposition, "cycle is not closed");
  }
  if (prefix.source() != cycle.range()) {
    illegal_composition("InfPath::periodic");
  }

  std::vector<EdgeId> nu(cycle.edges().begin(), cycle.edges().end());
  nu.resize(primitive_period(nu));
  std::vector<EdgeId> mu(prefix.edges().begin(), prefix.edges().end());

  // Absorb the tail of μ into ν: μe(νe)^ω... where ν ends in e.
  while (!mu.empty() && mu.back() == nu.back()) {
    mu.pop_back();
    std::rotate(nu.rbegin(), nu.rbegin() + 1, nu.rend());
  }

  Path canonical_cycle = Path::from_edges(graph, std::move(nu));
  Path canonical_prefix = mu.empty()
                              ? Path::vertex(canonical_cycle.range())
                              : Path::from_edges(graph, std::move(mu));
  return InfPath(true, std::move(canonical_prefix), std::move(canonical_cycle));
}

InfPath InfPath::stream(Path known) {
  const VertexId r = known.range();
  return InfPath(false, std::move(known), Path::vertex(r));
}

std::optional<std::size_t> InfPath::depth() const noexcept {
  if (periodic_) {
    return std::nullopt;
  }
  return prefix_.length();
}

EdgeId InfPath::letter(std::size_t n) const {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "letters are indexed from 1");
  }
  if (n <= prefix_.length()) {
    return prefix_[n - 1];
  }
  if (!periodic_) {
    throw Error(ErrorCode::kDepthExceeded,
                "stream queried at letter " + std::to_string(n) +
                    " beyond declared depth " +
                    std::to_string(prefix_.length()));
  }
  return cycle_[(n - prefix_.length() - 1) % cycle_.length()];
}

Path InfPath::truncate(const Graph& graph, std::size_t n) const {
  if (n <= prefix_.length()) {
    return prefix_.prefix(graph, n);
  }
  if (!periodic_) {
    throw Error(ErrorCode::kDepthExceeded,
                "stream truncated at " + std::to_string(n) +
                    " beyond declared depth " +
                    std::to_string(prefix_.length()));
  }
  std::vector<EdgeId> edges(prefix_.edges().begin(), prefix_.edges().end());
  edges.reserve(n);
  const std::size_t period = cycle_.length();
  for (std::size_t i = prefix_.length(); i < n; ++i) {
    edges.push_back(cycle_[(i - prefix_.length()) % period]);
  }
  const VertexId source = graph.source(edges.back());
  return Path(prefix_.range(), source, std::move(edges));
}

InfPath InfPath::drop(const Graph& graph, std::size_t k) const {
  if (k <= prefix_.length()) {
    Path rest = prefix_.suffix(graph, k);
    if (!periodic_) {
      return stream(std::move(rest));
    }
    return InfPath(true, std::move(rest), cycle_);
  }
  if (!periodic_) {
    throw Error(ErrorCode::kDepthExceeded,
                "cannot drop " + std::to_string(k) +
                    " letters from a stream of depth " +
                    std::to_string(prefix_.length()));
  }
  const std::size_t shift = (k - prefix_.length()) % cycle_.length();
  std::vector<EdgeId> nu(cycle_.edges().begin(), cycle_.edges().end());
  std::rotate(nu.begin(), nu.begin() + shift, nu.end());
  Path cycle = Path::from_edges(graph, std::move(nu));
  Path prefix = Path::vertex(cycle.range());
  return InfPath(true, std::move(prefix), std::move(cycle));
}

InfPath InfPath::prepend(const Graph& graph, const Path& p) const {
  if (p.source() != range()) {
    illegal_composition("InfPath::prepend");
  }
  if (!periodic_) {
    return stream(concat(p, prefix_));
  }
  return periodic(graph, concat(p, prefix_), cycle_);
}

std::size_t InfPath::hash() const noexcept {
  return mix(mix(periodic_ ? 1 : 2, prefix_.hash()), cycle_.hash());
}

Equality compare(const InfPath& a, const InfPath& b) {
  if (a.is_periodic() && b.is_periodic()) {
    return from_bool(a == b);
  }
  if (a.range() != b.range()) {
    return Equality::kDistinct;
  }
  const std::size_t n = std::min(a.depth().value_or(SIZE_MAX),
                                 b.depth().value_or(SIZE_MAX));
  for (std::size_t i = 1; i <= n; ++i) {
    if (a.letter(i) != b.letter(i)) {
      return Equality::kDistinct;
    }
  }
  return Equality::kUnknown;
}

Equality in_cylinder(const InfPath& xi, const Path& beta) {
  if (xi.range() != beta.range()) {
    return Equality::kDistinct;
  }
  const std::size_t known = xi.depth().value_or(SIZE_MAX);
  const std::size_t n = std::min(known, beta.length());
  for (std::size_t i = 1; i <= n; ++i) {
    if (xi.letter(i) != beta[i - 1]) {
      return Equality::kDistinct;
    }
  }
  return n == beta.length() ? Equality::kEqual : Equality::kUnknown;
}

}  // namespace selfsim
