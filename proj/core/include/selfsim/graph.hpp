#ifndef SELFSIM_GRAPH_HPP_
#define SELFSIM_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "selfsim/error.hpp"

namespace selfsim {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t index(VertexId v) noexcept {
  return static_cast<std::uint32_t>(v);
}
constexpr std::uint32_t index(EdgeId e) noexcept {
  return static_cast<std::uint32_t>(e);
}

struct EdgeSpec {
  std::string label;
  VertexId range;
  VertexId source;
};

// A finite directed graph E = (E⁰, E¹, r, d). Vertex and edge ids are dense
// indices; labels are only used for parsing and printing.
//
// Construction does not enforce the standing hypotheses: an edge may point to a
// vertex id that does not exist, and vertices may lack incoming edges. Use
// validate_graph() to get the list of violations.
class Graph {
 public:
  Graph(std::vector<std::string> vertex_labels, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  VertexId range(EdgeId e) const { return edges_.at(index(e)).range; }
  VertexId source(EdgeId e) const { return edges_.at(index(e)).source; }

  const std::string& label(VertexId v) const {
    return vertex_labels_.at(index(v));
  }
  const std::string& label(EdgeId e) const { return edges_.at(index(e)).label; }

  std::optional<VertexId> find_vertex(std::string_view label) const;
  std::optional<EdgeId> find_edge(std::string_view label) const;

  // r⁻¹(v), in edge id order.
  std::span<const EdgeId> edges_into(VertexId v) const {
    return edges_into_.at(index(v));
  }

  bool has_vertex(VertexId v) const noexcept {
    return index(v) < vertex_count();
  }
  bool has_edge(EdgeId e) const noexcept { return index(e) < edge_count(); }
  bool endpoints_valid(EdgeId e) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<EdgeSpec> edges_;
  std::vector<std::vector<EdgeId>> edges_into_;
  std::unordered_map<std::string, VertexId> vertex_by_label_;
  std::unordered_map<std::string, EdgeId> edge_by_label_;
};

inline bool operator==(const EdgeSpec& a, const EdgeSpec& b) {
  return a.label == b.label && a.range == b.range && a.source == b.source;
}

struct GraphViolation {
  enum class Kind { kNoIncomingEdge, kDanglingRange, kDanglingSource };
  Kind kind;
  std::uint32_t id;  // vertex id for kNoIncomingEdge, edge id otherwise
};

struct GraphReport {
  std::vector<GraphViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

GraphReport validate_graph(const Graph& graph);

// A finite path. Length-zero paths are vertices and carry r = d = the vertex.
// Edges are stored left to right, so edges()[i] feeds into edges()[i + 1]
// through d(eᵢ) = r(eᵢ₊₁).
class Path {
 public:
  static Path vertex(VertexId v) { return Path(v, v, {}); }
  static Path edge(const Graph& graph, EdgeId e);
  // Throws kIllegalComposition when consecutive edges do not compose, and
  // kInvalidArgument for an empty list (use vertex() for length 0).
  static Path from_edges(const Graph& graph, std::vector<EdgeId> edges);

  std::size_t length() const noexcept { return edges_.size(); }
  bool is_vertex() const noexcept { return edges_.empty(); }
  VertexId range() const noexcept { return range_; }
  VertexId source() const noexcept { return source_; }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  EdgeId operator[](std::size_t i) const { return edges_.at(i); }

  // The first n edges; prefix(graph, 0) is the vertex r(α).
  Path prefix(const Graph& graph, std::size_t n) const;
  // The path with the first n edges removed; suffix(length()) is d(α).
  Path suffix(const Graph& graph, std::size_t n) const;

  bool operator==(const Path& other) const noexcept {
    return range_ == other.range_ && edges_ == other.edges_;
  }
  std::strong_ordering operator<=>(const Path& other) const noexcept;

  std::size_t hash() const noexcept;

 private:
  Path(VertexId range, VertexId source, std::vector<EdgeId> edges)
      : range_(range), source_(source), edges_(std::move(edges)) {}

  friend Path concat(const Path& a, const Path& b);
  friend class InfPath;

  VertexId range_;
  VertexId source_;
  std::vector<EdgeId> edges_;
};

// αβ; throws kIllegalComposition unless d(a) = r(b).
Path concat(const Path& a, const Path& b);

enum class PrefixOrder { kEqual, kAProperPrefix, kBProperPrefix, kIncomparable };

PrefixOrder prefix_compare(const Path& a, const Path& b);

// a ⪯ b
bool is_prefix(const Path& a, const Path& b);

// The unique γ with prefix·γ = path, if prefix ⪯ path.
std::optional<Path> strip_prefix(const Graph& graph, const Path& prefix,
                                 const Path& path);

// All δ with b ⪯ δ and |δ| = |b| + extra, extending at the source end through
// edges e with r(e) = d(current). Sorted.
std::vector<Path> extensions(const Graph& graph, const Path& b,
                             std::size_t extra);

// Eⁿ and E^{≤n}, sorted by (length, range, edges).
std::vector<Path> paths_of_length(const Graph& graph, std::size_t n);
std::vector<Path> paths_up_to(const Graph& graph, std::size_t max_length);

// An infinite path ξ ∈ E^∞.
//
// Eventually periodic words μν^ω are kept in canonical form (primitive cycle,
// shortest prefix), so structural equality coincides with equality of the
// infinite words. Everything else is a stream: a known prefix of declared
// depth, and queries past that depth throw kDepthExceeded.
class InfPath {
 public:
  // Requires r(ν) = d(ν), d(μ) = r(ν) and |ν| ≥ 1.
  static InfPath periodic(const Graph& graph, Path prefix, Path cycle);
  static InfPath stream(Path known);

  bool is_periodic() const noexcept { return periodic_; }
  // Declared depth of a stream; nullopt for periodic words.
  std::optional<std::size_t> depth() const noexcept;

  VertexId range() const noexcept { return prefix_.range(); }

  // For periodic words: μ and ν. For streams, prefix() is the known part and
  // cycle() is unspecified.
  const Path& prefix() const noexcept { return prefix_; }
  const Path& cycle() const noexcept { return cycle_; }

  // ξₙ for n ≥ 1.
  EdgeId letter(std::size_t n) const;
  // ξ|ₙ; ξ|₀ = r(ξ₁).
  Path truncate(const Graph& graph, std::size_t n) const;
  // The word ξ_{k+1} ξ_{k+2} ...
  InfPath drop(const Graph& graph, std::size_t k) const;
  // pξ; requires d(p) = r(ξ).
  InfPath prepend(const Graph& graph, const Path& p) const;

  bool operator==(const InfPath& other) const noexcept {
    return periodic_ == other.periodic_ && prefix_ == other.prefix_ &&
           cycle_ == other.cycle_;
  }

  std::size_t hash() const noexcept;

 private:
  InfPath(bool periodic, Path prefix, Path cycle)
      : periodic_(periodic),
        prefix_(std::move(prefix)),
        cycle_(std::move(cycle)) {}

  bool periodic_;
  Path prefix_;
  Path cycle_;
};

// Exact for two periodic words. With a stream involved, kDistinct when the
// known parts disagree and kUnknown otherwise.
Equality compare(const InfPath& a, const InfPath& b);

// Whether ξ ∈ Z(β); kUnknown when a stream is too short to tell.
Equality in_cylinder(const InfPath& xi, const Path& beta);

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept { return p.hash(); }
};
struct InfPathHash {
  std::size_t operator()(const InfPath& p) const noexcept { return p.hash(); }
};

}  // namespace selfsim

#endif  // SELFSIM_GRAPH_HPP_
