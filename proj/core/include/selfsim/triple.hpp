#ifndef SELFSIM_TRIPLE_HPP_
#define SELFSIM_TRIPLE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "selfsim/corona.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/group.hpp"

namespace selfsim {

struct EdgeImage {
  EdgeId edge;
  GroupElement cocycle;
};

// σ and φ on single vertices and edges. Models trust their inputs: the triple
// checks the backend and the ids before calling.
class ActionModel {
 public:
  virtual ~ActionModel() = default;
  virtual VertexId act(const GroupElement& g, VertexId v) const = 0;
  virtual EdgeImage act(const GroupElement& g, EdgeId e) const = 0;
};

// σ_g = id and φ(g, e) = 1 for every g.
class TrivialModel final : public ActionModel {
 public:
  explicit TrivialModel(Group group) : group_(std::move(group)) {}
  VertexId act(const GroupElement& g, VertexId v) const override;
  EdgeImage act(const GroupElement& g, EdgeId e) const override;

 private:
  Group group_;
};

// Explicit tables for every element of a finite group. Rows left out for the
// identity default to the trivial action.
class FiniteTableModel final : public ActionModel {
 public:
  struct EdgeRow {
    std::uint32_t element;
    EdgeId edge;
    EdgeId image;
    std::uint32_t cocycle;
  };
  struct VertexRow {
    std::uint32_t element;
    VertexId vertex;
    VertexId image;
  };

  // Vertex rows may be omitted; σ_g(x) is then read off as r(σ_g(e)) for the
  // first edge e into x. Throws kInvalidArgument for missing or duplicate rows.
  FiniteTableModel(const Graph& graph, const Group& group,
                   const std::vector<EdgeRow>& edges,
                   const std::vector<VertexRow>& vertices);

  VertexId act(const GroupElement& g, VertexId v) const override;
  EdgeImage act(const GroupElement& g, EdgeId e) const override;

 private:
  std::vector<std::vector<VertexId>> vertex_;   // [element][vertex]
  std::vector<std::vector<EdgeImage>> edge_;    // [element][edge]
};

// The integers acting through the generator 1: σ₁ and φ(1, ·) are given and
// σ_m, φ(m, ·) follow from the cocycle identity along σ₁-orbits,
// φ(m, e) = φ(1, e) + φ(1, σ₁e) + … + φ(1, σ₁^{m-1}e) for m ≥ 0 and
// φ(-m, e) = φ(m, σ_{-m}e)⁻¹.
class IntegerGeneratorModel final : public ActionModel {
 public:
  struct EdgeRow {
    EdgeId edge;
    EdgeId image;
    std::int64_t cocycle;
  };

  // Needs one row per edge. Vertex images are optional as for
  // FiniteTableModel. Throws kInvalidArgument unless σ₁ is a bijection.
  IntegerGeneratorModel(const Graph& graph, const std::vector<EdgeRow>& edges,
                        const std::vector<std::pair<VertexId, VertexId>>&
                            vertices);

  VertexId act(const GroupElement& g, VertexId v) const override;
  EdgeImage act(const GroupElement& g, EdgeId e) const override;

 private:
  struct Orbit {
    std::vector<std::uint32_t> members;  // σ₁-orbit in order
    std::vector<std::int64_t> partial;   // partial[i] = Σ_{j<i} φ(1, members[j])
  };
  std::vector<std::uint32_t> edge_orbit_;     // orbit index per edge
  std::vector<std::uint32_t> edge_position_;  // position within its orbit
  std::vector<Orbit> edge_orbits_;
  std::vector<std::uint32_t> vertex_orbit_;
  std::vector<std::uint32_t> vertex_position_;
  std::vector<std::vector<std::uint32_t>> vertex_orbits_;
};

// Automaton groups on the edges of a graph: the letters of the automaton are
// the edges, and vertices move with the ranges of their incoming edges.
class AutomatonModel final : public ActionModel {
 public:
  AutomatonModel(const Graph& graph, Group group);
  VertexId act(const GroupElement& g, VertexId v) const override;
  EdgeImage act(const GroupElement& g, EdgeId e) const override;

 private:
  Group group_;
  std::vector<VertexId> range_;             // r(e) per edge
  std::vector<EdgeId> first_into_;          // some edge into each vertex
};

// Replaces individual (g, e) entries of another model, leaving everything else
// untouched. Useful for producing deliberately broken data.
class OverrideModel final : public ActionModel {
 public:
  struct Entry {
    GroupElement g;
    EdgeId edge;
    EdgeImage image;
  };
  OverrideModel(std::shared_ptr<const ActionModel> base,
                std::vector<Entry> entries);
  VertexId act(const GroupElement& g, VertexId v) const override;
  EdgeImage act(const GroupElement& g, EdgeId e) const override;

 private:
  std::shared_ptr<const ActionModel> base_;
  std::vector<Entry> entries_;
};

// (G, E, σ, φ). Immutable; copies share the graph and the model.
class SelfSimilarTriple {
 public:
  SelfSimilarTriple(Graph graph, Group group,
                    std::shared_ptr<const ActionModel> model,
                    std::size_t group_depth = kDefaultGroupDepth);

  const Graph& graph() const noexcept { return *graph_; }
  const Group& group() const noexcept { return group_; }
  std::size_t group_depth() const noexcept { return group_depth_; }
  const std::shared_ptr<const ActionModel>& model() const noexcept {
    return model_;
  }

  VertexId act(const GroupElement& g, VertexId v) const;
  EdgeImage act(const GroupElement& g, EdgeId e) const;

  // (gα, φ(g, α)) through the recursion on the first letter; for a vertex x
  // this is (σ_g(x), g).
  std::pair<Path, GroupElement> act_and_cocycle(const GroupElement& g,
                                                const Path& alpha) const;
  Path act(const GroupElement& g, const Path& alpha) const {
    return act_and_cocycle(g, alpha).first;
  }
  GroupElement cocycle(const GroupElement& g, const Path& alpha) const {
    return act_and_cocycle(g, alpha).second;
  }

  Equality equal(const GroupElement& a, const GroupElement& b) const {
    return group_.equal(a, b, group_depth_);
  }
  Equality is_identity(const GroupElement& a) const {
    return group_.is_identity(a, group_depth_);
  }

  Corona corona() const { return Corona(group_, group_depth_); }

 private:
  std::shared_ptr<const Graph> graph_;
  Group group_;
  std::shared_ptr<const ActionModel> model_;
  std::size_t group_depth_;
};

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

enum class Law {
  kWindowMissingIdentity,
  kWindowNotInverseClosed,
  kVertexBijection,
  kEdgeBijection,
  kRangeEquivariance,
  kSourceEquivariance,
  kVertexHomomorphism,
  kEdgeHomomorphism,
  kCocycleIdentity,
  kCocycleAtOne,
  kCocycleOnVertices,
};

std::string_view to_string(Law law) noexcept;

struct AxiomViolation {
  Law law;
  std::optional<GroupElement> g;
  std::optional<GroupElement> h;
  std::optional<VertexId> vertex;
  std::optional<EdgeId> edge;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  // Instances whose group equalities could not be decided.
  std::vector<AxiomViolation> undecided;
  std::size_t checks = 0;

  bool ok() const noexcept { return violations.empty(); }
};

// Checks the automorphism and cocycle laws for all g, h in the window and all
// vertices and edges.
AxiomReport verify_axioms(const SelfSimilarTriple& t,
                          const std::vector<GroupElement>& window);

// φ(g⁻¹, α) = φ(g, g⁻¹α)⁻¹
Equality inverse_cocycle_check(const SelfSimilarTriple& t,
                               const GroupElement& g, const Path& alpha);

// ---------------------------------------------------------------------------
// Infinite paths
// ---------------------------------------------------------------------------

// (gξ)|ₙ
Path act_infinite(const SelfSimilarTriple& t, const GroupElement& g,
                  const InfPath& xi, std::size_t n);

// Φ(g, ξ)ₙ = φ(g, ξ|ₙ₋₁) for n ≥ 1.
GroupElement capital_phi(const SelfSimilarTriple& t, const GroupElement& g,
                         const InfPath& xi, std::size_t n);

struct InfiniteImage {
  InfPath image;       // gξ
  GroupSequence phi;   // Φ(g, ξ)
};

// gξ and Φ(g, ξ) as whole sequences. For periodic ξ the pair (current cocycle
// value, phase in the cycle) is tracked until it repeats, which makes both
// results periodic; if it has not repeated after `budget` passes through the
// cycle, both come back as streams of the letters computed so far. Streams
// give streams of the same depth.
InfiniteImage act_infinite_full(const SelfSimilarTriple& t,
                                const GroupElement& g, const InfPath& xi,
                                std::size_t budget);

// ---------------------------------------------------------------------------
// Residual freeness
// ---------------------------------------------------------------------------

struct ResidualCounterExample {
  GroupElement g;
  EdgeId edge;
  // Found by descending from a path-level witness to an element outside the
  // window.
  bool outside_window = false;
};

struct ResidualFreeReport {
  enum class Verdict { kHolds, kCounterExample, kUnknownBeyondWindow };

  Verdict verdict = Verdict::kUnknownBeyondWindow;
  std::optional<ResidualCounterExample> counterexample;
  // Path-version and rigidity witnesses that contradict the edge-level sweep.
  std::vector<std::string> consistency_failures;
  // (g, e) pairs where ge = e but g or φ(g, e) could not be compared with 1.
  std::size_t undecided = 0;
};

std::string_view to_string(ResidualFreeReport::Verdict v) noexcept;

// Searches the window for g ≠ 1 and e with ge = e and φ(g, e) = 1, in window
// order and then edge order. The path version and the two-element rigidity
// property are swept over paths of length ≤ path_bound as consistency checks.
ResidualFreeReport check_residually_free(const SelfSimilarTriple& t,
                                         const std::vector<GroupElement>& window,
                                         std::size_t path_bound = 3);

}  // namespace selfsim

#endif  // SELFSIM_TRIPLE_HPP_
