#ifndef SELFSIM_CONSTRUCTORS_HPP_
#define SELFSIM_CONSTRUCTORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "selfsim/triple.hpp"

namespace selfsim {

using Matrix = std::vector<std::vector<std::int64_t>>;

// N×N matrices A ≥ 0 and B with no zero rows in A and B_ij = 0 wherever
// A_ij = 0.
struct KatsuraData {
  Matrix a;
  Matrix b;
};

// Lists every violated condition; empty when the data is usable.
std::vector<std::string> katsura_violations(const KatsuraData& d);

// Vertices 1..N; for each (i, j) the edges e_{i,j,n}, 0 ≤ n < A_ij, from j to
// i, labelled "(i,j,n)". The integers act by σ_m(e_{i,j,n}) = e_{i,j,n̂} and
// φ(m, e_{i,j,n}) = k̂ where mB_ij + n = k̂A_ij + n̂ with 0 ≤ n̂ < A_ij. Vertices
// are fixed. Throws kInvalidMatrices.
SelfSimilarTriple from_katsura(const KatsuraData& d);

// Evaluates the division formula directly for every m.
class KatsuraModel final : public ActionModel {
 public:
  explicit KatsuraModel(const KatsuraData& d);
  VertexId act(const GroupElement& g, VertexId v) const override;
  EdgeImage act(const GroupElement& g, EdgeId e) const override;

 private:
  struct Edge {
    std::int64_t a;
    std::int64_t b;
    std::int64_t n;
    std::uint32_t first;  // id of e_{i,j,0}
  };
  std::vector<Edge> edges_;
};

// The automaton group acting on the one-vertex graph whose loops are the
// letters. Throws kNonBijectiveOutput.
SelfSimilarTriple from_automaton(AutomatonTable table);

// Same data with the identity action and trivial cocycle.
SelfSimilarTriple trivial_triple(Graph graph, Group group);

// Integers on one vertex with loops e0, e1: σ₁(e0) = e1 with φ = 0 and
// σ₁(e1) = e0 with φ = 1, i.e. adding one to binary digits read
// least-significant first.
SelfSimilarTriple odometer();
// from_katsura with A = [[3]], B = [[2]].
SelfSimilarTriple katsura_3_2();
// Z/2 = {0, 1} on one vertex with loops f0, f1, the nontrivial element
// exchanging them, trivial cocycle.
SelfSimilarTriple z2_edge_swap();
// from_katsura with A = [[2]], B = [[0]], which is not residually free.
SelfSimilarTriple katsura_2_0();
// State a over {0, 1}: a(0w) = 1w, a(1w) = 0·a(w).
AutomatonTable adding_machine_table();
SelfSimilarTriple adding_machine();

}  // namespace selfsim

#endif  // SELFSIM_CONSTRUCTORS_HPP_
