#ifndef SELFSIM_SEMIGROUP_HPP_
#define SELFSIM_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "selfsim/triple.hpp"

namespace selfsim {

// 0 or a triple (α, g, β) with d(α) = g·d(β).
class SemigroupElement {
 public:
  static SemigroupElement zero() { return SemigroupElement(); }

  bool is_zero() const noexcept { return !triple_; }

  // Throw kInvalidArgument on zero.
  const Path& alpha() const;
  const GroupElement& g() const;
  const Path& beta() const;

  // Structural; see equal() for equality in S_{G,E}.
  bool operator==(const SemigroupElement&) const = default;

 private:
  struct Triple {
    Path alpha;
    GroupElement g;
    Path beta;
    bool operator==(const Triple&) const = default;
  };

  SemigroupElement() = default;
  explicit SemigroupElement(Triple t) : triple_(std::move(t)) {}

  friend SemigroupElement make_triple(const SelfSimilarTriple&, Path,
                                      GroupElement, Path);

  std::optional<Triple> triple_;
};

// Throws kSourceConditionViolated unless d(α) = g·d(β).
SemigroupElement make_triple(const SelfSimilarTriple& t, Path alpha,
                             GroupElement g, Path beta);

// e_α = (α, 1, α)
SemigroupElement idempotent(const SelfSimilarTriple& t, const Path& alpha);

SemigroupElement mul(const SelfSimilarTriple& t, const SemigroupElement& s,
                     const SemigroupElement& u);
SemigroupElement star(const SelfSimilarTriple& t, const SemigroupElement& s);

// Paths compare exactly, group components through the backend.
Equality equal(const SelfSimilarTriple& t, const SemigroupElement& s,
               const SemigroupElement& u);

// 0 and the triples (α, 1, α).
Equality is_idempotent(const SelfSimilarTriple& t, const SemigroupElement& s);

enum class IdempotentOrder { kLeq, kGeq, kEqual, kOrthogonal };

std::string_view to_string(IdempotentOrder order) noexcept;

// e ≤ f iff ef = e, orthogonal iff ef = 0. Zero is equal to itself and
// orthogonal to everything else. Throws kNotIdempotent.
IdempotentOrder idempotent_order(const SelfSimilarTriple& t,
                                 const SemigroupElement& e,
                                 const SemigroupElement& f);

// Whether every nonzero idempotent below the target meets some member.
// Members orthogonal to the target are dropped; a member at or above the target
// settles it at once. Otherwise, with target e_β and remaining members
// e_{βγᵢ}, the answer is whether every extension of β by L = max |γᵢ| edges
// has some βγᵢ as a prefix. Throws kNotIdempotent.
bool is_cover(const SelfSimilarTriple& t,
              const std::vector<SemigroupElement>& members,
              const SemigroupElement& target);

// Whether the members cover every vertex idempotent e_x.
bool is_global_cover(const SelfSimilarTriple& t,
                     const std::vector<SemigroupElement>& members);

struct EStarUnitaryReport {
  enum class Verdict { kHolds, kCounterExample, kUnknown };

  Verdict verdict = Verdict::kUnknown;
  // (s, e) with se = e and s not idempotent.
  std::optional<std::pair<SemigroupElement, SemigroupElement>> counterexample;
  std::size_t undecided = 0;
};

std::string_view to_string(EStarUnitaryReport::Verdict v) noexcept;

// Searches s = (α, g, β) and e = e_γ with g in the window and paths of length
// ≤ path_bound, in window order, then α, β, γ in path order. kHolds needs a
// finite group fully covered by the window.
EStarUnitaryReport check_e_star_unitary(const SelfSimilarTriple& t,
                                        const std::vector<GroupElement>& window,
                                        std::size_t path_bound);

}  // namespace selfsim

#endif  // SELFSIM_SEMIGROUP_HPP_
