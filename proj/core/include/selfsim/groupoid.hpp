#ifndef SELFSIM_GROUPOID_HPP_
#define SELFSIM_GROUPOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "selfsim/corona.hpp"
#include "selfsim/semigroup.hpp"
#include "selfsim/triple.hpp"

namespace selfsim {

inline constexpr std::size_t kDefaultDepth = 64;

// The germ [α, g, β; βξ]. The stored point is ξ; the source of the germ is βξ.
struct Germ {
  Path alpha;
  GroupElement g;
  Path beta;
  InfPath xi;

  bool operator==(const Germ&) const = default;
};

// (r(u), ℓ(u), d(u))
struct FImage {
  InfPath range;
  LagValue lag;
  InfPath source;
};

struct GroupoidOptions {
  // Window for the residual-freeness check; empty means the default window of
  // radius 4.
  std::vector<GroupElement> window;
  // Build even when the window exhibits a counterexample. Germ equality is then
  // no longer backed by the criterion it implements.
  bool allow_non_residually_free = false;
  // Passes through a cycle when looking for periodic behaviour, and the
  // comparison depth for streams.
  std::size_t depth = kDefaultDepth;
};

struct ModelCheckResult {
  Equality verdict = Equality::kUnknown;
  // The split k = p − q that passed.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct BasicSet {
  Path alpha;
  GroupElement g;
  Path beta;
};

struct HausdorffReport {
  enum class Verdict { kHausdorffWindowVerified, kNotImpliedByCheck };
  Verdict verdict;
  ResidualFreeReport residual;
};

std::string_view to_string(HausdorffReport::Verdict v) noexcept;

// Residually free ⇒ Hausdorff; a counterexample only means the implication
// cannot be used.
HausdorffReport hausdorff_report(const SelfSimilarTriple& t,
                                 const std::vector<GroupElement>& window);

// Θ(α, g, β; γ) = Θ(αgε, φ(g, ε), γ) when γ = βε, and nullopt (the empty set)
// when β is not a prefix of γ.
std::optional<BasicSet> normalize_basic(const SelfSimilarTriple& t,
                                        const BasicSet& set, const Path& gamma);

// The groupoid of germs over a residually free triple.
class Groupoid {
 public:
  // Throws kResidualFreenessRequired when the window check finds a
  // counterexample and the override is not set.
  explicit Groupoid(SelfSimilarTriple triple, GroupoidOptions options = {});

  const SelfSimilarTriple& triple() const noexcept { return triple_; }
  const ResidualFreeReport& residual_report() const noexcept {
    return residual_;
  }
  std::size_t depth() const noexcept { return depth_; }

  // Checks d(α) = g·d(β) and d(β) = r(ξ).
  Germ make_germ(Path alpha, GroupElement g, Path beta, InfPath xi) const;
  // [x, 1, x; ξ] with x = r(ξ).
  Germ unit(const InfPath& point) const;
  // [β, g⁻¹, α; gξ]
  Germ inverse(const Germ& u) const;

  InfPath source(const Germ& u) const;
  InfPath range(const Germ& u) const;

  // Equal iff the points agree and, with |β₁| ≤ |β₂| and β₂ = β₁γ,
  // α₂ = α₁·g₁γ and g₂ = φ(g₁, γ).
  Equality germ_eq(const Germ& u1, const Germ& u2) const;

  enum class Side { kAlpha, kBeta };
  // An equal germ whose α (or β) has length n, obtained by moving the first
  // letters of ξ into the triple. Throws kInvalidArgument when n is below the
  // current length, kDepthExceeded when a stream runs out.
  Germ reparametrize(const Germ& u, std::size_t n, Side side) const;
  // Moves the first k letters of ξ into the triple.
  Germ absorb(const Germ& u, std::size_t k) const;

  // u₁u₂, defined when d(u₁) = r(u₂). Throws kNotComposable when the points
  // provably differ and kUnknownAtDepth when that cannot be decided.
  Germ compose(const Germ& u1, const Germ& u2) const;

  // ℓ(u) = (ρ̌^{|α|}(Φ̌(g, ξ)), |α| − |β|)
  LagValue lag(const Germ& u) const;
  FImage f_map(const Germ& u) const;
  Equality equal(const FImage& a, const FImage& b) const;

  // Searches q = 0..depth with p = q + k ≥ 0 for a split under which
  //   g_{n+p+1} = φ(g_{n+p}, ζ_{n+q}) and η_{n+p} = g_{n+p}·ζ_{n+q}
  // hold for 1 ≤ n ≤ depth.
  ModelCheckResult model_check(const InfPath& eta, const GroupSequence& g,
                               std::int64_t k, const InfPath& zeta,
                               std::size_t depth) const;
  // [η|ₚ, g_{p+1}, ζ|_q; ζ_{q+1}ζ_{q+2}…]
  Germ pullback(const InfPath& eta, const GroupSequence& g, std::size_t p,
                std::size_t q, const InfPath& zeta) const;

  // u ∈ Θ(α, g, β)
  Equality open_set_member(const Germ& u, const BasicSet& set) const;
  // u ∈ Θ(α, g, β; γ)
  Equality open_set_member(const Germ& u, const BasicSet& set,
                           const Path& gamma) const;
  // (η, ǧ, k, ζ) ∈ Ω(α, g, β)
  Equality omega_member(const FImage& x, const BasicSet& set) const;

 private:
  SelfSimilarTriple triple_;
  ResidualFreeReport residual_;
  std::size_t depth_;
};

}  // namespace selfsim

#endif  // SELFSIM_GROUPOID_HPP_
