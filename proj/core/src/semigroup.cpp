#include "selfsim/semigroup.hpp"

#include <algorithm>

namespace selfsim {

namespace {

[[noreturn]] void zero_access() {
  throw Error(ErrorCode::kInvalidArgument, "zero has no components");
}

bool window_covers_group(const SelfSimilarTriple& t,
                         const std::vector<GroupElement>& window) {
  if (!t.group().is_finite()) {
    return false;
  }
  for (const auto& g : t.group().elements()) {
    const bool present =
        std::any_of(window.begin(), window.end(), [&](const GroupElement& w) {
          return t.equal(w, g) == Equality::kEqual;
        });
    if (!present) {
      return false;
    }
  }
  return true;
}

const Path& idempotent_path(const SelfSimilarTriple& t,
                            const SemigroupElement& e) {
  if (is_idempotent(t, e) != Equality::kEqual) {
    throw Error(ErrorCode::kNotIdempotent, "expected an idempotent (α, 1, α)");
  }
  return e.alpha();
}

}  // namespace

const Path& SemigroupElement::alpha() const {
  if (!triple_) {
    zero_access();
  }
  return triple_->alpha;
}

const GroupElement& SemigroupElement::g() const {
  if (!triple_) {
    zero_access();
  }
  return triple_->g;
}

const Path& SemigroupElement::beta() const {
  if (!triple_) {
    zero_access();
  }
  return triple_->beta;
}

SemigroupElement make_triple(const SelfSimilarTriple& t, Path alpha,
                             GroupElement g, Path beta) {
  if (alpha.source() != t.act(g, beta.source())) {
    throw Error(ErrorCode::kSourceConditionViolated,
                "d(α) = g·d(β) fails for (" + t.graph().label(alpha.source()) +
                    ", " + t.group().format(g) + ", " +
                    t.graph().label(beta.source()) + ")");
  }
  return SemigroupElement(
      SemigroupElement::Triple{std::move(alpha), std::move(g), std::move(beta)});
}

SemigroupElement idempotent(const SelfSimilarTriple& t, const Path& alpha) {
  return make_triple(t, alpha, t.group().identity(), alpha);
}

SemigroupElement mul(const SelfSimilarTriple& t, const SemigroupElement& s,
                     const SemigroupElement& u) {
  if (s.is_zero() || u.is_zero()) {
    return SemigroupElement::zero();
  }
  const Graph& graph = t.graph();
  const Group& group = t.group();
  const Path& beta = s.beta();
  const Path& gamma = u.alpha();

  if (auto eps = strip_prefix(graph, beta, gamma)) {
    // γ = βε: (α·gε, φ(g, ε)h, δ)
    auto [moved, carry] = t.act_and_cocycle(s.g(), *eps);
    return make_triple(t, concat(s.alpha(), moved), group.mul(carry, u.g()),
                       u.beta());
  }
  if (auto eps = strip_prefix(graph, gamma, beta)) {
    // β = γε: (α, g·φ(h⁻¹, ε)⁻¹, δ·h⁻¹ε)
    const GroupElement h_inv = group.inv(u.g());
    auto [moved, carry] = t.act_and_cocycle(h_inv, *eps);
    return make_triple(t, s.alpha(), group.mul(s.g(), group.inv(carry)),
                       concat(u.beta(), moved));
  }
  return SemigroupElement::zero();
}

SemigroupElement star(const SelfSimilarTriple& t, const SemigroupElement& s) {
  if (s.is_zero()) {
    return s;
  }
  return make_triple(t, s.beta(), t.group().inv(s.g()), s.alpha());
}

Equality equal(const SelfSimilarTriple& t, const SemigroupElement& s,
               const SemigroupElement& u) {
  if (s.is_zero() || u.is_zero()) {
    return from_bool(s.is_zero() == u.is_zero());
  }
  if (s.alpha() != u.alpha() || s.beta() != u.beta()) {
    return Equality::kDistinct;
  }
  return t.equal(s.g(), u.g());
}

Equality is_idempotent(const SelfSimilarTriple& t, const SemigroupElement& s) {
  if (s.is_zero()) {
    return Equality::kEqual;
  }
  if (s.alpha() != s.beta()) {
    return Equality::kDistinct;
  }
  return t.is_identity(s.g());
}

std::string_view to_string(IdempotentOrder order) noexcept {
  switch (order) {
    case IdempotentOrder::kLeq:
      return "Leq";
    case IdempotentOrder::kGeq:
      return "Geq";
    case IdempotentOrder::kEqual:
      return "Equal";
    case IdempotentOrder::kOrthogonal:
      return "Orthogonal";
  }
  return "Orthogonal";
}

IdempotentOrder idempotent_order(const SelfSimilarTriple& t,
                                 const SemigroupElement& e,
                                 const SemigroupElement& f) {
  if (e.is_zero() || f.is_zero()) {
    if (is_idempotent(t, e) != Equality::kEqual ||
        is_idempotent(t, f) != Equality::kEqual) {
      throw Error(ErrorCode::kNotIdempotent, "expected idempotents");
    }
    return e.is_zero() && f.is_zero() ? IdempotentOrder::kEqual
                                      : IdempotentOrder::kOrthogonal;
  }
  const Path& a = idempotent_path(t, e);
  const Path& b = idempotent_path(t, f);
  switch (prefix_compare(a, b)) {
    case PrefixOrder::kEqual:
      return IdempotentOrder::kEqual;
    case PrefixOrder::kBProperPrefix:
      return IdempotentOrder::kLeq;
    case PrefixOrder::kAProperPrefix:
      return IdempotentOrder::kGeq;
    case PrefixOrder::kIncomparable:
      return IdempotentOrder::kOrthogonal;
  }
  return IdempotentOrder::kOrthogonal;
}

bool is_cover(const SelfSimilarTriple& t,
              const std::vector<SemigroupElement>& members,
              const SemigroupElement& target) {
  if (target.is_zero()) {
    idempotent_path(t, target);
    return true;
  }
  const Graph& graph = t.graph();
  const Path& beta = idempotent_path(t, target);
  std::vector<Path> below;
  std::size_t extra = 0;
  for (const auto& m : members) {
    if (m.is_zero()) {
      idempotent_path(t, m);
      continue;
    }
    const Path& alpha = idempotent_path(t, m);
    switch (prefix_compare(alpha, beta)) {
      case PrefixOrder::kEqual:
      case PrefixOrder::kAProperPrefix:
        return true;
      case PrefixOrder::kBProperPrefix:
        extra = std::max(extra, alpha.length() - beta.length());
        below.push_back(alpha);
        break;
      case PrefixOrder::kIncomparable:
        break;
    }
  }
  if (below.empty()) {
    return false;
  }
  for (const Path& delta : extensions(graph, beta, extra)) {
    const bool hit = std::any_of(below.begin(), below.end(), [&](const Path& a) {
      return is_prefix(a, delta);
    });
    if (!hit) {
      return false;
    }
  }
  return true;
}

bool is_global_cover(const SelfSimilarTriple& t,
                     const std::vector<SemigroupElement>& members) {
  for (VertexId v : t.graph().vertices()) {
    if (!is_cover(t, members, idempotent(t, Path::vertex(v)))) {
      return false;
    }
  }
  return true;
}

std::string_view to_string(EStarUnitaryReport::Verdict v) noexcept {
  switch (v) {
    case EStarUnitaryReport::Verdict::kHolds:
      return "Holds";
    case EStarUnitaryReport::Verdict::kCounterExample:
      return "CounterExample";
    case EStarUnitaryReport::Verdict::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

EStarUnitaryReport check_e_star_unitary(const SelfSimilarTriple& t,
                                        const std::vector<GroupElement>& window,
                                        std::size_t path_bound) {
  EStarUnitaryReport report;
  const auto paths = paths_up_to(t.graph(), path_bound);
  std::vector<SemigroupElement> idempotents;
  for (const Path& p : paths) {
    idempotents.push_back(idempotent(t, p));
  }
  for (const auto& g : window) {
    for (const Path& alpha : paths) {
      for (const Path& beta : paths) {
        if (alpha.source() != t.act(g, beta.source())) {
          continue;
        }
        const SemigroupElement s = make_triple(t, alpha, g, beta);
        const Equality s_idem = is_idempotent(t, s);
        if (s_idem == Equality::kEqual) {
          continue;
        }
        for (const auto& e : idempotents) {
          const Equality fixes = equal(t, mul(t, s, e), e);
          if (fixes == Equality::kDistinct) {
            continue;
          }
          if (fixes == Equality::kEqual && s_idem == Equality::kDistinct) {
            report.verdict = EStarUnitaryReport::Verdict::kCounterExample;
            report.counterexample = {s, e};
            return report;
          }
          ++report.undecided;
        }
      }
    }
  }
  report.verdict = window_covers_group(t, window) && report.undecided == 0
                       ? EStarUnitaryReport::Verdict::kHolds
                       : EStarUnitaryReport::Verdict::kUnknown;
  return report;
}

}  // namespace selfsim
