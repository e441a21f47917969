#include "selfsim/groupoid.hpp"

#include <algorithm>

namespace selfsim {

std::string_view to_string(HausdorffReport::Verdict v) noexcept {
  switch (v) {
    case HausdorffReport::Verdict::kHausdorffWindowVerified:
      return "Hausdorff(window-verified)";
    case HausdorffReport::Verdict::kNotImpliedByCheck:
      return "NotImpliedByCheck";
  }
  return "NotImpliedByCheck";
}

HausdorffReport hausdorff_report(const SelfSimilarTriple& t,
                                 const std::vector<GroupElement>& window) {
  HausdorffReport report{HausdorffReport::Verdict::kHausdorffWindowVerified,
                         check_residually_free(t, window)};
  if (report.residual.counterexample) {
    report.verdict = HausdorffReport::Verdict::kNotImpliedByCheck;
  }
  return report;
}

std::optional<BasicSet> normalize_basic(const SelfSimilarTriple& t,
                                        const BasicSet& set,
                                        const Path& gamma) {
  make_triple(t, set.alpha, set.g, set.beta);
  auto eps = strip_prefix(t.graph(), set.beta, gamma);
  if (!eps) {
    return std::nullopt;
  }
  auto [moved, carry] = t.act_and_cocycle(set.g, *eps);
  return BasicSet{concat(set.alpha, moved), std::move(carry), gamma};
}

Groupoid::Groupoid(SelfSimilarTriple triple, GroupoidOptions options)
    : triple_(std::move(triple)), depth_(options.depth) {
  if (options.window.empty()) {
    options.window = default_window(triple_.group(), 4);
  }
  residual_ = check_residually_free(triple_, options.window);
  if (residual_.counterexample && !options.allow_non_residually_free) {
    const auto& ce = *residual_.counterexample;
    throw Error(ErrorCode::kResidualFreenessRequired,
                "triple is not residually free: " +
                    triple_.group().format(ce.g) + " fixes " +
                    triple_.graph().label(ce.edge) + " with trivial cocycle");
  }
}

Germ Groupoid::make_germ(Path alpha, GroupElement g, Path beta,
                         InfPath xi) const {
  make_triple(triple_, alpha, g, beta);
  if (beta.source() != xi.range()) {
    throw Error(ErrorCode::kIllegalComposition,
                "the point of a germ must start at d(β)");
  }
  return Germ{std::move(alpha), std::move(g), std::move(beta), std::move(xi)};
}

Germ Groupoid::unit(const InfPath& point) const {
  const Path x = Path::vertex(point.range());
  return make_germ(x, triple_.group().identity(), x, point);
}

Germ Groupoid::inverse(const Germ& u) const {
  InfPath image = act_infinite_full(triple_, u.g, u.xi, depth_).image;
  return make_germ(u.beta, triple_.group().inv(u.g), u.alpha, std::move(image));
}

InfPath Groupoid::source(const Germ& u) const {
  return u.xi.prepend(triple_.graph(), u.beta);
}

InfPath Groupoid::range(const Germ& u) const {
  return act_infinite_full(triple_, u.g, u.xi, depth_)
      .image.prepend(triple_.graph(), u.alpha);
}

Equality Groupoid::germ_eq(const Germ& u1, const Germ& u2) const {
  const Germ* a = &u1;
  const Germ* b = &u2;
  if (a->beta.length() > b->beta.length()) {
    std::swap(a, b);
  }
  const Equality points = compare(source(*a), source(*b));
  if (points == Equality::kDistinct) {
    return Equality::kDistinct;
  }
  auto gamma = strip_prefix(triple_.graph(), a->beta, b->beta);
  if (!gamma) {
    return Equality::kDistinct;
  }
  auto [moved, carry] = triple_.act_and_cocycle(a->g, *gamma);
  if (concat(a->alpha, moved) != b->alpha) {
    return Equality::kDistinct;
  }
  return points && triple_.equal(carry, b->g);
}

Germ Groupoid::absorb(const Germ& u, std::size_t k) const {
  const Graph& graph = triple_.graph();
  const Path gamma = u.xi.truncate(graph, k);
  auto [moved, carry] = triple_.act_and_cocycle(u.g, gamma);
  return Germ{concat(u.alpha, moved), std::move(carry), concat(u.beta, gamma),
              u.xi.drop(graph, k)};
}

Germ Groupoid::reparametrize(const Germ& u, std::size_t n, Side side) const {
  const std::size_t current =
      side == Side::kAlpha ? u.alpha.length() : u.beta.length();
  if (n < current) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot shorten a germ representative");
  }
  return absorb(u, n - current);
}

Germ Groupoid::compose(const Germ& u1, const Germ& u2) const {
  const Equality matching = compare(source(u1), range(u2));
  if (matching == Equality::kDistinct) {
    throw Error(ErrorCode::kNotComposable, "d(u₁) ≠ r(u₂)");
  }
  if (matching == Equality::kUnknown) {
    throw Error(ErrorCode::kUnknownAtDepth,
                "cannot decide d(u₁) = r(u₂) at the available depth");
  }
  const std::size_t n = std::max(u1.beta.length(), u2.alpha.length());
  const Germ v1 = reparametrize(u1, n, Side::kBeta);
  const Germ v2 = reparametrize(u2, n, Side::kAlpha);
  if (v1.beta != v2.alpha) {
    throw Error(ErrorCode::kNotComposable, "representatives do not meet");
  }
  return make_germ(v1.alpha, triple_.group().mul(v1.g, v2.g), v2.beta, v2.xi);
}

LagValue Groupoid::lag(const Germ& u) const {
  const auto phi = act_infinite_full(triple_, u.g, u.xi, depth_).phi;
  return {triple_.corona().right_shift(phi, u.alpha.length()),
          static_cast<std::int64_t>(u.alpha.length()) -
              static_cast<std::int64_t>(u.beta.length())};
}

FImage Groupoid::f_map(const Germ& u) const {
  const Graph& graph = triple_.graph();
  auto full = act_infinite_full(triple_, u.g, u.xi, depth_);
  return FImage{
      full.image.prepend(graph, u.alpha),
      LagValue{triple_.corona().right_shift(full.phi, u.alpha.length()),
               static_cast<std::int64_t>(u.alpha.length()) -
                   static_cast<std::int64_t>(u.beta.length())},
      source(u)};
}

Equality Groupoid::equal(const FImage& a, const FImage& b) const {
  const Equality ranges = compare(a.range, b.range);
  if (ranges == Equality::kDistinct) {
    return ranges;
  }
  const Equality sources = compare(a.source, b.source);
  if (sources == Equality::kDistinct) {
    return sources;
  }
  return ranges && sources && triple_.corona().equal(a.lag, b.lag);
}

ModelCheckResult Groupoid::model_check(const InfPath& eta,
                                       const GroupSequence& g, std::int64_t k,
                                       const InfPath& zeta,
                                       std::size_t depth) const {
  ModelCheckResult result{Equality::kDistinct, std::nullopt};
  for (std::size_t q = 0; q <= depth; ++q) {
    const std::int64_t signed_p = static_cast<std::int64_t>(q) + k;
    if (signed_p < 0) {
      continue;
    }
    const auto p = static_cast<std::size_t>(signed_p);
    Equality verdict = Equality::kEqual;
    try {
      for (std::size_t n = 1; n <= depth && verdict != Equality::kDistinct; ++n) {
        const GroupElement& current = g.at(n + p);
        const EdgeImage img = triple_.act(current, zeta.letter(n + q));
        verdict = verdict && from_bool(eta.letter(n + p) == img.edge);
        if (verdict == Equality::kDistinct) {
          break;
        }
        verdict = verdict && triple_.equal(g.at(n + p + 1), img.cocycle);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDepthExceeded) {
        throw;
      }
      if (verdict != Equality::kDistinct) {
        verdict = Equality::kUnknown;
      }
    }
    if (verdict == Equality::kEqual) {
      return {Equality::kEqual, std::make_pair(p, q)};
    }
    if (verdict == Equality::kUnknown) {
      result.verdict = Equality::kUnknown;
    }
  }
  return result;
}

Germ Groupoid::pullback(const InfPath& eta, const GroupSequence& g,
                        std::size_t p, std::size_t q,
                        const InfPath& zeta) const {
  const Graph& graph = triple_.graph();
  return make_germ(eta.truncate(graph, p), g.at(p + 1),
                   zeta.truncate(graph, q), zeta.drop(graph, q));
}

Equality Groupoid::open_set_member(const Germ& u, const BasicSet& set) const {
  make_triple(triple_, set.alpha, set.g, set.beta);
  const InfPath point = source(u);
  const Equality inside = in_cylinder(point, set.beta);
  if (inside != Equality::kEqual) {
    return inside;
  }
  const Germ candidate{set.alpha, set.g, set.beta,
                       point.drop(triple_.graph(), set.beta.length())};
  return germ_eq(u, candidate);
}

Equality Groupoid::open_set_member(const Germ& u, const BasicSet& set,
                                   const Path& gamma) const {
  auto normal = normalize_basic(triple_, set, gamma);
  if (!normal) {
    return Equality::kDistinct;
  }
  return open_set_member(u, *normal);
}

Equality Groupoid::omega_member(const FImage& x, const BasicSet& set) const {
  make_triple(triple_, set.alpha, set.g, set.beta);
  const Graph& graph = triple_.graph();
  Equality verdict = in_cylinder(x.range, set.alpha) &&
                     in_cylinder(x.source, set.beta) &&
                     from_bool(x.lag.shift ==
                               static_cast<std::int64_t>(set.alpha.length()) -
                                   static_cast<std::int64_t>(set.beta.length()));
  if (verdict == Equality::kDistinct) {
    return verdict;
  }
  InfPath xi = x.source;
  try {
    xi = x.source.drop(graph, set.beta.length());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDepthExceeded) {
      throw;
    }
    return Equality::kUnknown;
  }
  auto full = act_infinite_full(triple_, set.g, xi, depth_);
  const Corona corona = triple_.corona();
  return verdict && compare(x.range, full.image.prepend(graph, set.alpha)) &&
         corona.equal(x.lag.corona,
                      corona.right_shift(full.phi, set.alpha.length()));
}

}  // namespace selfsim
