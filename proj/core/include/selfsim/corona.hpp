#ifndef SELFSIM_CORONA_HPP_
#define SELFSIM_CORONA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfsim/group.hpp"

namespace selfsim {

// A sequence (g₁, g₂, ...) in G^∞, indexed from 1.
//
// Periodic sequences are stored as prefix + repeated cycle, normalized on
// construction (primitive cycle, shortest prefix, compared structurally).
// Streams only know their first depth() terms.
class GroupSequence {
 public:
  static GroupSequence periodic(std::vector<GroupElement> prefix,
                                std::vector<GroupElement> cycle);
  static GroupSequence stream(std::vector<GroupElement> known);
  // The constant sequence (g, g, g, ...).
  static GroupSequence constant(GroupElement g);

  bool is_periodic() const noexcept { return periodic_; }
  std::optional<std::size_t> depth() const noexcept;

  const std::vector<GroupElement>& prefix() const noexcept { return prefix_; }
  const std::vector<GroupElement>& cycle() const noexcept { return cycle_; }

  // gₙ for n ≥ 1; throws kDepthExceeded past the end of a stream.
  const GroupElement& at(std::size_t n) const;

  bool operator==(const GroupSequence&) const = default;

 private:
  GroupSequence(bool periodic, std::vector<GroupElement> prefix,
                std::vector<GroupElement> cycle)
      : periodic_(periodic),
        prefix_(std::move(prefix)),
        cycle_(std::move(cycle)) {}

  bool periodic_;
  std::vector<GroupElement> prefix_;
  std::vector<GroupElement> cycle_;
};

// An element of the lag group Ğ ⋊ Z.
struct LagValue {
  GroupSequence corona;
  std::int64_t shift = 0;

  bool operator==(const LagValue&) const = default;
};

// Arithmetic in the corona Ğ = G^∞ / G^(∞) through representatives.
class Corona {
 public:
  explicit Corona(Group group, std::size_t group_depth = kDefaultGroupDepth)
      : group_(std::move(group)), group_depth_(group_depth) {}

  const Group& group() const noexcept { return group_; }

  GroupSequence identity() const;
  GroupSequence mul(const GroupSequence& a, const GroupSequence& b) const;
  GroupSequence inv(const GroupSequence& a) const;
  // ρᵏ: (1, …, 1, g₁, g₂, …) with k leading identities.
  GroupSequence right_shift(const GroupSequence& a, std::size_t k = 1) const;
  // λᵏ: (g_{k+1}, g_{k+2}, …).
  GroupSequence left_shift(const GroupSequence& a, std::size_t k = 1) const;
  // ρ̌ᵐ for m ≥ 0 and λ̌^{-m} for m < 0.
  GroupSequence shift(const GroupSequence& a, std::int64_t m) const;

  // Equality of classes: do the sequences agree from some index on? Exact for
  // two periodic sequences (up to tri-state group equality); kUnknown as soon
  // as a stream is involved, since a finite difference can never be ruled out.
  Equality equal(const GroupSequence& a, const GroupSequence& b) const;

  LagValue lag_identity() const { return {identity(), 0}; }
  // (a, m)·(b, n) = (a·ρ̌ᵐ(b), m + n)
  LagValue mul(const LagValue& x, const LagValue& y) const;
  LagValue inv(const LagValue& x) const;
  Equality equal(const LagValue& x, const LagValue& y) const;

  // "[g1,g2,(c1,c2)*]" for periodic, "[g1,g2,...]" for streams.
  std::string format(const GroupSequence& a) const;
  // "([...], k)"
  std::string format(const LagValue& x) const;

 private:
  Group group_;
  std::size_t group_depth_;
};

}  // namespace selfsim

#endif  // SELFSIM_CORONA_HPP_
