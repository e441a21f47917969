#include "selfsim/corona.hpp"

#include <algorithm>
#include <numeric>

namespace selfsim {

namespace {

// Smallest period p dividing the cycle length such that the cycle is a power
// of its first p terms.
std::size_t primitive_period(const std::vector<GroupElement>& cycle) {
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

GroupSequence GroupSequence::periodic(std::vector<GroupElement> prefix,
                                      std::vector<GroupElement> cycle) {
  if (cycle.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "periodic sequence needs a nonempty cycle");
  }
  cycle.resize(primitive_period(cycle), cycle.front());
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    prefix.pop_back();
  }
  return GroupSequence(true, std::move(prefix), std::move(cycle));
}

GroupSequence GroupSequence::stream(std::vector<GroupElement> known) {
  return GroupSequence(false, std::move(known), {});
}

GroupSequence GroupSequence::constant(GroupElement g) {
  return GroupSequence(true, {}, {std::move(g)});
}

std::optional<std::size_t> GroupSequence::depth() const noexcept {
  if (periodic_) {
    return std::nullopt;
  }
  return prefix_.size();
}

const GroupElement& GroupSequence::at(std::size_t n) const {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sequences are indexed from 1");
  }
  if (n <= prefix_.size()) {
    return prefix_[n - 1];
  }
  if (!periodic_) {
    throw Error(ErrorCode::kDepthExceeded,
                "sequence queried at " + std::to_string(n) +
                    " beyond declared depth " + std::to_string(prefix_.size()));
  }
  return cycle_[(n - prefix_.size() - 1) % cycle_.size()];
}

GroupSequence Corona::identity() const {
  return GroupSequence::constant(group_.identity());
}

GroupSequence Corona::mul(const GroupSequence& a,
                          const GroupSequence& b) const {
  if (a.is_periodic() && b.is_periodic()) {
    const std::size_t start = std::max(a.prefix().size(), b.prefix().size());
    const std::size_t period = std::lcm(a.cycle().size(), b.cycle().size());
    std::vector<GroupElement> prefix;
    std::vector<GroupElement> cycle;
    for (std::size_t n = 1; n <= start; ++n) {
      prefix.push_back(group_.mul(a.at(n), b.at(n)));
    }
    for (std::size_t n = start + 1; n <= start + period; ++n) {
      cycle.push_back(group_.mul(a.at(n), b.at(n)));
    }
    return GroupSequence::periodic(std::move(prefix), std::move(cycle));
  }
  const std::size_t depth =
      std::min(a.depth().value_or(SIZE_MAX), b.depth().value_or(SIZE_MAX));
  std::vector<GroupElement> known;
  known.reserve(depth);
  for (std::size_t n = 1; n <= depth; ++n) {
    known.push_back(group_.mul(a.at(n), b.at(n)));
  }
  return GroupSequence::stream(std::move(known));
}

GroupSequence Corona::inv(const GroupSequence& a) const {
  std::vector<GroupElement> prefix;
  for (const auto& g : a.prefix()) {
    prefix.push_back(group_.inv(g));
  }
  if (!a.is_periodic()) {
    return GroupSequence::stream(std::move(prefix));
  }
  std::vector<GroupElement> cycle;
  for (const auto& g : a.cycle()) {
    cycle.push_back(group_.inv(g));
  }
  return GroupSequence::periodic(std::move(prefix), std::move(cycle));
}

GroupSequence Corona::right_shift(const GroupSequence& a,
                                  std::size_t k) const {
  std::vector<GroupElement> prefix(k, group_.identity());
  prefix.insert(prefix.end(), a.prefix().begin(), a.prefix().end());
  if (!a.is_periodic()) {
    return GroupSequence::stream(std::move(prefix));
  }
  return GroupSequence::periodic(std::move(prefix), a.cycle());
}

GroupSequence Corona::left_shift(const GroupSequence& a, std::size_t k) const {
  const auto& p = a.prefix();
  if (k <= p.size()) {
    std::vector<GroupElement> prefix(p.begin() + static_cast<std::ptrdiff_t>(k),
                                     p.end());
    if (!a.is_periodic()) {
      return GroupSequence::stream(std::move(prefix));
    }
    return GroupSequence::periodic(std::move(prefix), a.cycle());
  }
  if (!a.is_periodic()) {
    return GroupSequence::stream({});
  }
  std::vector<GroupElement> cycle = a.cycle();
  const std::size_t r = (k - p.size()) % cycle.size();
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(r),
              cycle.end());
  return GroupSequence::periodic({}, std::move(cycle));
}

GroupSequence Corona::shift(const GroupSequence& a, std::int64_t m) const {
  if (m >= 0) {
    return right_shift(a, static_cast<std::size_t>(m));
  }
  return left_shift(a, static_cast<std::size_t>(-(m + 1)) + 1);
}

Equality Corona::equal(const GroupSequence& a, const GroupSequence& b) const {
  if (!a.is_periodic() || !b.is_periodic()) {
    return Equality::kUnknown;
  }
  const std::size_t start = std::max(a.prefix().size(), b.prefix().size());
  const std::size_t period = std::lcm(a.cycle().size(), b.cycle().size());
  Equality out = Equality::kEqual;
  for (std::size_t n = start + 1; n <= start + period; ++n) {
    out = out && group_.equal(a.at(n), b.at(n), group_depth_);
    if (out == Equality::kDistinct) {
      break;
    }
  }
  return out;
}

LagValue Corona::mul(const LagValue& x, const LagValue& y) const {
  std::int64_t shift_sum = 0;
  if (__builtin_add_overflow(x.shift, y.shift, &shift_sum)) {
    throw Error(ErrorCode::kIntegerOverflow, "lag shift overflow");
  }
  return {mul(x.corona, shift(y.corona, x.shift)), shift_sum};
}

LagValue Corona::inv(const LagValue& x) const {
  if (x.shift == INT64_MIN) {
    throw Error(ErrorCode::kIntegerOverflow, "lag shift overflow");
  }
  return {shift(inv(x.corona), -x.shift), -x.shift};
}

Equality Corona::equal(const LagValue& x, const LagValue& y) const {
  if (x.shift != y.shift) {
    return Equality::kDistinct;
  }
  return equal(x.corona, y.corona);
}

std::string Corona::format(const GroupSequence& a) const {
  std::string out = "[";
  bool first = true;
  auto put = [&](const std::string& s) {
    if (!first) {
      out += ',';
    }
    out += s;
    first = false;
  };
  for (const auto& g : a.prefix()) {
    put(group_.format(g));
  }
  if (a.is_periodic()) {
    std::string cycle = "(";
    for (std::size_t i = 0; i < a.cycle().size(); ++i) {
      if (i > 0) {
        cycle += ',';
      }
      cycle += group_.format(a.cycle()[i]);
    }
    put(cycle + ")*");
  } else {
    put("...");
  }
  return out + "]";
}

std::string Corona::format(const LagValue& x) const {
  return "(" + format(x.corona) + ", " + std::to_string(x.shift) + ")";
}

}  // namespace selfsim
