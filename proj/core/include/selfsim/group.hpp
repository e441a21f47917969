#ifndef SELFSIM_GROUP_HPP_
#define SELFSIM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "selfsim/error.hpp"

namespace selfsim {

inline constexpr std::size_t kDefaultGroupDepth = 32;

// A freely reduced word over generators and their inverses: letter +k is
// generator k-1, letter -k its inverse.
using Word = std::vector<std::int32_t>;

Word reduce(Word w);

struct FiniteIndex {
  std::uint32_t value;
  bool operator==(const FiniteIndex&) const = default;
};

// Backend-tagged payload. operator== is structural (same payload); use
// Group::equal for equality in the group.
class GroupElement {
 public:
  enum class Kind { kInteger, kFinite, kWord };

  static GroupElement integer(std::int64_t m) { return GroupElement(m); }
  static GroupElement finite(std::uint32_t i) {
    return GroupElement(FiniteIndex{i});
  }
  // The word is reduced on the way in.
  static GroupElement word(Word w) { return GroupElement(reduce(std::move(w))); }

  Kind kind() const noexcept { return static_cast<Kind>(payload_.index()); }

  std::int64_t as_integer() const;
  std::uint32_t as_finite() const;
  const Word& as_word() const;

  bool operator==(const GroupElement&) const = default;
  std::size_t hash() const noexcept;

 private:
  using Payload = std::variant<std::int64_t, FiniteIndex, Word>;
  explicit GroupElement(Payload p) : payload_(std::move(p)) {}

  Payload payload_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    return g.hash();
  }
};

// Multiplication table of a finite group, validated on construction
// (closure, identity, inverses, and associativity by exhaustive check).
class CayleyTable {
 public:
  // rows[a][b] is the index of a·b. Throws kInvalidCayleyTable.
  CayleyTable(std::vector<std::string> names,
              std::vector<std::vector<std::uint32_t>> rows);

  std::size_t size() const noexcept { return names_.size(); }
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const {
    return rows_[a][b];
  }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t inverse(std::uint32_t a) const { return inverses_[a]; }
  const std::string& name(std::uint32_t a) const { return names_.at(a); }
  std::optional<std::uint32_t> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverses_;
};

// A Mealy automaton over the alphabet X, read as a self-similar action of the
// free group on the states: a(xw) = output[a][x] · restriction[a][x](w).
struct AutomatonTable {
  std::vector<std::string> letters;
  std::vector<std::string> states;
  std::vector<std::vector<std::uint32_t>> output;  // [state][letter]
  std::vector<std::vector<Word>> restriction;      // [state][letter]
  // When set, words inducing the same action are treated as equal group
  // elements. Otherwise such words compare as kUnknown.
  bool faithful = false;
};

class Group {
 public:
  enum class Kind { kInteger, kFinite, kAutomaton };

  static Group integers();
  static Group finite(CayleyTable table);
  // Throws kNonBijectiveOutput if some state's output map is not a bijection,
  // kInvalidArgument for malformed tables.
  static Group automaton(AutomatonTable table);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::kFinite; }

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;

  // Exact for integers and Cayley tables. For automaton words: kEqual for
  // identical reduced words; kDistinct when the induced actions differ on some
  // path of length ≤ depth; otherwise kEqual only for faithful tables and
  // kUnknown if not.
  Equality equal(const GroupElement& a, const GroupElement& b,
                 std::size_t depth = kDefaultGroupDepth) const;
  Equality is_identity(const GroupElement& a,
                       std::size_t depth = kDefaultGroupDepth) const;

  // Throws kBackendMismatch if the payload does not belong to this backend.
  void check(const GroupElement& a) const;

  // All elements of a finite group, in index order.
  std::vector<GroupElement> elements() const;

  const CayleyTable& table() const;
  const AutomatonTable& automaton() const;

  // Action of an automaton word on a single letter: the image letter and the
  // restriction φ(w, x), obtained from the generators through the cocycle
  // identity.
  std::pair<std::uint32_t, GroupElement> act_on_letter(const GroupElement& w,
                                                       std::uint32_t x) const;

  std::string format(const GroupElement& a) const;
  // Integers in decimal; Cayley elements by name; automaton words as
  // dot-separated state names with ' for inverses, "1" for the empty word.
  GroupElement parse(std::string_view text) const;

 private:
  struct Automaton;

  Kind kind_ = Kind::kInteger;
  std::shared_ptr<const CayleyTable> table_;
  std::shared_ptr<const Automaton> automaton_;
};

// {-radius, ..., radius} in the integer group, ordered 0, 1, -1, 2, -2, ...
std::vector<GroupElement> integer_window(std::int64_t radius);
// All reduced words of length ≤ max_length over the automaton states.
std::vector<GroupElement> word_window(const Group& group,
                                      std::size_t max_length);
// The default verification window: all elements of a finite group, integers of
// absolute value ≤ radius, or reduced words of length ≤ radius.
std::vector<GroupElement> default_window(const Group& group,
                                         std::int64_t radius);

}  // namespace selfsim

#endif  // SELFSIM_GROUP_HPP_
