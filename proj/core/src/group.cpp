#include "selfsim/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

namespace selfsim {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

[[noreturn]] void mismatch(std::string_view what) {
  throw Error(ErrorCode::kBackendMismatch, std::string(what));
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kIntegerOverflow, "integer group overflow");
  }
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) {
    throw Error(ErrorCode::kIntegerOverflow, "integer group overflow");
  }
  return -a;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& letter : out) {
    letter = -letter;
  }
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (auto letter : w) {
      h = mix(h, static_cast<std::size_t>(static_cast<std::uint32_t>(letter)));
    }
    return h;
  }
};

// Bound on distinct restrictions explored when comparing automaton words.
constexpr std::size_t kRestrictionBudget = 1U << 16;

}  // namespace

Word reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (auto letter : w) {
    if (letter == 0) {
      throw Error(ErrorCode::kInvalidArgument, "word letter 0 is not allowed");
    }
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

std::int64_t GroupElement::as_integer() const {
  if (const auto* m = std::get_if<std::int64_t>(&payload_)) {
    return *m;
  }
  mismatch("group element is not an integer");
}

std::uint32_t GroupElement::as_finite() const {
  if (const auto* i = std::get_if<FiniteIndex>(&payload_)) {
    return i->value;
  }
  mismatch("group element is not a Cayley table index");
}

const Word& GroupElement::as_word() const {
  if (const auto* w = std::get_if<Word>(&payload_)) {
    return *w;
  }
  mismatch("group element is not an automaton word");
}

std::size_t GroupElement::hash() const noexcept {
  switch (kind()) {
    case Kind::kInteger:
      return mix(1, static_cast<std::size_t>(std::get<std::int64_t>(payload_)));
    case Kind::kFinite:
      return mix(2, std::get<FiniteIndex>(payload_).value);
    case Kind::kWord:
      return mix(3, WordHash{}(std::get<Word>(payload_)));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// CayleyTable
// ---------------------------------------------------------------------------

CayleyTable::CayleyTable(std::vector<std::string> names,
                         std::vector<std::vector<std::uint32_t>> rows)
    : names_(std::move(names)), rows_(std::move(rows)) {
  const std::size_t n = names_.size();
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kInvalidCayleyTable, why);
  };
  if (n == 0) {
    fail("empty group");
  }
  if (rows_.size() != n) {
    fail("table must have one row per element");
  }
  for (const auto& row : rows_) {
    if (row.size() != n) {
      fail("table must be square");
    }
    for (auto entry : row) {
      if (entry >= n) {
        fail("table entry out of range");
      }
    }
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (!seen.insert(name).second) {
        fail("duplicate element name '" + name + "'");
      }
    }
  }

  std::optional<std::uint32_t> id;
  for (std::uint32_t e = 0; e < n && !id; ++e) {
    bool is_id = true;
    for (std::uint32_t x = 0; x < n && is_id; ++x) {
      is_id = rows_[e][x] == x && rows_[x][e] == x;
    }
    if (is_id) {
      id = e;
    }
  }
  if (!id) {
    fail("no identity element");
  }
  identity_ = *id;

  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (rows_[rows_[a][b]][c] != rows_[a][rows_[b][c]]) {
          fail("not associative at (" + names_[a] + ", " + names_[b] + ", " +
               names_[c] + ")");
        }
      }
    }
  }

  inverses_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto it = std::find_if(rows_[a].begin(), rows_[a].end(),
                           [&](std::uint32_t x) { return x == identity_; });
    if (it == rows_[a].end()) {
      fail("element '" + names_[a] + "' has no inverse");
    }
    const auto b = static_cast<std::uint32_t>(it - rows_[a].begin());
    if (rows_[b][a] != identity_) {
      fail("element '" + names_[a] + "' has no two-sided inverse");
    }
    inverses_[a] = b;
  }
}

std::optional<std::uint32_t> CayleyTable::find(std::string_view name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

struct Group::Automaton {
  AutomatonTable table;
  std::vector<std::vector<std::uint32_t>> inverse_output;  // [state][letter]

  // Image of letter x under w and the restriction φ(w, x) as a reduced word.
  std::pair<std::uint32_t, Word> act(const Word& w, std::uint32_t x) const {
    std::vector<const Word*> pieces(w.size());
    std::vector<Word> inverted;
    inverted.reserve(w.size());
    std::uint32_t cur = x;
    for (std::size_t i = w.size(); i-- > 0;) {
      const std::int32_t letter = w[i];
      const auto s = static_cast<std::size_t>(std::abs(letter) - 1);
      if (letter > 0) {
        pieces[i] = &table.restriction[s][cur];
        cur = table.output[s][cur];
      } else {
        const std::uint32_t pre = inverse_output[s][cur];
        inverted.push_back(inverse_word(table.restriction[s][pre]));
        pieces[i] = &inverted.back();
        cur = pre;
      }
    }
    Word restriction;
    for (const Word* piece : pieces) {
      restriction.insert(restriction.end(), piece->begin(), piece->end());
    }
    return {cur, reduce(std::move(restriction))};
  }
};

Group Group::integers() {
  Group g;
  g.kind_ = Kind::kInteger;
  return g;
}

Group Group::finite(CayleyTable table) {
  Group g;
  g.kind_ = Kind::kFinite;
  g.table_ = std::make_shared<const CayleyTable>(std::move(table));
  return g;
}

Group Group::automaton(AutomatonTable table) {
  const std::size_t k = table.letters.size();
  const std::size_t s = table.states.size();
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "automaton with empty alphabet");
  }
  if (table.output.size() != s || table.restriction.size() != s) {
    throw Error(ErrorCode::kInvalidArgument,
                "automaton tables must have one row per state");
  }
  auto impl = std::make_shared<Automaton>();
  impl->inverse_output.assign(s, std::vector<std::uint32_t>(k, 0));
  for (std::size_t a = 0; a < s; ++a) {
    if (table.output[a].size() != k || table.restriction[a].size() != k) {
      throw Error(ErrorCode::kInvalidArgument,
                  "automaton rows must cover the whole alphabet");
    }
    std::vector<bool> hit(k, false);
    for (std::uint32_t x = 0; x < k; ++x) {
      const std::uint32_t y = table.output[a][x];
      if (y >= k || hit[y]) {
        throw Error(ErrorCode::kNonBijectiveOutput,
                    "output of state '" + table.states[a] +
                        "' is not a bijection of the alphabet");
      }
      hit[y] = true;
      impl->inverse_output[a][y] = x;
    }
    for (auto& w : table.restriction[a]) {
      for (auto letter : w) {
        if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > s) {
          throw Error(ErrorCode::kInvalidArgument,
                      "restriction word refers to an unknown state");
        }
      }
      w = reduce(std::move(w));
    }
  }
  impl->table = std::move(table);
  Group g;
  g.kind_ = Kind::kAutomaton;
  g.automaton_ = std::move(impl);
  return g;
}

GroupElement Group::identity() const {
  switch (kind_) {
    case Kind::kInteger:
      return GroupElement::integer(0);
    case Kind::kFinite:
      return GroupElement::finite(table_->identity());
    case Kind::kAutomaton:
      return GroupElement::word({});
  }
  return GroupElement::integer(0);
}

void Group::check(const GroupElement& a) const {
  switch (kind_) {
    case Kind::kInteger:
      if (a.kind() != GroupElement::Kind::kInteger) {
        mismatch("expected an integer group element");
      }
      return;
    case Kind::kFinite:
      if (a.kind() != GroupElement::Kind::kFinite ||
          a.as_finite() >= table_->size()) {
        mismatch("expected a Cayley table element");
      }
      return;
    case Kind::kAutomaton:
      if (a.kind() != GroupElement::Kind::kWord) {
        mismatch("expected an automaton word");
      }
      for (auto letter : a.as_word()) {
        if (static_cast<std::size_t>(std::abs(letter)) >
            automaton_->table.states.size()) {
          mismatch("word refers to an unknown state");
        }
      }
      return;
  }
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case Kind::kInteger:
      return GroupElement::integer(checked_add(a.as_integer(), b.as_integer()));
    case Kind::kFinite:
      return GroupElement::finite(
          table_->product(a.as_finite(), b.as_finite()));
    case Kind::kAutomaton: {
      Word w = a.as_word();
      const Word& rhs = b.as_word();
      w.insert(w.end(), rhs.begin(), rhs.end());
      return GroupElement::word(std::move(w));
    }
  }
  return a;
}

GroupElement Group::inv(const GroupElement& a) const {
  switch (kind_) {
    case Kind::kInteger:
      return GroupElement::integer(checked_neg(a.as_integer()));
    case Kind::kFinite:
      return GroupElement::finite(table_->inverse(a.as_finite()));
    case Kind::kAutomaton:
      return GroupElement::word(inverse_word(a.as_word()));
  }
  return a;
}

Equality Group::is_identity(const GroupElement& a, std::size_t depth) const {
  return equal(a, identity(), depth);
}

Equality Group::equal(const GroupElement& a, const GroupElement& b,
                      std::size_t depth) const {
  if (kind_ != Kind::kAutomaton) {
    if (a.kind() != b.kind()) {
      mismatch("comparing elements of different backends");
    }
    return from_bool(a == b);
  }
  const Word& wa = a.as_word();
  const Word& wb = b.as_word();
  if (wa == wb) {
    return Equality::kEqual;
  }

  // a = b as actions iff a⁻¹b acts trivially. Explore the restrictions of
  // a⁻¹b level by level; a word already seen at a shallower level has had its
  // subtree checked to a greater depth.
  Word w = inverse_word(wa);
  w.insert(w.end(), wb.begin(), wb.end());
  w = reduce(std::move(w));

  const std::size_t k = automaton_->table.letters.size();
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> frontier{w};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Word> next;
    for (const Word& u : frontier) {
      for (std::uint32_t x = 0; x < k; ++x) {
        auto [y, restriction] = automaton_->act(u, x);
        if (y != x) {
          return Equality::kDistinct;
        }
        if (seen.insert(restriction).second) {
          next.push_back(std::move(restriction));
        }
      }
    }
    if (seen.size() > kRestrictionBudget) {
      return Equality::kUnknown;
    }
    frontier = std::move(next);
  }
  return automaton_->table.faithful ? Equality::kEqual : Equality::kUnknown;
}

std::vector<GroupElement> Group::elements() const {
  if (kind_ != Kind::kFinite) {
    throw Error(ErrorCode::kInvalidArgument, "group is not finite");
  }
  std::vector<GroupElement> out;
  for (std::uint32_t i = 0; i < table_->size(); ++i) {
    out.push_back(GroupElement::finite(i));
  }
  return out;
}

const CayleyTable& Group::table() const {
  if (!table_) {
    mismatch("group has no Cayley table");
  }
  return *table_;
}

const AutomatonTable& Group::automaton() const {
  if (!automaton_) {
    mismatch("group is not an automaton group");
  }
  return automaton_->table;
}

std::pair<std::uint32_t, GroupElement> Group::act_on_letter(
    const GroupElement& w, std::uint32_t x) const {
  if (!automaton_) {
    mismatch("group is not an automaton group");
  }
  if (x >= automaton_->table.letters.size()) {
    throw Error(ErrorCode::kInvalidArgument, "letter out of range");
  }
  auto [y, restriction] = automaton_->act(w.as_word(), x);
  return {y, GroupElement::word(std::move(restriction))};
}

std::string Group::format(const GroupElement& a) const {
  switch (kind_) {
    case Kind::kInteger:
      return std::to_string(a.as_integer());
    case Kind::kFinite:
      return table_->name(a.as_finite());
    case Kind::kAutomaton: {
      const Word& w = a.as_word();
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          out += '.';
        }
        out += automaton_->table.states.at(std::abs(w[i]) - 1);
        if (w[i] < 0) {
          out += '\'';
        }
      }
      return out;
    }
  }
  return {};
}

GroupElement Group::parse(std::string_view text) const {
  auto bad = [&](const std::string& why) -> GroupElement {
    throw Error(ErrorCode::kParse,
                "cannot parse group element '" + std::string(text) + "': " + why);
  };
  switch (kind_) {
    case Kind::kInteger: {
      std::int64_t value = 0;
      const char* first = text.data();
      const char* last = text.data() + text.size();
      if (!text.empty() && text.front() == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || first == last) {
        return bad("expected an integer");
      }
      return GroupElement::integer(value);
    }
    case Kind::kFinite: {
      if (auto i = table_->find(text)) {
        return GroupElement::finite(*i);
      }
      throw Error(ErrorCode::kUnknownLabel,
                  "unknown group element '" + std::string(text) + "'");
    }
    case Kind::kAutomaton: {
      if (text == "1" || text.empty()) {
        return identity();
      }
      Word w;
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        if (dot == std::string_view::npos) {
          dot = text.size();
        }
        std::string_view token = text.substr(start, dot - start);
        bool inverse = false;
        if (!token.empty() && token.back() == '\'') {
          inverse = true;
          token.remove_suffix(1);
        }
        const auto& states = automaton_->table.states;
        auto it = std::find(states.begin(), states.end(), token);
        if (it == states.end()) {
          throw Error(ErrorCode::kUnknownLabel,
                      "unknown automaton state '" + std::string(token) + "'");
        }
        const auto letter = static_cast<std::int32_t>(it - states.begin() + 1);
        w.push_back(inverse ? -letter : letter);
        start = dot + 1;
      }
      return GroupElement::word(std::move(w));
    }
  }
  return bad("unknown backend");
}

// ---------------------------------------------------------------------------
// Windows
// ---------------------------------------------------------------------------

std::vector<GroupElement> integer_window(std::int64_t radius) {
  std::vector<GroupElement> out{GroupElement::integer(0)};
  for (std::int64_t m = 1; m <= radius; ++m) {
    out.push_back(GroupElement::integer(m));
    out.push_back(GroupElement::integer(-m));
  }
  return out;
}

std::vector<GroupElement> word_window(const Group& group,
                                      std::size_t max_length) {
  const auto s = static_cast<std::int32_t>(group.automaton().states.size());
  std::vector<Word> layer{{}};
  std::vector<GroupElement> out{group.identity()};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (std::int32_t letter = -s; letter <= s; ++letter) {
        if (letter == 0 || (!w.empty() && w.back() == -letter)) {
          continue;
        }
        Word extended = w;
        extended.push_back(letter);
        out.push_back(GroupElement::word(extended));
        next.push_back(std::move(extended));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<GroupElement> default_window(const Group& group,
                                         std::int64_t radius) {
  switch (group.kind()) {
    case Group::Kind::kInteger:
      return integer_window(radius);
    case Group::Kind::kFinite:
      return group.elements();
    case Group::Kind::kAutomaton:
      return word_window(group, static_cast<std::size_t>(std::max<std::int64_t>(radius, 0)));
  }
  return {};
}

}  // namespace selfsim
