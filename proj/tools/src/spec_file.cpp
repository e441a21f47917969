#include "spec_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "selfsim/constructors.hpp"
#include "selfsim/text.hpp"

namespace selfsim::cli {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Entry {
  std::string key;
  std::vector<Token> tokens;
  std::string value;
  std::size_t line;
  std::size_t column;  // column of the key
};

struct Section {
  std::size_t line = 0;
  std::vector<Entry> entries;
};

[[noreturn]] void fail(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + what);
}

[[noreturn]] void fail(const Entry& entry, std::size_t token,
                       const std::string& what,
                       ErrorCode code = ErrorCode::kParse) {
  const std::size_t column = token < entry.tokens.size()
                                 ? entry.tokens[token].column
                                 : entry.column;
  fail(code, entry.line, column, what);
}

std::vector<Token> tokenize(std::string_view value, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < value.size()) {
    if (value[i] == ' ' || value[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < value.size() && value[i] != ' ' && value[i] != '\t') {
      ++i;
    }
    out.push_back({std::string(value.substr(start, i - start)), offset + start});
  }
  return out;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> keys{
      {"graph", {"vertices", "edge"}},
      {"group", {"kind", "elements", "row", "generators", "faithful"}},
      {"action", {"edge", "vertex"}},
      {"katsura", {"A", "B"}},
      {"automaton", {"alphabet", "states", "transition", "faithful"}},
      {"override", {"edge"}},
  };
  return keys;
}

std::map<std::string, Section, std::less<>> read_sections(std::string_view text) {
  std::map<std::string, Section, std::less<>> sections;
  Section* current = nullptr;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    const std::string_view content = trim(line);
    if (content.empty()) {
      if (end == text.size()) {
        break;
      }
      continue;
    }
    const std::size_t indent =
        static_cast<std::size_t>(content.data() - line.data());
    if (content.front() == '[') {
      if (content.back() != ']') {
        fail(ErrorCode::kParse, line_no, indent + 1,
             "section header must end with ']'");
      }
      const std::string name(trim(content.substr(1, content.size() - 2)));
      if (!known_keys().contains(name)) {
        fail(ErrorCode::kParse, line_no, indent + 2,
             "unknown section [" + name + "]");
      }
      if (sections.contains(name)) {
        fail(ErrorCode::kParse, line_no, indent + 1,
             "duplicate section [" + name + "]");
      }
      current = &sections[name];
      current->line = line_no;
      continue;
    }
    const std::size_t eq = content.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::kParse, line_no, indent + 1, "expected 'key = value'");
    }
    if (current == nullptr) {
      fail(ErrorCode::kParse, line_no, indent + 1,
           "entry outside of any section");
    }
    const std::string key(trim(content.substr(0, eq)));
    const std::string_view raw = content.substr(eq + 1);
    const std::string_view value = trim(raw);
    const std::size_t value_column =
        indent + eq + 1 + static_cast<std::size_t>(value.data() - raw.data()) + 1;
    const auto section_name = std::find_if(
        sections.begin(), sections.end(),
        [&](const auto& kv) { return &kv.second == current; })->first;
    const auto& allowed = known_keys().find(section_name)->second;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(ErrorCode::kParse, line_no, indent + 1,
           "unknown key '" + key + "' in [" + section_name + "]");
    }
    current->entries.push_back({key, tokenize(value, value_column),
                                std::string(value), line_no, indent + 1});
    if (end == text.size()) {
      break;
    }
  }
  return sections;
}

std::vector<const Entry*> entries(const Section& section, std::string_view key) {
  std::vector<const Entry*> out;
  for (const auto& e : section.entries) {
    if (e.key == key) {
      out.push_back(&e);
    }
  }
  return out;
}

const Entry* single(const Section& section, std::string_view key,
                    std::string_view section_name, bool required) {
  auto found = entries(section, key);
  if (found.size() > 1) {
    fail(*found[1], 0, "duplicate key '" + std::string(key) + "'");
  }
  if (found.empty()) {
    if (required) {
      fail(ErrorCode::kParse, section.line, 1,
           "[" + std::string(section_name) + "] needs '" + std::string(key) +
               "'");
    }
    return nullptr;
  }
  return found.front();
}

std::int64_t parse_int(const Entry& entry, std::size_t token) {
  const std::string& s = entry.tokens[token].text;
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    fail(entry, token, "expected an integer, got '" + s + "'");
  }
  return value;
}

bool parse_bool(const Entry& entry) {
  if (entry.tokens.size() == 1 && entry.tokens[0].text == "true") {
    return true;
  }
  if (entry.tokens.size() == 1 && entry.tokens[0].text == "false") {
    return false;
  }
  fail(entry, 0, "expected true or false");
}

Matrix parse_matrix(const Entry& entry) {
  Matrix out;
  std::vector<std::int64_t> row;
  for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
    std::string text = entry.tokens[i].text;
    // Rows are separated by ';', which may be glued to a number.
    bool ends_row = false;
    if (!text.empty() && text.back() == ';') {
      ends_row = true;
      text.pop_back();
    }
    if (!text.empty()) {
      Entry piece = entry;
      piece.tokens = {{text, entry.tokens[i].column}};
      row.push_back(parse_int(piece, 0));
    }
    if (ends_row) {
      out.push_back(std::move(row));
      row.clear();
    }
  }
  if (!row.empty()) {
    out.push_back(std::move(row));
  }
  return out;
}

// "1" for the empty word; otherwise dot-separated states with ' for inverses.
Word parse_word(const Entry& entry, std::size_t token,
                const std::vector<std::string>& states) {
  const std::string& s = entry.tokens[token].text;
  if (s == "1") {
    return {};
  }
  Word out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t dot = s.find('.', start);
    if (dot == std::string::npos) {
      dot = s.size();
    }
    std::string name = s.substr(start, dot - start);
    bool inverse = false;
    if (!name.empty() && name.back() == '\'') {
      inverse = true;
      name.pop_back();
    }
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) {
      fail(entry, token, "unknown state '" + name + "'", ErrorCode::kUnknownLabel);
    }
    const auto letter = static_cast<std::int32_t>(it - states.begin() + 1);
    out.push_back(inverse ? -letter : letter);
    start = dot + 1;
  }
  return out;
}

std::uint32_t lookup(const Entry& entry, std::size_t token,
                     const std::vector<std::string>& names,
                     const std::string& what) {
  const std::string& s = entry.tokens[token].text;
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end()) {
    fail(entry, token, "unknown " + what + " '" + s + "'",
         ErrorCode::kUnknownLabel);
  }
  return static_cast<std::uint32_t>(it - names.begin());
}

std::vector<std::string> names_of(const Entry& entry, const std::string& what) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
    const auto& t = entry.tokens[i];
    if (std::find(out.begin(), out.end(), t.text) != out.end()) {
      fail(entry, i, "duplicate " + what + " '" + t.text + "'");
    }
    out.push_back(t.text);
  }
  if (out.empty()) {
    fail(entry, 0, "expected at least one " + what);
  }
  return out;
}

// Checks the "x y -> z [w]" shape and returns the number of trailing tokens.
void expect_arrow(const Entry& entry, std::size_t count,
                  const std::string& shape) {
  if (entry.tokens.size() != count || entry.tokens[2].text != "->") {
    fail(entry, std::min(entry.tokens.size(), count - 1),
         "expected '" + shape + "'");
  }
}

template <typename F>
auto at_section(const Section& section, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.rfind("line ", 0) == 0) {
      throw;
    }
    fail(e.code(), section.line, 1, what);
  }
}

SelfSimilarTriple build_katsura(const Section& section) {
  KatsuraData data{parse_matrix(*single(section, "A", "katsura", true)),
                   parse_matrix(*single(section, "B", "katsura", true))};
  return at_section(section, [&] { return from_katsura(data); });
}

SelfSimilarTriple build_automaton(const Section& section) {
  AutomatonTable table;
  table.letters = names_of(*single(section, "alphabet", "automaton", true), "letter");
  table.states = names_of(*single(section, "states", "automaton", true), "state");
  if (const Entry* f = single(section, "faithful", "automaton", false)) {
    table.faithful = parse_bool(*f);
  }
  const std::size_t s = table.states.size();
  const std::size_t k = table.letters.size();
  std::vector<std::vector<std::optional<std::uint32_t>>> output(
      s, std::vector<std::optional<std::uint32_t>>(k));
  table.restriction.assign(s, std::vector<Word>(k));
  for (const Entry* e : entries(section, "transition")) {
    expect_arrow(*e, 5, "state letter -> letter word");
    const auto state = lookup(*e, 0, table.states, "state");
    const auto letter = lookup(*e, 1, table.letters, "letter");
    if (output[state][letter]) {
      fail(*e, 0, "duplicate transition");
    }
    output[state][letter] = lookup(*e, 3, table.letters, "letter");
    table.restriction[state][letter] = parse_word(*e, 4, table.states);
  }
  table.output.assign(s, std::vector<std::uint32_t>(k));
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t x = 0; x < k; ++x) {
      if (!output[a][x]) {
        fail(ErrorCode::kParse, section.line, 1,
             "missing transition for (" + table.states[a] + ", " +
                 table.letters[x] + ")");
      }
      table.output[a][x] = *output[a][x];
    }
  }
  return at_section(section, [&] { return from_automaton(std::move(table)); });
}

Graph build_graph(const Section& section) {
  const auto vertices = names_of(*single(section, "vertices", "graph", true), "vertex");
  std::vector<EdgeSpec> edges;
  std::vector<std::string> labels;
  for (const Entry* e : entries(section, "edge")) {
    if (e->tokens.size() != 3) {
      fail(*e, e->tokens.size(), "edge needs a label, a range and a source");
    }
    if (std::find(labels.begin(), labels.end(), e->tokens[0].text) != labels.end()) {
      fail(*e, 0, "duplicate edge '" + e->tokens[0].text + "'");
    }
    labels.push_back(e->tokens[0].text);
    edges.push_back({e->tokens[0].text, VertexId{lookup(*e, 1, vertices, "vertex")},
                     VertexId{lookup(*e, 2, vertices, "vertex")}});
  }
  return Graph(vertices, std::move(edges));
}

SelfSimilarTriple build_explicit(
    const std::map<std::string, Section, std::less<>>& sections) {
  const Section& graph_section = sections.find("graph")->second;
  Graph graph = build_graph(graph_section);
  std::vector<std::string> edge_labels;
  std::vector<std::string> vertex_labels;
  for (EdgeId e : graph.edges()) {
    edge_labels.push_back(graph.label(e));
  }
  for (VertexId v : graph.vertices()) {
    vertex_labels.push_back(graph.label(v));
  }

  auto group_it = sections.find("group");
  if (group_it == sections.end()) {
    fail(ErrorCode::kParse, graph_section.line, 1,
         "[graph] needs a [group] section");
  }
  const Section& group_section = group_it->second;
  const Entry& kind_entry = *single(group_section, "kind", "group", true);
  if (kind_entry.tokens.size() != 1) {
    fail(kind_entry, 0, "expected integer, cayley or automaton");
  }
  const std::string kind = kind_entry.tokens[0].text;

  auto action_it = sections.find("action");
  const Section* action = action_it == sections.end() ? nullptr : &action_it->second;

  if (kind == "integer") {
    Group group = Group::integers();
    if (action == nullptr) {
      return trivial_triple(std::move(graph), std::move(group));
    }
    std::vector<IntegerGeneratorModel::EdgeRow> rows;
    for (const Entry* e : entries(*action, "edge")) {
      expect_arrow(*e, 5, "1 edge -> edge cocycle");
      if (parse_int(*e, 0) != 1) {
        fail(*e, 0, "integer actions are given on the generator 1");
      }
      rows.push_back({EdgeId{lookup(*e, 1, edge_labels, "edge")},
                      EdgeId{lookup(*e, 3, edge_labels, "edge")},
                      parse_int(*e, 4)});
    }
    std::vector<std::pair<VertexId, VertexId>> vertex_rows;
    for (const Entry* e : entries(*action, "vertex")) {
      expect_arrow(*e, 4, "1 vertex -> vertex");
      if (parse_int(*e, 0) != 1) {
        fail(*e, 0, "integer actions are given on the generator 1");
      }
      vertex_rows.emplace_back(VertexId{lookup(*e, 1, vertex_labels, "vertex")},
                               VertexId{lookup(*e, 3, vertex_labels, "vertex")});
    }
    auto model = at_section(*action, [&] {
      return std::make_shared<IntegerGeneratorModel>(graph, rows, vertex_rows);
    });
    return SelfSimilarTriple(std::move(graph), std::move(group), std::move(model));
  }

  if (kind == "cayley") {
    const auto names =
        names_of(*single(group_section, "elements", "group", true), "element");
    std::vector<std::vector<std::uint32_t>> table;
    for (const Entry* e : entries(group_section, "row")) {
      std::vector<std::uint32_t> row;
      for (std::size_t i = 0; i < e->tokens.size(); ++i) {
        row.push_back(lookup(*e, i, names, "element"));
      }
      table.push_back(std::move(row));
    }
    Group group = at_section(group_section, [&] {
      return Group::finite(CayleyTable(names, table));
    });
    if (action == nullptr) {
      return trivial_triple(std::move(graph), std::move(group));
    }
    std::vector<FiniteTableModel::EdgeRow> rows;
    for (const Entry* e : entries(*action, "edge")) {
      expect_arrow(*e, 5, "element edge -> edge element");
      rows.push_back({lookup(*e, 0, names, "element"),
                      EdgeId{lookup(*e, 1, edge_labels, "edge")},
                      EdgeId{lookup(*e, 3, edge_labels, "edge")},
                      lookup(*e, 4, names, "element")});
    }
    std::vector<FiniteTableModel::VertexRow> vertex_rows;
    for (const Entry* e : entries(*action, "vertex")) {
      expect_arrow(*e, 4, "element vertex -> vertex");
      vertex_rows.push_back({lookup(*e, 0, names, "element"),
                             VertexId{lookup(*e, 1, vertex_labels, "vertex")},
                             VertexId{lookup(*e, 3, vertex_labels, "vertex")}});
    }
    auto model = at_section(*action, [&] {
      return std::make_shared<FiniteTableModel>(graph, group, rows, vertex_rows);
    });
    return SelfSimilarTriple(std::move(graph), std::move(group), std::move(model));
  }

  if (kind == "automaton") {
    AutomatonTable table;
    table.letters = edge_labels;
    table.states = names_of(
        *single(group_section, "generators", "group", true), "generator");
    if (const Entry* f = single(group_section, "faithful", "group", false)) {
      table.faithful = parse_bool(*f);
    }
    const std::size_t s = table.states.size();
    const std::size_t k = edge_labels.size();
    std::vector<std::vector<std::optional<std::uint32_t>>> output(
        s, std::vector<std::optional<std::uint32_t>>(k));
    table.restriction.assign(s, std::vector<Word>(k));
    if (action == nullptr) {
      fail(ErrorCode::kParse, group_section.line, 1,
           "automaton groups need an [action] section");
    }
    for (const Entry* e : entries(*action, "edge")) {
      expect_arrow(*e, 5, "generator edge -> edge word");
      const auto a = lookup(*e, 0, table.states, "generator");
      const auto x = lookup(*e, 1, edge_labels, "edge");
      if (output[a][x]) {
        fail(*e, 0, "duplicate action row");
      }
      output[a][x] = lookup(*e, 3, edge_labels, "edge");
      table.restriction[a][x] = parse_word(*e, 4, table.states);
    }
    if (auto vertex_rows = entries(*action, "vertex"); !vertex_rows.empty()) {
      fail(*vertex_rows.front(), 0,
           "automaton groups move vertices along with their incoming edges");
    }
    table.output.assign(s, std::vector<std::uint32_t>(k));
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t x = 0; x < k; ++x) {
        if (!output[a][x]) {
          fail(ErrorCode::kParse, action->line, 1,
               "missing action row for (" + table.states[a] + ", " +
                   edge_labels[x] + ")");
        }
        table.output[a][x] = *output[a][x];
      }
    }
    Group group = at_section(group_section,
                             [&] { return Group::automaton(std::move(table)); });
    auto model = std::make_shared<AutomatonModel>(graph, group);
    return SelfSimilarTriple(std::move(graph), std::move(group), std::move(model));
  }

  fail(kind_entry, 0, "unknown group kind '" + kind + "'");
}

SelfSimilarTriple apply_overrides(SelfSimilarTriple t, const Section& section) {
  const Graph& graph = t.graph();
  std::vector<OverrideModel::Entry> overrides;
  for (const Entry* e : entries(section, "edge")) {
    expect_arrow(*e, 5, "element edge -> edge element");
    auto parse_element_at = [&](std::size_t token) {
      try {
        return t.group().parse(e->tokens[token].text);
      } catch (const Error& err) {
        fail(*e, token, err.what(), err.code());
      }
    };
    auto edge_at = [&](std::size_t token) {
      auto found = graph.find_edge(e->tokens[token].text);
      if (!found) {
        fail(*e, token, "unknown edge '" + e->tokens[token].text + "'",
             ErrorCode::kUnknownLabel);
      }
      return *found;
    };
    overrides.push_back({parse_element_at(0), edge_at(1),
                         EdgeImage{edge_at(3), parse_element_at(4)}});
  }
  auto model = std::make_shared<OverrideModel>(t.model(), std::move(overrides));
  return SelfSimilarTriple(graph, t.group(), std::move(model), t.group_depth());
}

}  // namespace

SelfSimilarTriple load_spec(std::string_view text) {
  const auto sections = read_sections(text);
  const bool has_graph = sections.contains("graph");
  const bool has_katsura = sections.contains("katsura");
  const bool has_automaton = sections.contains("automaton");
  const int sources = int{has_graph} + int{has_katsura} + int{has_automaton};
  if (sources == 0) {
    fail(ErrorCode::kParse, 1, 1,
         "expected one of [graph], [katsura] or [automaton]");
  }
  if (sources > 1) {
    const std::size_t line = std::max({
        has_graph ? sections.find("graph")->second.line : 0,
        has_katsura ? sections.find("katsura")->second.line : 0,
        has_automaton ? sections.find("automaton")->second.line : 0});
    fail(ErrorCode::kParse, line, 1,
         "[graph], [katsura] and [automaton] are mutually exclusive");
  }
  if (!has_graph) {
    for (const char* name : {"group", "action"}) {
      if (auto it = sections.find(name); it != sections.end()) {
        fail(ErrorCode::kParse, it->second.line, 1,
             "[" + std::string(name) + "] only goes with [graph]");
      }
    }
  }

  SelfSimilarTriple t = has_katsura     ? build_katsura(sections.find("katsura")->second)
                        : has_automaton ? build_automaton(sections.find("automaton")->second)
                                        : build_explicit(sections);
  if (auto it = sections.find("override"); it != sections.end()) {
    t = apply_overrides(std::move(t), it->second);
  }
  return t;
}

SelfSimilarTriple load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParse, "cannot read spec file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_spec(buffer.str());
}

}  // namespace selfsim::cli
