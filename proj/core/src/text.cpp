#include "selfsim/text.hpp"

namespace selfsim {

namespace {

[[noreturn]] void parse_error(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::kParse,
              std::string(what) + " in '" + std::string(text) + "'");
}

bool wrapped(std::string_view s, char open, char close) {
  return s.size() >= 2 && s.front() == open && s.back() == close;
}

std::string join_edges(const Graph& graph, std::span<const EdgeId> edges) {
  std::string out;
  for (EdgeId e : edges) {
    if (!out.empty()) {
      out += '.';
    }
    out += graph.label(e);
  }
  return out;
}

}  // namespace

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      --depth;
    } else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string format_path(const Graph& graph, const Path& p) {
  if (p.is_vertex()) {
    return "@" + graph.label(p.range());
  }
  return join_edges(graph, p.edges());
}

Path parse_path(const Graph& graph, std::string_view text) {
  text = trim(text);
  if (text.empty()) {
    parse_error("empty path", text);
  }
  if (text.front() == '@') {
    const auto label = text.substr(1);
    if (auto v = graph.find_vertex(label)) {
      return Path::vertex(*v);
    }
    throw Error(ErrorCode::kUnknownLabel,
                "unknown vertex '" + std::string(label) + "'");
  }
  std::vector<EdgeId> edges;
  for (auto piece : split_top_level(text, '.')) {
    if (piece.empty()) {
      parse_error("empty edge label", text);
    }
    auto e = graph.find_edge(piece);
    if (!e) {
      throw Error(ErrorCode::kUnknownLabel,
                  "unknown edge '" + std::string(piece) + "'");
    }
    edges.push_back(*e);
  }
  return Path::from_edges(graph, std::move(edges));
}

std::string format_inf_path(const Graph& graph, const InfPath& xi) {
  const Path& prefix = xi.prefix();
  if (!xi.is_periodic()) {
    return format_path(graph, prefix) + "...";
  }
  std::string out = join_edges(graph, prefix.edges());
  return out + "(" + join_edges(graph, xi.cycle().edges()) + ")*";
}

InfPath parse_inf_path(const Graph& graph, std::string_view text) {
  text = trim(text);
  constexpr std::string_view kEllipsis = "...";
  if (text.size() > kEllipsis.size() && text.ends_with(kEllipsis)) {
    return InfPath::stream(
        parse_path(graph, text.substr(0, text.size() - kEllipsis.size())));
  }
  if (!text.ends_with(")*")) {
    parse_error("expected a cycle '(...)*' or a stream ending in '...'", text);
  }
  const std::size_t close = text.size() - 2;
  std::size_t open = std::string_view::npos;
  int depth = 0;
  for (std::size_t i = close + 1; i-- > 0;) {
    if (text[i] == ')') {
      ++depth;
    } else if (text[i] == '(') {
      if (--depth == 0) {
        open = i;
        break;
      }
    }
  }
  if (open == std::string_view::npos) {
    parse_error("unbalanced parentheses", text);
  }
  Path cycle = parse_path(graph, text.substr(open + 1, close - open - 1));
  std::string_view head = trim(text.substr(0, open));
  if (head.ends_with('.')) {
    head.remove_suffix(1);
  }
  Path prefix = head.empty() ? Path::vertex(cycle.range())
                             : parse_path(graph, head);
  return InfPath::periodic(graph, std::move(prefix), std::move(cycle));
}

std::string format_element(const SelfSimilarTriple& t,
                           const SemigroupElement& s) {
  if (s.is_zero()) {
    return "0";
  }
  const Graph& graph = t.graph();
  return "(" + format_path(graph, s.alpha()) + ", " +
         t.group().format(s.g()) + ", " + format_path(graph, s.beta()) + ")";
}

SemigroupElement parse_element(const SelfSimilarTriple& t,
                               std::string_view text) {
  text = trim(text);
  if (text == "0") {
    return SemigroupElement::zero();
  }
  if (!wrapped(text, '(', ')')) {
    parse_error("expected (α, g, β) or 0", text);
  }
  auto parts = split_top_level(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 3) {
    parse_error("expected three components", text);
  }
  return make_triple(t, parse_path(t.graph(), parts[0]),
                     t.group().parse(parts[1]), parse_path(t.graph(), parts[2]));
}

std::string format_germ(const Groupoid& groupoid, const Germ& u) {
  const auto& t = groupoid.triple();
  const Graph& graph = t.graph();
  return "[" + format_path(graph, u.alpha) + ", " + t.group().format(u.g) +
         ", " + format_path(graph, u.beta) + "; " +
         format_inf_path(graph, groupoid.source(u)) + "]";
}

Germ parse_germ(const Groupoid& groupoid, std::string_view text) {
  text = trim(text);
  if (!wrapped(text, '[', ']')) {
    parse_error("expected [α, g, β; η]", text);
  }
  auto halves = split_top_level(text.substr(1, text.size() - 2), ';');
  if (halves.size() != 2) {
    parse_error("expected one ';'", text);
  }
  auto parts = split_top_level(halves[0], ',');
  if (parts.size() != 3) {
    parse_error("expected three components before ';'", text);
  }
  const auto& t = groupoid.triple();
  const Graph& graph = t.graph();
  Path beta = parse_path(graph, parts[2]);
  InfPath point = parse_inf_path(graph, halves[1]);
  if (in_cylinder(point, beta) != Equality::kEqual) {
    throw Error(ErrorCode::kInvalidArgument,
                "the point of " + std::string(text) + " does not start with β");
  }
  InfPath xi = point.drop(graph, beta.length());
  return groupoid.make_germ(parse_path(graph, parts[0]), t.group().parse(parts[1]),
                            std::move(beta), std::move(xi));
}

GroupSequence parse_sequence(const Group& group, std::string_view text) {
  text = trim(text);
  if (!wrapped(text, '[', ']')) {
    parse_error("expected [g1,g2,(c1,c2)*]", text);
  }
  auto parts = split_top_level(text.substr(1, text.size() - 2), ',');
  std::vector<GroupElement> prefix;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    prefix.push_back(group.parse(parts[i]));
  }
  const std::string_view last = parts.back();
  if (last == "...") {
    return GroupSequence::stream(std::move(prefix));
  }
  if (last.size() < 3 || last.front() != '(' || !last.ends_with(")*")) {
    parse_error("the last entry must be a cycle '(...)*' or '...'", text);
  }
  std::vector<GroupElement> cycle;
  for (auto piece : split_top_level(last.substr(1, last.size() - 3), ',')) {
    cycle.push_back(group.parse(piece));
  }
  return GroupSequence::periodic(std::move(prefix), std::move(cycle));
}

std::string format_f_image(const SelfSimilarTriple& t, const FImage& x) {
  const Graph& graph = t.graph();
  return "(" + format_inf_path(graph, x.range) + "; " +
         t.corona().format(x.lag) + "; " + format_inf_path(graph, x.source) +
         ")";
}

}  // namespace selfsim
