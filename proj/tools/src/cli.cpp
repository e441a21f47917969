#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "selfsim/constructors.hpp"
#include "selfsim/groupoid.hpp"
#include "selfsim/semigroup.hpp"
#include "selfsim/text.hpp"
#include "spec_file.hpp"

namespace selfsim::cli {

namespace {

struct Options {
  std::size_t depth = kDefaultDepth;
  std::int64_t window = 4;
  std::size_t bound = 3;
  bool allow_non_residually_free = false;
};

struct Context {
  const SelfSimilarTriple& t;
  const std::vector<std::string>& args;
  const Options& options;
  std::ostream& out;
};

int exit_code(Equality e) {
  switch (e) {
    case Equality::kEqual:
      return kExitOk;
    case Equality::kDistinct:
      return kExitFalse;
    case Equality::kUnknown:
      break;
  }
  return kExitUnknown;
}

void expect_args(const Context& c, std::size_t n, std::string_view usage) {
  if (c.args.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::string(usage));
  }
}

std::vector<GroupElement> window(const Context& c) {
  return default_window(c.t.group(), c.options.window);
}

std::string window_note(const Context& c, std::size_t size) {
  return "window radius " + std::to_string(c.options.window) + ", " +
         std::to_string(size) + " elements";
}

std::string format_residual(const SelfSimilarTriple& t,
                            const ResidualCounterExample& x) {
  const bool integer = t.group().kind() == Group::Kind::kInteger;
  std::string out = integer ? "m=" : "g=";
  out += t.group().format(x.g) + ", e=" + t.graph().label(x.edge);
  if (x.outside_window) {
    out += ", outside window";
  }
  return out;
}

Groupoid groupoid(const Context& c) {
  GroupoidOptions options;
  options.window = window(c);
  options.allow_non_residually_free = c.options.allow_non_residually_free;
  options.depth = c.options.depth;
  return Groupoid(c.t, std::move(options));
}

std::string violation_line(const SelfSimilarTriple& t, const AxiomViolation& v) {
  std::string line = "  " + std::string(to_string(v.law));
  if (v.g) {
    line += " g=" + t.group().format(*v.g);
  }
  if (v.h) {
    line += " h=" + t.group().format(*v.h);
  }
  if (v.vertex) {
    line += " v=" + t.graph().label(*v.vertex);
  }
  if (v.edge) {
    line += " e=" + t.graph().label(*v.edge);
  }
  return line;
}

int cmd_validate(const Context& c) {
  expect_args(c, 0, "no arguments");
  const Graph& graph = c.t.graph();
  const GraphReport graph_report = validate_graph(graph);
  if (graph_report.ok()) {
    c.out << "graph: ok\n";
  } else {
    for (const auto& v : graph_report.violations) {
      switch (v.kind) {
        case GraphViolation::Kind::kNoIncomingEdge:
          c.out << "graph: vertex " << graph.label(VertexId{v.id})
                << " receives no edge\n";
          break;
        case GraphViolation::Kind::kDanglingRange:
          c.out << "graph: edge " << graph.label(EdgeId{v.id})
                << " has no valid range\n";
          break;
        case GraphViolation::Kind::kDanglingSource:
          c.out << "graph: edge " << graph.label(EdgeId{v.id})
                << " has no valid source\n";
          break;
      }
    }
    c.out << "axioms: skipped\n";
    return kExitFalse;
  }
  const auto w = window(c);
  const AxiomReport report = verify_axioms(c.t, w);
  const std::string note = "(" + window_note(c, w.size()) + ", " +
                           std::to_string(report.checks) + " checks)";
  if (!report.ok()) {
    c.out << "axioms: " << report.violations.size() << " violations " << note
          << "\n";
    for (const auto& v : report.violations) {
      c.out << violation_line(c.t, v) << "\n";
    }
    return kExitFalse;
  }
  if (!report.undecided.empty()) {
    c.out << "axioms: undecided on " << report.undecided.size()
          << " instances " << note << "\n";
    for (const auto& v : report.undecided) {
      c.out << violation_line(c.t, v) << "\n";
    }
    return kExitUnknown;
  }
  c.out << "axioms: ok " << note << "\n";
  return kExitOk;
}

int cmd_act(const Context& c) {
  expect_args(c, 2, "g α");
  const auto g = c.t.group().parse(c.args[0]);
  const auto alpha = parse_path(c.t.graph(), c.args[1]);
  const auto [image, cocycle] = c.t.act_and_cocycle(g, alpha);
  c.out << format_path(c.t.graph(), image) << " ; cocycle "
        << c.t.group().format(cocycle) << "\n";
  return kExitOk;
}

int cmd_phi(const Context& c) {
  expect_args(c, 2, "g α");
  const auto g = c.t.group().parse(c.args[0]);
  const auto alpha = parse_path(c.t.graph(), c.args[1]);
  c.out << c.t.group().format(c.t.cocycle(g, alpha)) << "\n";
  return kExitOk;
}

int cmd_smul(const Context& c) {
  expect_args(c, 2, "s t");
  const auto s = parse_element(c.t, c.args[0]);
  const auto u = parse_element(c.t, c.args[1]);
  c.out << format_element(c.t, mul(c.t, s, u)) << "\n";
  return kExitOk;
}

int cmd_cover(const Context& c) {
  if (c.args.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "expected β α1 α2 ...");
  }
  std::vector<SemigroupElement> members;
  for (std::size_t i = 1; i < c.args.size(); ++i) {
    members.push_back(idempotent(c.t, parse_path(c.t.graph(), c.args[i])));
  }
  const bool covered =
      c.args[0] == "*"
          ? is_global_cover(c.t, members)
          : is_cover(c.t, members,
                     idempotent(c.t, parse_path(c.t.graph(), c.args[0])));
  c.out << "cover: " << (covered ? "true" : "false") << "\n";
  return covered ? kExitOk : kExitFalse;
}

int cmd_residual_free(const Context& c) {
  expect_args(c, 0, "no arguments");
  const auto w = window(c);
  const auto report = check_residually_free(c.t, w, c.options.bound);
  c.out << "residual-free: " << to_string(report.verdict);
  if (report.counterexample) {
    c.out << " (" << format_residual(c.t, *report.counterexample) << ")\n";
  } else {
    c.out << " (" << window_note(c, w.size()) << ")\n";
  }
  for (const auto& f : report.consistency_failures) {
    c.out << "  inconsistent: " << f << "\n";
  }
  if (!report.consistency_failures.empty()) {
    return kExitUnknown;
  }
  switch (report.verdict) {
    case ResidualFreeReport::Verdict::kHolds:
      return kExitOk;
    case ResidualFreeReport::Verdict::kCounterExample:
      return kExitFalse;
    case ResidualFreeReport::Verdict::kUnknownBeyondWindow:
      break;
  }
  return kExitUnknown;
}

int cmd_e_star_unitary(const Context& c) {
  expect_args(c, 0, "no arguments");
  const auto w = window(c);
  const auto report = check_e_star_unitary(c.t, w, c.options.bound);
  c.out << "e-star-unitary: " << to_string(report.verdict);
  if (report.counterexample) {
    c.out << " s=" << format_element(c.t, report.counterexample->first)
          << " e=" << format_element(c.t, report.counterexample->second)
          << "\n";
  } else {
    c.out << " (" << window_note(c, w.size()) << ", bound "
          << c.options.bound << ")\n";
  }
  switch (report.verdict) {
    case EStarUnitaryReport::Verdict::kHolds:
      return kExitOk;
    case EStarUnitaryReport::Verdict::kCounterExample:
      return kExitFalse;
    case EStarUnitaryReport::Verdict::kUnknown:
      break;
  }
  return kExitUnknown;
}

int cmd_germ_eq(const Context& c) {
  expect_args(c, 2, "u v");
  const Groupoid G = groupoid(c);
  const auto verdict =
      G.germ_eq(parse_germ(G, c.args[0]), parse_germ(G, c.args[1]));
  c.out << "germ-eq: " << to_string(verdict) << "\n";
  return exit_code(verdict);
}

int cmd_lag(const Context& c) {
  expect_args(c, 1, "u");
  const Groupoid G = groupoid(c);
  c.out << "lag: " << c.t.corona().format(G.lag(parse_germ(G, c.args[0])))
        << "\n";
  return kExitOk;
}

int cmd_fmap(const Context& c) {
  expect_args(c, 1, "u");
  const Groupoid G = groupoid(c);
  c.out << "fmap: " << format_f_image(c.t, G.f_map(parse_germ(G, c.args[0])))
        << "\n";
  return kExitOk;
}

int cmd_model_check(const Context& c) {
  expect_args(c, 4, "η g k ζ");
  const Groupoid G = groupoid(c);
  const Graph& graph = c.t.graph();
  const auto eta = parse_inf_path(graph, c.args[0]);
  const auto g = parse_sequence(c.t.group(), c.args[1]);
  std::int64_t k = 0;
  {
    const std::string& s = c.args[2];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::kParse, "expected an integer shift, got '" + s + "'");
    }
  }
  const auto zeta = parse_inf_path(graph, c.args[3]);
  const auto result = G.model_check(eta, g, k, zeta, c.options.depth);
  switch (result.verdict) {
    case Equality::kEqual: {
      const auto [p, q] = *result.witness;
      c.out << "model-check: pass (p=" << p << ", q=" << q << ")\n";
      c.out << "pullback: " << format_germ(G, G.pullback(eta, g, p, q, zeta))
            << "\n";
      break;
    }
    case Equality::kDistinct:
      c.out << "model-check: fail (depth " << c.options.depth << ")\n";
      break;
    case Equality::kUnknown:
      c.out << "model-check: unknown (depth " << c.options.depth << ")\n";
      break;
  }
  return exit_code(result.verdict);
}

int cmd_hausdorff(const Context& c) {
  expect_args(c, 0, "no arguments");
  const auto w = window(c);
  const auto report = hausdorff_report(c.t, w);
  c.out << "hausdorff: " << to_string(report.verdict);
  if (report.residual.counterexample) {
    c.out << " (counterexample "
          << format_residual(c.t, *report.residual.counterexample) << ")\n";
  } else {
    c.out << " (" << window_note(c, w.size()) << ")\n";
  }
  return report.verdict == HausdorffReport::Verdict::kHausdorffWindowVerified
             ? kExitOk
             : kExitUnknown;
}

struct Command {
  const char* name;
  const char* usage;
  const char* help;
  int (*handler)(const Context&);
};

constexpr Command kCommands[] = {
    {"validate", "", "check the graph and the action and cocycle laws",
     cmd_validate},
    {"act", "g α", "print gα and φ(g, α)", cmd_act},
    {"phi", "g α", "print φ(g, α)", cmd_phi},
    {"smul", "s t", "multiply two elements of the inverse semigroup", cmd_smul},
    {"cover", "β α...", "decide whether the e_α cover e_β (β = * for all vertices)",
     cmd_cover},
    {"residual-free", "", "search the window for a residual-freeness counterexample",
     cmd_residual_free},
    {"e-star-unitary", "", "search for an element above a nonzero idempotent",
     cmd_e_star_unitary},
    {"germ-eq", "u v", "compare two germs", cmd_germ_eq},
    {"lag", "u", "print the lag of a germ", cmd_lag},
    {"fmap", "u", "print (range, lag, source) of a germ", cmd_fmap},
    {"model-check", "η g k ζ", "find a germ with the given concrete image",
     cmd_model_check},
    {"hausdorff", "", "report what the residual-freeness check implies",
     cmd_hausdorff},
};

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kDepthExceeded:
    case ErrorCode::kUnknownAtDepth:
      return kExitUnknown;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Self-similar graph actions, their inverse semigroups and germ groupoids",
               "selfsim"};
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  app.add_option("--depth", options.depth, "depth for sequences and searches")
      ->envname("SELFSIM_DEPTH")
      ->capture_default_str();
  app.add_option("--window", options.window, "window radius")
      ->envname("SELFSIM_WINDOW")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--bound", options.bound, "path length bound for sweeps")
      ->capture_default_str();
  app.add_flag("--allow-non-residually-free", options.allow_non_residually_free,
               "build germs even when residual freeness fails in the window");

  std::string spec_path;
  std::array<std::string, 4> slots;
  std::vector<std::string> rest;
  std::vector<std::string> command_args;
  const Command* selected = nullptr;
  for (const Command& command : kCommands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("spec", spec_path, "spec file")->required();
    // One string positional per argument: vector positionals would split
    // values such as "[a, b]" into several entries.
    std::istringstream usage(command.usage);
    std::size_t fixed = 0;
    for (std::string name; usage >> name;) {
      if (name.ends_with("...")) {
        sub->add_option(name, rest);
      } else {
        sub->add_option(name, slots.at(fixed++))->required();
      }
    }
    sub->callback([&, command = &command, fixed] {
      selected = command;
      command_args.assign(slots.begin(), slots.begin() + fixed);
      command_args.insert(command_args.end(), rest.begin(), rest.end());
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (selected == nullptr) {
    err << "error: no command\n";
    return kExitInputError;
  }

  try {
    const SelfSimilarTriple t = load_spec_file(spec_path);
    return selected->handler(Context{t, command_args, options, out});
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  }
}

}  // namespace selfsim::cli
