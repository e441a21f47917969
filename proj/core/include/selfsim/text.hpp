#ifndef SELFSIM_TEXT_HPP_
#define SELFSIM_TEXT_HPP_

// Text forms used by the command-line tool and in reports.
//
//   path            e0.e1.e0      @v for the vertex v
//   infinite path   e1(e0)*       prefix, then the repeated cycle in
//                                 parentheses; e0.e1... for a stream
//   group element   see Group::parse
//   S_{G,E}         (α, g, β)     or 0
//   germ            [α, g, β; η]  where η = βξ is the point of the germ
//   sequence        [g1,g2,(c1,c2)*]  or [g1,g2,...] for a stream
//
// Labels may themselves contain commas and parentheses, as the Katsura labels
// (i,j,n) do; separators are only recognized outside brackets.

#include <string>
#include <string_view>
#include <vector>

#include "selfsim/corona.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/groupoid.hpp"
#include "selfsim/semigroup.hpp"

namespace selfsim {

std::string_view trim(std::string_view s);

// Splits at sep where no (, [ is open. Pieces are trimmed.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

std::string format_path(const Graph& graph, const Path& p);
// Throws kParse for malformed text, kUnknownLabel for unknown labels and
// kIllegalComposition when the edges do not compose.
Path parse_path(const Graph& graph, std::string_view text);

std::string format_inf_path(const Graph& graph, const InfPath& xi);
InfPath parse_inf_path(const Graph& graph, std::string_view text);

std::string format_element(const SelfSimilarTriple& t,
                           const SemigroupElement& s);
SemigroupElement parse_element(const SelfSimilarTriple& t,
                               std::string_view text);

std::string format_germ(const Groupoid& groupoid, const Germ& u);
// Throws kInvalidArgument when η does not start with β.
Germ parse_germ(const Groupoid& groupoid, std::string_view text);

GroupSequence parse_sequence(const Group& group, std::string_view text);

// (η; (ǧ, k); ζ)
std::string format_f_image(const SelfSimilarTriple& t, const FImage& x);

}  // namespace selfsim

#endif  // SELFSIM_TEXT_HPP_
