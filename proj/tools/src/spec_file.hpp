#ifndef SELFSIM_TOOLS_SPEC_FILE_HPP_
#define SELFSIM_TOOLS_SPEC_FILE_HPP_

#include <string>
#include <string_view>

#include "selfsim/triple.hpp"

namespace selfsim::cli {

// Reads a triple from the sectioned text format described in docs/spec-format.md.
// Errors carry "line L, column C: " in their message; malformed text raises
// kParse, unresolved names kUnknownLabel, and invalid data the code of the
// constructor that rejected it.
SelfSimilarTriple load_spec(std::string_view text);
SelfSimilarTriple load_spec_file(const std::string& path);

}  // namespace selfsim::cli

#endif  // SELFSIM_TOOLS_SPEC_FILE_HPP_
