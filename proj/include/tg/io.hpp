#pragma once

#include "tg/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tg {

// Edge-list format: first line "n m", then m lines "u v" with 0 <= u < v < n.
// Lines starting with '#' (and trailing '#' comments) are ignored.

SimpleGraph read_edge_list(std::istream& in);

/// Reads from the named file, or stdin when path is "-".
SimpleGraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const SimpleGraph& g,
                     const std::vector<std::string>& comments = {});

void write_dot(std::ostream& out, const SimpleGraph& g,
               const std::vector<std::string>& comments = {});

}  // namespace tg
