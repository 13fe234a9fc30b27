#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// newline are accepted.
Graph parse_graph6(std::string_view text);

/// Encodes g as a graph6 record without header or newline.
std::string write_graph6(const Graph& g);

/// Edge-list text: "n m" then m lines "u v", 0-based.
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// Reads every non-blank line of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace oddcycle
