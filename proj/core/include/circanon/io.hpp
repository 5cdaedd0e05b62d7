#pragma once

#include <iosfwd>
#include <string>

#include "circanon/connection_set.hpp"
#include "circanon/digraph.hpp"

namespace circanon {

// Graph text format:
//   n <n> directed|undirected
//   u v        (one arc per line; undirected files list each edge once)
// Connection-set format:
//   <n>: s1,s2,...,sk      (ascending, comma-separated; empty list allowed)

std::string format_graph(const Digraph& g);
Digraph parse_graph(std::istream& in);
Digraph parse_graph(const std::string& text);

std::string format_connection_set(const ConnectionSet& s);
ConnectionSet parse_connection_set(const std::string& line);

}  // namespace circanon
