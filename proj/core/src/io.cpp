#include "circanon/io.hpp"

#include <sstream>
#include <stdexcept>

namespace circanon {

std::string format_graph(const Digraph& g) {
  const bool undirected = g.is_symmetric();
  std::ostringstream out;
  out << "n " << g.order() << (undirected ? " undirected" : " directed") << '\n';
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.out_neighbors(u)) {
      if (undirected && v < u) continue;
      out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

Digraph parse_graph(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("parse_graph: empty input");
  }
  std::istringstream head(header);
  std::string tag, mode;
  int n = 0;
  if (!(head >> tag >> n >> mode) || tag != "n" ||
      (mode != "directed" && mode != "undirected")) {
    throw std::invalid_argument("parse_graph: header must be \"n <n> directed|undirected\"");
  }
  if (n < 1) throw std::invalid_argument("parse_graph: order must be positive");
  const bool undirected = (mode == "undirected");

  Digraph g(n);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    int u, v;
    if (!(row >> u)) continue;  // blank line
    if (!(row >> v)) throw std::invalid_argument("parse_graph: malformed edge line: " + line);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw std::invalid_argument("parse_graph: bad edge " + line);
    }
    g.add_arc(u, v);
    if (undirected) g.add_arc(v, u);
  }
  return g;
}

Digraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_connection_set(const ConnectionSet& s) { return s.to_string(); }

ConnectionSet parse_connection_set(const std::string& line) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("parse_connection_set: missing ':' in \"" + line + "\"");
  }
  int n = 0;
  try {
    n = std::stoi(line.substr(0, colon));
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_connection_set: bad order in \"" + line + "\"");
  }
  std::vector<int> elements;
  std::string rest = line.substr(colon + 1);
  std::istringstream items(rest);
  std::string item;
  while (std::getline(items, item, ',')) {
    std::istringstream value(item);
    int s;
    if (value >> s) {
      elements.push_back(s);
    } else if (!item.empty() && item.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("parse_connection_set: bad element \"" + item + "\"");
    }
  }
  return ConnectionSet(n, std::move(elements));
}

}  // namespace circanon
