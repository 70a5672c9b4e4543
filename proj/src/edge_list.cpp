#include "msindex/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "msindex/error.hpp"

namespace msindex {

namespace {

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Tree parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') throw ParseError("line " + std::to_string(line_no) + ": CR line ending");
    if (line.empty() || line.front() == '#') continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (n < 0) {
      if (!parse_int(line, n) || n < 1) throw ParseError(where + "expected a positive vertex count, got '" + line + "'");
      continue;
    }
    auto space = line.find(' ');
    int u = 0, v = 0;
    if (space == std::string::npos || !parse_int(std::string_view(line).substr(0, space), u) ||
        !parse_int(std::string_view(line).substr(space + 1), v))
      throw ParseError(where + "expected 'u v', got '" + line + "'");
    if (u < 0 || u >= v || v >= n) throw ParseError(where + "edge must satisfy 0 <= u < v < n, got '" + line + "'");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("missing vertex count");
  return Tree::from_edges(n, edges);
}

Tree parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Tree read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string format_edge_list(const Tree& tree) {
  std::string out = std::to_string(tree.order()) + '\n';
  for (auto [u, v] : tree.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

}  // namespace msindex
