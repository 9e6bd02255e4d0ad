#include "tdc/graph6.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tdc {

namespace {

constexpr int kMaxGraph6Order = 258047;  // largest n the 4-byte header holds

void append_header(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(char(63 + n));
  } else {
    out.push_back('~');
    out.push_back(char(63 + ((n >> 12) & 63)));
    out.push_back(char(63 + ((n >> 6) & 63)));
    out.push_back(char(63 + (n & 63)));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMaxGraph6Order) throw std::invalid_argument("to_graph6: order too large");
  std::string out;
  append_header(out, n);
  int group = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(63 + group));
        group = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(char(63 + (group << (6 - nbits))));
  return out;
}

Graph from_graph6(std::string_view s) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (s.size() - pos < k) throw std::invalid_argument("from_graph6: truncated input");
  };
  auto byte = [&](size_t i) {
    unsigned char c = s[i];
    if (c < 63 || c > 126) throw std::invalid_argument("from_graph6: byte out of range");
    return int(c - 63);
  };
  need(1);
  long n;
  if (s[pos] == '~') {
    need(4);
    if (s.size() > pos + 1 && s[pos + 1] == '~')
      throw std::invalid_argument("from_graph6: 8-byte order header not supported");
    n = (long(byte(pos + 1)) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
    pos += 4;
  } else {
    n = byte(pos);
    pos += 1;
  }
  long pairs = n * (n - 1) / 2;
  size_t data = size_t((pairs + 5) / 6);
  if (s.size() - pos != data) throw std::invalid_argument("from_graph6: bad data length");
  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int v = byte(pos + size_t(bit / 6));
      if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.has_edge(a, b)) out << a << ' ' << b << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long n = -1;
  Graph g;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    if (n < 0) {
      if (!(row >> n) || n < 0) throw std::invalid_argument("from_edge_list: bad vertex count");
      std::string rest;
      if (row >> rest) throw std::invalid_argument("from_edge_list: trailing tokens after count");
      g = Graph(int(n));
      continue;
    }
    long a, b;
    if (!(row >> a)) continue;  // blank line
    if (!(row >> b)) throw std::invalid_argument("from_edge_list: edge needs two ids");
    std::string rest;
    if (row >> rest) throw std::invalid_argument("from_edge_list: trailing tokens after edge");
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("from_edge_list: bad edge " + std::to_string(a) + " " + std::to_string(b));
    g.add_edge(int(a), int(b));
  }
  if (n < 0) throw std::invalid_argument("from_edge_list: empty input");
  return g;
}

Graph parse_graph(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw std::invalid_argument("parse_graph: empty input");
  if (std::isdigit(static_cast<unsigned char>(text[i]))) return from_edge_list(text.substr(i));
  size_t end = text.find_first_of("\r\n", i);
  std::string_view line = text.substr(i, end == std::string_view::npos ? end : end - i);
  return from_graph6(line);
}

}  // namespace tdc
