#include "foldkit/graph_io.hpp"

#include <sstream>
#include <string>

#include "foldkit/errors.hpp"

namespace foldkit {

namespace {

int sextet_at(const std::string& s, std::size_t offset) {
  unsigned char c = static_cast<unsigned char>(s[offset]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: byte 0x" + [c] {
      char buf[3];
      std::snprintf(buf, sizeof buf, "%02x", c);
      return std::string(buf);
    }() + " at offset " + std::to_string(offset) + " outside printable range");
  }
  return c - 63;
}

std::string trimmed_line(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  std::string s = trimmed_line(text);
  if (s.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~') {
      throw PreconditionError("graph6: eight-byte vertex counts exceed the supported size");
    }
    if (s.size() < 4) throw ParseError("graph6: truncated long-form length header");
    n = (static_cast<long>(sextet_at(s, 1)) << 12) | (sextet_at(s, 2) << 6) | sextet_at(s, 3);
    pos = 4;
  } else {
    n = sextet_at(s, 0);
    pos = 1;
  }
  if (n > kMaxVertices) {
    throw PreconditionError("graph6: " + std::to_string(n) + " vertices exceeds the supported " +
                            std::to_string(kMaxVertices));
  }

  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t body = (bits + 5) / 6;
  if (s.size() - pos < body) {
    throw ParseError("graph6: truncated body, expected " + std::to_string(body) +
                     " bytes after offset " + std::to_string(pos) + ", got " +
                     std::to_string(s.size() - pos));
  }
  if (s.size() - pos > body) {
    throw ParseError("graph6: trailing garbage at offset " + std::to_string(pos + body));
  }

  Graph g(static_cast<int>(n));
  int col_i = 0, col_j = 1;
  std::size_t k = 0;
  for (std::size_t b = 0; b < body; ++b) {
    int v = sextet_at(s, pos + b);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      int bitval = v >> shift & 1;
      if (k < bits) {
        if (bitval) g.add_edge(col_i, col_j);
        if (++col_i == col_j) {
          col_i = 0;
          ++col_j;
        }
      } else if (bitval) {
        throw ParseError("graph6: nonzero padding bit at offset " + std::to_string(pos + b));
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    out += static_cast<char>(63 + (n >> 12 & 63));
    out += static_cast<char>(63 + (n >> 6 & 63));
    out += static_cast<char>(63 + (n & 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trimmed_line(line);
    if (s.empty()) continue;
    std::istringstream fields(s);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || n < 0 || !(fields >> std::ws).eof()) {
        throw ParseError("edge list: line " + std::to_string(line_no) +
                         ": expected header \"n <count>\"");
      }
      if (n > kMaxVertices) {
        throw PreconditionError("edge list: " + std::to_string(n) +
                                " vertices exceeds the supported " + std::to_string(kMaxVertices));
      }
      continue;
    }
    int u = 0, v = 0;
    if (!(fields >> u >> v) || !(fields >> std::ws).eof()) {
      throw ParseError("edge list: line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge list: line " + std::to_string(line_no) + ": endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (u == v) {
      throw ParseError("edge list: line " + std::to_string(line_no) + ": loop at vertex " +
                       std::to_string(u));
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("edge list: missing \"n <count>\" header");
  return Graph::from_edges(n, edges);
}

}  // namespace foldkit
