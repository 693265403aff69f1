#include "gallai/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace gallai {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

int sextet(char c, std::size_t pos) {
  const auto byte = static_cast<unsigned char>(c);
  if (byte < 63 || byte > 126)
    throw FormatError("graph6: byte " + std::to_string(byte) + " at offset " + std::to_string(pos) +
                      " is outside the printable range 63..126");
  return byte - 63;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Prefix)) text.remove_prefix(kGraph6Prefix.size());
  if (text.empty()) throw FormatError("graph6: empty record");
  if (text.front() == ':' || text.front() == ';' || text.front() == '&')
    throw FormatError("graph6: sparse6/digraph6 records are not supported");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0], 0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw FormatError("graph6: truncated 8-byte header");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | sextet(text[pos], pos);
  } else {
    if (text.size() < 4) throw FormatError("graph6: truncated 4-byte header");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet(text[pos], pos);
  }
  if (n > kMaxVertices)
    throw FormatError("graph6: " + std::to_string(n) + " vertices exceeds the supported maximum of " +
                      std::to_string(kMaxVertices));

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need)
    throw FormatError("graph6: payload truncated (" + std::to_string(have) + " of " +
                      std::to_string(need) + " bytes)");
  if (have > need)
    throw FormatError("graph6: " + std::to_string(have - need) + " trailing bytes after payload");

  std::vector<VertexMask> rows(n, 0);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int group = sextet(text[pos + k / 6], pos + k / 6);
      if ((group >> (5 - k % 6)) & 1) {
        rows[u] |= bit(v);
        rows[v] |= bit(u);
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int group = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(group + 63);
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((group << (6 - filled)) + 63);
  return out;
}

namespace {

bool is_skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

// Parses exactly two non-negative integers from a line.
std::optional<std::pair<long, long>> two_ints(std::string_view line) {
  line = trim(line);
  long a = 0;
  long b = 0;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto r = std::from_chars(p, end, a);
  if (r.ec != std::errc{} || r.ptr == end || (*r.ptr != ' ' && *r.ptr != '\t')) return std::nullopt;
  p = r.ptr;
  while (p != end && (*p == ' ' || *p == '\t')) ++p;
  r = std::from_chars(p, end, b);
  if (r.ec != std::errc{} || r.ptr != end) return std::nullopt;
  if (a < 0 || b < 0) return std::nullopt;
  return std::pair{a, b};
}

std::vector<std::string> split_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return lines;
}

// Reads one edge-list record starting at lines[i] (a header line). Advances i
// past the record, including when it is malformed.
GraphRecord read_edge_list_record(const std::vector<std::string>& lines, std::size_t& i) {
  GraphRecord rec{i + 1, std::string{}};
  const auto header = two_ints(lines[i]);
  ++i;
  if (!header) {
    rec.content = "edge list: expected header \"n m\"";
    return rec;
  }
  const auto [n, m] = *header;
  std::vector<Edge> edges;
  std::string problem;
  long seen = 0;
  while (seen < m && i < lines.size()) {
    if (is_skippable(lines[i])) {
      ++i;
      continue;
    }
    auto e = two_ints(lines[i]);
    if (e && (e->first >= n || e->second >= n) && problem.empty()) {
      problem = "edge list: line " + std::to_string(i + 1) + " has an endpoint outside [0, " +
                std::to_string(n) + ")";
      e.reset();
    }
    if (!e && problem.empty())
      problem = "edge list: line " + std::to_string(i + 1) + " is not an edge \"u v\"";
    if (e) edges.push_back({static_cast<Vertex>(e->first), static_cast<Vertex>(e->second)});
    ++seen;
    ++i;
  }
  if (seen < m) {
    rec.content = "edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(seen);
    return rec;
  }
  if (!problem.empty()) {
    rec.content = problem;
    return rec;
  }
  if (n > kMaxVertices) {
    rec.content = "edge list: " + std::to_string(n) + " vertices exceeds the supported maximum";
    return rec;
  }
  try {
    rec.content = make_graph(static_cast<int>(n), edges);
  } catch (const GraphError& err) {
    rec.content = std::string("edge list: ") + err.what();
  }
  return rec;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  const auto lines = split_lines(in);
  std::size_t i = 0;
  while (i < lines.size() && is_skippable(lines[i])) ++i;
  if (i == lines.size()) throw FormatError("edge list: no header");
  GraphRecord rec = read_edge_list_record(lines, i);
  if (!rec.ok()) throw FormatError(rec.error());
  while (i < lines.size() && is_skippable(lines[i])) ++i;
  if (i != lines.size()) throw FormatError("edge list: unexpected data after the last edge");
  return rec.graph();
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::vector<GraphRecord> read_graphs(std::istream& in, InputFormat format) {
  const auto lines = split_lines(in);
  std::vector<GraphRecord> out;
  std::size_t i = 0;
  while (i < lines.size() && is_skippable(lines[i])) ++i;
  if (i == lines.size()) return out;
  if (format == InputFormat::automatic)
    format = two_ints(lines[i]) ? InputFormat::edge_list : InputFormat::graph6;

  while (i < lines.size()) {
    if (is_skippable(lines[i])) {
      ++i;
      continue;
    }
    if (format == InputFormat::edge_list) {
      out.push_back(read_edge_list_record(lines, i));
      continue;
    }
    GraphRecord rec{i + 1, std::string{}};
    try {
      rec.content = parse_graph6(lines[i]);
    } catch (const std::exception& err) {
      rec.content = std::string(err.what());
    }
    out.push_back(std::move(rec));
    ++i;
  }
  return out;
}

}  // namespace gallai
