#include "sqturan/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sqturan/error.hpp"

namespace sqturan {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw IoError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw IoError("graph6: byte out of range in \"" + std::string(text) + "\"");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) throw IoError("graph6: orders above 258047 are unsupported");
    if (text.size() < 4) throw IoError("graph6: truncated order field");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices)
    throw IoError("graph6: order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVertices) + "]");

  const std::int64_t nbits = std::int64_t{n} * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != nbytes)
    throw IoError("graph6: expected " + std::to_string(nbytes) + " data bytes for n=" + std::to_string(n) + ", got " +
                  std::to_string(text.size() - pos));

  GraphBuilder b(n);
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - kBias;
      if (byte & (1 << (5 - k % 6))) b.add_edge(i, j);
    }
  }
  const int tail_bits = static_cast<int>(nbytes * 6 - nbits);
  if (tail_bits > 0) {
    const int last = text.back() - kBias;
    if (last & ((1 << tail_bits) - 1)) throw IoError("graph6: nonzero padding bits");
  }
  return b.build();
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(from_graph6(t));
  }
  return out;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  std::int64_t declared = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t.front() == 'c') continue;
    std::istringstream ls{std::string(t)};
    char tag = 0;
    ls >> tag;
    if (tag == 'p') {
      std::string fmt;
      ls >> fmt >> n >> declared;
      if (!ls || (fmt != "edge" && fmt != "col"))
        throw IoError("DIMACS line " + std::to_string(lineno) + ": malformed problem line");
    } else if (tag == 'e') {
      int u = 0, v = 0;
      ls >> u >> v;
      if (!ls || n < 0) throw IoError("DIMACS line " + std::to_string(lineno) + ": malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n)
        throw IoError("DIMACS line " + std::to_string(lineno) + ": vertex outside [1, " + std::to_string(n) + "]");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw IoError("DIMACS line " + std::to_string(lineno) + ": unknown tag '" + std::string(1, tag) + "'");
    }
  }
  if (n < 1) throw IoError("DIMACS: missing problem line");
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (u == v) throw IoError("DIMACS: loop at vertex " + std::to_string(u + 1));
    b.add_edge(u, v);
  }
  return b.build();
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_dimacs(in);
}

Graph read_graph_file(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".dimacs" || ext == ".col" || ext == ".txt") return read_dimacs_file(path);
  auto graphs = read_graph6_file(path);
  if (graphs.size() != 1)
    throw IoError(path.string() + ": expected exactly one graph, found " + std::to_string(graphs.size()));
  return graphs.front();
}

}  // namespace sqturan
