#include "pdcut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pdcut {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed_line: return "malformed line";
    case ParseErrorKind::missing_header: return "missing header";
    case ParseErrorKind::duplicate_header: return "duplicate header";
    case ParseErrorKind::duplicate_edge: return "duplicate edge";
    case ParseErrorKind::self_loop: return "self-loop";
    case ParseErrorKind::nonpositive_weight: return "nonpositive weight";
    case ParseErrorKind::vertex_out_of_range: return "vertex out of range";
    case ParseErrorKind::count_mismatch: return "edge count mismatch";
    case ParseErrorKind::too_few_vertices: return "too few vertices";
  }
  return "unknown";
}

namespace {

std::string error_message(ParseErrorKind kind, std::size_t line,
                          const std::string& detail) {
  std::string msg(to_string(kind));
  if (line != 0) msg += " at line " + std::to_string(line);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       const std::string& detail)
    : std::runtime_error(error_message(kind, line, detail)),
      kind_(kind),
      line_(line) {}

std::uint64_t WeightedGraph::key(Vertex a, Vertex b) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

WeightedGraph WeightedGraph::create(Vertex n, std::vector<Edge> edges,
                                    bool allow_zero_weights) {
  if (n < 2) {
    throw ParseError(ParseErrorKind::too_few_vertices, 0,
                     "n = " + std::to_string(n));
  }
  WeightedGraph g;
  g.n_ = n;
  g.index_.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge& e = edges[i];
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw ParseError(ParseErrorKind::vertex_out_of_range, 0,
                       std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw ParseError(ParseErrorKind::self_loop, 0, std::to_string(e.u));
    }
    if (e.w == 0 && !allow_zero_weights) {
      throw ParseError(ParseErrorKind::nonpositive_weight, 0,
                       std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!g.index_.emplace(key(e.u, e.v), i).second) {
      throw ParseError(ParseErrorKind::duplicate_edge, 0,
                       std::to_string(e.u) + " " + std::to_string(e.v));
    }
    g.max_weight_ = std::max(g.max_weight_, e.w);
  }
  g.edges_ = std::move(edges);
  return g;
}

WeightedGraph WeightedGraph::empty(Vertex n) { return create(n, {}); }

std::optional<std::size_t> WeightedGraph::find_edge(Vertex a, Vertex b) const {
  auto it = index_.find(key(a, b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool WeightedGraph::same_edges(const WeightedGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (const Edge& e : edges_) {
    auto idx = other.find_edge(e.u, e.v);
    if (!idx || other.edges_[*idx].w != e.w) return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_int(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto fields = split_fields(line);
    if (fields.empty() || fields[0].starts_with('#')) {
      if (end == text.size()) break;
      continue;
    }

    if (fields[0] == "p") {
      if (n) throw ParseError(ParseErrorKind::duplicate_header, line_no, "");
      std::uint64_t nn = 0;
      if (fields.size() != 4 || fields[1] != "mincut" ||
          !parse_int(fields[2], nn) || !parse_int(fields[3], m)) {
        throw ParseError(ParseErrorKind::malformed_line, line_no,
                         std::string(line));
      }
      if (nn < 2) {
        throw ParseError(ParseErrorKind::too_few_vertices, line_no,
                         std::string(line));
      }
      if (nn > 0xffffffffULL) {
        throw ParseError(ParseErrorKind::malformed_line, line_no,
                         "vertex count too large");
      }
      n = nn;
    } else if (fields[0] == "e") {
      if (!n) throw ParseError(ParseErrorKind::missing_header, line_no, "");
      std::int64_t u = 0, v = 0, w = 0;
      if (fields.size() != 4 || !parse_int(fields[1], u) ||
          !parse_int(fields[2], v) || !parse_int(fields[3], w)) {
        throw ParseError(ParseErrorKind::malformed_line, line_no,
                         std::string(line));
      }
      auto in_range = [&](std::int64_t x) {
        return x >= 1 && static_cast<std::uint64_t>(x) <= *n;
      };
      if (!in_range(u) || !in_range(v)) {
        throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                         std::string(line));
      }
      if (u == v) {
        throw ParseError(ParseErrorKind::self_loop, line_no, std::string(line));
      }
      if (w <= 0) {
        throw ParseError(ParseErrorKind::nonpositive_weight, line_no,
                         std::string(line));
      }
      Edge e{static_cast<Vertex>(std::min(u, v)),
             static_cast<Vertex>(std::max(u, v)), static_cast<Weight>(w)};
      std::uint64_t k = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
      if (!seen.emplace(k, line_no).second) {
        throw ParseError(ParseErrorKind::duplicate_edge, line_no,
                         std::string(line));
      }
      edges.push_back(e);
    } else {
      throw ParseError(ParseErrorKind::malformed_line, line_no,
                       std::string(line));
    }
    if (end == text.size()) break;
  }

  if (!n) throw ParseError(ParseErrorKind::missing_header, 0, "");
  if (edges.size() != m) {
    throw ParseError(ParseErrorKind::count_mismatch, 0,
                     "header declares " + std::to_string(m) + ", found " +
                         std::to_string(edges.size()));
  }
  return WeightedGraph::create(static_cast<Vertex>(*n), std::move(edges));
}

WeightedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p mincut " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
  }
  return out.str();
}

WeightedGraph build_star_extension(const WeightedGraph& g, Vertex center) {
  const Vertex n = g.vertex_count();
  if (center < 1 || center > n) {
    throw std::invalid_argument("star center out of range");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex v = 1; v <= n; ++v) {
    if (v == center || g.has_edge(center, v)) continue;
    edges.push_back(Edge{std::min(center, v), std::max(center, v), 0});
  }
  return WeightedGraph::create(n, std::move(edges), /*allow_zero_weights=*/true);
}

}  // namespace pdcut
