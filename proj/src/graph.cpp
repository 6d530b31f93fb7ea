#include "tristrip/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tristrip/errors.hpp"

namespace tristrip {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int vertex_count, std::initializer_list<Edge> edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  return edges_.insert({std::min(u, v), std::max(u, v)}).second;
}

int Graph::degree(Vertex v) const {
  check(v);
  int d = 0;
  for (auto [a, b] : edges_) d += (a == v || b == v);
  return d;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  check(v);
  std::vector<Vertex> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void FramedGraph::validate() const {
  for (Vertex v : frame) {
    if (v < 0 || v >= graph.vertex_count()) throw std::invalid_argument("frame vertex out of range");
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (frame[i] == frame[j]) throw std::invalid_argument("frame vertices must be distinct");
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (!graph.has_edge(frame[i], frame[(i + 1) % 4])) {
      throw std::invalid_argument("frame edge " + std::to_string(frame[i]) + "-" +
                                  std::to_string(frame[(i + 1) % 4]) + " missing");
    }
  }
}

ColouringType colouring_type(int c1, int c2, int c3, int c4) {
  const bool eq13 = c1 == c3;
  const bool eq24 = c2 == c4;
  if (eq13 && eq24) return ColouringType::type1;
  if (eq13) return ColouringType::type2;
  if (eq24) return ColouringType::type3;
  return ColouringType::type4;
}

int frame_colour_count(ColouringType t) {
  switch (t) {
    case ColouringType::type1: return 2;
    case ColouringType::type2: return 3;
    case ColouringType::type3: return 3;
    case ColouringType::type4: return 4;
  }
  return 0;
}

Contraction contract_pair(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("cannot identify a vertex with itself");
  if (g.has_edge(u, v)) {
    throw AdjacentMergeError("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are adjacent");
  }
  const Vertex keep = std::min(u, v);
  const Vertex drop = std::max(u, v);
  Contraction out{Graph(g.vertex_count() - 1), std::vector<Vertex>(static_cast<std::size_t>(g.vertex_count()))};
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    out.image[w] = w == drop ? keep : (w > drop ? w - 1 : w);
  }
  for (auto [a, b] : g.edges()) out.graph.add_edge(out.image[a], out.image[b]);
  return out;
}

Graph identify_vertices(const Graph& g, Vertex u, Vertex v) { return contract_pair(g, u, v).graph; }

std::optional<Graph> type_auxiliary_graph(const FramedGraph& fg, ColouringType t) {
  const auto [a1, a2, a3, a4] = fg.frame;
  const bool same13 = t == ColouringType::type1 || t == ColouringType::type2;
  const bool same24 = t == ColouringType::type1 || t == ColouringType::type3;

  Graph g = fg.graph;
  if (!same13) g.add_edge(a1, a3);
  if (!same24) g.add_edge(a2, a4);

  Vertex b2 = a2, b4 = a4;
  if (same13) {
    if (g.has_edge(a1, a3)) return std::nullopt;
    Contraction c = contract_pair(g, a1, a3);
    g = std::move(c.graph);
    b2 = c.image[a2];
    b4 = c.image[a4];
  }
  if (same24) {
    if (g.has_edge(b2, b4)) return std::nullopt;
    g = identify_vertices(g, b2, b4);
  }
  return g;
}

Graph diagonal_contraction(const FramedGraph& fg) {
  const auto [a1, a2, a3, a4] = fg.frame;
  Contraction c = contract_pair(fg.graph, a1, a3);
  return identify_vertices(c.graph, c.image[a2], c.image[a4]);
}

Graph glue_graphs(const FramedGraph& a, const FramedGraph& b) {
  a.validate();
  b.validate();
  const int na = a.graph.vertex_count();
  std::vector<Vertex> map_b(static_cast<std::size_t>(b.graph.vertex_count()), -1);
  for (int i = 0; i < 4; ++i) map_b[b.frame[i]] = a.frame[i];
  int next = na;
  for (auto& m : map_b) {
    if (m < 0) m = next++;
  }
  Graph g(next);
  for (auto [u, v] : a.graph.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.graph.edges()) g.add_edge(map_b[u], map_b[v]);
  return g;
}

Gadget gadget_layer() {
  Gadget l{Graph(8), {0, 1, 2, 3}, {4, 5, 6, 7}};
  for (int j = 0; j < 4; ++j) {
    l.graph.add_edge(j, (j + 1) % 4);
    l.graph.add_edge(4 + j, 4 + (j + 1) % 4);
    l.graph.add_edge(4 + j, j);
    l.graph.add_edge(4 + j, (j + 1) % 4);
  }
  return l;
}

FramedGraph add_layer(const FramedGraph& a) {
  const Gadget l = gadget_layer();
  FramedGraph inner{l.graph, l.inner};
  // glue_graphs keeps a's labels and appends the gadget's non-frame vertices
  Graph g = glue_graphs(a, inner);
  FramedGraph out{std::move(g), {}};
  const int na = a.graph.vertex_count();
  // gadget outer vertices 0..3 are not on the inner frame, so they map to
  // na + 0..3 in order
  for (int i = 0; i < 4; ++i) out.frame[i] = na + i;
  return out;
}

Graph strip_graph(const FramedGraph& a, const FramedGraph& b, int n) {
  if (n < 1) throw std::invalid_argument("strip length must be at least 1");
  FramedGraph top = a;
  for (int i = 1; i < n; ++i) top = add_layer(top);
  return glue_graphs(top, b);
}

FramedGraph GraphFile::framed(std::size_t which) const {
  if (which >= frames.size()) throw GraphFormatError("graph has no frame #" + std::to_string(which));
  FramedGraph fg{graph, frames[which]};
  fg.validate();
  return fg;
}

GraphFile parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GraphFile out;
  bool have_header = false;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw GraphFormatError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "vertices") {
      int n = -1;
      if (have_header) fail("duplicate 'vertices' line");
      if (!(ls >> n) || n < 0) fail("bad vertex count");
      out.graph = Graph(n);
      have_header = true;
    } else if (key == "edge") {
      if (!have_header) fail("'edge' before 'vertices'");
      int u = -1, v = -1;
      if (!(ls >> u >> v)) fail("bad edge");
      if (u < 0 || v < 0 || u >= out.graph.vertex_count() || v >= out.graph.vertex_count()) fail("edge vertex out of range");
      if (u == v) fail("self-loop");
      if (!out.graph.add_edge(u, v)) fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    } else if (key == "frame") {
      if (!have_header) fail("'frame' before 'vertices'");
      Frame f{};
      for (auto& v : f) {
        if (!(ls >> v)) fail("frame needs four vertices");
      }
      out.frames.push_back(f);
    } else {
      fail("unknown directive '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!have_header) throw GraphFormatError("missing 'vertices' line");
  for (const auto& f : out.frames) {
    try {
      FramedGraph{out.graph, f}.validate();
    } catch (const std::invalid_argument& e) {
      throw GraphFormatError(std::string("invalid frame: ") + e.what());
    }
  }
  return out;
}

GraphFile load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

std::string to_text(const GraphFile& file) {
  std::ostringstream os;
  os << "vertices " << file.graph.vertex_count() << "\n";
  for (auto [u, v] : file.graph.edges()) os << "edge " << u << " " << v << "\n";
  for (const auto& f : file.frames) os << "frame " << f[0] << " " << f[1] << " " << f[2] << " " << f[3] << "\n";
  return os.str();
}

}  // namespace tristrip
